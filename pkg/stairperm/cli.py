"""
Command-line surface.

Exit codes: 0 on success, equality or pass; 1 on mismatch or failure; 2 on usage errors;
3 when a brute-force computation would exceed its configured ceiling.
"""
import argparse
import dataclasses
import json
import sys
from typing import List, Optional

from stairperm.common.exceptions import ResourceLimitError, StairpermError
from stairperm.common.models.mesh_pattern import MeshPattern
from stairperm.common.models.permutation import Basis, Permutation
from stairperm.common.services.logger import Logger
from stairperm.common.services.settings import Settings, get_settings
from stairperm.core.mesh import contains_mesh
from stairperm.core.oracle import count_class
from stairperm.modules.bijection.bijection_module import BijectionLab
from stairperm.modules.enumeration.class_enumerator_module import ClassEnumerator
from stairperm.modules.enumeration.strategies.base import MeshCondition
from stairperm.modules.sampling.sampler_module import UniformSampler
from stairperm.utils.document_generator import DocumentGenerator
from stairperm.utils.formatter import Formatter


EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="stairperm", description="Enumerate, verify and sample permutation classes "
                                                                   "through staircase encodings and core graphs.")
    parser.add_argument("--quiet", action="store_true", help="Silence informational log messages")
    commands = parser.add_subparsers(dest="command", required=True)

    detect = commands.add_parser("detect", help="List the theorems that apply to a basis")
    detect.add_argument("--basis", required=True)
    detect.add_argument("--assume-mesh-conditions", action="store_true")

    gf = commands.add_parser("gf", help="Generating function coefficients of a class")
    gf.add_argument("--basis", required=True)
    gf.add_argument("--terms", type=int, required=True)
    gf.add_argument("--json", action="store_true")
    gf.add_argument("--positive", action="store_true", help="Start at c_1 instead of c_0")
    gf.add_argument("--assume-mesh-conditions", action="store_true")

    count = commands.add_parser("count", help="Brute-force counts of a class")
    count.add_argument("--basis", required=True)
    count.add_argument("--max-size", type=int, required=True)

    verify = commands.add_parser("verify", help="Compare the generating function with brute-force counts")
    verify.add_argument("--basis", required=True)
    verify.add_argument("--max-size", type=int, required=True)
    verify.add_argument("--json", action="store_true")
    verify.add_argument("--assume-mesh-conditions", action="store_true")

    bijection = commands.add_parser("verify-bijection", help="Check a structural bijection at small sizes")
    bijection.add_argument("--theorem", required=True)
    bijection.add_argument("--basis", required=True)
    bijection.add_argument("--max-size", type=int, required=True)
    bijection.add_argument("--json", action="store_true")

    sample = commands.add_parser("sample", help="Uniform random members of a class")
    sample.add_argument("--basis", required=True)
    sample.add_argument("--size", type=int, required=True)
    sample.add_argument("--count", type=int, default=1)
    sample.add_argument("--seed", type=int, required=True)

    wilf = commands.add_parser("wilf", help="Compare the counting sequences of two classes")
    wilf.add_argument("--basis1", required=True)
    wilf.add_argument("--basis2", required=True)
    wilf.add_argument("--terms", type=int, required=True)
    wilf.add_argument("--assume-mesh-conditions", action="store_true")

    mesh = commands.add_parser("mesh", help="Mesh pattern containment")
    mesh.add_argument("--perm", required=True)
    mesh.add_argument("--pattern", required=True)
    mesh.add_argument("--shading", default="")

    return parser


def _enumerator(args: argparse.Namespace, settings: Settings) -> ClassEnumerator:
    return ClassEnumerator(settings, MeshCondition(assume=getattr(args, "assume_mesh_conditions", False)))


def _detect(args: argparse.Namespace, settings: Settings) -> int:
    matches = _enumerator(args, settings).detect(args.basis)
    for match in matches:
        print(match)
    if not matches:
        print("no theorem applies")
    return EXIT_OK


def _gf(args: argparse.Namespace, settings: Settings) -> int:
    result = _enumerator(args, settings).class_gf(args.basis, args.terms)
    coefficients = result.coefficients(args.positive)
    if args.json:
        print(json.dumps({"basis": str(result.basis), "coefficients": coefficients, "trace": result.trace.to_dict()},
                         ensure_ascii=False))
    else:
        print(Formatter.format_coefficients(coefficients))
        for line in Formatter.format_trace(result.trace):
            print(line)
        print(f"oracle_backed: {Formatter.format_flag(result.trace.uses_oracle())}")
    return EXIT_OK


def _count(args: argparse.Namespace, settings: Settings) -> int:
    basis = Basis.from_string(args.basis)
    if args.max_size > settings.oracle_ceiling:
        raise ResourceLimitError(f"Brute-force counts stop at size {settings.oracle_ceiling}", subject=str(basis))
    print(Formatter.format_coefficients([count_class(basis, n) for n in range(args.max_size + 1)]))
    return EXIT_OK


def _verify(args: argparse.Namespace, settings: Settings) -> int:
    enumerator = _enumerator(args, settings)
    report = enumerator.verify(args.basis, args.max_size)
    passed = bool(report["match"].all())
    if args.json:
        print(json.dumps({"basis": args.basis, "theorem": report.attrs.get("theorem"), "passed": passed,
                          "rows": Formatter.records(report)}, ensure_ascii=False))
    else:
        DocumentGenerator.section(f"Av({args.basis}) via {report.attrs.get('theorem')}")
        DocumentGenerator.table(list(report.columns), Formatter.dataframe_rows(report))
        print("pass" if passed else "fail")
    return EXIT_OK if passed else EXIT_MISMATCH


def _verify_bijection(args: argparse.Namespace, settings: Settings) -> int:
    report = BijectionLab(settings).verify_bijection(args.theorem, args.basis, args.max_size)
    if args.json:
        print(report.to_json())
    else:
        DocumentGenerator.table(list(report.table.columns), Formatter.dataframe_rows(report.table),
                                title=f"{report.theorem} on Av({report.basis})")
        DocumentGenerator.metrics_group("summary", {
            column: Formatter.format_flag(bool(report.table[column].all()))
            for column in ("injective", "onto", "round_trip")
        })
        if report.first_mismatch:
            DocumentGenerator.metric("first mismatch", report.first_mismatch)
        print("pass" if report.passed else "fail")
    return EXIT_OK if report.passed else EXIT_MISMATCH


def _sample(args: argparse.Namespace, settings: Settings) -> int:
    for sigma in UniformSampler(settings).samples(args.basis, args.size, args.count, args.seed):
        print(sigma)
    return EXIT_OK


def _wilf(args: argparse.Namespace, settings: Settings) -> int:
    report = _enumerator(args, settings).wilf_check(args.basis1, args.basis2, args.terms)
    print(report)
    return EXIT_OK if report.equal else EXIT_MISMATCH


def _mesh(args: argparse.Namespace, settings: Settings) -> int:
    pattern = MeshPattern(Permutation.from_string(args.pattern), MeshPattern.parse_shading(args.shading))
    print(Formatter.format_flag(contains_mesh(Permutation.from_string(args.perm), pattern)))
    return EXIT_OK


COMMANDS = {
    "detect": _detect,
    "gf": _gf,
    "count": _count,
    "verify": _verify,
    "verify-bijection": _verify_bijection,
    "sample": _sample,
    "wilf": _wilf,
    "mesh": _mesh,
}


def run(argv: Optional[List[str]] = None) -> int:
    """
    Run one command.

    :param argv: Arguments without the program name; defaults to ``sys.argv[1:]``
    :type argv: Optional[List[str]]
    :return: The exit code
    :rtype: int
    """
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as error:
        return EXIT_OK if error.code in (0, None) else EXIT_USAGE

    settings = get_settings()
    if args.quiet:
        settings = dataclasses.replace(settings, verbose=False)
    logger = Logger("stairperm", settings.verbose)
    try:
        return COMMANDS[args.command](args, settings)
    except ResourceLimitError as error:
        logger.error(f"Resource limit: {error}")
        return EXIT_RESOURCE
    except StairpermError as error:
        logger.error(str(error))
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
