from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from stairperm.common.models.permutation import Basis, Permutation


def format_parameters(parameters: Tuple[Permutation, ...]) -> str:
    """The parameter set P as text: ``∅`` or ``{p1,p2}``."""
    if not parameters:
        return "∅"
    return "{" + ",".join(str(p) for p in parameters) + "}"


@dataclass(frozen=True)
class TheoremMatch:
    """
    A theorem that applies to a basis.

    :param theorem: Theorem identifier
    :param symmetry: Symmetry mapping the input basis onto ``image``
    :param image: The symmetric image, equal to the theorem's required patterns plus 1⊕P
    :param parameters: The parameter set P
    :param conditions: Side conditions checked on P and their outcome
    """
    theorem: str
    symmetry: str
    image: Basis
    parameters: Tuple[Permutation, ...] = ()
    conditions: Dict[str, bool] = field(default_factory=dict, hash=False, compare=False)

    def __str__(self) -> str:
        return f"{self.theorem} (symmetry: {self.symmetry}, P={format_parameters(self.parameters)})"


@dataclass
class GFTrace:
    """Provenance of a class generating function: which theorem produced it and from which subclasses."""
    theorem: str
    symmetry: str
    basis: str
    parameters: List[str] = field(default_factory=list)
    children: List["GFTrace"] = field(default_factory=list)
    oracle_backed: bool = False

    def to_dict(self) -> Dict[str, Any]:
        return {
            "theorem": self.theorem,
            "symmetry": self.symmetry,
            "basis": self.basis,
            "P": list(self.parameters),
            "children": [child.to_dict() for child in self.children],
            "oracle_backed": self.oracle_backed,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "GFTrace":
        return cls(
            theorem=data["theorem"],
            symmetry=data["symmetry"],
            basis=data["basis"],
            parameters=list(data.get("P", [])),
            children=[cls.from_dict(child) for child in data.get("children", [])],
            oracle_backed=bool(data.get("oracle_backed", False)),
        )

    def uses_oracle(self) -> bool:
        """True when this node or any descendant fell back to the oracle."""
        return self.oracle_backed or any(child.uses_oracle() for child in self.children)

    def theorems(self) -> List[str]:
        """Theorem identifiers in depth-first order."""
        return [self.theorem] + [name for child in self.children for name in child.theorems()]


@dataclass
class WilfReport:
    """Coefficientwise comparison of two class generating functions."""
    left: List[int]
    right: List[int]
    order: int
    first_difference: Optional[int] = None

    @property
    def equal(self) -> bool:
        return self.first_difference is None

    def __str__(self) -> str:
        if self.equal:
            return f"equal up to x^{self.order}"
        k = self.first_difference
        return f"differ at x^{k}: {self.left[k]} vs {self.right[k]}"
