from typing import Any, Dict, List

import numpy as np
import pandas as pd

from stairperm.common.models.theorem_match import GFTrace


class Formatter:
    """
    A class for formatting results into the stable text formats of the command line.
    """

    @staticmethod
    def format_coefficients(coefficients: List[int]) -> str:
        """
        Join coefficients with commas.

        :param coefficients: The coefficients
        :type coefficients: List[int]
        :return: The series text format, e.g. ``1,1,2,5``
        :rtype: str
        """
        return ",".join(str(c) for c in coefficients)

    @staticmethod
    def format_trace(trace: GFTrace, depth: int = 0) -> List[str]:
        """
        Render a trace as indented lines, one per node, depth first.

        :param trace: The trace
        :type trace: GFTrace
        :param depth: Indentation level of the root
        :type depth: int
        :return: The lines
        :rtype: List[str]
        """
        parameters = "{" + ",".join(trace.parameters) + "}" if trace.parameters else "∅"
        line = f"{'  ' * depth}{trace.theorem} Av({trace.basis}) symmetry={trace.symmetry} P={parameters}"
        if trace.oracle_backed:
            line += " oracle_backed: true"
        lines = [line]
        for child in trace.children:
            lines.extend(Formatter.format_trace(child, depth + 1))
        return lines

    @staticmethod
    def format_flag(value: bool) -> str:
        return "true" if value else "false"

    @staticmethod
    def dataframe_rows(frame: pd.DataFrame) -> List[List[Any]]:
        """Table cells of a report, booleans in lower case."""
        return [[Formatter.format_flag(v) if isinstance(v, (bool, np.bool_)) else v for v in row]
                for row in frame.astype(object).itertuples(index=False, name=None)]

    @staticmethod
    def records(frame: pd.DataFrame) -> List[Dict[str, Any]]:
        """JSON-ready records of a report with plain Python scalars."""
        return [{key: value.item() if hasattr(value, "item") else value for key, value in row.items()}
                for row in frame.to_dict(orient="records")]
