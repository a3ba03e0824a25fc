"""
The six core generating-function families.

Slots take series in x; marker values used for coefficient extraction are passed as constants.
"""
from typing import Tuple

from stairperm.common.models.graph import LabelledIndependentSet
from stairperm.common.models.series import TruncatedSeries
from stairperm.core.fixed_point import solve_fixed_point
from stairperm.gf.base import CoreGF


def _chain_bound(n: int) -> int:
    # Independent sets avoiding up-edges are weakly increasing staircase chains
    return max(2 * n - 1, 0)


class UpCoreFamily(CoreGF):
    """
    Independent sets of U(B_n) (equally of D(B_n)) by size:
    F = 1 + xF + xyF^2 / (1 - y(F - 1)).
    """
    family = "U"
    kind = "U"
    slots = ("y",)

    def evaluate(self, y: TruncatedSeries) -> TruncatedSeries:
        x = TruncatedSeries.x(y.order)
        return solve_fixed_point(lambda f: 1 + x * f + x * y * f * f / (1 - y * (f - 1)), y.order, self.logger)

    def closed_form(self, y: TruncatedSeries) -> TruncatedSeries:
        """
        The same series from the quadratic yF^2 - (1 + 2y - x - xy)F + (1 + y) = 0.

        Division by y costs val(y) orders of precision.
        """
        x = TruncatedSeries.x(y.order)
        b = 1 + 2 * y - x - x * y
        discriminant = b * b - 4 * y * (1 + y)
        return (b - discriminant.sqrt()) / (2 * y)

    def degree_bounds(self, n: int) -> Tuple[int, ...]:
        return (_chain_bound(n),)

    def multidegree(self, labelled: LabelledIndependentSet) -> Tuple[int, ...]:
        return (len(labelled.members),)


class UDRCFamily(CoreGF):
    """Independent sets of UDRC(B_n) by size: (1 - x) / (x^2 - xy - 2x + 1)."""
    family = "UDRC"
    kind = "UDRC"
    slots = ("y",)

    def evaluate(self, y: TruncatedSeries) -> TruncatedSeries:
        x = TruncatedSeries.x(y.order)
        return (1 - x) / (x * x - x * y - 2 * x + 1)

    def degree_bounds(self, n: int) -> Tuple[int, ...]:
        return (_chain_bound(n),)

    def multidegree(self, labelled: LabelledIndependentSet) -> Tuple[int, ...]:
        return (len(labelled.members),)


class UDCFamily(CoreGF):
    """
    Independent sets of UDC(B_n) by size (y) and rows occupied (z):
    (1 - x - xy) / (x^2 y - xyz + x^2 - xy - 2x + 1).
    """
    family = "UDC"
    kind = "UDC"
    slots = ("y", "z")

    def evaluate(self, y: TruncatedSeries, z: TruncatedSeries) -> TruncatedSeries:
        x = self._variable((y, z))
        return (1 - x - x * y) / (x * x * y - x * y * z + x * x - x * y - 2 * x + 1)

    def relabelled(self, y: TruncatedSeries, w: TruncatedSeries) -> TruncatedSeries:
        """F(x, y, w / y) without dividing: the rightmost member of each row weighs w instead of y."""
        x = self._variable((y, w))
        return (1 - x - x * y) / (x * x * y - x * w + x * x - x * y - 2 * x + 1)

    def degree_bounds(self, n: int) -> Tuple[int, ...]:
        return _chain_bound(n), n

    def multidegree(self, labelled: LabelledIndependentSet) -> Tuple[int, ...]:
        return len(labelled.members), labelled.rows_occupied


class UDFamily(CoreGF):
    """
    Independent sets of UD(B_n) by size (y) and rows occupied (z): F = 1 / (1 - x - D) with
    D = xyz(xy^2 z - x + 1) / ((xyz + x - 1)(xy + x - 1)), one hook per nonempty top row.
    """
    family = "UD"
    kind = "UD"
    slots = ("y", "z")

    def evaluate(self, y: TruncatedSeries, z: TruncatedSeries) -> TruncatedSeries:
        x = self._variable((y, z))
        hook = x * y * z * (x * y * y * z - x + 1) / ((x * y * z + x - 1) * (x * y + x - 1))
        return 1 / (1 - x - hook)

    def relabelled(self, y: TruncatedSeries, w: TruncatedSeries) -> TruncatedSeries:
        """F(x, y, w / y) without dividing."""
        x = self._variable((y, w))
        hook = x * w * (x * y * w - x + 1) / ((x * w + x - 1) * (x * y + x - 1))
        return 1 / (1 - x - hook)

    def degree_bounds(self, n: int) -> Tuple[int, ...]:
        return _chain_bound(n), n

    def multidegree(self, labelled: LabelledIndependentSet) -> Tuple[int, ...]:
        return len(labelled.members), labelled.rows_occupied


class DmURFamily(CoreGF):
    """
    phi-labelled independent sets of the merged core D(B_n) with UR(B_{n-1}):
    R = 1 / (1 - x(1 + t) - x^2 y(s + 1)(z + 1) / (1 - x(s + 1)(y + 1))).
    """
    family = "DmUR"
    kind = "DmUR"
    labelling = "phi"
    slots = ("y", "z", "s", "t")

    def evaluate(self, y: TruncatedSeries, z: TruncatedSeries, s: TruncatedSeries, t: TruncatedSeries) -> TruncatedSeries:
        x = self._variable((y, z, s, t))
        inner = x * x * y * (s + 1) * (z + 1) / (1 - x * (s + 1) * (y + 1))
        return 1 / (1 - x * (1 + t) - inner)

    def degree_bounds(self, n: int) -> Tuple[int, ...]:
        return max(n - 1, 0), n, n, n

    def multidegree(self, labelled: LabelledIndependentSet) -> Tuple[int, ...]:
        return labelled.label_counts("yzst")


class UmDRFamily(CoreGF):
    """
    psi-labelled independent sets of the merged core U(B_n) with DR(B_{n-1}):
    R = (1 - Q) / (1 - x(s + 1) - Q) with Q = xy(z + 1) / (1 - x(y + 1)).
    """
    family = "UmDR"
    kind = "UmDR"
    labelling = "psi"
    slots = ("y", "z", "s")

    def evaluate(self, y: TruncatedSeries, z: TruncatedSeries, s: TruncatedSeries) -> TruncatedSeries:
        x = self._variable((y, z, s))
        q = x * y * (z + 1) / (1 - x * (y + 1))
        return (1 - q) / (1 - x * (s + 1) - q)

    def degree_bounds(self, n: int) -> Tuple[int, ...]:
        return max(n - 1, 0), n, n

    def multidegree(self, labelled: LabelledIndependentSet) -> Tuple[int, ...]:
        return labelled.label_counts("yzs")
