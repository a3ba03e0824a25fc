from .permutation import Basis, Permutation, SYMMETRIES, SYMMETRY_INVERSES, occurs
from .mesh_pattern import MeshPattern
from .encoding import Cell, StaircaseEncoding, grid_cells
from .series import TruncatedSeries, divide
from .graph import CoreGraph, CoreKind, LabelledIndependentSet
from .theorem_match import GFTrace, TheoremMatch, WilfReport, format_parameters
