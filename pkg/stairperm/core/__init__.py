from .oracle import enumerate_class, count_class
from .mesh import contains_mesh
from .staircase import staircase_encode, grid_realize, uperm, dperm, row_column_profile
from .core_graphs import build_core, independent_sets, label, labelled_independent_sets
from .fixed_point import solve_fixed_point
