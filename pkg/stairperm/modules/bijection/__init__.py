from .theorems import BijectionTheorem, WeightClass, THEOREM_TABLE, get_theorem
from .bijection_module import BijectionLab, BijectionReport, WeightedSet
