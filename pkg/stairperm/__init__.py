from .common import *
from .modules.enumeration import ClassEnumerator, ClassGF
from .modules.bijection import BijectionLab, BijectionReport, WeightedSet
from .modules.sampling import UniformSampler, CountTable
