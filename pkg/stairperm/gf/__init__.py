from .base import CoreGF
from .families import UpCoreFamily, UDRCFamily, UDCFamily, UDFamily, DmURFamily, UmDRFamily
from .factory import GFFactory
from .markers import marker_coefficients, exhaustive_coefficients, size_distribution
