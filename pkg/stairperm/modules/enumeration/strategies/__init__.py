from .base import MeshCondition, TheoremStrategy
from .trivial import TrivialStrategy
from .base_patterns import Base123Strategy, Base132Strategy
from .upcore import UpCoreStrategy
from .downcore import DownCoreStrategy
from .udrc import UDRCStrategy
from .rucupi import RuCuPiStrategy
from .rdcdpi import RdCdPiStrategy
from .rdcu import RdCuStrategy
from .rd_2134 import Rd2134Strategy
from .ru_2143 import Ru2143Strategy
