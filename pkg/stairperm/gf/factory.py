from typing import Dict, List

from stairperm.common.exceptions import InvalidInputError
from stairperm.gf.base import CoreGF
from stairperm.gf.families import DmURFamily, UDCFamily, UDFamily, UDRCFamily, UmDRFamily, UpCoreFamily


class GFFactory:
    """
    Based on the "Factory Method" design pattern, this class provides static methods to
    create the generating-function family of a core.
    """
    _families: Dict[str, CoreGF] = {}

    @staticmethod
    def create(family: str) -> CoreGF:
        """
        Create (or reuse) the generating-function family with the given name.

        :param family: One of ``U``, ``UDRC``, ``UDC``, ``UD``, ``DmUR``, ``UmDR``
        :type family: str
        :return: The family evaluator
        :rtype: CoreGF
        """
        if not GFFactory._families:
            GFFactory._families = {
                "U": UpCoreFamily(),
                "UDRC": UDRCFamily(),
                "UDC": UDCFamily(),
                "UD": UDFamily(),
                "DmUR": DmURFamily(),
                "UmDR": UmDRFamily(),
            }
        try:
            return GFFactory._families[family]
        except KeyError:
            raise InvalidInputError(f"Unknown generating-function family {family!r}; use one of {GFFactory.names()}")

    @staticmethod
    def names() -> List[str]:
        return ["U", "UDRC", "UDC", "UD", "DmUR", "UmDR"]
