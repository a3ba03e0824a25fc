from abc import ABC
from typing import Iterable, Optional, Union

from stairperm.common.models.permutation import Basis
from stairperm.common.services.logger import Logger
from stairperm.common.services.settings import Settings, get_settings


BasisLike = Union[Basis, str, Iterable]


class BaseModule(ABC):

    def __init__(self, settings: Optional[Settings] = None) -> None:
        """
        Initialize the base module with the given settings.

        :param settings: The settings to use; defaults to the process-wide settings
        :type settings: Optional[Settings]
        """
        self.settings: Settings = settings or get_settings()
        self.logger: Logger = Logger(self.__class__.__name__, self.settings.verbose)

    def _parse_basis(self, basis: BasisLike) -> Basis:
        """
        Accept a basis, its text form or an iterable of patterns, logging redundant patterns.

        :param basis: The basis
        :type basis: Union[Basis, str, Iterable]
        :return: The reduced basis
        :rtype: Basis
        """
        if isinstance(basis, str):
            basis = Basis.from_string(basis)
        elif not isinstance(basis, Basis):
            basis = Basis(basis)
        if basis.stripped:
            self.logger.info(f"Stripped redundant patterns {[str(p) for p in basis.stripped]} from the basis, keeping {basis}")
        return basis
