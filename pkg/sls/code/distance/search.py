# -------------------------------------------------------------------------
# Copyright (c) Microsoft Corporation. All rights reserved.
# Licensed under the MIT License.
# --------------------------------------------------------------------------
from abc import abstractmethod
from dataclasses import dataclass
from typing import Any, Dict, Optional, Tuple, Type, Union

from sls.code.analysis import analyze
from sls.code.subsystem_code import SubsystemCode
from sls.common.auto_config import AutoConfigClass
from sls.common.config_utils import ConfigBase
from sls.pauli.pauli import PauliOperator

DEFAULT_MAX_WEIGHT = 7


@dataclass(frozen=True)
class DistanceResult:
    """Outcome of a bounded distance search. `distance` is None when no dressed logical has weight <= max_weight."""

    distance: Optional[int]
    max_weight: int
    witness: Optional[PauliOperator] = None

    @property
    def exceeds(self) -> bool:
        return self.distance is None


@dataclass(frozen=True)
class SearchProblem:
    """Picklable description of a code for the search workers: packed stabilizer and gauge generator vectors."""

    n: int
    stabilizers: Tuple[int, ...]
    gauge: Tuple[int, ...]

    @classmethod
    def from_code(cls, code: SubsystemCode) -> "SearchProblem":
        return cls(
            code.n,
            tuple(s.packed for s in analyze(code).stabilizer_generators),
            tuple(g.packed for g in code.gauge_generators),
        )


class DistanceSearch(AutoConfigClass):
    """
    Abstract base class for dressed distance searches
    """

    registry: Dict[str, Type["DistanceSearch"]] = {}

    def __init__(self, code: SubsystemCode, config: Optional[Union[Dict[str, Any], ConfigBase]] = None):
        super().__init__(config)
        self.code = code
        self.problem = SearchProblem.from_code(code)

    def default_max_weight(self) -> int:
        return min(self.code.n, DEFAULT_MAX_WEIGHT)

    def run(self, max_weight: Optional[int] = None) -> DistanceResult:
        max_weight = self.default_max_weight() if max_weight is None else max_weight
        return self.search(max_weight)

    @abstractmethod
    def search(self, max_weight: int) -> DistanceResult:
        """
        Find the smallest weight of a dressed logical operator, up to max_weight.
        """
        raise NotImplementedError
