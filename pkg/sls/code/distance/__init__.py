# -------------------------------------------------------------------------
# Copyright (c) Microsoft Corporation. All rights reserved.
# Licensed under the MIT License.
# --------------------------------------------------------------------------
from typing import Any, Dict, Optional

from sls.code.distance.exhaustive import ExhaustiveDistanceSearch
from sls.code.distance.pruned import PrunedDistanceSearch
from sls.code.distance.search import DEFAULT_MAX_WEIGHT, DistanceResult, DistanceSearch
from sls.code.subsystem_code import SubsystemCode


def minimum_weight_logical(
    code: SubsystemCode,
    max_weight: Optional[int] = None,
    algorithm: str = "pruned",
    config: Optional[Dict[str, Any]] = None,
) -> DistanceResult:
    return DistanceSearch.from_registry(algorithm, code, config).run(max_weight)


def distance(
    code: SubsystemCode,
    max_weight: Optional[int] = None,
    algorithm: str = "pruned",
    config: Optional[Dict[str, Any]] = None,
) -> Optional[int]:
    """
    Dressed distance of `code`: the smallest weight of an operator that commutes with every stabilizer and is not in
    the gauge group. Returns None when that weight exceeds max_weight (default min(n, 7)).
    """
    return minimum_weight_logical(code, max_weight, algorithm, config).distance


__all__ = [
    "DEFAULT_MAX_WEIGHT",
    "DistanceResult",
    "DistanceSearch",
    "ExhaustiveDistanceSearch",
    "PrunedDistanceSearch",
    "distance",
    "minimum_weight_logical",
]
