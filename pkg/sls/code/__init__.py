# -------------------------------------------------------------------------
# Copyright (c) Microsoft Corporation. All rights reserved.
# Licensed under the MIT License.
# --------------------------------------------------------------------------
from sls.code.analysis import (
    CodeAnalysis,
    CodeParameters,
    analyze,
    bare_logicals,
    center,
    find_logical_in_region,
    is_correctable,
    is_dressed_logical,
    reduce_to_support,
)
from sls.code.distance import distance, minimum_weight_logical
from sls.code.subsystem_code import CodeFileConfig, SubsystemCode

__all__ = [
    "CodeAnalysis",
    "CodeFileConfig",
    "CodeParameters",
    "SubsystemCode",
    "analyze",
    "bare_logicals",
    "center",
    "distance",
    "find_logical_in_region",
    "is_correctable",
    "is_dressed_logical",
    "minimum_weight_logical",
    "reduce_to_support",
]
