# -------------------------------------------------------------------------
# Copyright (c) Microsoft Corporation. All rights reserved.
# Licensed under the MIT License.
# --------------------------------------------------------------------------
from sls.surgery.gauge import JointRecord, SplitResult, gauge_fix, split
from sls.surgery.merge import MergeResult, MergeSpec, build_merged_code, merge_codes, merging_operators
from sls.surgery.verification import MergeReport, matches_reference_code, verify_lemma2, verify_merged_parameters

__all__ = [
    "JointRecord",
    "MergeReport",
    "MergeResult",
    "MergeSpec",
    "SplitResult",
    "build_merged_code",
    "gauge_fix",
    "matches_reference_code",
    "merge_codes",
    "merging_operators",
    "split",
    "verify_lemma2",
    "verify_merged_parameters",
]
