# -------------------------------------------------------------------------
# Copyright (c) Microsoft Corporation. All rights reserved.
# Licensed under the MIT License.
# --------------------------------------------------------------------------
from sls.lattice.lattice import Lattice2D, interaction_range

__all__ = ["Lattice2D", "interaction_range"]
