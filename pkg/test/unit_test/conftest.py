# -------------------------------------------------------------------------
# Copyright (c) Microsoft Corporation. All rights reserved.
# Licensed under the MIT License.
# --------------------------------------------------------------------------
import pytest

from sls.lattice.builders import build_bacon_shor, build_color_code, build_subsystem_surface_code, build_surface_code
from sls.surgery.merge import merge_codes


@pytest.fixture(scope="session")
def ssc():
    return build_subsystem_surface_code(3)


@pytest.fixture(scope="session")
def surface3():
    return build_surface_code(3)


@pytest.fixture(scope="session")
def color3():
    return build_color_code(3)


@pytest.fixture(scope="session")
def bacon_shor3():
    return build_bacon_shor(3, 3)


@pytest.fixture(scope="session")
def merged_ssc(ssc):
    return merge_codes(ssc, ssc, with_ancillas=False)


@pytest.fixture(scope="session")
def merged_sc_cc(surface3, color3):
    return merge_codes(surface3, color3, with_ancillas=True)


@pytest.fixture(scope="session")
def merged_bacon_shor(bacon_shor3):
    return merge_codes(bacon_shor3, bacon_shor3, with_ancillas=False)


@pytest.fixture(scope="session")
def corpus_merges(merged_ssc, merged_sc_cc, merged_bacon_shor):
    return {"ssc+ssc": merged_ssc, "sc+cc": merged_sc_cc, "bs+bs": merged_bacon_shor}
