# -------------------------------------------------------------------------
# Copyright (c) Microsoft Corporation. All rights reserved.
# Licensed under the MIT License.
# --------------------------------------------------------------------------
import logging

import numpy as np
import pytest

from sls.common.utils import bits_to_int, iter_bits, popcount
from sls.logging import (
    get_package_logger,
    set_default_logger_severity,
    set_verbosity_debug,
    set_verbosity_error,
    set_verbosity_info,
    set_verbosity_warning,
)


def test_bit_helpers():
    assert popcount(0b101101) == 4
    assert list(iter_bits(0b101101)) == [0, 2, 3, 5]
    assert bits_to_int([0, 2, 3, 5]) == 0b101101
    assert list(iter_bits(0)) == []


def test_bits_to_int_accepts_numpy_indices():
    value = bits_to_int(np.flatnonzero([0, 1, 1]))
    assert type(value) is int
    assert value == 0b110
    assert bits_to_int(np.array([64, 70])) == (1 << 64) | (1 << 70)


@pytest.mark.parametrize("level,expected", [(0, logging.DEBUG), ("warning", logging.WARNING), (4, logging.CRITICAL)])
def test_set_default_logger_severity(level, expected):
    set_default_logger_severity(level)
    assert get_package_logger().level == expected
    set_default_logger_severity(1)


def test_invalid_severity():
    with pytest.raises(ValueError):
        set_default_logger_severity(7)


def test_verbosity_helpers():
    set_verbosity_debug()
    assert get_package_logger().level == logging.DEBUG
    set_verbosity_error()
    assert get_package_logger().level == logging.ERROR
    set_verbosity_info()
    assert get_package_logger().level == logging.INFO
    set_verbosity_warning()
    assert get_package_logger().level == logging.WARNING
