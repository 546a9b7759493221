# -------------------------------------------------------------------------
# Copyright (c) Microsoft Corporation. All rights reserved.
# Licensed under the MIT License.
# --------------------------------------------------------------------------


def popcount(value: int) -> int:
    return bin(value).count("1")


def iter_bits(value: int):
    """Yield the indices of the set bits of `value` in increasing order."""
    index = 0
    while value:
        if value & 1:
            yield index
        value >>= 1
        index += 1


def bits_to_int(indices) -> int:
    value = 0
    for index in indices:
        value |= 1 << int(index)
    return value
