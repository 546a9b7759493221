# -------------------------------------------------------------------------
# Copyright (c) Microsoft Corporation. All rights reserved.
# Licensed under the MIT License.
# --------------------------------------------------------------------------
import logging
from typing import Union

_PACKAGE_LOGGER = __name__.split(".")[0]

# severity levels accepted by the cli and experiment configs
_LEVEL_MAP = {0: logging.DEBUG, 1: logging.INFO, 2: logging.WARNING, 3: logging.ERROR, 4: logging.CRITICAL}
_LEVEL_NAMES = {"debug": 0, "info": 1, "warning": 2, "error": 3, "critical": 4}


def get_package_logger() -> logging.Logger:
    return logging.getLogger(_PACKAGE_LOGGER)


def set_verbosity(verbose):
    get_package_logger().setLevel(verbose)


def set_verbosity_info():
    set_verbosity(logging.INFO)


def set_verbosity_warning():
    set_verbosity(logging.WARNING)


def set_verbosity_debug():
    set_verbosity(logging.DEBUG)


def set_verbosity_error():
    set_verbosity(logging.ERROR)


def set_default_logger_severity(level: Union[int, str]):
    """
    Set log level for the sls package.

    :param level: 0: DEBUG, 1: INFO, 2: WARNING, 3: ERROR, 4: CRITICAL, or the lowercase level name
    """
    if isinstance(level, str):
        level = _LEVEL_NAMES.get(level.lower(), level)

    if level not in _LEVEL_MAP:
        raise ValueError(f"Invalid level {level}, should be one of {list(_LEVEL_MAP.keys())} or {list(_LEVEL_NAMES)}")

    set_verbosity(_LEVEL_MAP[level])
