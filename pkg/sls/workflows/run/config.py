# -------------------------------------------------------------------------
# Copyright (c) Microsoft Corporation. All rights reserved.
# Licensed under the MIT License.
# --------------------------------------------------------------------------
import re
from pathlib import Path
from typing import List, Optional

from pydantic import validator

from sls.code.subsystem_code import SubsystemCode
from sls.common.config_utils import ConfigBase, validate_enum
from sls.constants import CodeFamily, Command, LogicalBasis, OutputFormat, PauliType
from sls.exception import UnsupportedParameterError
from sls.lattice.builders import build_code

# builder reference accepted wherever a code file is expected, e.g. "ssc:3" or "bacon_shor:3x3"
_BUILDER_REF = re.compile(r"^(?P<family>[a-z_]+):(?P<size>\d+)(?:x(?P<height>\d+))?$")


def resolve_code(ref: str) -> SubsystemCode:
    """Load a code from an interchange file, or build it from a `family:size[xheight]` reference."""
    path = Path(ref)
    if path.exists():
        return SubsystemCode.from_file(path)
    match = _BUILDER_REF.match(str(ref))
    if match is None:
        raise FileNotFoundError(f"Code file {ref} does not exist")
    try:
        family = CodeFamily(match.group("family"))
    except ValueError:
        raise UnsupportedParameterError(f"Unknown code family '{match.group('family')}'") from None
    height = match.group("height")
    return build_code(family, int(match.group("size")), int(height) if height else None)


class ExperimentConfig(ConfigBase):
    """Fully resolved configuration of one cli run; echoed into every report."""

    command: Command
    family: Optional[CodeFamily] = None
    size: Optional[int] = None
    height: Optional[int] = None
    code: Optional[str] = None
    code_a: Optional[str] = None
    code_b: Optional[str] = None
    with_ancillas: bool = True
    pauli_type: Optional[PauliType] = None
    max_weight: Optional[int] = None
    distance_algorithm: str = "pruned"
    seed: int = 0
    shots: int = 1
    label: Optional[LogicalBasis] = None
    output: Optional[Path] = None
    report: Optional[Path] = None
    format: OutputFormat = OutputFormat.JSON
    log_severity_level: int = 1

    @validator("command", "family", "pauli_type", "label", "format", pre=True)
    def _validate_enums(cls, v, field):
        if v is None:
            return v
        return validate_enum(field.type_, v)

    @validator("shots", "max_weight")
    def _validate_positive(cls, v, field):
        if v is not None and v < 1:
            raise ValueError(f"{field.name} must be >= 1, got {v}")
        return v

    @validator("family", always=True)
    def _validate_build_inputs(cls, v, values):
        if values.get("command") == Command.BUILD and v is None:
            raise ValueError("build needs a code family")
        return v

    def require(self, *fields: str):
        missing = [name for name in fields if getattr(self, name) is None]
        if missing:
            raise UnsupportedParameterError(f"{self.command.value} needs {', '.join(missing)}")

    def labels(self) -> List[LogicalBasis]:
        return [self.label] if self.label is not None else list(LogicalBasis)

    def seeds(self) -> List[int]:
        return list(range(self.seed, self.seed + self.shots))
