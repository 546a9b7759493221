# -------------------------------------------------------------------------
# Copyright (c) Microsoft Corporation. All rights reserved.
# Licensed under the MIT License.
# --------------------------------------------------------------------------
import logging
from pathlib import Path
from typing import List, Optional, Sequence, Tuple, Union

from pydantic import validator

from sls.common.config_utils import ConfigBase, load_config_file
from sls.exception import GeometryError, InvalidCodeError
from sls.lattice.lattice import Lattice2D
from sls.pauli.group import check_dimensions
from sls.pauli.pauli import PauliOperator

logger = logging.getLogger(__name__)


class CodeFileConfig(ConfigBase):
    """On-disk interchange form of a subsystem code."""

    name: str
    n: int
    gauge_generators: List[str]
    coordinates: Optional[List[Tuple[int, int]]] = None
    width: Optional[int] = None
    height: Optional[int] = None
    ancillas: List[int] = []
    seam_column: Optional[int] = None

    @validator("gauge_generators", each_item=True)
    def _validate_generator(cls, v):
        PauliOperator.from_string(v)
        return v

    @validator("coordinates")
    def _validate_coordinates(cls, v, values):
        if v is not None and "n" in values and len(v) != values["n"]:
            raise ValueError(f"Expected {values['n']} coordinates, got {len(v)}")
        return v


class SubsystemCode:
    """
    Subsystem code given by its gauge generators.

    Generators must be Hermitian and act on the same number of qubits. They may be dependent; the stabilizer group is
    derived as the center of the gauge group. An optional Lattice2D places every qubit on the plane.
    """

    def __init__(
        self,
        gauge_generators: Sequence[PauliOperator],
        name: str = "code",
        geometry: Optional[Lattice2D] = None,
        n: Optional[int] = None,
    ):
        self.n = check_dimensions(gauge_generators, n)
        for generator in gauge_generators:
            if not generator.is_hermitian:
                raise InvalidCodeError(f"Gauge generator {generator} of code '{name}' is not Hermitian")
        if geometry is not None and geometry.n_qubits != self.n:
            raise GeometryError(f"Lattice places {geometry.n_qubits} qubits but code '{name}' has {self.n}")
        self.gauge_generators: Tuple[PauliOperator, ...] = tuple(gauge_generators)
        self.name = name
        self.geometry = geometry
        self._analysis = None

    def __repr__(self) -> str:
        return f"SubsystemCode(name={self.name!r}, n={self.n}, generators={len(self.gauge_generators)})"

    def with_geometry(self, geometry: Optional[Lattice2D]) -> "SubsystemCode":
        return SubsystemCode(self.gauge_generators, self.name, geometry, self.n)

    def to_config(self) -> CodeFileConfig:
        geometry = self.geometry
        return CodeFileConfig(
            name=self.name,
            n=self.n,
            gauge_generators=[str(generator) for generator in self.gauge_generators],
            coordinates=list(geometry.coordinates) if geometry else None,
            width=geometry.width if geometry else None,
            height=geometry.height if geometry else None,
            ancillas=list(geometry.ancillas) if geometry else [],
            seam_column=geometry.seam_column if geometry else None,
        )

    @classmethod
    def from_config(cls, config: CodeFileConfig) -> "SubsystemCode":
        geometry = None
        if config.coordinates is not None:
            geometry = Lattice2D.from_coordinates(
                config.coordinates,
                ancillas=tuple(config.ancillas),
                seam_column=config.seam_column,
                **{key: value for key, value in (("width", config.width), ("height", config.height)) if value},
            )
        generators = [PauliOperator.from_string(generator) for generator in config.gauge_generators]
        return cls(generators, name=config.name, geometry=geometry, n=config.n)

    def to_file(self, path: Union[str, Path]):
        self.to_config().to_file(path)

    @classmethod
    def from_file(cls, path: Union[str, Path]) -> "SubsystemCode":
        logger.debug(f"Loading code from {path}")
        return cls.from_config(CodeFileConfig.parse_obj(load_config_file(path)))
