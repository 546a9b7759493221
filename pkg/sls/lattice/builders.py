# -------------------------------------------------------------------------
# Copyright (c) Microsoft Corporation. All rights reserved.
# Licensed under the MIT License.
# --------------------------------------------------------------------------
import logging
from abc import abstractmethod
from typing import Any, Callable, Dict, Iterable, List, Optional, Tuple, Type, Union

from pydantic import ValidationError, validator

from sls.code.subsystem_code import SubsystemCode
from sls.common.auto_config import AutoConfigClass
from sls.common.config_utils import ConfigBase, ConfigParam
from sls.exception import UnsupportedParameterError
from sls.lattice.lattice import Coordinate, Lattice2D
from sls.pauli.pauli import PauliOperator

logger = logging.getLogger(__name__)


class CodeBuilder(AutoConfigClass):
    """
    Abstract base class for lattice code families. Each family is registered under its name and configured with a
    `size` (and optionally a `height`).
    """

    registry: Dict[str, Type["CodeBuilder"]] = {}

    def __init__(self, config: Optional[Union[Dict[str, Any], ConfigBase]] = None):
        try:
            super().__init__(config)
        except ValidationError as e:
            raise UnsupportedParameterError(f"Invalid {self.name} parameters: {e}") from e

    @abstractmethod
    def build(self) -> SubsystemCode:
        raise NotImplementedError


def _operator(lattice: Lattice2D, letter: str, coordinates: Iterable[Coordinate]) -> PauliOperator:
    return PauliOperator.from_sparse(lattice.n_qubits, {lattice.qubit_at(row, col): letter for row, col in coordinates})


def _grid(width: int, height: int, missing: Iterable[Coordinate] = ()) -> Lattice2D:
    missing = set(missing)
    coordinates = [
        (row, col) for row in range(1, height + 1) for col in range(1, width + 1) if (row, col) not in missing
    ]
    return Lattice2D(width=width, height=height, coordinates=tuple(coordinates))


def _odd_distance(v):
    if v < 3 or v % 2 == 0:
        raise ValueError(f"Distance must be an odd integer >= 3, got {v}")
    return v


def _exactly_three(v):
    if v != 3:
        raise ValueError(f"Only size 3 is supported, got {v}")
    return v


def _at_least_two(v):
    if v is not None and v < 2:
        raise ValueError(f"Lattice dimensions must be >= 2, got {v}")
    return v


class SurfaceCodeBuilder(CodeBuilder):
    """
    Rotated planar surface code on a d x d grid. Face (r, c) covers the four vertices of the unit square with top-left
    corner (r, c) and is Z-type when r + c is even. Weight-2 Z faces close the top and bottom boundaries and weight-2 X
    faces the left and right ones. Z_L runs down a column, X_L along a row.
    """

    name = "surface"

    @staticmethod
    def _default_config():
        return {"size": ConfigParam(type_=int, required=True, description="Code distance d (odd, >= 3).")}

    @staticmethod
    def _validators() -> Dict[str, Callable]:
        return {"validate_size": validator("size", allow_reuse=True)(_odd_distance)}

    def build(self) -> SubsystemCode:
        d = self.config.size
        lattice = _grid(d, d)
        generators = []
        for r in range(1, d):
            for c in range(1, d):
                letter = "Z" if (r + c) % 2 == 0 else "X"
                generators.append(_operator(lattice, letter, [(r, c), (r, c + 1), (r + 1, c), (r + 1, c + 1)]))
        for c in range(1, d):
            if c % 2 == 0:
                generators.append(_operator(lattice, "Z", [(1, c), (1, c + 1)]))
            else:
                generators.append(_operator(lattice, "Z", [(d, c), (d, c + 1)]))
        for r in range(1, d):
            if r % 2 == 1:
                generators.append(_operator(lattice, "X", [(r, 1), (r + 1, 1)]))
            else:
                generators.append(_operator(lattice, "X", [(r, d), (r + 1, d)]))
        return SubsystemCode(generators, name=f"surface-{d}", geometry=lattice)


class ColorCodeBuilder(CodeBuilder):
    """
    Distance-3 triangular color code (the 7-qubit Steane layout) on a 3 x 3 box:

        row 1:  a b .
        row 2:  c e f
        row 3:  g h .

    Plaquettes {a,b,c,e}, {c,e,g,h} and {b,e,h,f} each carry an X and a Z stabilizer. The left column is a Z_L (or
    X_L) string along one edge of the triangle.
    """

    name = "color"

    _PLAQUETTES: Tuple[Tuple[Coordinate, ...], ...] = (
        ((1, 1), (1, 2), (2, 1), (2, 2)),
        ((2, 1), (2, 2), (3, 1), (3, 2)),
        ((1, 2), (2, 2), (2, 3), (3, 2)),
    )

    @staticmethod
    def _default_config():
        return {"size": ConfigParam(type_=int, default_value=3, description="Code distance; only 3 is supported.")}

    @staticmethod
    def _validators() -> Dict[str, Callable]:
        return {"validate_size": validator("size", allow_reuse=True)(_exactly_three)}

    def build(self) -> SubsystemCode:
        lattice = _grid(3, 3, missing=[(1, 3), (3, 3)])
        generators = [_operator(lattice, "X", plaquette) for plaquette in self._PLAQUETTES]
        generators += [_operator(lattice, "Z", plaquette) for plaquette in self._PLAQUETTES]
        return SubsystemCode(generators, name="color-3", geometry=lattice)


class SubsystemSurfaceCodeBuilder(CodeBuilder):
    """
    Subsystem surface code unit cell: eight qubits on the 3 x 3 grid with the central vertex empty. Triangles
    G1 (Z, top-left), G2 (X, top-right), G3 (X, bottom-left) and G4 (Z, bottom-right) plus the boundary pairs
    S1 (X, left), S2 (Z, top), S3 (Z, bottom) and S4 (X, right) generate the gauge group.
    """

    name = "ssc"

    @staticmethod
    def _default_config():
        return {"size": ConfigParam(type_=int, default_value=3, description="Linear size L; only 3 is supported.")}

    @staticmethod
    def _validators() -> Dict[str, Callable]:
        return {"validate_size": validator("size", allow_reuse=True)(_exactly_three)}

    def build(self) -> SubsystemCode:
        lattice = _grid(3, 3, missing=[(2, 2)])
        roster: List[Tuple[str, List[Coordinate]]] = [
            ("Z", [(1, 1), (1, 2), (2, 1)]),
            ("X", [(1, 2), (1, 3), (2, 3)]),
            ("X", [(2, 1), (3, 1), (3, 2)]),
            ("Z", [(2, 3), (3, 2), (3, 3)]),
            ("X", [(1, 1), (2, 1)]),
            ("Z", [(1, 2), (1, 3)]),
            ("Z", [(3, 1), (3, 2)]),
            ("X", [(2, 3), (3, 3)]),
        ]
        generators = [_operator(lattice, letter, support) for letter, support in roster]
        return SubsystemCode(generators, name="ssc-3", geometry=lattice)


class BaconShorBuilder(CodeBuilder):
    """
    Bacon-Shor code on a size x height grid: XX on horizontal neighbours, ZZ on vertical neighbours. X_L is an X
    column and Z_L a Z row.
    """

    name = "bacon_shor"

    @staticmethod
    def _default_config():
        return {
            "size": ConfigParam(type_=int, required=True, description="Width Lx (columns)."),
            "height": ConfigParam(type_=int, description="Height Ly (rows); defaults to the width."),
        }

    @staticmethod
    def _validators() -> Dict[str, Callable]:
        return {
            "validate_size": validator("size", allow_reuse=True)(_at_least_two),
            "validate_height": validator("height", allow_reuse=True)(_at_least_two),
        }

    def build(self) -> SubsystemCode:
        width = self.config.size
        height = self.config.height or width
        lattice = _grid(width, height)
        generators = [
            _operator(lattice, "X", [(row, col), (row, col + 1)])
            for row in range(1, height + 1)
            for col in range(1, width)
        ]
        generators += [
            _operator(lattice, "Z", [(row, col), (row + 1, col)])
            for row in range(1, height)
            for col in range(1, width + 1)
        ]
        return SubsystemCode(generators, name=f"bacon_shor-{width}x{height}", geometry=lattice)


def build_code(family: str, size: int, height: Optional[int] = None) -> SubsystemCode:
    """Build a registered code family; raises UnsupportedParameterError for unknown families or sizes."""
    if family not in CodeBuilder.registry:
        raise UnsupportedParameterError(f"Unknown code family '{family}'. Known: {sorted(CodeBuilder.registry)}")
    config = {"size": size}
    if height is not None:
        if family != BaconShorBuilder.name:
            raise UnsupportedParameterError(f"Code family '{family}' does not take a height")
        config["height"] = height
    code = CodeBuilder.from_registry(family, config).build()
    logger.debug(f"Built {code}")
    return code


def build_surface_code(d: int) -> SubsystemCode:
    return build_code(SurfaceCodeBuilder.name, d)


def build_color_code(d: int = 3) -> SubsystemCode:
    return build_code(ColorCodeBuilder.name, d)


def build_subsystem_surface_code(size: int = 3) -> SubsystemCode:
    return build_code(SubsystemSurfaceCodeBuilder.name, size)


def build_bacon_shor(width: int, height: int) -> SubsystemCode:
    return build_code(BaconShorBuilder.name, width, height)
