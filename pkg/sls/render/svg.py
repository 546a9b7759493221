# -------------------------------------------------------------------------
# Copyright (c) Microsoft Corporation. All rights reserved.
# Licensed under the MIT License.
# --------------------------------------------------------------------------
import logging
import math
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple, Union
from xml.sax.saxutils import escape

from sls.code.subsystem_code import SubsystemCode
from sls.common.config_utils import ConfigBase
from sls.exception import GeometryError
from sls.lattice.lattice import Lattice2D
from sls.pauli.pauli import PauliOperator

logger = logging.getLogger(__name__)

Point = Tuple[float, float]


class RenderStyle(ConfigBase):
    spacing: float = 60.0
    margin: float = 40.0
    qubit_radius: float = 6.0
    ancilla_radius: float = 8.0
    lump_bulge: float = 0.3
    x_color: str = "#46A5FF"
    z_color: str = "#FD6360"
    mixed_color: str = "#B07CD8"
    ancilla_color: str = "#FF00FF"
    seam_color: str = "#888888"
    opacity: float = 0.5


class SvgCanvas:
    """Append-only SVG 1.1 document builder."""

    def __init__(self, width: float, height: float):
        self.width = width
        self.height = height
        self.parts: List[str] = [
            '<?xml version="1.0" standalone="no"?>\n',
            '<!DOCTYPE svg PUBLIC "-//W3C//DTD SVG 1.1//EN" "http://www.w3.org/Graphics/SVG/1.1/DTD/svg11.dtd">\n',
            f'<svg version="1.1" width="{width:.1f}" height="{height:.1f}" viewBox="0 0 {width:.1f} {height:.1f}"'
            ' xmlns="http://www.w3.org/2000/svg">\n',
        ]

    def group_start(self, group_id: str):
        self.parts.append(f'<g id="{group_id}">\n')

    def group_end(self):
        self.parts.append("</g>\n")

    def rectangle(self, x: float, y: float, width: float, height: float, fill: str, extra: str = ""):
        self.parts.append(
            f'<rect x="{x:.1f}" y="{y:.1f}" width="{width:.1f}" height="{height:.1f}" fill="{fill}" {extra}/>\n'
        )

    def circle(self, point: Point, radius: float, fill: str, css_class: str, extra: str = ""):
        x, y = point
        self.parts.append(
            f'<circle class="{css_class}" cx="{x:.1f}" cy="{y:.1f}" r="{radius:.1f}" fill="{fill}" {extra}/>\n'
        )

    def polygon(self, points: Sequence[Point], fill: str, css_class: str, extra: str = ""):
        coordinates = " ".join(f"{x:.1f},{y:.1f}" for x, y in points)
        self.parts.append(f'<polygon class="{css_class}" points="{coordinates}" fill="{fill}" {extra}/>\n')

    def path(self, d: str, fill: str, css_class: str, extra: str = ""):
        self.parts.append(f'<path class="{css_class}" d="{d}" fill="{fill}" {extra}/>\n')

    def polyline(self, points: Sequence[Point], stroke: str, css_class: str, extra: str = ""):
        coordinates = " ".join(f"{x:.1f},{y:.1f}" for x, y in points)
        self.parts.append(
            f'<polyline class="{css_class}" points="{coordinates}" fill="none" stroke="{stroke}" {extra}/>\n'
        )

    def text(self, point: Point, string: str, extra: str = ""):
        self.parts.append(f'<text x="{point[0]:.1f}" y="{point[1]:.1f}" {extra}>{escape(string)}</text>\n')

    def get_svg(self) -> str:
        return "".join(self.parts) + "</svg>\n"


class LatticeRenderer:
    """
    Draws a lattice code in the usual lattice-surgery figure style: qubits as dots, gauge generators as filled
    plaquettes (weight-2 generators as lumps), logical operators as dashed strings and, for merged lattices, the seam
    column and its ancillas highlighted.
    """

    def __init__(self, lattice: Lattice2D, style: Optional[RenderStyle] = None):
        self.lattice = lattice
        self.style = style or RenderStyle()
        s = self.style
        self.canvas = SvgCanvas(
            2 * s.margin + max(lattice.width - 1, 0) * s.spacing,
            2 * s.margin + max(lattice.height - 1, 0) * s.spacing,
        )
        self.canvas.rectangle(0, 0, self.canvas.width, self.canvas.height, "white", 'class="frame" stroke="#222222"')

    def position(self, qubit: int) -> Point:
        row, col = self.lattice.coordinate(qubit)
        return self.style.margin + (col - 1) * self.style.spacing, self.style.margin + (row - 1) * self.style.spacing

    def _center(self) -> Point:
        s = self.style
        return (
            s.margin + max(self.lattice.width - 1, 0) * s.spacing / 2,
            s.margin + max(self.lattice.height - 1, 0) * s.spacing / 2,
        )

    def color(self, operator: PauliOperator) -> str:
        pauli_type = operator.pauli_type
        if pauli_type == "X":
            return self.style.x_color
        if pauli_type == "Z":
            return self.style.z_color
        return self.style.mixed_color

    def draw_seam(self):
        seam = self.lattice.seam_column
        if seam is None:
            return
        s = self.style
        x = s.margin + (seam - 1) * s.spacing
        top, bottom = s.margin / 2, self.canvas.height - s.margin / 2
        self.canvas.rectangle(
            x - s.spacing / 4,
            top,
            s.spacing / 2,
            bottom - top,
            s.seam_color,
            f'class="seam" fill-opacity="0.15" stroke="{s.seam_color}" stroke-dasharray="4,4"',
        )

    def _hull(self, points: List[Point]) -> List[Point]:
        cx = sum(x for x, _ in points) / len(points)
        cy = sum(y for _, y in points) / len(points)
        return sorted(points, key=lambda p: (math.atan2(p[1] - cy, p[0] - cx), p))

    def _lump(self, a: Point, b: Point) -> str:
        s = self.style
        mx, my = (a[0] + b[0]) / 2, (a[1] + b[1]) / 2
        dx, dy = b[0] - a[0], b[1] - a[1]
        length = math.hypot(dx, dy) or 1.0
        nx, ny = -dy / length, dx / length
        cx, cy = self._center()
        if (mx - cx) * nx + (my - cy) * ny < 0:
            nx, ny = -nx, -ny
        bulge = s.lump_bulge * s.spacing * 2
        control = (mx + nx * bulge, my + ny * bulge)
        return f"M {a[0]:.1f} {a[1]:.1f} Q {control[0]:.1f} {control[1]:.1f} {b[0]:.1f} {b[1]:.1f} Z"

    def draw_generators(self, generators: Sequence[PauliOperator]):
        groups: Dict[str, List[PauliOperator]] = {"X": [], "Z": [], "mixed": []}
        for generator in generators:
            groups[generator.pauli_type or "mixed"].append(generator)
        for name, members in groups.items():
            if not members:
                continue
            self.canvas.group_start(f"gauge-{name}")
            for generator in members:
                points = [self.position(q) for q in generator.support()]
                fill = self.color(generator)
                extra = f'fill-opacity="{self.style.opacity}" stroke="{fill}"'
                if len(points) == 1:
                    self.canvas.circle(points[0], self.style.qubit_radius * 2, fill, "single", extra)
                elif len(points) == 2:
                    self.canvas.path(self._lump(*points), fill, "lump", extra)
                else:
                    self.canvas.polygon(self._hull(points), fill, "plaquette", extra)
            self.canvas.group_end()

    def draw_logicals(self, logicals: Sequence[PauliOperator]):
        if not logicals:
            return
        self.canvas.group_start("logicals")
        for logical in logicals:
            qubits = self.lattice.sort_top_to_bottom(logical.support())
            points = [self.position(q) for q in qubits]
            self.canvas.polyline(points, self.color(logical), "logical", 'stroke-width="3" stroke-dasharray="8,4"')
        self.canvas.group_end()

    def draw_qubits(self):
        s = self.style
        ancillas = set(self.lattice.ancillas)
        self.canvas.group_start("qubits")
        for qubit in range(self.lattice.n_qubits):
            if qubit in ancillas:
                self.canvas.circle(self.position(qubit), s.ancilla_radius, s.ancilla_color, "ancilla")
            else:
                self.canvas.circle(self.position(qubit), s.qubit_radius, "black", "qubit")
        self.canvas.group_end()

    def render(
        self, generators: Sequence[PauliOperator] = (), logicals: Sequence[PauliOperator] = (), title: str = ""
    ) -> str:
        self.draw_seam()
        self.draw_generators(generators)
        self.draw_logicals(logicals)
        self.draw_qubits()
        if title:
            self.canvas.text(
                (self.canvas.width / 2, self.style.margin / 2), title, 'font-size="12" text-anchor="middle"'
            )
        return self.canvas.get_svg()


def render_lattice(
    lattice: Lattice2D,
    generators: Sequence[PauliOperator] = (),
    logicals: Sequence[PauliOperator] = (),
    style: Optional[RenderStyle] = None,
    title: str = "",
) -> str:
    return LatticeRenderer(lattice, style).render(generators, logicals, title)


def render_code(
    code: SubsystemCode, logicals: Sequence[PauliOperator] = (), style: Optional[RenderStyle] = None
) -> str:
    if code.geometry is None:
        raise GeometryError(f"Code '{code.name}' has no lattice coordinates to render")
    return render_lattice(code.geometry, code.gauge_generators, logicals, style, title=code.name)


def save_svg(svg: str, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(svg, encoding="utf-8")
    logger.info(f"Wrote {path}")
    return path
