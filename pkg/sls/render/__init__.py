# -------------------------------------------------------------------------
# Copyright (c) Microsoft Corporation. All rights reserved.
# Licensed under the MIT License.
# --------------------------------------------------------------------------
from sls.render.svg import LatticeRenderer, RenderStyle, SvgCanvas, render_code, render_lattice, save_svg

__all__ = ["LatticeRenderer", "RenderStyle", "SvgCanvas", "render_code", "render_lattice", "save_svg"]
