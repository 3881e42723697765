"""Dark area left by n unit-circle lighthouses facing a common center."""

from .arc import apex_x_arc, find_illuminator, illuminator_scan, solve_paper_equation, total_dark_area_arc
from .center import apex_x_closed, apex_x_geometric, dark_single, even_unbounded_check, total_dark_area
from .scene import Darkness, DarknessResult, Scene, TangentSolution, Variant, build_scene

__all__ = [
    "Darkness",
    "DarknessResult",
    "Scene",
    "TangentSolution",
    "Variant",
    "apex_x_arc",
    "apex_x_closed",
    "apex_x_geometric",
    "build_scene",
    "dark_single",
    "even_unbounded_check",
    "find_illuminator",
    "illuminator_scan",
    "solve_paper_equation",
    "total_dark_area",
    "total_dark_area_arc",
]
