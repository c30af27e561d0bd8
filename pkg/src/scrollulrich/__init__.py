"""Ulrich line bundles on threefold scrolls over surfaces: exact intersection
theory, Riemann-Roch, line bundle cohomology and a regression catalog."""
from .catalog import CATALOG, ENTRIES, get, load_spec_file
from .chow import ScrollSpec, chi_hrr, chi_pushforward, scroll_degree
from .lattice import DivisorClass, SurfaceModel, build_surface
from .ulrich import Status, classify

__all__ = ["CATALOG", "ENTRIES", "get", "load_spec_file", "ScrollSpec", "chi_hrr", "chi_pushforward",
           "scroll_degree", "DivisorClass", "SurfaceModel", "build_surface", "Status", "classify"]
__version__ = "0.1.0"
