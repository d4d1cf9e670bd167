"""Exact combinatorics of wonderful compactifications, Steinberg fibers and diagonal orbits."""

__version__ = "0.1.0"

from .errors import CapExceeded, ConventionError, WonderkitError  # noqa: E402
from .rootsys import RootSystem, build_root_system  # noqa: E402
from .weyl import WeylElement, WeylGroup, weyl_group  # noqa: E402

__all__ = ["CapExceeded", "ConventionError", "WonderkitError", "RootSystem",
           "build_root_system", "WeylElement", "WeylGroup", "weyl_group", "__version__"]
