"""Exact mod-2 invariants of simplexwise-linear maps of simplices.

Configurations are plain dicts mirroring the JSON file schema:
``{"dim": d, "points": [["p/q", ...], ...]}`` with exact rational
coordinates as strings (integers also accepted); spherical configurations
use ``"vectors"`` instead of ``"points"``.
"""

try:
    from ._vkcgs import *  # noqa: F401,F403  (installed package layout)
    from . import _vkcgs as _impl
except ImportError:  # build-tree layout: extension staged next to the package
    from _vkcgs import *  # noqa: F401,F403
    import _vkcgs as _impl

__all__ = [name for name in dir(_impl) if not name.startswith("_")]
__version__ = "0.1.0"
