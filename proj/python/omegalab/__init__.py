"""Exact combinatorics of eventually periodic sets and functions.

Thin python wrapper over the _omegalab extension. Works both installed (the
extension lives inside this package) and from a build tree (the extension is
on PYTHONPATH next to this package).
"""

try:
    from ._omegalab import *  # noqa: F401,F403
    from . import _omegalab as _ext
except ImportError:  # build-tree layout
    from _omegalab import *  # noqa: F401,F403
    import _omegalab as _ext

__version__ = "0.1.0"
__all__ = [name for name in dir(_ext) if not name.startswith("_")]
