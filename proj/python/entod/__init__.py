"""Entropy-based outlier detection for categorical data.

Thin re-export of the compiled ``_entod`` extension. Installed wheels carry
the extension inside this package; in a plain CMake build tree the extension
sits on PYTHONPATH next to it.
"""

try:
    from ._entod import *  # noqa: F401,F403
    from ._entod import __version__  # noqa: F401
except ImportError:  # CMake build tree layout
    from _entod import *  # noqa: F401,F403
    from _entod import __version__  # noqa: F401
