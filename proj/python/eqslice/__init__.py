"""Exact obstructions to equivariant sliceness of strongly negative
amphichiral alternating knots, plus lens-space correction terms.

Thin re-export of the compiled extension module.
"""

try:
    from ._eqslice import *  # noqa: F401,F403
    from ._eqslice import __doc__ as _core_doc
except ImportError:  # development tree: extension built next to the package
    from _eqslice import *  # noqa: F401,F403
    from _eqslice import __doc__ as _core_doc

__version__ = "0.1.0"
