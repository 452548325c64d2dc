"""Python interface to the DG solver for the generalized KdV equation."""

try:
    from ._kdvdg import *  # noqa: F401,F403  (installed package layout)
    from ._kdvdg import __doc__ as _doc
except ImportError:
    from _kdvdg import *  # noqa: F401,F403  (in-tree build layout)
    from _kdvdg import __doc__ as _doc

__doc__ = _doc
