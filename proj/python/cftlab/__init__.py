"""Python interface to the lattice fermion laboratory."""

try:
    from ._cftlab import *  # noqa: F401,F403  (installed layout)
    from ._cftlab import __doc__  # noqa: F401
except ImportError:
    # in-tree build: the extension sits next to the build directory
    from _cftlab import *  # noqa: F401,F403
    from _cftlab import __doc__  # noqa: F401

__version__ = "0.1.0"
