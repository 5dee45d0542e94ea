"""Exact and asymptotic Fourier coefficients of eta-theta quotients."""

try:
    from ._theta_asym import *  # noqa: F401,F403  (installed layout)
    from . import _theta_asym as _core
except ImportError:  # development layout: extension sits on sys.path directly
    from _theta_asym import *  # noqa: F401,F403
    import _theta_asym as _core

__all__ = [name for name in dir(_core) if not name.startswith("_")]
