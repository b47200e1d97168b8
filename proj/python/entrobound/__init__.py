"""Continuity bounds for classical and quantum entropies."""

try:
    from ._entrobound import *  # noqa: F401,F403
    from . import _entrobound as _impl
except ImportError:  # pragma: no cover - dev tree fallback
    from _entrobound import *  # noqa: F401,F403
    import _entrobound as _impl

__all__ = [name for name in dir(_impl) if not name.startswith("_")]
__version__ = "0.1.0"
