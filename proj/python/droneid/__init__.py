"""OcuSync drone-id codec and detection toolkit."""

try:
    from ._core import *  # noqa: F401,F403
    from ._core import __doc__ as _core_doc  # noqa: F401
except ImportError:  # built extension on the path instead of in the package
    from _core import *  # noqa: F401,F403

__version__ = "1.0.0"
