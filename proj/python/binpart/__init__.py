"""Binary partition function toolkit: partition streams, sum-of-squares
representability, characterizations and verification campaigns."""

try:
    from ._binpart import *  # noqa: F401,F403
    from ._binpart import __doc__ as _native_doc  # noqa: F401
except ImportError:  # in-tree builds place the extension next to this file
    from _binpart import *  # noqa: F401,F403
