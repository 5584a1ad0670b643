"""Privileged and palindromic factors of infinite words."""

from ._privword import *  # noqa: F401,F403
from ._privword import PrivwordError, __version__  # noqa: F401
