"""k-critical-bipartite graph toolkit."""

from ._kcbg import *  # noqa: F401,F403
from ._kcbg import __doc__  # noqa: F401
