"""Prime digit statistics: sieves, reciprocal expansions, censuses and zeta partials."""

from ._core import *  # noqa: F401,F403
from ._core import __doc__, __version__  # noqa: F401
