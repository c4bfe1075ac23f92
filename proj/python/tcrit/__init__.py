"""Tournament interval/criticality toolkit.

Thin wrapper over the compiled module; everything lives in `tcrit._tcrit`.
"""

from ._tcrit import *  # noqa: F401,F403
from ._tcrit import __doc__  # noqa: F401

__version__ = "1.0.0"
