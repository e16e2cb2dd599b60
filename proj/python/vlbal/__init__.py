"""Variable-length balancing codes: codecs, redundancy formulas and trellis counts."""

from ._vlbal import *  # noqa: F401,F403
from ._vlbal import CapacityError, CyclicCode, DecodeError, DomainError

__version__ = "0.1.0"
