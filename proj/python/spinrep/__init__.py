"""Python interface to the representation-label and octet mass-splitting toolkit.

Half-integers cross the boundary doubled (``twice_l = 59`` means l = 59/2);
exact rationals cross as ``(numerator, denominator)`` pairs.
"""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
