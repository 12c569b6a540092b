"""Bounds on sums of pairwise distances of spherical codes.

The compiled core exposes the bound computations (``ulb``, ``uub``), the code
family constructors (``equiangular_spectrum``, ``srg_embedding``,
``sidelnikov``, ``kerdock``, ``dual_bch``, ``weight_two``), the spherical and
binary discrepancy conversions, and the self-check battery (``verify``).
"""

from ._core import *  # noqa: F401,F403
from ._core import __doc__ as _core_doc

__doc__ = _core_doc if _core_doc else __doc__
__version__ = "0.1.0"
