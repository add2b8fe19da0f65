"""
Verlinde algebras for the type D quantum subgroup of rep U_q(sl2)
-----------------------------------------------------------------
Fusion rings, graded s-matrices and the extended Verlinde formulas at
q = exp(i*pi/kappa), kappa = 4m + 2.
"""

from .arith import DEFAULT_TOLERANCE, Tolerance
from .exceptions import *
from .extended_algebra import ExtModularData, ExtVector, GradedLabel, build_extended, build_s_c
from .formulas import ext_coeff_a, ext_coeff_e, verify_all
from .report import CheckResult, VerificationReport
from .ring_solver import CLabel, TypeDRing, build_ring
from .types import Z2, Command, Formula, LabelKind, OutputFormat, RingKind, SBlock
from .verlinde_d import ModularDataD

__title__ = "equifuse"
__author__ = "equifuse contributors"
__license__ = "MIT"
__version__ = "0.1.0"
