__version__ = '0.1.0'

from .algebra import Element, Monomial, Tensor, multiply, normal_form, pbw_monomials
from .hopf import HopfAlgebra
from .ideal import RightIdeal, fit_ad_invariant_shift
from .calculus import DifferentialCalculus
from .dual import DualAlgebra
from .parser import parse, parse_element
from .report import CheckStatus, VerificationReport
from .suites import run_suite
