"""
Verification suites: each builds the structures it needs and returns one
VerificationReport.
"""
import logging
from typing import Callable, Dict, Optional

from utils.exceptions import VerificationError
from .algebra import verify_algebra
from .calculus import DifferentialCalculus
from .dual import DualAlgebra
from .hopf import HopfAlgebra
from .ideal import RightIdeal, fit_ad_invariant_shift
from .report import CheckStatus, VerificationReport

logger = logging.getLogger(__name__)

SUITES = ('hopf', 'ideal', 'calculus', 'dual', 'all')
# The ideal suite at degree 0 checks the bare generators.
MIN_DEGREE = {'ideal': 0}
CORRECTED_PREFIX = 'corrected.'


class Engine:
    """Lazily built structures shared by the suites of one run."""

    def __init__(self):
        self.hopf = HopfAlgebra()
        self._ideal: Optional[RightIdeal] = None
        self._corrected_ideal: Optional[RightIdeal] = None
        self._calculi: Dict[str, DifferentialCalculus] = {}
        self._duals: Dict[str, DualAlgebra] = {}

    @property
    def ideal(self) -> RightIdeal:
        if self._ideal is None:
            self._ideal = RightIdeal(self.hopf)
        return self._ideal

    @property
    def corrected_ideal(self) -> RightIdeal:
        if self._corrected_ideal is None:
            shift = fit_ad_invariant_shift(self.hopf)
            logger.info(f"Ad-invariant shift: {shift}")
            self._corrected_ideal = RightIdeal(self.hopf, shift)
        return self._corrected_ideal

    def calculus(self, corrected: bool = False) -> DifferentialCalculus:
        key = 'corrected' if corrected else 'printed'
        if key not in self._calculi:
            ideal = self.corrected_ideal if corrected else self.ideal
            self._calculi[key] = DifferentialCalculus(self.hopf, ideal)
        return self._calculi[key]

    def dual(self, corrected: bool = False) -> DualAlgebra:
        key = 'corrected' if corrected else 'printed'
        if key not in self._duals:
            self._duals[key] = DualAlgebra(self.calculus(corrected))
        return self._duals[key]


def _hopf_suite(engine: Engine, max_degree: int, report: VerificationReport) -> None:
    report.extend(verify_algebra(max_degree))
    report.extend(engine.hopf.verify_hopf_axioms(max_degree))
    report.extend(engine.hopf.verify_matrix_coproduct())


def _ideal_suite(engine: Engine, max_degree: int, report: VerificationReport) -> None:
    report.extend(engine.ideal.verify_quotient_basis(max_degree))
    report.extend(engine.ideal.verify_ad_invariance(max_degree, on_violation=CheckStatus.DISCREPANCY))
    corrected = engine.corrected_ideal
    report.extend(corrected.verify_quotient_basis(max_degree), prefix=CORRECTED_PREFIX)
    report.extend(corrected.verify_ad_invariance(max_degree), prefix=CORRECTED_PREFIX)


def _calculus_suite(engine: Engine, max_degree: int, report: VerificationReport) -> None:
    report.extend(engine.calculus().verify_calculus(max_degree))
    report.extend(engine.calculus(corrected=True).verify_calculus(max_degree), prefix=CORRECTED_PREFIX)


def _dual_suite(engine: Engine, max_degree: int, report: VerificationReport) -> None:
    report.extend(engine.dual().verify_quantum_lie(max_degree))
    report.extend(engine.dual(corrected=True).verify_quantum_lie(max_degree), prefix=CORRECTED_PREFIX)


_RUNNERS: Dict[str, Callable[[Engine, int, VerificationReport], None]] = {
    'hopf': _hopf_suite,
    'ideal': _ideal_suite,
    'calculus': _calculus_suite,
    'dual': _dual_suite,
}


def run_suite(name: str, max_degree: int, engine: Optional[Engine] = None) -> VerificationReport:
    """Run one suite, or every suite in order for `all`."""
    if name not in SUITES:
        raise VerificationError(f"Unknown suite '{name}'. Choose from: {', '.join(SUITES)}")
    minimum = MIN_DEGREE.get(name, 1)
    if max_degree < minimum:
        raise VerificationError(f"max_degree for suite '{name}' must be at least {minimum}")
    engine = engine or Engine()
    report = VerificationReport(name, max_degree)
    names = [suite for suite in SUITES if suite != 'all'] if name == 'all' else [name]
    with report.timed():
        for suite in names:
            logger.info(f"Running suite '{suite}' (max degree {max_degree})")
            _RUNNERS[suite](engine, max_degree, report)
    counts = report.counts()
    logger.info(f"Suite '{name}' finished in {report.wall_ms} ms: {counts}")
    return report
