import logging
import time

from ..Complexes.crossingComplex import crossing_complex
from ..Hochschild.hhhComputation import h12
from ..Webs.colouredBraid import ColouredBraid
from ..util import DEFAULT_QMAX
from .verificationCheck import VerificationCheck


CROSSING_TYPES = [(c1, c2, sign) for c1 in (1, 2) for c2 in (1, 2) for sign in (1, -1)]


class DSquaredCheck(VerificationCheck):
    """
    d o d = 0 for the complexes of single crossings, both signs, every colour pair.
    """
    name = "d_squared"

    def generate_cases(self):
        for c1, c2, sign in CROSSING_TYPES:
            yield f"crossing({c1},{c2},{'+' if sign > 0 else '-'})", crossing_complex(c1, c2, sign)

    def check_case(self, label, complex):
        report = complex.check_d_squared(self.qmax)
        return None if report.ok else report.first_failure


def verify_d_squared(qmax):
    return DSquaredCheck(qmax).run()


HOPF_LINK = ColouredBraid((2, 2), (1, 1))


def hopf_snapshot(qmax = DEFAULT_QMAX, threads = None):
    """
    Normalized homology of the Hopf link with both components coloured 2, kept as a regression snapshot.
    """
    t = time.process_time()
    table = h12(HOPF_LINK, qmax, threads)
    logging.info(f"[{time.process_time()-t:.3f} s] Finished Hopf link snapshot up to q {qmax}.")
    return table
