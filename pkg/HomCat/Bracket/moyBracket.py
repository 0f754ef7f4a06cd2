from concurrent.futures import ThreadPoolExecutor
import itertools
import logging
import time

import numpy as np

from ..core import Prefactor, QTPoly
from ..Hochschild.koszul import close_web
from ..Presentations.ringPres import present_web
from ..Webs.colouredBraid import diagram_stats
from ..Webs.resolutions import crossing_terms, resolve_braid
from ..util import DEFAULT_QMAX, get_thread_count


def web_value(web, qmax = DEFAULT_QMAX, q_shift = 0):
    """
    Value of the closure of a web: Poincaré series of its Hochschild homology, t tracking the Hochschild degree.
    """
    return close_web(present_web(web), qmax, q_shift = q_shift).poincare()


def bracket(braid, qmax = DEFAULT_QMAX, threads = None):
    """
    Sum over resolution choices of (-1)^hom q^shift times the value of the closed resolved web.

    Args:
        braid (ColouredBraid): A braid whose closure matches colours.
        qmax (int): Truncation bound on the q-degree.
        threads (int): Worker threads, see get_thread_count.

    Returns:
        QTPoly truncated at q <= qmax.
    """
    t = time.process_time()
    terms = [crossing_terms(left, right, sign) for _, left, right, sign in braid.crossings()]
    choices = list(itertools.product(*[range(len(local)) for local in terms]))

    def evaluate(choice):
        hom = sum(terms[k][index].hom_degree for k, index in enumerate(choice))
        shift = sum(terms[k][index].q_shift for k, index in enumerate(choice))
        value = web_value(resolve_braid(braid, choice), qmax, shift)
        return -value if hom % 2 else value

    with ThreadPoolExecutor(max_workers = get_thread_count(threads)) as executor:
        values = list(executor.map(evaluate, choices))
    result = QTPoly(qmax2 = 2 * qmax)
    for value in values:
        result = result + value
    logging.info(f"[{time.process_time()-t:.3f} s] Finished bracket of {braid.colours} {braid.word} over {len(choices)} resolutions.")
    return result


def _inverse_product(steps2, qmax2):
    """
    Coefficients of prod 1 / (1 - q^step) as a numpy array indexed by the doubled q-degree.
    """
    series = np.zeros(qmax2 + 1, dtype = np.int64)
    series[0] = 1
    for step2 in steps2:
        geometric = np.zeros(qmax2 + 1, dtype = np.int64)
        geometric[::step2] = 1
        series = np.convolve(series, geometric)[:qmax2 + 1]
    return series


def _closed_form(numerator_q2, denominator_q2, qmax):
    qmax2 = 2 * qmax
    series = _inverse_product(denominator_q2, qmax2)
    result = QTPoly({(q2, 0): int(coeff) for q2, coeff in enumerate(series) if coeff}, qmax2)
    for q2 in numerator_q2:
        result = result * QTPoly({(0, 0): 1, (q2, -2): 1})
    return result.truncate(qmax2)


def closed_form_A1(k, qmax = DEFAULT_QMAX):
    """
    prod_{i=1..k} (1 + t^-1 q^(2i-1)) / (1 - q^(2i)), the value of the k-coloured unknot.
    """
    if not 1 <= k <= 4:
        logging.error(f"Unknot colour must lie in 1..4, got {k}.")
        raise ValueError(f"invalid colour {k}")
    return _closed_form([2 * (2 * i - 1) for i in range(1, k + 1)], [4 * i for i in range(1, k + 1)], qmax)


def closed_form_A2(i, j, qmax = DEFAULT_QMAX):
    """
    prod_{l=1..j} (1 + t^-1 q^(2i+2l-1)) / (1 - q^(2l)), the factor gained by closing a j-edge of a dumbbell.
    """
    if i < 0 or j < 0:
        logging.error(f"Colours ({i}, {j}) must be non-negative.")
        raise ValueError(f"invalid colours ({i}, {j})")
    return _closed_form([2 * (2 * i + 2 * l - 1) for l in range(1, j + 1)], [4 * l for l in range(1, j + 1)], qmax)


def normalize_I(br, stats):
    """
    Multiplies a bracket by (-tq)^e, e = (-n1+ + n1- + s1 - 2 n2+ + 2 n2- + 2 s2) / 2.
    Integer exponents are expanded, half-integer ones stay as a symbolic prefactor.
    """
    exponent2 = -stats.writhe_shift2
    if exponent2 % 2:
        return QTPoly(br.terms, br.qmax2, Prefactor(-1, exponent2, exponent2))
    exponent = exponent2 // 2
    return br * QTPoly.monomial(q2 = exponent2, t2 = exponent2, coeff = -1 if exponent % 2 else 1)


def normalized_bracket(braid, qmax = DEFAULT_QMAX, threads = None):
    return normalize_I(bracket(braid, qmax, threads), diagram_stats(braid))
