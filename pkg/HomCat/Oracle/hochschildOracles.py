from dataclasses import dataclass
import logging

import numpy as np

from ..Hochschild.hhhComputation import hhh
from ..Hochschild.koszul import close_web
from ..Presentations.ringPres import present_web
from ..Webs.colouredBraid import ColouredBraid
from ..Webs.resolutions import crossing_square, dumbbell, twoarcs
from .verificationCheck import VerificationCheck


def polynomial_ring_series(variable_degrees, qmax):
    """
    Graded dimensions of a free polynomial ring in degrees 0..qmax as a numpy array.
    """
    series = np.zeros(qmax + 1, dtype = np.int64)
    series[0] = 1
    for degree in variable_degrees:
        geometric = np.zeros(qmax + 1, dtype = np.int64)
        geometric[::degree] = 1
        series = np.convolve(series, geometric)[:qmax + 1]
    return series


def free_module_dims(variable_degrees, generators, qmax):
    """
    Graded dimensions of a free module over a polynomial ring with generators in the given total degrees.

    Returns:
        dict q -> dimension for 0 <= q <= qmax, zero entries dropped.
    """
    ring = polynomial_ring_series(variable_degrees, qmax)
    dims = {}
    for generator in generators:
        for q in range(max(generator, 0), qmax + 1):
            value = int(ring[q - generator])
            if value:
                dims[q] = dims.get(q, 0) + value
    return dims


@dataclass
class ClosureOracle:
    """
    A web closed along some strands and the free module description of its Hochschild homology.

    Attributes:
        ring (list of int): Degrees of the polynomial ring the homology is free over.
        generators (dict): Hochschild degree -> total q-degrees of the free generators.
    """
    name: str
    web: object
    strands: tuple
    ring: list
    generators: dict

    def expected(self, hh, qmax):
        return free_module_dims(self.ring, self.generators.get(hh, []), qmax)


def compare_closure(oracle, qmax):
    """
    Engine Hochschild dimensions against the oracle's free module description, cell by cell.
    """
    table = close_web(present_web(oracle.web, name = oracle.name), qmax, strands = oracle.strands)
    depth = min(oracle.generators)
    for hh in range(0, depth - 1, -1):
        expected = oracle.expected(hh, qmax)
        for q in range(0, qmax + 1):
            actual = table.dim(hh, q)
            if actual != expected.get(q, 0):
                return {"hh": hh, "q": q, "expected": expected.get(q, 0), "actual": actual}
    deeper = [cell for cell in table.dims() if cell[0] < 2 * depth]
    if deeper:
        return {"hh": deeper[0][0] // 2, "q": deeper[0][1] // 2, "expected": 0, "actual": table.dims()[deeper[0]]}
    return None


B_RING = [2, 4, 2, 4]


def kink_resolution_oracles():
    """
    Right strand closures of the three resolutions of a crossing of two 2-strands over B = C[x1, x2, y1, y2].
    """
    return [
        # both Koszul maps vanish: B, B{1} + B{3}, B{4}
        ClosureOracle("twoarcs", twoarcs(2, 2), (2,), B_RING, {0: [0], -1: [1, 3], -2: [4]}),
        # A = B + z1 B; the pairs ((y1 - z1) g + (x2 - y2 - z1 (x1 - y1)) h, g) in A{1} + A{3}; (x2 - y2 - z1 (x1 - y1)) A{4}
        ClosureOracle("square", crossing_square(), (2,), B_RING, {0: [0, 2], -1: [3, 5, 5, 7], -2: [8, 10]}),
        # B; the pairs in B{1} + B{3} free on c and d; p B{4} with p of degree 8
        ClosureOracle("dumbbell", dumbbell(2, 2), (2,), B_RING, {0: [0], -1: [5, 7], -2: [12]}),
    ]


def a2_oracles():
    """
    Right strand closures of the dumbbells with bottom and top colours (i, j).
    """
    return [
        # C[x1, y1]; (x1 - y1) C[x1, y1]{1}
        ClosureOracle("dumbbell11", dumbbell(1, 1, top = (1, 1)), (2,), [2, 2], {0: [0], -1: [2 + 1]}),
        # C[x1, x2, y1]; (x2 - x1 y1 + y1^2) C[x1, x2, y1]{1}
        ClosureOracle("dumbbell21", dumbbell(2, 1, top = (2, 1)), (2,), [2, 4, 2], {0: [0], -1: [4 + 1]}),
        # C[x1, y1, y2]; pairs (c (x1 - y1) + d y2, -c + d x1) free on c and d; (x1^2 - x1 y1 + y2) C[x1, y1, y2]{4}
        ClosureOracle("dumbbell12", dumbbell(1, 2, top = (1, 2)), (2,), [2, 2, 4], {0: [0], -1: [3, 5], -2: [4 + 4]}),
        ClosureOracle("dumbbell22", dumbbell(2, 2, top = (2, 2)), (2,), B_RING, {0: [0], -1: [5, 7], -2: [12]}),
    ]


def kink_braids():
    """
    (label, kink braid, unknot, doubled (hom, hh, q) shift carrying the unknot table onto the kink table).
    """
    cases = []
    for colour in (1, 2):
        unknot = ColouredBraid((colour,))
        cases.append((f"positive kink {colour}", ColouredBraid((colour, colour), (1,)), unknot, (0, 0, 0)))
        cases.append((f"negative kink {colour}", ColouredBraid((colour, colour), (-1,)), unknot, (2 * colour, -2 * colour, -2 * colour)))
    return cases


class ClosureOracleCheck(VerificationCheck):
    """
    Compares partial closures computed by the engine with free module descriptions.
    """
    name = "closure_oracles"

    def oracles(self):
        raise(NotImplementedError)

    def generate_cases(self):
        for oracle in self.oracles():
            yield oracle.name, oracle

    def check_case(self, label, oracle):
        return compare_closure(oracle, self.qmax)


class Markov2OracleCheck(ClosureOracleCheck):
    name = "markov2"

    def __init__(self, qmax, threads = None) -> None:
        super().__init__(qmax)
        self.threads = threads

    def oracles(self):
        return kink_resolution_oracles()

    def generate_cases(self):
        yield from super().generate_cases()
        for label, kink, unknot, shift in kink_braids():
            yield label, (kink, unknot, shift)

    def check_case(self, label, case):
        if isinstance(case, ClosureOracle):
            return compare_closure(case, self.qmax)
        kink, unknot, (h2, hh2, q2) = case
        expected = hhh(unknot, self.qmax, self.threads).shift(h2, hh2, q2)
        actual = hhh(kink, self.qmax, self.threads)
        if actual.agrees_with(expected):
            return None
        bound = min(actual.qmax2, expected.qmax2)
        difference = sorted(set(actual.truncate(bound).rows()) ^ set(expected.truncate(bound).rows()))
        logging.debug(f"{label}: tables differ in {difference}.")
        return {"identity": "kink table", "first_difference": list(difference[0])}


class A2CaseCheck(ClosureOracleCheck):
    name = "a2"

    def oracles(self):
        return a2_oracles()


def verify_markov2_oracles(qmax, threads = None):
    return Markov2OracleCheck(qmax, threads).run()


def verify_a2_cases(qmax):
    return A2CaseCheck(qmax).run()
