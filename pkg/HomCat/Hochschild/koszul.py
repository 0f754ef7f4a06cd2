from dataclasses import dataclass
import itertools
import logging
import time

from ..core import MPoly, QTPoly, WebError
from ..LinearAlgebra.qmat import QMat
from ..LinearAlgebra.subquotient import homology
from ..Presentations.mapDesc import MapDesc, Mult
from ..Presentations.sliceBasis import slice_dim


@dataclass(frozen=True, eq=False)
class KoszulFactor:
    """
    Closure difference of the i-th elementaries of the top and bottom edge of one closed strand.
    Its two-term complex R{-1, 2i-1} -> R multiplies by f.
    """
    f: MPoly
    strand: int
    index: int

    @property
    def degree(self):
        return 2 * self.index

    @property
    def hh2(self):
        return -2

    @property
    def q2(self):
        return 2 * (2 * self.index - 1)

    @property
    def q_shift(self):
        return 2 * self.index - 1

    def multiplication(self):
        return MapDesc([Mult(self.f)], self.degree, f"x{self.strand}.{self.index}-x'{self.strand}.{self.index}")


def koszul_closure(pres, strands = None):
    """
    Koszul factors closing the given strands of a presentation, top block p against bottom block p.

    Args:
        pres (RingPres): Presentation with matching boundary colours on the closed strands.
        strands (iterable of int): 1-based strand positions, all strands if None.

    Returns:
        List of KoszulFactor in strand order, elementary index increasing.
    """
    if strands is None:
        if pres.top_colours != pres.bottom_colours:
            logging.error(f"Cannot close {pres.name}: top colours {pres.top_colours} differ from bottom colours {pres.bottom_colours}.")
            raise WebError("boundary colours do not match")
        strands = range(1, len(pres.bottom) + 1)
    factors = []
    for p in sorted(set(strands)):
        if not (1 <= p <= min(len(pres.top), len(pres.bottom))):
            logging.error(f"Strand {p} is not a boundary position of {pres.name}.")
            raise WebError(f"no strand {p}")
        top, bottom = pres.top[p - 1], pres.bottom[p - 1]
        if len(top) != len(bottom):
            logging.error(f"Strand {p} of {pres.name} has colour {len(bottom)} at the bottom and {len(top)} at the top.")
            raise WebError("mismatched strand colours")
        for i, (upper, lower) in enumerate(zip(top, bottom), start = 1):
            factors.append(KoszulFactor(upper - lower, p, i))
    return factors


def trace_reduced_closure(pres):
    """
    Closure factors of all strands without the e1 difference of the first strand.

    The e1 differences of all strands sum to zero in a web bimodule. Trading the first one
    for that sum splits off a two-term complex with zero differential, so the full Koszul
    complex is the reduced one tensored with R{-1, 1} + R.

    Raises:
        ValueError: If the e1 differences do not cancel in the presentation.
    """
    factors = koszul_closure(pres)
    trace = sum((factor.f for factor in factors if factor.index == 1), MPoly())
    if pres.slice(2).coords(trace):
        logging.error(f"The e1 differences of {pres.name} sum to {trace}, not to zero.")
        raise ValueError("e1 differences do not cancel")
    return [factor for factor in factors if (factor.strand, factor.index) != (1, 1)]


class KoszulComplex():

    def __init__(self, pres, factors, q_shift = 0) -> None:
        """
        Tensor product of the two-term complexes of the factors over a presentation.
        The cell of a subset S sits in Hochschild degree -|S| and total q-degree
        poly degree + q_shift + sum over S of (2i-1).

        Args:
            pres (RingPres): The presented bimodule.
            factors (list of KoszulFactor): Closure factors.
            q_shift (int): q-shift of the bimodule in its complex.
        """
        self.pres = pres
        self.factors = list(factors)
        self.q_shift = q_shift
        self.multiplications = [factor.multiplication() for factor in self.factors]
        self._differentials = {}

    def subsets(self, hh):
        return list(itertools.combinations(range(len(self.factors)), -hh))

    def poly_degree(self, subset, q):
        return q - self.q_shift - sum(self.factors[l].q_shift for l in subset)

    def sizes(self, hh, q):
        return [slice_dim(self.pres, self.poly_degree(subset, q)) for subset in self.subsets(hh)]

    def differential(self, hh, q):
        """
        Matrix from the cell (hh, q) to the cell (hh + 1, q + 1).
        Removing the factor at position p of S carries the sign (-1)^p.
        """
        matrix = self._differentials.get((hh, q))
        if matrix is None:
            matrix = self._differentials.setdefault((hh, q), self._assemble_differential(hh, q))
        return matrix

    def _assemble_differential(self, hh, q):
        sources, targets = self.subsets(hh), self.subsets(hh + 1) if hh < 0 else []
        row_sizes = [slice_dim(self.pres, self.poly_degree(target, q + 1)) for target in targets]
        col_sizes = [slice_dim(self.pres, self.poly_degree(source, q)) for source in sources]
        target_index = {target: r for r, target in enumerate(targets)}
        blocks = {}
        for c, source in enumerate(sources):
            if not col_sizes[c]:
                continue
            for position, l in enumerate(source):
                target = source[:position] + source[position + 1:]
                r = target_index[target]
                if not row_sizes[r]:
                    continue
                matrix = self.multiplications[l].realize(self.pres, self.pres, self.poly_degree(source, q))
                blocks[(r, c)] = matrix if position % 2 == 0 else -matrix
        return QMat.block(blocks, row_sizes, col_sizes)

    def cell(self, hh, q):
        """
        Hochschild homology in degree (hh, q) as a Subquotient of the direct sum of the cell's slices.
        """
        d_in = self.differential(hh - 1, q - 1) if -hh < len(self.factors) else QMat.zero(sum(self.sizes(hh, q)), 0)
        d_out = self.differential(hh, q)
        return homology(d_in, d_out)

    def chain_map(self, f, other, hh, q):
        """
        Block diagonal matrix of a bimodule map from this complex to another one on the cell (hh, q).
        Both complexes must close the same boundary variables.
        """
        subsets = self.subsets(hh)
        col_sizes = self.sizes(hh, q)
        row_sizes = other.sizes(hh, q)
        blocks = {}
        for k, subset in enumerate(subsets):
            if col_sizes[k] and row_sizes[k]:
                blocks[(k, k)] = f.realize(self.pres, other.pres, self.poly_degree(subset, q))
        return QMat.block(blocks, row_sizes, col_sizes)

    def q_range(self, qmax):
        return range(self.q_shift, qmax + 1)


class HHTable():

    def __init__(self, cells, qmax) -> None:
        """
        Hochschild homology of one bimodule, cell by cell.

        Args:
            cells (dict): (hh, q) -> Subquotient, actual degrees.
            qmax (int): Truncation bound on the total q-degree.
        """
        self.cells = cells
        self.qmax = qmax

    def __repr__(self) -> str:
        return f"HHTable({len(self.dims())} non-zero cells, q <= {self.qmax})"

    def dims(self):
        """
        Doubled-degree dimension table (hh2, q2) -> dim with zero cells dropped.
        """
        return {(2 * hh, 2 * q): cell.dimension for (hh, q), cell in sorted(self.cells.items()) if cell.dimension}

    def dim(self, hh, q):
        cell = self.cells.get((hh, q))
        return cell.dimension if cell else 0

    def poincare(self):
        """
        Poincaré series with t tracking the Hochschild degree.
        """
        return QTPoly({(q2, hh2): dim for (hh2, q2), dim in self.dims().items()}, 2 * self.qmax)


def hh_dims(pres, factors, qmax, q_shift = 0):
    """
    Hochschild homology of a presented bimodule through the Koszul complex of the closure factors.

    Returns:
        HHTable for all total q-degrees up to qmax.
    """
    t = time.process_time()
    koszul = KoszulComplex(pres, factors, q_shift)
    cells = {}
    for q in koszul.q_range(qmax):
        for hh in range(0, -len(koszul.factors) - 1, -1):
            if sum(koszul.sizes(hh, q)):
                cells[(hh, q)] = koszul.cell(hh, q)
    table = HHTable(cells, qmax)
    logging.debug(f"[{time.process_time()-t:.3f} s] Finished HH of {pres.name} with {len(koszul.factors)} factors up to q {qmax}.")
    return table


def close_web(pres, qmax, strands = None, q_shift = 0):
    """
    HH of a web presentation closed along the given strands, all strands by default.
    """
    return hh_dims(pres, koszul_closure(pres, strands), qmax, q_shift)
