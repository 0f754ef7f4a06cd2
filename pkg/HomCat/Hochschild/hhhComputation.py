from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
import logging
import time

from ..core import QTPoly, TriPoincare, WebError
from ..LinearAlgebra.qmat import QMat
from ..LinearAlgebra.subquotient import complex_homology_dims, induced_map
from ..Complexes.crossingComplex import braid_complex
from ..Webs.colouredBraid import diagram_stats
from ..util import DEFAULT_QMAX, get_thread_count
from .koszul import KoszulComplex, trace_reduced_closure


class HHHComputation:

    def __init__(self, braid, qmax = DEFAULT_QMAX, threads = None) -> None:
        """
        Triply graded homology of a braid closure: Hochschild homology of every object of the braid
        complex first, then the homology of the induced complexes of vector spaces.
        The first strand's e1 closure factor is split off as a zero differential and restored at the end.

        Args:
            braid (ColouredBraid): A braid whose closure matches colours.
            qmax (int): Truncation bound on the q-degree.
            threads (int): Worker threads, see get_thread_count.
        """
        total_time = time.process_time()
        if not braid.is_closable():
            logging.error(f"Braid {braid.word} permutes the colours {braid.colours} to {braid.levels()[-1]}, its closure is not defined.")
            raise WebError("closure does not match colours")
        self.braid = braid
        self.qmax = qmax
        self.threads = get_thread_count(threads)

        t = time.process_time()
        self.complex = braid_complex(braid)
        self.koszul = {}
        for key, obj in self.complex.objects.items():
            self.koszul[key] = KoszulComplex(obj.pres, trace_reduced_closure(obj.pres), obj.q_shift)
        self.n_factors = len(next(iter(self.koszul.values())).factors)
        logging.info(f"[{time.process_time() - t:.3f} s] Finished complex and Koszul closures of {self.complex}.")

        t = time.process_time()
        self.cells = self.compute_cells()
        logging.info(f"[{time.process_time() - t:.3f} s] Finished Hochschild cells of {len(self.koszul)} objects.")

        t = time.process_time()
        self.table = self.compute_homology()
        logging.info(f"[{time.process_time() - t:.3f} s] Finished homology of the induced complexes.")
        self.total_time = time.process_time() - total_time

    def grid(self):
        low = self.complex.min_shift()
        return [(hh, q) for q in range(low, self.qmax + 1) for hh in range(0, -self.n_factors - 1, -1)]

    def _object_cells(self, key):
        koszul = self.koszul[key]
        cells = {}
        for hh, q in self.grid():
            if q >= koszul.q_shift and sum(koszul.sizes(hh, q)):
                cells[(hh, q)] = koszul.cell(hh, q)
        return key, cells

    def compute_cells(self):
        with ThreadPoolExecutor(max_workers = self.threads) as executor:
            return dict(executor.map(self._object_cells, list(self.koszul)))

    def _induced(self, src, dst, f, hh, q):
        source = self.cells[src].get((hh, q))
        target = self.cells[dst].get((hh, q))
        if source is None or target is None or not source.dimension or not target.dimension:
            return None
        chain = self.koszul[src].chain_map(f, self.koszul[dst], hh, q)
        return induced_map(chain, source, target, check = False)

    def _cell_homology(self, cell):
        hh, q = cell
        by_degree = {}
        for key, obj in self.complex.objects.items():
            sub = self.cells[key].get(cell)
            if sub is not None and sub.dimension:
                by_degree.setdefault(obj.hom_degree, []).append(key)
        if not by_degree:
            return cell, {}
        position = {}
        dims = {}
        for degree, keys in by_degree.items():
            offset = 0
            for key in keys:
                position[key] = offset
                offset += self.cells[key][cell].dimension
            dims[degree] = offset
        blocks = {}
        for src, dst, f in self.complex.arrows:
            if src in position and dst in position:
                matrix = self._induced(src, dst, f, hh, q)
                if matrix is not None:
                    blocks.setdefault(self.complex.objects[src].hom_degree, []).append((position[dst], position[src], matrix))
        differentials = {}
        for degree, pieces in blocks.items():
            entries = {}
            for row_offset, col_offset, matrix in pieces:
                for (r, c), value in matrix.entries.items():
                    entries[(row_offset + r, col_offset + c)] = entries.get((row_offset + r, col_offset + c), 0) + value
            differentials[degree] = QMat(dims.get(degree + 1, 0), dims[degree], entries)
        return cell, complex_homology_dims(dims, differentials)

    def compute_homology(self):
        with ThreadPoolExecutor(max_workers = self.threads) as executor:
            results = list(executor.map(self._cell_homology, self.grid()))
        entries = {}
        for (hh, q), dims in results:
            for degree, dim in dims.items():
                # the split-off factor adds a copy shifted by (hh - 1, q + 1)
                for key in ((2 * degree, 2 * hh, 2 * q), (2 * degree, 2 * hh - 2, 2 * q + 2)):
                    entries[key] = entries.get(key, 0) + dim
        return TriPoincare(entries, 2 * self.qmax)


def hhh(braid, qmax = DEFAULT_QMAX, threads = None):
    return HHHComputation(braid, qmax, threads).table


def h12_shift(braid):
    """
    Doubled (hom, Hochschild, q) shifts of the normalized homology.
    """
    shift2 = diagram_stats(braid).writhe_shift2
    return shift2, -shift2, -shift2


def h12(braid, qmax = DEFAULT_QMAX, threads = None):
    """
    hhh with the overall normalization shifts applied; half-integer degrees stay exact in the doubled table.
    """
    h2, hh2, q2 = h12_shift(braid)
    return hhh(braid, qmax, threads).shift(h2, hh2, q2)


def euler_bracket(table):
    """
    sum of (-1)^hom q^q t^hh dim over a table with integer homological degrees.
    """
    terms = {}
    for (h2, hh2, q2), dim in table.entries.items():
        if h2 % 2:
            logging.error(f"Homological degree {Fraction(h2, 2)} is not an integer, the Euler characteristic needs a sign.")
            raise ValueError("half-integer homological degree")
        sign = -1 if (h2 // 2) % 2 else 1
        terms[(q2, hh2)] = terms.get((q2, hh2), 0) + sign * dim
    return QTPoly(terms, table.qmax2)
