from functools import lru_cache
import logging
import time

import numpy as np

from ..core import MPoly, mono_mul
from ..LinearAlgebra.qmat import rref_sparse_rows, to_fraction


@lru_cache(maxsize = None)
def monomials_of_degree(variables, degree):
    """
    All monomials of the given q-degree in the variables, as sorted (Var, exponent) tuples.

    Args:
        variables (tuple of Var): Variables with positive even degrees.
        degree (int): Target degree.

    Returns:
        Tuple of monomials in a deterministic order.
    """
    ordered = tuple(sorted(variables))
    result = []

    def build(index, remaining, prefix):
        if remaining == 0:
            result.append(tuple(prefix))
            return
        if index == len(ordered):
            return
        var = ordered[index]
        for exp in range(remaining // var.degree, -1, -1):
            step = prefix + [(var, exp)] if exp else prefix
            build(index + 1, remaining - exp * var.degree, step)

    if degree >= 0:
        build(0, degree, [])
    return tuple(result)


class SliceBasis():

    def __init__(self, pres, degree) -> None:
        """
        Basis of the degree slice of a presented quotient ring.

        Monomials in the kept variables span the slice, the ideal slice is the span of all
        monomial multiples of the relations. Its reduced echelon form picks pivot monomials
        with the largest exponent vector in the kept variable order, the remaining monomials
        are the basis and every pivot monomial is rewritten in them.

        Args:
            pres (RingPres): The presentation.
            degree (int): Polynomial q-degree, even.
        """
        t = time.process_time()
        self.pres = pres
        self.degree = degree
        reduction = pres.reduction()
        kept = tuple(reduction.kept)
        monomials = monomials_of_degree(kept, degree)
        columns = sorted(monomials, key = reduction.monomial_key, reverse = True)
        position = {mono: c for c, mono in enumerate(columns)}
        rows = []
        for relation in reduction.relations:
            rest = degree - relation.degree()
            if rest < 0:
                continue
            for mono in monomials_of_degree(kept, rest):
                row = {}
                for rel_mono, coeff in relation.terms.items():
                    c = position[mono_mul(mono, rel_mono)]
                    row[c] = row.get(c, 0) + coeff
                rows.append(row)
        pivots, reduced = rref_sparse_rows(rows, len(columns))
        leading = {columns[pivot] for pivot in pivots}
        self.monomials = [mono for mono in monomials if mono not in leading]
        self.index = {mono: i for i, mono in enumerate(self.monomials)}
        self.rewrites = {}
        for pivot, row in zip(pivots, reduced):
            self.rewrites[columns[pivot]] = {self.index[columns[c]]: -to_fraction(value) for c, value in row.items() if c != pivot}
        logging.debug(f"[{time.process_time()-t:.3f} s] Finished slice {degree} of {pres.name}: dimension {len(self.monomials)} from {len(rows)} relation multiples.")

    def __len__(self):
        return len(self.monomials)

    @property
    def dimension(self):
        return len(self.monomials)

    def coords(self, poly):
        """
        Coordinates of the class of a degree-homogeneous polynomial in this basis.

        Args:
            poly (MPoly): Polynomial in any variables of the presentation.

        Returns:
            Sparse dict basis index -> Fraction.
        """
        normal = self.pres.normal_form(poly)
        result = {}
        for mono, coeff in normal.terms.items():
            index = self.index.get(mono)
            if index is not None:
                result[index] = result.get(index, 0) + coeff
                continue
            rewrite = self.rewrites.get(mono)
            if rewrite is None:
                logging.error(f"Term {mono} of degree other than {self.degree} in slice coordinates of {self.pres.name}.")
                raise ValueError("polynomial not in this slice")
            for i, value in rewrite.items():
                result[i] = result.get(i, 0) + coeff * value
        return {i: value for i, value in result.items() if value}

    def element(self, index):
        return MPoly({self.monomials[index]: 1})


def slice_dim(pres, degree):
    """
    Dimension of the quotient ring in one polynomial degree, zero for odd or negative degrees.
    """
    if degree < 0 or degree % 2:
        return 0
    return pres.slice(degree).dimension


def hilbert_series(pres, dmax):
    """
    Slice dimensions for all degrees 0..dmax as an integer numpy array indexed by degree.
    """
    series = np.zeros(dmax + 1, dtype = np.int64)
    for degree in range(0, dmax + 1, 2):
        series[degree] = slice_dim(pres, degree)
    return series


def _geometric(step, dmax):
    series = np.zeros(dmax + 1, dtype = np.int64)
    series[::step] = 1
    return series


def predicted_hilbert_series(pres, dmax):
    """
    Hilbert series prod(1 - t^deg r) / prod(1 - t^deg v) expected when the relations form a regular sequence.
    """
    series = np.zeros(dmax + 1, dtype = np.int64)
    series[0] = 1
    for var in pres.variables:
        series = np.convolve(series, _geometric(var.degree, dmax))[:dmax + 1]
    for relation in pres.relations:
        factor = np.zeros(relation.degree() + 1, dtype = np.int64)
        factor[0] = 1
        factor[-1] -= 1
        series = np.convolve(series, factor)[:dmax + 1]
    return series


def is_regular_presentation(pres, dmax):
    return bool(np.array_equal(hilbert_series(pres, dmax), predicted_hilbert_series(pres, dmax)))
