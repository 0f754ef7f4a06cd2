from fractions import Fraction
import itertools
import logging

import sympy as sp
from sympy import QQ
from sympy.polys.matrices import DomainMatrix


def _exponent_vectors(degrees, total):
    """
    Every exponent vector e with sum(e_k * degrees[k]) == total, by plain enumeration.
    """
    bounds = [range(total // degree + 1) for degree in degrees]
    return [vector for vector in itertools.product(*bounds)
            if sum(e * degree for e, degree in zip(vector, degrees)) == total]


def dense_slice_dim(pres, degree):
    """
    Dimension of a presentation in one degree: all monomials of that degree in all variables
    minus the rank of the dense matrix of every monomial multiple of every relation.

    Works on the raw variables and relations and computes the rank with sympy.
    """
    if degree < 0 or degree % 2:
        return 0
    variables = list(pres.variables)
    position = {var: k for k, var in enumerate(variables)}
    degrees = [var.degree for var in variables]
    columns = {vector: c for c, vector in enumerate(_exponent_vectors(degrees, degree))}
    rows = {}
    for relation in pres.relations:
        rest = degree - relation.degree()
        if rest < 0:
            continue
        for shift in _exponent_vectors(degrees, rest):
            row = {}
            for mono, coeff in relation.terms.items():
                vector = list(shift)
                for var, exp in mono:
                    vector[position[var]] += exp
                c = columns[tuple(vector)]
                row[c] = row.get(c, Fraction(0)) + coeff
            row = {c: QQ(value.numerator, value.denominator) for c, value in row.items() if value}
            if row:
                rows[len(rows)] = row
    if not rows:
        return len(columns)
    matrix = DomainMatrix(rows, (len(rows), len(columns)), QQ)
    rank = matrix.rank()
    logging.debug(f"Dense slice {degree} of {pres.name}: {len(columns)} monomials, rank {rank}.")
    return len(columns) - rank


def bialternant_schur(partition, n):
    """
    Schur polynomial in x1..xn as the ratio of two alternants, returned as a sympy expression
    together with its symbols.
    """
    symbols = sp.symbols(f"x1:{n + 1}")
    parts = list(partition) + [0] * (n - len(partition))
    if len(parts) > n:
        return sp.Integer(0), symbols
    numerator = sp.Matrix(n, n, lambda i, j: symbols[i] ** (parts[j] + n - 1 - j))
    denominator = sp.Matrix(n, n, lambda i, j: symbols[i] ** (n - 1 - j))
    return sp.expand(sp.cancel(numerator.det() / denominator.det())), symbols


def to_sympy(poly, symbols):
    """
    Converts an MPoly to a sympy expression.

    Args:
        symbols (dict): Var -> sympy Symbol.
    """
    expression = sp.Integer(0)
    for mono, coeff in poly.terms.items():
        term = sp.Rational(coeff.numerator, coeff.denominator)
        for var, exp in mono:
            term = term * symbols[var] ** exp
        expression += term
    return sp.expand(expression)
