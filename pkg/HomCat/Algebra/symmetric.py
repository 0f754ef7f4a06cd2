from itertools import combinations, combinations_with_replacement, permutations
import logging

from ..core import MPoly, Partition


def elementary(k, variables):
    """
    k-th elementary symmetric polynomial in the given variables.
    """
    if k < 0 or k > len(variables):
        return MPoly()
    result = MPoly()
    for subset in combinations(variables, k):
        result = result + MPoly.monomial({var: 1 for var in subset})
    return result


def complete(k, variables):
    """
    k-th complete homogeneous symmetric polynomial in the given variables.
    """
    if k < 0:
        return MPoly()
    result = MPoly()
    for multiset in combinations_with_replacement(variables, k):
        exponents = {}
        for var in multiset:
            exponents[var] = exponents.get(var, 0) + 1
        result = result + MPoly.monomial(exponents)
    return result


def _permutation_sign(perm):
    sign = 1
    seen = [False] * len(perm)
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        current = start
        while not seen[current]:
            seen[current] = True
            current = perm[current]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def determinant(matrix):
    """
    Leibniz expansion of a small square matrix of polynomials.
    """
    size = len(matrix)
    if size == 0:
        return MPoly.constant(1)
    result = MPoly()
    for perm in permutations(range(size)):
        term = MPoly.constant(_permutation_sign(perm))
        for row, col in enumerate(perm):
            entry = matrix[row][col]
            if not entry:
                term = MPoly()
                break
            term = term * entry
        result = result + term
    return result


def schur(partition, variables):
    """
    Schur polynomial via the Jacobi-Trudi determinant det(h_{lambda_i - i + j}).

    Args:
        partition (Partition or iterable): The indexing partition.
        variables (list of Var): Ordered variables, at least as many as parts.

    Returns:
        The Schur polynomial as MPoly.
    """
    partition = partition if isinstance(partition, Partition) else Partition(partition)
    if len(partition) > len(variables):
        logging.error(f"{partition} has more parts than the {len(variables)} given variables.")
        raise ValueError("partition longer than variable list")
    size = len(partition)
    cache = {}
    def h(k):
        if k not in cache:
            cache[k] = complete(k, variables)
        return cache[k]
    matrix = [[h(partition[i] - i + j) for j in range(size)] for i in range(size)]
    return determinant(matrix)


def schur_from_elementary(partition, elementaries):
    """
    Schur polynomial in the roots of an edge whose elementary symmetric functions are given,
    by the dual Jacobi-Trudi determinant det(e_{lambda'_i - i + j}).

    Args:
        partition (Partition or iterable): Must have at most len(elementaries) parts.
        elementaries (tuple of MPoly): e_1, ..., e_c of the edge.

    Returns:
        The Schur polynomial as MPoly in whatever variables the elementaries use.
    """
    partition = partition if isinstance(partition, Partition) else Partition(partition)
    colour = len(elementaries)
    if len(partition) > colour:
        return MPoly()
    conjugate = partition.conjugate()
    size = len(conjugate)
    def e(k):
        if k == 0:
            return MPoly.constant(1)
        if k < 0 or k > colour:
            return MPoly()
        return elementaries[k - 1]
    matrix = [[e(conjugate[i] - i + j) for j in range(size)] for i in range(size)]
    return determinant(matrix)


def schur_expand(poly, variables):
    """
    Writes a symmetric polynomial in the Schur basis by peeling off lexicographically leading monomials.

    Returns:
        dict Partition -> coefficient.
    """
    index = {var: i for i, var in enumerate(variables)}
    def exponent_vector(mono):
        vector = [0] * len(variables)
        for var, exp in mono:
            if var not in index:
                logging.error(f"Variable {var} not among {variables}.")
                raise ValueError("foreign variable in Schur expansion")
            vector[index[var]] = exp
        return tuple(vector)
    remainder = poly.copy()
    result = {}
    while remainder:
        leading = max(remainder.terms, key = exponent_vector)
        vector = exponent_vector(leading)
        if any(a < b for a, b in zip(vector, vector[1:])):
            logging.error(f"Polynomial is not symmetric, leading exponent {vector}.")
            raise ValueError("not a symmetric polynomial")
        shape = Partition(vector)
        coeff = remainder.terms[leading]
        result[shape] = result.get(shape, 0) + coeff
        remainder = remainder - schur(shape, variables) * coeff
    return result


def littlewood_richardson(lam, mu, variables):
    """
    Schur expansion of s_lam * s_mu in the given variables.
    """
    return schur_expand(schur(lam, variables) * schur(mu, variables), variables)


# pi_lambda(x1, x2) = sum coeff * pi_all(x1..x4) * pi_prime(x3, x4)
PI_REWRITES = {
    (0, 0): [(1, (), ())],
    (1, 0): [(1, (1,), ()), (-1, (), (1,))],
    (1, 1): [(1, (1, 1), ()), (-1, (1,), (1,)), (1, (), (2,))],
    (2, 0): [(1, (2,), ()), (-1, (1,), (1,)), (1, (), (1, 1))],
    (2, 1): [(1, (2, 1), ()), (-1, (2,), (1,)), (-1, (1, 1), (1,)), (1, (1,), (2,)), (1, (1,), (1, 1)), (-1, (), (2, 1))],
    (2, 2): [(1, (2, 2), ()), (-1, (2, 1), (1,)), (1, (2,), (1, 1)), (1, (1, 1), (2,)), (-1, (1,), (2, 1)), (1, (), (2, 2))],
}


def rewrite_pi_in_primes(partition):
    """
    Rewrites pi_lambda in the first two of four variables through Schur polynomials in all four variables
    and Schur polynomials pi' in the last two.

    Args:
        partition (Partition or iterable): A partition inside (2, 2).

    Returns:
        List of (coefficient, Partition for all four variables, Partition for the last two).
    """
    partition = partition if isinstance(partition, Partition) else Partition(partition)
    if not Partition((2, 2)).contains(partition):
        logging.error(f"{partition} is not contained in (2, 2).")
        raise ValueError("partition outside (2, 2)")
    key = (partition[0], partition[1])
    return [(coeff, Partition(full), Partition(prime)) for coeff, full, prime in PI_REWRITES[key]]


def expand_rewrite(terms, variables):
    """
    Expands a rewrite into a polynomial in four ordered variables.
    """
    result = MPoly()
    for coeff, full, prime in terms:
        result = result + schur(full, variables) * schur(prime, variables[2:]) * coeff
    return result
