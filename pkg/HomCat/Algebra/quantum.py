import logging

from ..core import QTPoly


def quantum_integer(n):
    """
    [n] = 1 + q^2 + ... + q^(2(n-1)), exponents stored doubled.
    """
    if n < 0:
        logging.error(f"Quantum integer needs n >= 0, got {n}.")
        raise ValueError(f"negative quantum integer {n}")
    return QTPoly({(4 * k, 0): 1 for k in range(n)})


def quantum_factorial(n):
    result = QTPoly.monomial()
    for k in range(1, n + 1):
        result = result * quantum_integer(k)
    return result


def quantum_binomial(n, m):
    """
    Gaussian binomial [n choose m] in q^2, computed with the q-Pascal rule
    [n, m] = [n-1, m-1] + q^(2m) [n-1, m].

    Args:
        n (int): Top entry.
        m (int): Bottom entry, 0 <= m <= n.

    Returns:
        QTPoly with non-negative integer coefficients.
    """
    if m < 0 or m > n:
        logging.error(f"Quantum binomial [{n} choose {m}] needs 0 <= m <= n.")
        raise ValueError(f"invalid quantum binomial ({n}, {m})")
    rows = {(0, 0): QTPoly.monomial()}
    for top in range(1, n + 1):
        for bottom in range(0, min(top, m) + 1):
            value = QTPoly()
            if bottom >= 1:
                value = value + rows[(top - 1, bottom - 1)]
            if bottom <= top - 1:
                value = value + rows[(top - 1, bottom)].shift(q2 = 4 * bottom)
            rows[(top, bottom)] = value
    return rows[(n, m)]
