from functools import lru_cache
import logging

from ..core import MPoly, Partition
from ..Algebra.symmetric import schur_from_elementary
from ..Webs.resolutions import dumbbell
from .ringPres import present_web


@lru_cache(maxsize = None)
def zip_dumbbell(i, j):
    """
    Presentation of the dumbbell with bottom and top colours (i, j), the home of the zip elements.
    Its top-left edge is ("top", 1) and its bottom-right edge is ("bottom", 2).
    """
    return present_web(dumbbell(i, j, top = (i, j)), name = f"dumbbell({i},{j})")


def _sides(i, j, pres, swapped = False):
    pres = pres or zip_dumbbell(i, j)
    if swapped:
        return pres.edge(("bottom", 1)), pres.edge(("top", 2))
    return pres.edge(("top", 1)), pres.edge(("bottom", 2))


def zip_element(i, j, left, right):
    """
    Sum over partitions a in the i x j box of (-1)^|a| s_a(left) s_b(right), b the conjugate of the complement of a.

    Args:
        i (int): Colour of the edge with elementaries left.
        j (int): Colour of the edge with elementaries right.
        left (tuple of MPoly): Elementaries of an i-edge.
        right (tuple of MPoly): Elementaries of a j-edge.
    """
    if len(left) != i or len(right) != j:
        logging.error(f"Zip element ({i},{j}) needs edges of colours {i} and {j}, got {len(left)} and {len(right)}.")
        raise ValueError("edge colours do not match the zip")
    result = MPoly()
    for alpha in Partition.in_box(i, j):
        dual = alpha.complement(i, j).conjugate()
        term = schur_from_elementary(alpha, left) * schur_from_elementary(dual, right)
        result = result + (term if alpha.size % 2 == 0 else -term)
    return result


def delta_1k(k, pres = None):
    """
    sum_j (-1)^j x^(k-j) e_j, x the top-left 1-edge and e_j the elementaries of the bottom-right k-edge.
    """
    if k < 1:
        logging.error(f"delta_1k needs k >= 1, got {k}.")
        raise ValueError(f"invalid k {k}")
    left, right = _sides(1, k, pres)
    x = left[0]
    result = x ** k
    for index in range(1, k + 1):
        term = x ** (k - index) * right[index - 1]
        result = result + (term if index % 2 == 0 else -term)
    return result


def delta_22(pres = None):
    left, right = _sides(2, 2, pres)
    def pi(parts):
        return schur_from_elementary(Partition(parts), left)
    def pi_prime(parts):
        return schur_from_elementary(Partition(parts), right)
    return (pi((2, 2)) - pi((2, 1)) * pi_prime((1,)) + pi((2,)) * pi_prime((1, 1))
            + pi((1, 1)) * pi_prime((2,)) - pi((1,)) * pi_prime((2, 1)) + pi_prime((2, 2)))


def delta_general(i, j, pres = None, swapped = False):
    """
    The zip element of colours (i, j) in the dumbbell presentation.

    Args:
        swapped (bool): Use the bottom-left and top-right edges instead, for cocommutativity checks.
    """
    left, right = _sides(i, j, pres, swapped)
    return zip_element(i, j, left, right)


def bimodule_defects(pres, element):
    """
    Elementaries e of each boundary strand for which (e(top) - e(bottom)) * element is non-zero in the quotient.

    Returns:
        List of (strand position, elementary index).
    """
    defects = []
    for position, (top, bottom) in enumerate(zip(pres.top, pres.bottom), start = 1):
        for index, (upper, lower) in enumerate(zip(top, bottom), start = 1):
            product = (upper - lower) * element
            if product and pres.slice(product.degree()).coords(product):
                defects.append((position, index))
    return defects


def equal_in_quotient(pres, a, b):
    difference = a - b
    return not difference or not pres.slice(difference.degree()).coords(difference)
