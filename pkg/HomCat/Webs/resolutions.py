from dataclasses import dataclass
import logging

from ..core import WebError
from .ladderWeb import LadderWeb, Merge, Split


def twoarcs(left, right):
    return LadderWeb((left, right))


def dumbbell(left, right, top = None):
    """
    The two bottom edges merge and the thick edge splits into top, by default the swapped pair.
    """
    top = (right, left) if top is None else tuple(top)
    return LadderWeb((left, right), (Merge(1), Split(1, top[0], top[1])))


def h_web(left, right):
    """
    The thicker strand sheds a 1-edge rung into the thinner one, (2,1) -> (1,2) and mirrored.
    """
    if (left, right) == (2, 1):
        return LadderWeb((2, 1), (Split(1, 1, 1), Merge(2)))
    if (left, right) == (1, 2):
        return h_web(2, 1).mirror()
    logging.error(f"No H-web for boundary ({left}, {right}).")
    raise WebError(f"no H-web for ({left}, {right})")


def crossing_square():
    """
    Square of two 2-strands with two 1-rungs passing through a 3-edge.
    """
    return LadderWeb((2, 2), (Split(2, 1, 1), Merge(1), Split(1, 2, 1), Merge(2)))


@dataclass(frozen=True)
class ResolutionTerm:
    """
    One resolution of a crossing: the local web, its q-shift and its homological degree.
    """
    web: LadderWeb
    q_shift: int
    hom_degree: int
    kind: str


def crossing_terms(c1, c2, sign):
    """
    Resolutions of a crossing of a c1-strand (left at the bottom) with a c2-strand, in increasing homological degree.

    Args:
        c1 (int): Colour of the left bottom strand, 1 or 2.
        c2 (int): Colour of the right bottom strand, 1 or 2.
        sign (int): +1 for a positive crossing, -1 for a negative one.

    Returns:
        List of ResolutionTerm.
    """
    if c1 not in (1, 2) or c2 not in (1, 2):
        logging.error(f"Crossing colours ({c1}, {c2}) must lie in {{1, 2}}.")
        raise WebError(f"invalid crossing colours ({c1}, {c2})")
    if sign not in (1, -1):
        logging.error(f"Crossing sign must be +1 or -1, got {sign}.")
        raise WebError(f"invalid crossing sign {sign}")
    thick = dumbbell(c1, c2)
    if (c1, c2) == (2, 2):
        if sign > 0:
            return [ResolutionTerm(twoarcs(2, 2), 6, -2, "twoarcs"),
                    ResolutionTerm(crossing_square(), 2, -1, "square"),
                    ResolutionTerm(thick, 0, 0, "dumbbell")]
        return [ResolutionTerm(thick, -8, 0, "dumbbell"),
                ResolutionTerm(crossing_square(), -8, 1, "square"),
                ResolutionTerm(twoarcs(2, 2), -6, 2, "twoarcs")]
    if c1 == c2:
        if sign > 0:
            return [ResolutionTerm(twoarcs(1, 1), 2, -1, "twoarcs"), ResolutionTerm(thick, 0, 0, "dumbbell")]
        return [ResolutionTerm(thick, -2, 0, "dumbbell"), ResolutionTerm(twoarcs(1, 1), -2, 1, "twoarcs")]
    if sign > 0:
        return [ResolutionTerm(h_web(c1, c2), 2, -1, "H"), ResolutionTerm(thick, 0, 0, "dumbbell")]
    return [ResolutionTerm(thick, -4, 0, "dumbbell"), ResolutionTerm(h_web(c1, c2), -4, 1, "H")]


def resolve_braid(braid, choice):
    """
    Replaces every crossing of the braid by its chosen resolution and stacks the pieces.

    Args:
        braid (ColouredBraid): The braid.
        choice (sequence of int): Index into crossing_terms per crossing.

    Returns:
        LadderWeb from the bottom colours to the top colours.
    """
    crossings = braid.crossings()
    if len(choice) != len(crossings):
        logging.error(f"Got {len(choice)} choices for {len(crossings)} crossings.")
        raise WebError("choice length does not match the word")
    web = LadderWeb.identity(braid.colours)
    for k, ((p, left, right, sign), index) in enumerate(zip(crossings, choice)):
        terms = crossing_terms(left, right, sign)
        if not 0 <= index < len(terms):
            logging.error(f"Choice {index} at crossing {k} outside 0..{len(terms) - 1}.")
            raise WebError(f"invalid choice {index} at crossing {k}")
        web = web.stack(terms[index].web.shifted(p - 1, web.top))
    return web


def moy_axiom_webs():
    """
    Named webs appearing in the MOY relations and the square decompositions.
    """
    webs = {f"arc{k}": LadderWeb((k,)) for k in range(1, 5)}
    for i in (1, 2):
        for j in (1, 2):
            webs[f"digon{i}{j}"] = LadderWeb((i + j,), (Split(1, i, j), Merge(1)))
    webs["assoc_left"] = LadderWeb((3,), (Split(1, 2, 1), Split(1, 1, 1)))
    webs["assoc_right"] = LadderWeb((3,), (Split(1, 1, 2), Split(2, 1, 1)))
    webs["assoc_left4"] = LadderWeb((4,), (Split(1, 3, 1), Split(1, 1, 2)))
    webs["assoc_right4"] = LadderWeb((4,), (Split(1, 1, 3), Split(2, 2, 1)))
    webs["twoarcs11"] = twoarcs(1, 1)
    webs["twoarcs21"] = twoarcs(2, 1)
    webs["twoarcs22"] = twoarcs(2, 2)
    webs["twoarcs31"] = twoarcs(3, 1)
    webs["dumbbell11"] = dumbbell(1, 1)
    webs["dumbbell21"] = dumbbell(2, 1, top = (2, 1))
    webs["dumbbell22"] = dumbbell(2, 2)
    webs["dumbbell31"] = dumbbell(3, 1, top = (3, 1))
    webs["dumbbell2213"] = dumbbell(2, 2, top = (1, 3))
    webs["h2213"] = LadderWeb((2, 2), (Split(1, 1, 1), Merge(2)))
    webs["square1112"] = LadderWeb((2, 1), (Split(1, 1, 1), Merge(2), Split(2, 1, 1), Merge(1)))
    webs["square1122"] = LadderWeb((3, 1), (Split(1, 2, 1), Merge(2), Split(2, 1, 1), Merge(1)))
    webs["square2113"] = LadderWeb((2, 2), (Split(2, 1, 1), Merge(1), Split(1, 1, 2), Merge(2)))
    webs["square3111"] = crossing_square()
    return webs
