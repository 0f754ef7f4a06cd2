import itertools
import logging
import time

from ..core import MPoly, Var, WebError
from ..Presentations.mapDesc import Extract, MapDesc, Mult, Subst
from ..Presentations.ringPres import block_variables, combine_presentations, present_web, root_polynomial
from ..Webs.ladderWeb import LadderWeb
from ..Webs.resolutions import crossing_terms
from .bimComplex import BimComplex, ComplexObject


def _quadratic(var, edge):
    """
    var^2 - e1 var + e2 for the elementaries of a 2-edge, the monic relation of one of its roots.
    """
    return root_polynomial(MPoly.variable(var), edge)


def _single(pres, key):
    return MPoly.variable(block_variables(pres.edge(key))[0])


def crossing_pieces(c1, c2, sign, prefix = "", bottom = None):
    """
    Presentations of the resolutions of one crossing, in increasing homological degree.

    Args:
        prefix (str): Variable prefix of the crossing.
        bottom (list of tuple of Var): Blocks of the two incoming strands, fresh if None.

    Returns:
        List of (ResolutionTerm, RingPres).
    """
    pieces = []
    for index, term in enumerate(crossing_terms(c1, c2, sign)):
        pres = present_web(term.web, prefix, bottom, name = f"{prefix}{term.kind}{term.web.bottom}")
        pieces.append((term, pres))
    return pieces


def crossing_differential(c1, c2, sign, index, src, dst, prefix = ""):
    """
    Differential from resolution index to index + 1 of a crossing between the given piece presentations.

    Zips multiply by a zip element, unzips identify variables and digon removals project onto one
    summand of a free decomposition over an adjoined root.

    Returns:
        MapDesc of the q-shift difference of the two resolutions.
    """
    A, B = src.edge(("bottom", 1)), src.edge(("bottom", 2))
    name = f"{prefix}d({c1},{c2},{'+' if sign > 0 else '-'})[{index}]"
    if sign < 0 and index == 0:
        # the dumbbell includes into the next resolution
        return MapDesc.identity(name)
    if (c1, c2) == (1, 1):
        if sign > 0:
            return MapDesc([Mult(_single(dst, ("top", 1)) - B[0])], name = name)
        return MapDesc.identity(name)
    if (c1, c2) in ((2, 1), (1, 2)):
        # positive: the rung of the H-web becomes a root v of the top 2-edge of the dumbbell
        side = 0 if (c1, c2) == (2, 1) else 1
        rung_key = ("split", 0, 1 - side)
        thin_bottom = B[0] if side == 0 else A[0]
        thin_top = _single(dst, ("top", 1 + side))
        thick_top = dst.edge(("top", 2 - side))
        v = Var(f"{prefix}v.1", 2)
        x = MPoly.variable(v)
        rung = block_variables(src.edge(rung_key))[0]
        return MapDesc([Subst({rung: x}), Mult((thin_bottom - thin_top) * (thin_bottom - x)),
                        Extract(v, _quadratic(v, thick_top), 1)], name = name)
    if index == 0:
        # the right bottom 2-edge of the square splits into u and its complement
        u = _single(dst, ("split", 0, 0))
        return MapDesc([Mult(root_polynomial(u, dst.edge(("top", 1))))], name = name)
    u_var = block_variables(src.edge(("split", 0, 0)))[0]
    u_bar_var = block_variables(src.edge(("split", 0, 1)))[0]
    u = MPoly.variable(u_var)
    u_bar = B[0] - u
    w_var = block_variables(src.edge(("split", 2, 1)))[0]
    if sign > 0:
        v = Var(f"{prefix}v.1", 2)
        x = MPoly.variable(v)
        factor = (u_bar - x) * root_polynomial(u_bar, dst.edge(("top", 1)))
        return MapDesc([Subst({w_var: x, u_bar_var: u_bar}), Mult(factor),
                        Extract(u_var, _quadratic(u_var, B), 1),
                        Extract(v, _quadratic(v, dst.edge(("top", 2))), 1)], name = name)
    return MapDesc([Subst({w_var: u, u_bar_var: u_bar}), Extract(u_var, _quadratic(u_var, B), 1)], name = name)


def crossing_complex(c1, c2, sign, prefix = ""):
    """
    The complex of one crossing on fresh boundary variables.
    """
    pieces = crossing_pieces(c1, c2, sign, prefix)
    objects = [ComplexObject((index,), pres, term.hom_degree, term.q_shift) for index, (term, pres) in enumerate(pieces)]
    arrows = []
    for index in range(len(pieces) - 1):
        f = crossing_differential(c1, c2, sign, index, pieces[index][1], pieces[index + 1][1], prefix)
        arrows.append(((index,), (index + 1,), f))
    return BimComplex(objects, arrows, f"crossing({c1},{c2},{'+' if sign > 0 else '-'})")


class BraidPieces():

    def __init__(self, braid) -> None:
        """
        Per-crossing presentations of a braid, stacked on shared level variables.
        Every resolution of crossing k has the same top blocks, so pieces do not depend on other choices.
        """
        self.braid = braid
        self.crossings = braid.crossings()
        bottom = present_web(LadderWeb.identity(braid.colours), name = "bottom")
        self.bottom_blocks = [block_variables(block) for block in bottom.bottom]
        self.pieces = []
        self.differentials = []
        level = list(self.bottom_blocks)
        for k, (p, left, right, sign) in enumerate(self.crossings):
            prefix = f"c{k}:"
            local = crossing_pieces(left, right, sign, prefix, level[p - 1:p + 1])
            self.pieces.append(local)
            self.differentials.append([crossing_differential(left, right, sign, index, local[index][1], local[index + 1][1], prefix)
                                       for index in range(len(local) - 1)])
            top = [block_variables(block) for block in local[0][1].top]
            for _, pres in local[1:]:
                if [block_variables(block) for block in pres.top] != top:
                    logging.error(f"Resolutions of crossing {k} disagree on their top variables.")
                    raise WebError("unstable top variables")
            level[p - 1:p + 1] = top
        self.top_blocks = level

    def presentation(self, choice):
        pieces = [self.pieces[k][index][1] for k, index in enumerate(choice)]
        leading = [var for block in self.bottom_blocks for var in block]
        bottom = [tuple(MPoly.variable(var) for var in block) for block in self.bottom_blocks]
        top = [tuple(MPoly.variable(var) for var in block) for block in self.top_blocks]
        return combine_presentations(pieces, bottom, top, leading, name = f"braid{tuple(choice)}")

    def term(self, k, index):
        return self.pieces[k][index][0]


def braid_complex(braid):
    """
    Tensor product of the crossing complexes of a braid, objects indexed by resolution choices.
    A component changing crossing k carries the sign (-1)^(sum of the homological degrees of earlier crossings).
    """
    t = time.process_time()
    pieces = BraidPieces(braid)
    ranges = [range(len(local)) for local in pieces.pieces]
    objects = []
    for choice in itertools.product(*ranges):
        terms = [pieces.term(k, index) for k, index in enumerate(choice)]
        hom_degree = sum(term.hom_degree for term in terms)
        q_shift = sum(term.q_shift for term in terms)
        objects.append(ComplexObject(tuple(choice), pieces.presentation(choice), hom_degree, q_shift))
    arrows = []
    for choice in itertools.product(*ranges):
        before = 0
        for k, index in enumerate(choice):
            if index + 1 < len(ranges[k]):
                target = choice[:k] + (index + 1,) + choice[k + 1:]
                f = pieces.differentials[k][index]
                arrows.append((choice, target, f if before % 2 == 0 else f.scaled(-1)))
            before += pieces.term(k, index).hom_degree
    complex = BimComplex(objects, arrows, f"braid{braid.colours}{braid.word}")
    complex.bottom_blocks = pieces.bottom_blocks
    complex.top_blocks = pieces.top_blocks
    logging.info(f"[{time.process_time()-t:.3f} s] Finished assembling {complex}.")
    return complex
