from dataclasses import dataclass, field
import logging

from ..core import MPoly, Var
from ..LinearAlgebra.qmat import QMat
from ..Presentations.mapDesc import Extract, MapDesc, Mult, Subst
from ..Presentations.ringPres import block_variables, present_web, remove_root, root_polynomial, union_elementaries
from ..Presentations.sliceBasis import slice_dim
from ..Presentations.zips import zip_element
from ..Webs.resolutions import moy_axiom_webs
from .verificationCheck import VerificationCheck


def _adjoined(name):
    var = Var(f"adj:{name}.1", 2)
    return var, MPoly.variable(var)


def _var(pres, key, index = 0):
    return block_variables(pres.edge(key))[index]


@dataclass
class SquareLemma:
    """
    A square web, the summands of its decomposition and the maps exhibiting them.

    Attributes:
        summands (list of (str, int)): Names of summand presentations and their q-shifts.
        maps (dict): name -> (MapDesc, source name, target name).
        identities (list): (label, first map, second map, expected) with expected a scalar
            multiple of the identity or a MapDesc to compare against.
    """
    name: str
    presentations: dict
    summands: list
    maps: dict = field(default_factory = dict)
    identities: list = field(default_factory = list)


def square1112():
    webs = moy_axiom_webs()
    sq = present_web(webs["square1112"], name = "square1112")
    pres = {"square": sq, "dumbbell": present_web(webs["dumbbell21"], name = "dumbbell21"),
            "twoarcs": present_web(webs["twoarcs21"], name = "twoarcs21")}
    A, B, P = sq.edge(("bottom", 1)), sq.edge(("bottom", 2))[0], sq.edge(("top", 1))
    a, b, c, d = _var(sq, ("split", 0, 0)), _var(sq, ("split", 0, 1)), _var(sq, ("split", 2, 0)), _var(sq, ("split", 2, 1))
    alpha_var, alpha = _adjoined("lo")
    beta_var, beta = _adjoined("hi")
    alpha_bar = A[0] - alpha
    # both digons of the bottom-left and top-left 2-edges are projected onto their left edge
    f = MapDesc([Subst({a: alpha, b: alpha_bar, c: P[0] - beta}),
                 Mult(zip_element(1, 2, (beta,), union_elementaries((alpha_bar,), (B,)))),
                 Extract(alpha_var, root_polynomial(alpha, A), 1),
                 Extract(beta_var, root_polynomial(beta, P), 1)], name = "f")
    h = MapDesc([Subst({a: alpha, b: alpha_bar, c: alpha_bar, d: B}),
                 Extract(alpha_var, root_polynomial(alpha, A), 1)], name = "h")
    # the rung zip summed with its mirror image
    j = MapDesc([Mult(root_polynomial(MPoly.variable(c), (B,)) + root_polynomial(MPoly.variable(b), (MPoly.variable(d),)))], name = "j")
    lemma = SquareLemma("square1112", pres, [("dumbbell", 0), ("twoarcs", 2)])
    lemma.maps = {"f": (f, "square", "dumbbell"), "g": (MapDesc.identity("g"), "dumbbell", "square"),
                  "h": (h, "square", "twoarcs"), "j": (j, "twoarcs", "square")}
    lemma.identities = [("fg = id", "g", "f", 1), ("hj = -2id", "j", "h", -2), ("hg = 0", "g", "h", 0), ("fj = 0", "j", "f", 0)]
    return lemma


def square1122():
    webs = moy_axiom_webs()
    sq = present_web(webs["square1122"], name = "square1122")
    pres = {"square": sq, "dumbbell": present_web(webs["dumbbell31"], name = "dumbbell31"),
            "twoarcs": present_web(webs["twoarcs31"], name = "twoarcs31")}
    A, B, P = sq.edge(("bottom", 1)), sq.edge(("bottom", 2))[0], sq.edge(("top", 1))
    a = block_variables(sq.edge(("split", 0, 0)))
    b, c, d = _var(sq, ("split", 0, 1)), _var(sq, ("split", 2, 0)), _var(sq, ("split", 2, 1))
    beta_var, beta = _adjoined("lo")
    gamma_var, gamma = _adjoined("hi")
    complement = remove_root(A, beta)
    # the 2-2 zip plus its mirrored terms, which are the same six terms again
    f = MapDesc([Subst({b: beta, a[0]: complement[0], a[1]: complement[1], c: gamma}),
                 Mult(zip_element(2, 2, remove_root(P, gamma), union_elementaries((beta,), (B,))) * 2),
                 Extract(beta_var, root_polynomial(beta, A), 2),
                 Extract(gamma_var, root_polynomial(gamma, P), 2)], name = "f")
    collapse = Subst({b: beta, a[0]: complement[0], a[1]: complement[1], c: beta, d: B})
    h2 = MapDesc([collapse, Extract(beta_var, root_polynomial(beta, A), 1)], name = "h2")
    h4 = MapDesc([collapse, Extract(beta_var, root_polynomial(beta, A), 2)], name = "h4")
    zip11 = MPoly.variable(c) - B
    j2 = MapDesc([Mult(zip11)], name = "j2")
    j4 = MapDesc([Mult(MPoly.variable(b) * zip11)], name = "j4")
    lemma = SquareLemma("square1122", pres, [("dumbbell", 0), ("twoarcs", 2), ("twoarcs", 4)])
    lemma.maps = {"f": (f, "square", "dumbbell"), "g": (MapDesc.identity("g"), "dumbbell", "square"),
                  "h2": (h2, "square", "twoarcs"), "h4": (h4, "square", "twoarcs"),
                  "j2": (j2, "twoarcs", "square"), "j4": (j4, "twoarcs", "square")}
    lemma.identities = [("gf = 2id", "g", "f", 2),
                        ("hj[1,1] = 1", "j2", "h2", 1), ("hj[2,1] = 0", "j2", "h4", 0),
                        ("hj[1,2] = -x4", "j4", "h2", MapDesc([Mult(-B)], name = "-x4")), ("hj[2,2] = 1", "j4", "h4", 1),
                        ("hg = 0", "g", "h2", 0), ("hg = 0", "g", "h4", 0),
                        ("fj = 0", "j2", "f", 0), ("fj = 0", "j4", "f", 0)]
    return lemma


def square2113():
    webs = moy_axiom_webs()
    sq = present_web(webs["square2113"], name = "square2113")
    H = present_web(webs["h2213"], name = "h2213")
    pres = {"square": sq, "dumbbell": present_web(webs["dumbbell2213"], name = "dumbbell2213"), "H": H}
    B, P, Q = sq.edge(("bottom", 2)), sq.edge(("top", 1)), sq.edge(("top", 2))
    b, e = _var(sq, ("split", 0, 0)), _var(sq, ("split", 0, 1))
    r = block_variables(sq.edge(("split", 2, 1)))
    m_var = _var(H, ("split", 0, 1))
    m = MPoly.variable(m_var)
    beta_var, beta = _adjoined("lo")
    gamma_var, gamma = _adjoined("hi")
    rho_var, rho = _adjoined("rung")
    kappa_var, kappa = _adjoined("kappa")
    rung = remove_root(Q, gamma)
    psi1 = MapDesc([Subst({b: beta, e: B[0] - beta, r[0]: rung[0], r[1]: rung[1]}),
                    Mult(zip_element(3, 1, union_elementaries(P, rung), (B[0] - beta,))),
                    Extract(gamma_var, root_polynomial(gamma, Q), 2),
                    Extract(beta_var, root_polynomial(beta, B), 1)], name = "psi1")
    phi2 = MapDesc([Subst({m_var: rho}),
                    Mult(zip_element(2, 1, union_elementaries(P, (rho,)), (MPoly.variable(b),))),
                    Extract(rho_var, root_polynomial(rho, sq.edge(("split", 2, 1))), 1)], name = "phi2")
    # the square's e and the rung m of the H-web share a name, the substitution is simultaneous
    psi2 = MapDesc([Subst({b: B[0] - kappa, e: kappa, r[0]: m + B[0] - kappa, r[1]: m * (B[0] - kappa)}),
                    Extract(kappa_var, root_polynomial(kappa, B), 1)], name = "psi2")
    lemma = SquareLemma("square2113", pres, [("dumbbell", 0), ("H", 2)])
    lemma.maps = {"phi1": (MapDesc.identity("phi1"), "dumbbell", "square"), "psi1": (psi1, "square", "dumbbell"),
                  "phi2": (phi2, "H", "square"), "psi2": (psi2, "square", "H")}
    lemma.identities = [("psi1 phi1 = -id", "phi1", "psi1", -1), ("psi2 phi2 = id", "phi2", "psi2", 1),
                        ("psi2 phi1 = 0", "phi1", "psi2", 0), ("psi1 phi2 = 0", "phi2", "psi1", 0)]
    return lemma


def square_lemmas():
    return [square1112(), square1122(), square2113()]


def dimension_failure(lemma, qmax):
    """
    First degree at which the square's slice is not the sum of the shifted summand slices.
    """
    square = lemma.presentations["square"]
    for degree in range(0, qmax + 1, 2):
        expected = sum(slice_dim(lemma.presentations[name], degree - shift) for name, shift in lemma.summands)
        actual = slice_dim(square, degree)
        if actual != expected:
            return {"identity": "dimensions", "q": degree, "expected": expected, "actual": actual}
    return None


def identity_failure(lemma, label, first, second, expected, qmax):
    """
    Realizes second o first on every source slice up to qmax and compares it with the expected map.
    """
    f, src, mid = lemma.maps[first]
    g, mid_again, dst = lemma.maps[second]
    if mid != mid_again:
        logging.error(f"Maps {first} and {second} of {lemma.name} do not compose.")
        raise ValueError("maps do not compose")
    source, middle, target = (lemma.presentations[name] for name in (src, mid, dst))
    for degree in range(0, qmax + 1, 2):
        composite = g.realize(middle, target, degree + f.shift) * f.realize(source, middle, degree)
        if isinstance(expected, MapDesc):
            wanted = expected.realize(source, target, degree)
        elif expected == 0:
            wanted = QMat.zero(composite.rows, composite.cols)
        else:
            wanted = QMat.identity(composite.cols) * expected
        if composite != wanted:
            return {"identity": label, "q": degree}
    return None


class SquareLemmaCheck(VerificationCheck):
    name = "square_lemmas"

    def generate_cases(self):
        for lemma in square_lemmas():
            yield lemma.name, lemma

    def check_case(self, label, lemma):
        failure = dimension_failure(lemma, self.qmax)
        if failure is not None:
            return failure
        for identity, first, second, expected in lemma.identities:
            failure = identity_failure(lemma, identity, first, second, expected, self.qmax)
            if failure is not None:
                return failure
        return None


def verify_square_lemmas(qmax):
    return SquareLemmaCheck(qmax).run()
