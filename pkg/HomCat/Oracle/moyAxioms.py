import logging

from ..Algebra.quantum import quantum_binomial
from ..Bracket.moyBracket import closed_form_A1, closed_form_A2, web_value
from ..Presentations.ringPres import present_web
from ..Presentations.sliceBasis import slice_dim
from ..Webs.resolutions import dumbbell, moy_axiom_webs
from .verificationCheck import VerificationCheck


def _series_failure(lhs, rhs, qmax):
    """
    First (q2, t2) where two truncated series differ up to qmax.
    """
    lhs, rhs = lhs.truncate(2 * qmax), rhs.truncate(2 * qmax)
    for key in sorted(set(lhs.terms) | set(rhs.terms)):
        if lhs.terms.get(key, 0) != rhs.terms.get(key, 0):
            return {"q2": key[0], "t2": key[1], "lhs": str(lhs.terms.get(key, 0)), "rhs": str(rhs.terms.get(key, 0))}
    return None


def _slice_failure(lhs, summands, qmax):
    """
    First degree where the slice of lhs is not the sum of coefficient times shifted summand slices.

    Args:
        summands (list of (RingPres, QTPoly)): Presentations with their graded multiplicities.
    """
    for degree in range(0, qmax + 1, 2):
        expected = 0
        for pres, multiplicity in summands:
            for (q2, _), coeff in multiplicity.terms.items():
                expected += int(coeff) * slice_dim(pres, degree - q2 // 2)
        actual = slice_dim(lhs, degree)
        if actual != expected:
            return {"q": degree, "expected": expected, "actual": actual}
    return None


def axiom_cases():
    """
    (label, kind, data) for every web relation checked; kind selects the comparison.
    """
    webs = moy_axiom_webs()
    cases = []
    for k in range(1, 5):
        cases.append((f"A1 unknot {k}", "unknot", k))
    for i in (1, 2):
        for j in (1, 2):
            cases.append((f"A2 dumbbell {i}{j}", "dumbbell", (i, j)))
    for i in (1, 2):
        for j in (1, 2):
            cases.append((f"A3 digon {i}{j}", "digon", (webs[f"digon{i}{j}"], webs[f"arc{i + j}"], quantum_binomial(i + j, i))))
    cases.append(("A4 associativity 3", "associativity", (webs["assoc_left"], webs["assoc_right"])))
    cases.append(("A4 associativity 4", "associativity", (webs["assoc_left4"], webs["assoc_right4"])))
    cases.append(("A5 square 1112", "closure", (webs["square1112"], [(webs["dumbbell21"], 0), (webs["twoarcs21"], 2)])))
    cases.append(("A6 square 1122", "closure", (webs["square1122"], [(webs["dumbbell31"], 0), (webs["twoarcs31"], 2), (webs["twoarcs31"], 4)])))
    # the boundary (2,2) -> (1,3) has no closure, compared through graded dimensions
    cases.append(("A7 square 2113", "decomposition", (webs["square2113"], [(webs["dumbbell2213"], 0), (webs["h2213"], 2)])))
    return cases


class MOYAxiomCheck(VerificationCheck):
    """
    Checks the web relations as identities between independently evaluated sides.
    """
    name = "moy_axioms"

    def generate_cases(self):
        for label, kind, data in axiom_cases():
            yield label, (kind, data)

    def check_case(self, label, case):
        kind, data = case
        if kind == "unknot":
            return _series_failure(web_value(moy_axiom_webs()[f"arc{data}"], self.qmax), closed_form_A1(data, self.qmax), self.qmax)
        if kind == "dumbbell":
            i, j = data
            expected = closed_form_A2(i, j, self.qmax) * closed_form_A1(i, self.qmax)
            return _series_failure(web_value(dumbbell(i, j, top = (i, j)), self.qmax), expected, self.qmax)
        if kind == "digon":
            digon, arc, multiplicity = data
            return _slice_failure(present_web(digon), [(present_web(arc), multiplicity)], self.qmax)
        if kind == "associativity":
            left, right = data
            return _slice_failure(present_web(left), [(present_web(right), quantum_binomial(0, 0))], self.qmax)
        if kind == "closure":
            square, summands = data
            lhs = web_value(square, self.qmax)
            rhs = None
            for web, shift in summands:
                value = web_value(web, self.qmax, shift)
                rhs = value if rhs is None else rhs + value
            return _series_failure(lhs, rhs, self.qmax)
        if kind == "decomposition":
            square, summands = data
            return _slice_failure(present_web(square), [(present_web(web), quantum_binomial(0, 0).shift(q2 = 2 * shift)) for web, shift in summands], self.qmax)
        logging.error(f"Unknown axiom kind {kind} for {label}.")
        raise ValueError(f"unknown axiom kind {kind}")


def verify_moy_axioms(qmax):
    return MOYAxiomCheck(qmax).run()
