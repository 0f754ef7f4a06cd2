import json

import pytest

from HomCat.Oracle.braidChecks import hopf_snapshot, verify_d_squared
from HomCat.Oracle.hochschildOracles import (ClosureOracle, a2_oracles, compare_closure, free_module_dims, kink_braids,
                                             kink_resolution_oracles, polynomial_ring_series, verify_a2_cases,
                                             verify_markov2_oracles)
from HomCat.Oracle.moyAxioms import axiom_cases, verify_moy_axioms
from HomCat.Oracle.squareLemmas import dimension_failure, square_lemmas, verify_square_lemmas
from HomCat.Oracle.verificationCheck import VerificationCheck, reports_to_json
from HomCat.Webs.ladderWeb import LadderWeb


class ParityCheck(VerificationCheck):
    name = "parity"

    def generate_cases(self):
        for value in (2, 4, 5, 6):
            yield f"value {value}", value

    def check_case(self, label, value):
        return None if value % 2 == 0 else {"remainder": value % 2}


def test_verification_check_stops_at_first_failure():
    report = ParityCheck(0).run()
    assert report == {"check": "parity", "status": "fail", "qmax": 0, "checked": 3,
                      "first_failure": {"case": "value 5", "remainder": 1}}
    assert json.loads(reports_to_json([report]))[0]["status"] == "fail"


def test_polynomial_ring_series():
    assert list(polynomial_ring_series([2, 4], 6)) == [1, 0, 1, 0, 2, 0, 2]
    assert free_module_dims([2], [0], 4) == {0: 1, 2: 1, 4: 1}
    assert free_module_dims([2, 4], [0, 3], 6) == {0: 1, 2: 1, 3: 1, 4: 2, 5: 1, 6: 2}


def test_closure_oracle_reports_mismatch():
    arc = LadderWeb((1,))
    assert compare_closure(ClosureOracle("arc", arc, (1,), [2], {0: [0], -1: [1]}), 6) is None
    failure = compare_closure(ClosureOracle("arc", arc, (1,), [2], {0: [0], -1: [3]}), 6)
    assert failure == {"hh": -1, "q": 1, "expected": 0, "actual": 1}


@pytest.mark.parametrize("oracle", a2_oracles(), ids = lambda oracle: oracle.name)
def test_dumbbell_closures(oracle):
    assert compare_closure(oracle, 6) is None


@pytest.mark.parametrize("oracle", kink_resolution_oracles(), ids = lambda oracle: oracle.name)
def test_kink_resolution_closures(oracle):
    assert compare_closure(oracle, 6) is None


def test_kink_braids():
    cases = kink_braids()
    assert len(cases) == 4
    assert {shift for label, _, _, shift in cases if label.startswith("negative")} == {(2, -2, -2), (4, -4, -4)}


@pytest.mark.parametrize("lemma", square_lemmas(), ids = lambda lemma: lemma.name)
def test_square_dimensions(lemma):
    assert dimension_failure(lemma, 6) is None


def test_square_lemma_suite():
    report = verify_square_lemmas(4)
    assert report["status"] == "pass"
    assert report["checked"] == 3


def test_a2_suite():
    assert verify_a2_cases(6)["status"] == "pass"


def test_d_squared_suite():
    report = verify_d_squared(4)
    assert report["status"] == "pass"
    assert report["checked"] == 8


def test_axiom_cases():
    labels = [label for label, _, _ in axiom_cases()]
    assert len(labels) == len(set(labels)) == 17
    assert labels[0].startswith("A1") and labels[-1].startswith("A7")


@pytest.mark.slow
def test_moy_axiom_suite():
    assert verify_moy_axioms(4)["status"] == "pass"


@pytest.mark.slow
def test_markov2_suite():
    assert verify_markov2_oracles(4, threads = 2)["status"] == "pass"


@pytest.mark.slow
def test_hopf_snapshot():
    table = hopf_snapshot(2)
    assert table.qmax2 == 4
    assert all(h2 <= 0 for h2, _, _, _ in table.rows())


@pytest.mark.slow
def test_square_lemma_suite_up_to_q10():
    report = verify_square_lemmas(10)
    assert report["status"] == "pass"
    assert report["checked"] == 3


@pytest.mark.slow
def test_d_squared_suite_up_to_q10():
    assert verify_d_squared(10)["status"] == "pass"


@pytest.mark.slow
def test_a2_suite_up_to_q10():
    assert verify_a2_cases(10)["status"] == "pass"


@pytest.mark.slow
@pytest.mark.parametrize("oracle", kink_resolution_oracles(), ids = lambda oracle: oracle.name)
def test_kink_resolution_closures_up_to_q10(oracle):
    assert compare_closure(oracle, 10) is None


def test_square_identities_use_the_decomposition_scalars():
    scalars = {lemma.name: {label: expected for label, _, _, expected in lemma.identities if not hasattr(expected, "realize")}
               for lemma in square_lemmas()}
    assert scalars["square1112"] == {"fg = id": 1, "hj = -2id": -2, "hg = 0": 0, "fj = 0": 0}
    assert scalars["square1122"]["gf = 2id"] == 2
    assert scalars["square2113"] == {"psi1 phi1 = -id": -1, "psi2 phi2 = id": 1, "psi2 phi1 = 0": 0, "psi1 phi2 = 0": 0}
