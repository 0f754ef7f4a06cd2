import pytest

from HomCat.Oracle.braidChecks import CROSSING_TYPES
from HomCat.core import WebError
from HomCat.Webs.colouredBraid import ColouredBraid, diagram_stats, parse_braid
from HomCat.Webs.ladderWeb import LadderWeb, Merge, Split, dump_web, load_web
from HomCat.Webs.resolutions import crossing_terms, dumbbell, h_web, resolve_braid


def test_braid_levels_and_crossings():
    braid = ColouredBraid((2, 1), (1,))
    assert braid.levels() == [(2, 1), (1, 2)]
    assert braid.crossings() == [(1, 2, 1, 1)]
    assert not braid.is_closable()
    assert ColouredBraid((2, 1), (1, -1)).is_closable()


@pytest.mark.parametrize("colours, word", [((), ()), ((1, 3), ()), ((1, 1), (2,)), ((1, 1), (0,))])
def test_invalid_braids(colours, word):
    with pytest.raises(WebError):
        ColouredBraid(colours, word)


def test_parse_braid():
    braid = parse_braid("2, 2", "1,-1")
    assert braid == ColouredBraid((2, 2), (1, -1))
    assert parse_braid("1", "") == ColouredBraid((1,))


@pytest.mark.parametrize("colours, word, token", [("2,x", "1", "'x'"), ("1,1", "2", "'2'"), ("1,3", "", "'3'"), ("1,1", "1,a", "'a'")])
def test_parse_braid_names_offending_token(colours, word, token):
    with pytest.raises(WebError, match = token):
        parse_braid(colours, word)


@pytest.mark.parametrize("colours, word, shift", [((2,), (), -2), ((1,), (), -1), ((2, 2), (1, 1), 0), ((1, 1), (1,), -1),
                                                  ((1, 1), (-1,), -3), ((2, 1), (1, 1), -3)])
def test_writhe_shift(colours, word, shift):
    assert diagram_stats(ColouredBraid(colours, word)).writhe_shift2 == shift


def test_mixed_crossings_are_counted_separately():
    stats = diagram_stats(ColouredBraid((2, 1), (1, -1)))
    assert (stats.mixed_plus, stats.mixed_minus) == (1, 1)
    assert stats.to_dict()["s2"] == 1


def test_flow_conservation():
    with pytest.raises(WebError):
        LadderWeb((2,), (Split(1, 1, 2),))
    with pytest.raises(WebError):
        LadderWeb((3, 2), (Merge(1),))
    with pytest.raises(WebError):
        LadderWeb((1,), (Merge(1),))
    with pytest.raises(WebError):
        LadderWeb((5,))


def test_h_web_mirror():
    assert h_web(2, 1).top == (1, 2)
    assert h_web(1, 2).bottom == (1, 2)
    assert h_web(1, 2).top == (2, 1)
    with pytest.raises(WebError):
        h_web(2, 2)


def test_stack_checks_boundary():
    with pytest.raises(WebError):
        dumbbell(2, 1).stack(dumbbell(2, 1))
    assert dumbbell(2, 1).stack(dumbbell(1, 2)).top == (2, 1)


def test_web_file_round_trip(tmp_path):
    web = LadderWeb((2, 2), (Split(2, 1, 1), Merge(1)))
    path = tmp_path / "web.json"
    dump_web(web, path)
    assert load_web(path) == web


def test_load_web_rejects_malformed_files(tmp_path):
    broken = tmp_path / "broken.json"
    broken.write_text("{bottom")
    with pytest.raises(WebError):
        load_web(broken)
    bad_op = tmp_path / "bad_op.json"
    bad_op.write_text('{"bottom": [2], "slices": [{"op": "twist", "pos": 1}]}')
    with pytest.raises(WebError, match = "slice 0"):
        load_web(bad_op)


@pytest.mark.parametrize("c1, c2, sign", CROSSING_TYPES)
def test_crossing_terms_have_crossing_boundary(c1, c2, sign):
    terms = crossing_terms(c1, c2, sign)
    degrees = [term.hom_degree for term in terms]
    assert degrees == list(range(degrees[0], degrees[0] + len(terms)))
    assert 0 in degrees
    for term in terms:
        assert term.web.bottom == (c1, c2)
        assert term.web.top == (c2, c1)


def test_crossing_terms_validation():
    with pytest.raises(WebError):
        crossing_terms(3, 1, 1)
    with pytest.raises(WebError):
        crossing_terms(1, 1, 0)


def test_resolve_braid():
    hopf = ColouredBraid((2, 2), (1, 1))
    assert resolve_braid(hopf, (2, 2)).top == (2, 2)
    assert len(resolve_braid(hopf, (0, 1)).slices) == 4
    middle = resolve_braid(ColouredBraid((1, 1, 1), (2,)), (1,))
    assert middle.levels() == [(1, 1, 1), (1, 2), (1, 1, 1)]
    with pytest.raises(WebError):
        resolve_braid(hopf, (0,))
    with pytest.raises(WebError):
        resolve_braid(hopf, (0, 3))


def test_moy_axiom_webs(webs):
    assert webs["assoc_left"].top == webs["assoc_right"].top == (1, 1, 1)
    assert webs["assoc_left4"].top == webs["assoc_right4"].top == (1, 2, 1)
    assert webs["square1112"].top == (2, 1)
    assert webs["square1122"].top == (3, 1)
    assert webs["square2113"].top == webs["dumbbell2213"].top == webs["h2213"].top == (1, 3)
    assert webs["square3111"].top == (2, 2)
