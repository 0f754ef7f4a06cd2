import pytest

from HomCat.Complexes.bimComplex import BimComplex, ComplexObject
from HomCat.Complexes.crossingComplex import braid_complex, crossing_complex
from HomCat.core import ChainMapError, MPoly
from HomCat.Oracle.braidChecks import CROSSING_TYPES
from HomCat.Presentations.mapDesc import MapDesc, Mult
from HomCat.Webs.colouredBraid import ColouredBraid


@pytest.mark.parametrize("c1, c2, sign", CROSSING_TYPES)
def test_crossing_complex_shape(c1, c2, sign):
    complex = crossing_complex(c1, c2, sign)
    assert len(complex.arrows) == len(complex.objects) - 1
    degrees = complex.degrees()
    assert (min(degrees) if sign > 0 else max(degrees)) == -sign * (len(degrees) - 1)
    for src, dst, f in complex.arrows:
        assert f.shift == complex.objects[src].q_shift - complex.objects[dst].q_shift


@pytest.mark.parametrize("sign", [1, -1])
def test_thick_crossing_squares_to_zero(sign):
    report = crossing_complex(2, 2, sign).check_d_squared(4)
    assert report.ok
    assert report.checked > 0


def test_d_squared_failure_is_reported(presentations):
    pres = presentations("arc1")
    x = MPoly.variable(pres.variable("b1.1"))
    objects = [ComplexObject((k,), pres, k, -2 * k) for k in range(3)]
    arrows = [((0,), (1,), MapDesc([Mult(x)])), ((1,), (2,), MapDesc([Mult(x)]))]
    report = BimComplex(objects, arrows, "x-squared").check_d_squared(4)
    assert not report.ok
    assert report.first_failure == {"source": "(0,)", "target": "(2,)", "q": 0}
    assert report.to_dict()["ok"] is False


def test_arrows_must_fit_the_grading(presentations):
    pres = presentations("arc1")
    objects = [ComplexObject((0,), pres, 0, 0), ComplexObject((1,), pres, 1, -2), ComplexObject((2,), pres, 0, -2)]
    with pytest.raises(ChainMapError):
        BimComplex(objects, [((0,), (1,), MapDesc.identity())])
    with pytest.raises(ChainMapError):
        BimComplex(objects, [((0,), (2,), MapDesc.zero(2))])
    with pytest.raises(ValueError):
        BimComplex(objects + [ComplexObject((0,), pres, 0, 0)], [])


def test_braid_complex_of_hopf_link():
    complex = braid_complex(ColouredBraid((2, 2), (1, 1)))
    assert len(complex.objects) == 9
    assert len(complex.arrows) == 12
    assert complex.degrees() == [-4, -3, -2, -1, 0]
    assert complex.min_shift() == 0


def test_braid_complex_signs():
    complex = braid_complex(ColouredBraid((1, 1), (1, 1)))
    # the second crossing's arrow out of (0, 0) passes one crossing of odd degree
    arrows = {(src, dst): f for src, dst, f in complex.arrows}
    assert arrows[((0, 0), (0, 1))].primitives[-1].factor == MPoly.constant(-1)
    assert len(arrows[((1, 0), (1, 1))].primitives) == 1


@pytest.mark.slow
def test_hopf_complex_squares_to_zero():
    assert braid_complex(ColouredBraid((2, 2), (1, 1))).check_d_squared(4).ok


def _boundary_elementaries(src, dst):
    for side in ("bottom", "top"):
        for here, there in zip(getattr(src, side), getattr(dst, side)):
            yield from zip(here, there)


def _bilinearity_failures(c1, c2, sign, qmax):
    complex = crossing_complex(c1, c2, sign)
    failures = []
    for src_key, dst_key, f in complex.arrows:
        src, dst = complex.objects[src_key].pres, complex.objects[dst_key].pres
        for here, there in _boundary_elementaries(src, dst):
            assert here == there
            before, after = MapDesc([Mult(here)]), MapDesc([Mult(there)])
            for degree in range(max(0, -f.shift), qmax + 1, 2):
                multiply_first = f.realize(src, dst, degree + before.shift) * before.realize(src, src, degree)
                multiply_last = after.realize(dst, dst, degree + f.shift) * f.realize(src, dst, degree)
                if multiply_first != multiply_last:
                    failures.append((f.name, str(here), degree))
    return failures


@pytest.mark.parametrize("c1, c2, sign", CROSSING_TYPES)
def test_crossing_differentials_are_bimodule_maps(c1, c2, sign):
    assert _bilinearity_failures(c1, c2, sign, 4) == []


@pytest.mark.slow
@pytest.mark.parametrize("c1, c2, sign", CROSSING_TYPES)
def test_crossing_differentials_are_bimodule_maps_up_to_q8(c1, c2, sign):
    assert _bilinearity_failures(c1, c2, sign, 8) == []
