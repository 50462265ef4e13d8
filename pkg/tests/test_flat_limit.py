from fractions import Fraction

import pytest

from hilbcomp import fixtures
from hilbcomp.classify import normal_form_ideal
from hilbcomp.errors import HomogeneityError
from hilbcomp.flat_limit import Family, fiber, flatness_probe, limit_ideal
from hilbcomp.hilbert import hilbert_series, pair_hilbert_polynomial
from hilbcomp.ideals import Ideal, intersect, irrelevant_ideal, saturate
from hilbcomp.rings import PolyRing, parse

Rt = PolyRing(4, has_param=True)
R = PolyRing(4)


def tparse(*texts):
    return [parse(t, Rt) for t in texts]


def test_family_requires_parameter_ring():
    with pytest.raises(ValueError):
        Family(Ideal(R, [R.x(0)]))


def test_family_requires_x_homogeneous_generators():
    with pytest.raises(HomogeneityError):
        Family(Ideal(Rt, tparse("x0 + x1^2")))
    # inhomogeneous in t alone is fine: t carries x-degree zero
    Family(Ideal(Rt, tparse("x0 + t*x1", "t*x2 - x3")))


def test_limit_of_pair_moving_into_a_hyperplane():
    fam = fixtures.get("family_embedded_limit_n3").payload
    assert limit_ideal(fam) == Ideal(R, [parse(t, R) for t in
                                         ("x0^2", "x0*x1", "x0*x2", "x1*x2")])


def test_limit_of_pair_collapsing_to_double_structure():
    fam = fixtures.get("family_double_limit_n3").payload
    assert limit_ideal(fam) == Ideal(R, [parse(t, R) for t in
                                         ("x0^2", "x0*x1", "x1^2", "x0*x3 - x1*x2")])


def test_limit_of_quadric_union_family():
    fam = fixtures.get("family_quadric_union_limit_n3").payload
    assert limit_ideal(fam) == normal_form_ideal(3, "III")


def test_quadric_union_product_presentation_agrees_only_at_n3():
    prod3 = fixtures.family_quadric_union_product(3)
    assert limit_ideal(prod3) == normal_form_ideal(3, "III")
    assert flatness_probe(prod3).flat
    # from n=4 on the product picks up an embedded point where the two
    # pieces meet, so its fibers leave the reference Hilbert polynomial
    prod4 = fixtures.family_quadric_union_product(4)
    hp = hilbert_series(fiber(prod4, 1)).hilbert_polynomial
    assert hp != pair_hilbert_polynomial(4)
    assert hp == pair_hilbert_polynomial(4) + 1
    good4 = fixtures.get("family_quadric_union_limit_n4").payload
    assert limit_ideal(good4) == normal_form_ideal(4, "III")


def test_limit_of_substitution_family_is_presentation_ideal():
    fam = fixtures.get("family_substitution_limit_n3").payload
    got = limit_ideal(fam)
    assert got == Ideal(R, fixtures.lambda_generators(3))
    # same underlying scheme type as the planar-double normal form
    from hilbcomp.classify import classify

    assert classify(got, seed=2).label == "IV"


def test_limits_are_saturated():
    for name in ("embedded", "double", "quadric_union", "substitution"):
        fam = fixtures.get(f"family_{name}_limit_n3").payload
        lim = limit_ideal(fam)
        assert saturate(lim, irrelevant_ideal(R)) == lim


def test_fiber_at_one_is_the_unshifted_pair():
    fam = fixtures.get("family_embedded_limit_n3").payload
    got = fiber(fam, 1)
    want = intersect(
        Ideal(R, [R.x(0), R.x(1)]),
        Ideal(R, [R.x(0) + R.x(3), R.x(2)]),
    )
    assert got == want


def test_pencil_fibers():
    pencil = fixtures.get("pencil_planar_double_n3").payload
    at1 = fiber(pencil, 1)
    assert at1 == normal_form_ideal(3, "II")
    at0 = fiber(pencil, 0)
    assert at0 == Ideal(R, [parse(t, R) for t in ("x0^2", "x0*x1", "x1^2", "x1*x2")])
    assert hilbert_series(at0).hilbert_polynomial == pair_hilbert_polynomial(3)
    # mirrored chart covers the other end of the pencil
    mirror = fixtures.get("pencil_planar_double_mirror_n3").payload
    other_end = limit_ideal(mirror)
    assert hilbert_series(other_end).hilbert_polynomial == pair_hilbert_polynomial(3)


def test_flatness_probe_passes_for_the_degeneration_families():
    for name in ("embedded", "double", "quadric_union", "substitution"):
        fam = fixtures.get(f"family_{name}_limit_n3").payload
        report = flatness_probe(fam)
        assert report.flat, (name, report)
        assert report.limit_polynomial == pair_hilbert_polynomial(3)
        assert report.sample_points == (Fraction(1), Fraction(2), Fraction(1, 3))


def test_flatness_probe_pencil_and_chart_note():
    pencil = fixtures.get("pencil_planar_double_n3").payload
    report = flatness_probe(pencil, samples=4)
    assert report.flat
    assert "chart" in report.to_json()


def test_flatness_probe_detects_constructed_jump():
    # the fiber at t=1 drops a generator, so sampled fibers disagree
    bad = Family(Ideal(Rt, tparse("x0 - t*x0", "x1")))
    report = flatness_probe(bad)
    assert not report.flat
    assert Fraction(1) in report.mismatched_points


def test_probe_argument_validation():
    fam = fixtures.get("family_embedded_limit_n3").payload
    with pytest.raises(ValueError):
        flatness_probe(fam, samples=1)


def test_limit_rejects_empty_family():
    with pytest.raises(ValueError):
        limit_ideal(Family(Ideal(Rt, [])))


@pytest.mark.parametrize("n", [4, 5])
def test_families_scale_with_ambient_dimension(n):
    base = PolyRing(n + 1)
    for name, label in (
        ("embedded", "III"),
        ("double", "II"),
        ("quadric_union", "III"),
    ):
        fam = fixtures.get(f"family_{name}_limit_n{n}").payload
        assert limit_ideal(fam) == normal_form_ideal(n, label)
    fam = fixtures.get(f"family_substitution_limit_n{n}").payload
    assert limit_ideal(fam) == Ideal(base, fixtures.lambda_generators(n))


def test_naive_fiber_is_contained_in_the_limit():
    # substituting t = 0 before saturating out t can only give a smaller
    # ideal: the t-flat closure contains the naive specialization
    for name in ("embedded", "double", "quadric_union", "substitution"):
        fam = fixtures.get(f"family_{name}_limit_n3").payload
        naive = fiber(fam, 0)
        limit = limit_ideal(fam)
        assert limit.contains_ideal(naive), name
    pencil = fixtures.get("pencil_planar_double_n3").payload
    assert limit_ideal(pencil).contains_ideal(fiber(pencil, 0))
