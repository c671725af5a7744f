import math
from fractions import Fraction as Fr

import pytest
from hypothesis import given, strategies as st

from discdisp import (
    LEFT,
    MID,
    BadParam,
    MeasureSpec,
    abs_diff_dist,
    affine,
    from_pmf,
    gmd,
    ienr,
    iqnr,
    mad,
    mdmad,
    mean,
    median,
    parse_specs,
    sd,
    uniform_range,
    variance,
)
from discdisp.experiments import table1

from conftest import exact_dists

X = from_pmf([(0, Fr(1, 2)), (1, Fr(1, 4)), (2, Fr(1, 4))])
Y = from_pmf([(0, Fr(3, 8)), (1, Fr(1, 4)), (2, Fr(1, 4)), (3, Fr(1, 8))])


def gmd_oracle(d):
    return sum(abs(x - y) * p * q for x, p in d.atoms for y, q in d.atoms)


def test_uniform_pair():
    u = uniform_range(2)
    assert sd(u) == 0.5
    assert gmd(u) == Fr(1, 2)
    assert mad(u) == Fr(1, 2)


def test_mdmad_pair():
    assert mdmad(X) == Fr(3, 4)
    assert mdmad(Y) == Fr(7, 8)
    assert median(X) == 0 and median(Y) == 1


def test_iqnr_reversal_pair(iqr_pair):
    F, G = iqr_pair
    assert iqnr(F) == 3
    assert iqnr(G) == 2
    assert iqnr(F, variant=MID) > iqnr(G, variant=MID)


def test_dataset_values_sample1():
    p, q = table1()
    assert abs(mad(p) - 1.03) < 0.005 and abs(mad(q) - 4.45) < 0.005
    assert iqnr(p) == 2 and iqnr(q) == 5
    assert abs(sd(p, unbiased=True) - 1.29) < 0.005
    assert abs(gmd(q, unbiased=True) - 5.98) < 0.005


def test_unbiased_needs_sample_size():
    with pytest.raises(BadParam):
        sd(uniform_range(3), unbiased=True)
    with pytest.raises(BadParam):
        gmd(uniform_range(3), unbiased=True)


def test_symmetric_mad_equals_mdmad():
    for n in range(2, 12):
        u = uniform_range(n)
        assert mad(u) == mdmad(u, MID)


@pytest.mark.parametrize("alpha,beta", [(Fr(1, 2), Fr(1, 4)), (0, Fr(1, 2)), (Fr(1, 4), 1)])
def test_iqnr_level_checks(alpha, beta):
    with pytest.raises(BadParam):
        iqnr(X, alpha, beta)


@pytest.mark.parametrize("alpha,beta", [(Fr(1, 2), Fr(3, 4)), (Fr(1, 4), Fr(1, 2)), (Fr(3, 5), Fr(4, 5))])
def test_ienr_level_checks(alpha, beta):
    with pytest.raises(BadParam):
        ienr(X, alpha, beta)


def test_spec_parsing():
    specs = parse_specs("sd,gmd,iqnr:0.1:0.9,ienr:1/4:3/4", MID)
    assert [s.kind for s in specs] == ["sd", "gmd", "iqnr", "ienr"]
    assert specs[2].alpha == Fr(1, 10) and specs[2].quantile_variant == MID
    assert specs[3].name == "ienr:1/4:3/4"
    assert MeasureSpec.parse("mdmad")(Y) == Fr(7, 8)
    for bad in ("variance", "iqnr:0.5", "iqnr:0.9:0.1", "ienr:0.6:0.9"):
        with pytest.raises(BadParam):
            parse_specs(bad)
    with pytest.raises(BadParam):
        MeasureSpec("mad", quantile_variant="upper")


@given(exact_dists())
def test_gmd_and_sd_oracles(d):
    assert gmd(d) == gmd_oracle(d)
    second = sum(x * x * p for x, p in abs_diff_dist(d).atoms)
    assert variance(d) == second / 2
    assert math.isclose(sd(d), math.sqrt(second / 2), rel_tol=1e-12)
    assert mad(d) == sum(abs(x - mean(d)) * p for x, p in d.atoms)


@given(exact_dists())
def test_positive(d):
    assert sd(d) > 0 and gmd(d) > 0 and mad(d) > 0 and ienr(d) > 0
    assert iqnr(d) >= 0 and mdmad(d) > 0


@given(exact_dists(), st.sampled_from([Fr(1, 2), 2, 3, Fr(5, 3)]), st.integers(-6, 6))
def test_d1_positive_scale(d, a, b):
    g = affine(d, a, b)
    assert math.isclose(sd(g), a * sd(d), rel_tol=1e-12)
    assert gmd(g) == a * gmd(d)
    assert mad(g) == a * mad(d)
    assert ienr(g) == a * ienr(d)
    for variant in (LEFT, MID):
        assert mdmad(g, variant) == a * mdmad(d, variant)
        assert iqnr(g, variant=variant) == a * iqnr(d, variant=variant)


@given(exact_dists(), st.sampled_from([-1, -2, Fr(-1, 3)]), st.integers(-6, 6))
def test_d1_negative_scale(d, a, b):
    # a < 0 flips quantile sides, so iqnr/mdmad are covered with the midpoint variant
    g = affine(d, a, b)
    assert math.isclose(sd(g), -a * sd(d), rel_tol=1e-12)
    assert gmd(g) == -a * gmd(d)
    assert mad(g) == -a * mad(d)
    assert ienr(g) == -a * ienr(d)
    assert mdmad(g, MID) == -a * mdmad(d, MID)
    assert iqnr(g, variant=MID) == -a * iqnr(d, variant=MID)
