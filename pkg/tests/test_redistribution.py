import math

import pytest
from hypothesis import assume, given, strategies as st

from golden import REDISTRIBUTION_ROWS, REDISTRIBUTION_INPUTS, REDISTRIBUTION_TOL
from unemploykit.errors import DomainError, MultiplierDivergence, ParameterError
from unemploykit.redistribution import (
    PopulationProfile,
    SectorSplit,
    apply_redistribution,
    composite_propensity,
    sector_income_series,
    gradual_schedule,
    growth_threshold,
    no_savings_invariance,
    no_savings_plan,
    population_breakdown,
    redistribution_sweep,
)


@pytest.fixture
def baseline():
    i = REDISTRIBUTION_INPUTS
    return SectorSplit.calibrate(i["f1"], i["c1"], i["c"])


def autonomous(split, y=281):
    return y * (1 - composite_propensity(split))


def test_calibration_matches_aggregate(baseline):
    assert composite_propensity(baseline) == pytest.approx(0.69, abs=1e-12)
    assert baseline.c2 * baseline.f2 == pytest.approx(0.4788)
    assert 0 < baseline.c2 < 1


def test_calibration_choice_of_f2_does_not_matter(baseline):
    other = SectorSplit.calibrate(0.22, 0.96, 0.69, f2=0.5)
    a = apply_redistribution(baseline, 0.1, 87.11)
    b = apply_redistribution(other, 0.1, 87.11)
    assert (a.c, a.Y, a.Y1, a.pct_Y23) == pytest.approx((b.c, b.Y, b.Y1, b.pct_Y23))


def test_composite_trivial_cases():
    assert composite_propensity(SectorSplit(0.3, 0.5, 0.2, 0.7, 0.7)) == pytest.approx(0.7 * 0.8)
    assert composite_propensity(SectorSplit(1, 0, 0, 0.8, 0.5)) == 0.8


@pytest.mark.parametrize("kwargs", [
    dict(f1=0.5, f2=0.5, f3=0.1, c1=0.9, c2=0.5),
    dict(f1=-0.1, f2=0.6, f3=0.5, c1=0.9, c2=0.5),
    dict(f1=0.2, f2=0.3, f3=0.5, c1=0.9, c2=1.0),
    dict(f1=0.2, f2=0.3, f3=0.5, c1=0, c2=0.5),
])
def test_split_validation(kwargs):
    with pytest.raises(ParameterError):
        SectorSplit(**kwargs)


def test_c1_above_one_is_admitted():
    s = SectorSplit(0.2, 0.3, 0.5, 1.1, 0.5)
    assert s.c == pytest.approx(0.37)


def test_zero_p_is_identity(baseline):
    r = apply_redistribution(baseline, 0, autonomous(baseline))
    assert r.Y == pytest.approx(281)
    assert r.f1 == 0.22 and r.c == pytest.approx(0.69)
    assert (r.pct_Y, r.pct_Y1, r.pct_Y23) == (0, 0, 0)


def test_row_10_percent(baseline):
    r = apply_redistribution(baseline, 0.10, autonomous(baseline))
    assert r.c == pytest.approx(0.717, abs=5e-4)
    assert r.m == pytest.approx(3.53, abs=0.01)
    assert r.Y == pytest.approx(307, abs=1)
    assert r.f1 == pytest.approx(0.30, abs=0.005)
    assert r.Y1 == pytest.approx(92, abs=1)
    assert r.Y23 == pytest.approx(216, abs=1)
    assert (r.pct_Y, r.pct_Y1, r.pct_Y23) == pytest.approx((9.5, 48.4, -1.4), abs=0.1)


def test_full_sweep_against_reference(baseline):
    t = REDISTRIBUTION_TOL
    table = redistribution_sweep(baseline, [row[0] / 100 for row in REDISTRIBUTION_ROWS], 281)
    assert len(table.rows) == 11
    for got, want in zip(table.rows, REDISTRIBUTION_ROWS):
        _, c, m, y, f1, y1, y23, py, py1, py23 = want
        assert abs(got.c - c) <= t["c"]
        assert abs(got.m - m) <= t["m"]
        assert abs(got.f1 - f1) <= t["f1"]
        for g, w in ((got.Y, y), (got.Y1, y1), (got.Y23, y23)):
            assert abs(g - w) <= t["level"]
        for g, w in ((got.pct_Y, py), (got.pct_Y1, py1), (got.pct_Y23, py23)):
            assert abs(g - w) <= t["pct"] + 1e-9


def test_threshold(baseline):
    table = redistribution_sweep(baseline, [i / 50 for i in range(11)], 281)
    assert table.threshold_p == pytest.approx(0.20)
    exact = growth_threshold(baseline, 0.2)
    # closed form: c' = 1 - (1 - c)/1.2
    assert exact == pytest.approx((0.31 - 0.31 / 1.2) / 0.27)
    assert 0.18 < exact <= 0.20
    r = apply_redistribution(baseline, exact, autonomous(baseline))
    assert r.pct_Y == pytest.approx(20)


def test_table_requires_sorted(baseline):
    with pytest.raises(ParameterError):
        redistribution_sweep(baseline, [0.1, 0.0], 281)


def test_divergence_and_domain():
    s = SectorSplit(0.2, 0.5, 0.3, 1.5, 0.9)
    with pytest.raises(MultiplierDivergence):
        apply_redistribution(s, 0.5, 10)
    with pytest.raises(DomainError):
        apply_redistribution(s, 1.0, 10)
    with pytest.raises(DomainError):
        apply_redistribution(s, -0.1, 10)


def test_no_savings_closed_form():
    s = SectorSplit(0.2, 0.5, 0.3, 1.0, 0.7)
    base = no_savings_invariance(s, 0, 10)
    out = no_savings_invariance(s, 1 / 6, 10)
    assert out.m / base.m == pytest.approx(1.2)
    assert out.Y == pytest.approx(1.2 * base.Y)
    full = apply_redistribution(s, 1 / 6, 10)
    assert full.Y2 == pytest.approx(out.Y2, rel=1e-12)
    assert full.Y3 == pytest.approx(out.Y3, rel=1e-12)
    with pytest.raises(ParameterError):
        no_savings_invariance(SectorSplit(0.2, 0.5, 0.3, 0.9, 0.7), 0.1, 10)


splits = st.builds(
    lambda f1, frac2, c2: (f1, (1 - f1) * frac2, c2),
    st.floats(0, 0.9), st.floats(0.01, 1), st.floats(0.01, 0.99),
)


@given(splits, st.floats(0, 0.95), st.floats(1, 1e6))
def test_no_savings_keeps_other_sectors(parts, p, a):
    f1, f2, c2 = parts
    s = SectorSplit(f1, f2, 1 - f1 - f2, 1.0, c2)
    assume(s.c < 0.99)
    r = apply_redistribution(s, p, a)
    base = apply_redistribution(s, 0, a)
    assert math.isclose(r.Y2, base.Y2, rel_tol=1e-9, abs_tol=1e-9 * base.Y)
    assert math.isclose(r.Y3, base.Y3, rel_tol=1e-9, abs_tol=1e-9 * base.Y)


@given(splits, st.floats(0.05, 1.2), st.floats(0, 0.95))
def test_shares_sum_to_one(parts, c1, p):
    f1, f2, c2 = parts
    s = SectorSplit(f1, f2, 1 - f1 - f2, c1, c2)
    after = s.redistributed(p)
    assert math.isclose(after.f1 + after.f2 + after.f3, 1, abs_tol=1e-12)


@given(splits, st.floats(0.05, 1.2), st.floats(0.001, 0.9))
def test_multiplier_moves_with_sign_of_c1_minus_c(parts, c1, p):
    f1, f2, c2 = parts
    s = SectorSplit(f1, f2, 1 - f1 - f2, c1, c2)
    assume(abs(c1 - s.c) > 1e-6)
    try:
        r = apply_redistribution(s, p, 1.0)
    except MultiplierDivergence:
        assert c1 > s.c
        return
    m0 = 1 / (1 - s.c)
    assert (r.m > m0) == (c1 > s.c)


@given(st.floats(0, 0.9), st.floats(0, 0.9))
def test_output_increasing_in_p(p, q):
    s = SectorSplit.calibrate(0.22, 0.96, 0.69)
    lo, hi = sorted((p, q))
    assume(hi - lo > 1e-9)
    assert apply_redistribution(s, lo, 1).Y < apply_redistribution(s, hi, 1).Y


@given(st.floats(0, 0.5), st.floats(0, 0.5))
def test_composition(p, q):
    s = SectorSplit.calibrate(0.22, 0.96, 0.69)
    twice = s.redistributed(p).redistributed(q)
    once = s.redistributed(1 - (1 - p) * (1 - q))
    for name in ("f1", "f2", "f3"):
        assert math.isclose(getattr(twice, name), getattr(once, name), abs_tol=1e-12)
    a = autonomous(s)
    assert math.isclose(apply_redistribution(s.redistributed(p), q, a).c,
                        apply_redistribution(s, 1 - (1 - p) * (1 - q), a).c, abs_tol=1e-12)


def test_population_breakdown_before_after():
    profile = PopulationProfile(7e6, 3.5e6, 1.5e6)
    plan = no_savings_plan(profile, 281_000, 62_400, 0.2)
    assert plan.p == pytest.approx(1 / 6)
    assert plan.Y1_uplift_pct == pytest.approx(90, abs=1)
    assert plan.before.monthly_income == pytest.approx(4_800)
    assert plan.after.monthly_income == pytest.approx(9_120, abs=5)
    assert plan.before.avg_income == pytest.approx(400)
    assert plan.after.avg_income == pytest.approx(760, abs=5)
    assert plan.before.avg_employed == pytest.approx(572, abs=2)
    assert plan.before.avg_retired == pytest.approx(228, abs=2)
    assert plan.after.avg_employed == pytest.approx(921, abs=2)
    assert plan.after.avg_retired == pytest.approx(368, abs=2)
    assert plan.existing_income_rise_pct == pytest.approx(61, abs=1)
    paid = 8.5e6 * plan.after.avg_employed + 3.5e6 * plan.after.avg_retired
    assert paid == pytest.approx(plan.after.monthly_income * 1e6)


def test_single_cohort_average():
    b = population_breakdown(PopulationProfile(10, 0, 0, wage_ratio=1, payments_per_year=1), 50, scale=1)
    assert b.avg_employed == pytest.approx(5) and b.avg_income == pytest.approx(5)


def test_population_validation():
    with pytest.raises(ParameterError):
        PopulationProfile(0, 0, 5)
    with pytest.raises(ParameterError):
        PopulationProfile(1, 1, 1, wage_ratio=0)
    with pytest.raises(ParameterError):
        population_breakdown(PopulationProfile(1, 1, 0), 0)


def test_gradual_first_step(baseline):
    steps = gradual_schedule(0.02, 0.02, baseline, 281)
    assert len(steps) == 1
    first = steps[0]
    assert first.wage_increase_pct == pytest.approx(7.2, abs=0.05)
    assert first.expected_sales_growth_pct == pytest.approx(1.8, abs=0.05)
    assert first.income_growth_pct == pytest.approx(9.0, abs=0.05)


def test_gradual_empty_and_invalid(baseline):
    assert gradual_schedule(0, 0, baseline, 281) == []
    with pytest.raises(ParameterError):
        gradual_schedule(0.02, 0.04, baseline, 281)


def test_gradual_steps_compose(baseline):
    two = gradual_schedule(0.04, 0.02, baseline, 281)
    one = gradual_schedule(0.04, 0.04, baseline, 281)
    assert two[-1].Y == pytest.approx(one[-1].Y, rel=1e-12)
    growth = 1.0
    for s in two:
        growth *= 1 + s.expected_sales_growth_pct / 100
    assert growth == pytest.approx(1 + one[0].expected_sales_growth_pct / 100)
    # stepping from the previous split by the increment lands on the cumulative split
    s1 = baseline.redistributed(two[0].p).redistributed(two[1].increment)
    assert s1.f1 == pytest.approx(baseline.redistributed(0.04).f1)


def test_gradual_caps_last_step(baseline):
    steps = gradual_schedule(0.19, 0.02, baseline, 281)
    assert len(steps) == 10
    assert steps[-1].p == 0.19


def test_sector_income_series(baseline):
    rows = sector_income_series(baseline, 281, points=11)
    assert rows[0]["Y1"] == pytest.approx(61.82)
    y1 = [r["Y1"] for r in rows]
    y23 = [r["Y23"] for r in rows]
    assert y1 == sorted(y1)
    assert y23 == sorted(y23, reverse=True)
