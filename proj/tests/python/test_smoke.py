"""End-to-end smoke checks for the ivrisk extension module."""

import math

import pytest

import ivrisk


def test_interval_arithmetic():
    a = ivrisk.Interval(1.0, 3.0)
    b = ivrisk.Interval(-1.0, 1.0)
    s = a + b
    assert (s.lo, s.hi) == (0.0, 4.0)
    assert a.mean == 2.0 and a.width == 1.0
    scaled = 2.0 * b
    assert (scaled.lo, scaled.hi) == (-2.0, 2.0)
    neg = -a
    assert (neg.lo, neg.hi) == (-3.0, -1.0)
    assert ivrisk.Interval.point(5.0).degenerate
    assert ivrisk.compare(b, a) == -1
    with pytest.raises(ValueError):
        ivrisk.Interval(2.0, 1.0)


def test_risk_estimators():
    sample = ivrisk.EmpiricalIntervalSample(
        [ivrisk.Interval(-3.0, -1.0), ivrisk.Interval(-1.0, 1.0), ivrisk.Interval(1.0, 3.0), ivrisk.Interval(2.0, 4.0)]
    )
    est = ivrisk.icvar(sample, 0.5)
    assert est.tail_size == 2
    assert (est.icvar.lo, est.icvar.hi) == (0.0, 2.0)
    assert (est.ivar.lo, est.ivar.hi) == (-1.0, 1.0)
    ev = ivrisk.expected_interval([ivrisk.Interval(0.0, 2.0), ivrisk.Interval(2.0, 4.0)])
    assert (ev.lo, ev.hi) == (1.0, 3.0)


def test_jarque_bera():
    res = ivrisk.jarque_bera([-1.0, -1.0, 1.0, 1.0])
    assert res.statistic == pytest.approx(2.0 / 3.0, abs=1e-12)
    assert res.skewness == pytest.approx(0.0, abs=1e-12)
    assert res.kurtosis == pytest.approx(1.0, abs=1e-12)


def test_gamma_index():
    assert ivrisk.gamma_index(ivrisk.Interval(0.0, 2.0), ivrisk.Interval(2.0, 4.0)) == 1.0
    with pytest.raises(ValueError):
        ivrisk.gamma_index(ivrisk.Interval.point(1.0), ivrisk.Interval.point(2.0))


def test_build_and_solve_model():
    spec = ivrisk.ModelOneSpec(
        0.05,
        [ivrisk.Interval(0.0, 0.10)],
        [[ivrisk.Interval(0.01, 0.03)], [ivrisk.Interval(0.02, 0.08)]],
        [ivrisk.Interval(0.001, 0.003), ivrisk.Interval(0.004, 0.012)],
    )
    problem = ivrisk.build_model1(spec)
    solution = ivrisk.solve(problem)
    assert solution.status == ivrisk.SolveStatus.Optimal
    assert sum(solution.weights) == pytest.approx(1.0, abs=1e-9)
    check = ivrisk.grid_oracle(problem, 0.01)
    assert check.status == ivrisk.SolveStatus.Optimal
    assert solution.objective >= check.objective - 1e-9


def test_prices_round_trip(tmp_path):
    csv = tmp_path / "prices.csv"
    csv.write_text(
        "date,close,high,low\n"
        "2020-01-02,100.0,101.0,99.0\n"
        "2020-01-03,102.0,103.5,100.5\n"
        "2020-01-06,101.0,102.0,100.0\n"
    )
    bars = ivrisk.load_prices(str(csv))
    assert [b.date for b in bars] == ["2020-01-02", "2020-01-03", "2020-01-06"]
    obs = ivrisk.log_returns(bars)
    assert len(obs) == 2
    assert obs[0].point == pytest.approx(math.log(102.0 / 100.0), abs=1e-12)
    assert obs[0].interval.lo <= obs[0].point <= obs[0].interval.hi
