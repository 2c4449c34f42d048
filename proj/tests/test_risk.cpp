#include "ivrisk/risk.hpp"

#include "support/oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <compare>
#include <vector>

using namespace ivrisk;

namespace {

std::vector<Interval> degenerate_run(int from, int to) {
    std::vector<Interval> out;
    for (int c = from; c <= to; ++c) out.push_back(Interval::point(c));
    return out;
}

} // namespace

TEST_CASE("expected interval averages the endpoints") {
    CHECK(expected_interval({Interval(0, 2), Interval(2, 4)}) == Interval(1, 3));
    CHECK(expected_interval({Interval(1, 1)}) == Interval(1, 1));
    CHECK_THROWS_AS(expected_interval({}), EmptySample);
}

TEST_CASE("expected interval of a known law") {
    // draws [X - 0.1, X + 0.1] with X ~ uniform(0,1): mean tends to [0.4, 0.6]
    oracle::Rng rng(123);
    std::vector<Interval> sample;
    for (int i = 0; i < 1000; ++i) {
        const double x = rng.uniform(0.0, 1.0);
        sample.push_back(Interval(x - 0.1, x + 0.1));
    }
    const Interval m = expected_interval(sample);
    CHECK(m.lo() == doctest::Approx(0.4).epsilon(0.075));
    CHECK(m.hi() == doctest::Approx(0.6).epsilon(0.05));
    CHECK(m.width() == doctest::Approx(0.1).epsilon(1e-9));
}

TEST_CASE("tail count is ceil(alpha n) clamped to [1, n]") {
    CHECK(tail_count(100, 0.05) == 5);
    CHECK(tail_count(4, 0.25) == 1);
    CHECK(tail_count(4, 0.26) == 2);
    CHECK(tail_count(10, 0.999) == 10);
    CHECK(tail_count(3, 0.05) == 1);
    CHECK_THROWS_AS(tail_count(10, 0.0), AlphaOutOfRange);
    CHECK_THROWS_AS(tail_count(10, 1.0), AlphaOutOfRange);
    CHECK_THROWS_AS(tail_count(0, 0.05), EmptySample);
}

TEST_CASE("sample sorting is deterministic and ordered") {
    EmpiricalIntervalSample s({Interval(1, 3), Interval(-3, -1), Interval(0, 2), Interval(-1, 1)});
    REQUIRE(s.size() == 4);
    CHECK(s.order_statistic(1) == Interval(-3, -1));
    CHECK(s.order_statistic(2) == Interval(-1, 1));
    CHECK(s.order_statistic(3) == Interval(0, 2));
    CHECK(s.order_statistic(4) == Interval(1, 3));
    for (std::size_t t = 1; t < s.size(); ++t)
        CHECK(compare(s.order_statistic(t), s.order_statistic(t + 1)) <= 0);
    CHECK_THROWS_AS(EmpiricalIntervalSample({}), EmptySample);

    // equivalent intervals keep input order (stable sort)
    EmpiricalIntervalSample ties({Interval(0, 2), Interval(0, 2), Interval(-1, 0)});
    CHECK(ties.sorted_index() == std::vector<std::size_t>{2, 0, 1});
}

TEST_CASE("interval VaR picks the negated tail quantile") {
    EmpiricalIntervalSample s({Interval(-3, -1), Interval(-1, 1), Interval(0, 2), Interval(1, 3)});
    CHECK(ivar(s, 0.25) == Interval(1, 3)); // q = 1, worst is [-3,-1]

    EmpiricalIntervalSample degenerate((degenerate_run(1, 100)));
    CHECK(ivar(degenerate, 0.05) == Interval(-5, -5)); // q = 5

    EmpiricalIntervalSample one({Interval(-2.0, 0.5)});
    CHECK(ivar(one, 0.01) == Interval(-0.5, 2.0));
    CHECK(ivar(one, 0.99) == Interval(-0.5, 2.0));
}

TEST_CASE("interval CVaR negates the tail mean") {
    EmpiricalIntervalSample s({Interval(-3, -1), Interval(-1, 1), Interval(0, 2), Interval(1, 3)});
    const RiskEstimate est = icvar(s, 0.5);
    CHECK(est.tail_size == 2); // tail {[-3,-1], [-1,1]}, mean [-2,0]
    CHECK(est.icvar == Interval(0, 2));
    CHECK(est.ivar == Interval(-1, 1)); // negated second-smallest [-1,1]
    CHECK(est.alpha == 0.5);

    EmpiricalIntervalSample degenerate((degenerate_run(1, 100)));
    CHECK(icvar(degenerate, 0.05).icvar == Interval(-3, -3)); // mean of 1..5 negated

    // q = N: the tail is the whole sample
    EmpiricalIntervalSample small({Interval(0, 2), Interval(2, 4)});
    CHECK(icvar(small, 0.9).icvar == -expected_interval({Interval(0, 2), Interval(2, 4)}));
}

TEST_CASE("tail midpoint risk dominates the quantile risk") {
    oracle::Rng rng(31);
    for (int rep = 0; rep < 300; ++rep) {
        const auto obs = oracle::lattice_sample(rng, 1 + rng.gen() % 60);
        const RiskEstimate est = icvar(EmpiricalIntervalSample(obs), rng.uniform(0.01, 0.99));
        CHECK(est.icvar.mean() >= est.ivar.mean() - 1e-12);
        CHECK(est.icvar.lo() <= est.icvar.hi());
    }
}

TEST_CASE("every tail observation precedes every non-tail observation") {
    oracle::Rng rng(37);
    for (int rep = 0; rep < 200; ++rep) {
        const auto obs = oracle::lattice_sample(rng, 2 + rng.gen() % 40);
        EmpiricalIntervalSample s(obs);
        const double alpha = rng.uniform(0.01, 0.99);
        const std::size_t q = tail_count(s.size(), alpha);
        for (std::size_t a = 1; a <= q; ++a)
            for (std::size_t b = q + 1; b <= s.size(); ++b)
                CHECK(compare(s.order_statistic(a), s.order_statistic(b)) <= 0);
    }
}

TEST_CASE("degenerate samples reduce to scalar historical VaR and ES") {
    oracle::Rng rng(41);
    for (int rep = 0; rep < 100; ++rep) {
        const std::size_t n = 1 + rng.gen() % 200;
        std::vector<double> values;
        std::vector<Interval> sample;
        for (std::size_t i = 0; i < n; ++i) {
            const double v = rng.normal(0.0, 0.02);
            values.push_back(v);
            sample.push_back(Interval::point(v));
        }
        const double alpha = rng.uniform(0.01, 0.99);
        const RiskEstimate est = icvar(EmpiricalIntervalSample(sample), alpha);
        const double var = oracle::scalar_var(values, alpha);
        const double es = oracle::scalar_es(values, alpha);
        CHECK(est.ivar.lo() == doctest::Approx(var).epsilon(1e-12));
        CHECK(est.ivar.hi() == doctest::Approx(var).epsilon(1e-12));
        CHECK(est.icvar.lo() == doctest::Approx(es).epsilon(1e-12));
        CHECK(est.icvar.hi() == doctest::Approx(es).epsilon(1e-12));
    }
}

TEST_CASE("positive homogeneity holds bitwise on lattice samples") {
    oracle::Rng rng(43);
    for (int rep = 0; rep < 200; ++rep) {
        const auto obs = oracle::lattice_sample(rng, 500);
        const double lam = oracle::pow2_lambda(rng);
        std::vector<Interval> scaled;
        for (const auto& v : obs) scaled.push_back(lam * v);
        const RiskEstimate base = icvar(EmpiricalIntervalSample(obs), 0.05);
        const RiskEstimate after = icvar(EmpiricalIntervalSample(scaled), 0.05);
        CHECK(after.icvar == lam * base.icvar);
        CHECK(after.ivar == lam * base.ivar);
    }
}

TEST_CASE("translation equivariance holds bitwise on lattice samples") {
    oracle::Rng rng(47);
    for (int rep = 0; rep < 200; ++rep) {
        const auto obs = oracle::lattice_sample(rng, 500);
        const double t = oracle::lattice_value(rng);
        std::vector<Interval> shifted;
        for (const auto& v : obs) shifted.push_back(v + Interval::point(t));
        const RiskEstimate base = icvar(EmpiricalIntervalSample(obs), 0.05);
        const RiskEstimate after = icvar(EmpiricalIntervalSample(shifted), 0.05);
        CHECK(after.icvar == base.icvar + Interval::point(-t));
        CHECK(after.ivar == base.ivar + Interval::point(-t));
    }
}

TEST_CASE("midpoint subadditivity across aligned samples") {
    oracle::Rng rng(53);
    for (int rep = 0; rep < 200; ++rep) {
        const std::size_t n = 500;
        std::vector<Interval> r1 = oracle::lattice_sample(rng, n);
        std::vector<Interval> r2 = oracle::lattice_sample(rng, n);
        std::vector<Interval> sum;
        for (std::size_t i = 0; i < n; ++i) sum.push_back(r1[i] + r2[i]);
        const double joint = icvar(EmpiricalIntervalSample(sum), 0.05).icvar.mean();
        const double split = icvar(EmpiricalIntervalSample(r1), 0.05).icvar.mean() +
                             icvar(EmpiricalIntervalSample(r2), 0.05).icvar.mean();
        CHECK(joint <= split + 1e-12);
    }
}

TEST_CASE("Jarque-Bera statistic from biased moments") {
    const JarqueBeraResult r = jarque_bera({-1.0, -1.0, 1.0, 1.0});
    CHECK(r.skewness == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(r.kurtosis == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(r.statistic == doctest::Approx(2.0 / 3.0).epsilon(1e-15));

    CHECK_THROWS_AS(jarque_bera({2.0, 2.0, 2.0, 2.0}), DegenerateSample);
    CHECK_THROWS_AS(jarque_bera({1.0, 2.0, 3.0}), std::invalid_argument);
}

TEST_CASE("Jarque-Bera separates normal from heavy-tailed data") {
    oracle::Rng rng(61);
    std::vector<double> normal, heavy;
    for (int i = 0; i < 10000; ++i) {
        normal.push_back(rng.normal());
        // Student-t(3) via normal / sqrt(chi2(3)/3)
        double chi = 0.0;
        for (int k = 0; k < 3; ++k) {
            const double z = rng.normal();
            chi += z * z;
        }
        heavy.push_back(rng.normal() / std::sqrt(chi / 3.0));
    }
    CHECK(jarque_bera(normal).statistic < 13.816);
    CHECK(jarque_bera(heavy).statistic > 100.0);
}
