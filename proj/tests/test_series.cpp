#include <doctest.h>

#include <random>

#include "gradind/series.hpp"
#include "gradind/verify.hpp"

using namespace gradind;

namespace {

FormalSeries series(std::initializer_list<Rational> cs)
{
    std::vector<CycloNum> v;
    for (const auto& c : cs) {
        v.emplace_back(c);
    }
    return FormalSeries(v);
}

MomentSequence gaussian(int K)
{
    std::vector<CycloNum> v;
    Integer dfact = 1;
    for (int k = 1; k <= K; ++k) {
        if (k % 2 == 0) {
            v.emplace_back(Rational(dfact));
            dfact *= k + 1;
        } else {
            v.emplace_back(0);
        }
    }
    return MomentSequence(v);
}

FormalSeries random_series(std::mt19937_64& rng, int K, long long c0)
{
    FormalSeries f(K);
    f.set_coeff(0, c0);
    for (int k = 1; k <= K; ++k) {
        f.set_coeff(k, random_rational(rng, 100));
    }
    return f;
}

}  // namespace

TEST_CASE("log and exp")
{
    const auto log1pz = series_log(series({1, 1, 0, 0, 0, 0}));
    CHECK(log1pz == series({0, 1, Rational(-1, 2), Rational(1, 3), Rational(-1, 4), Rational(1, 5)}));
    std::mt19937_64 rng(1);
    for (int K = 1; K <= 12; ++K) {
        const auto f = random_series(rng, K, 1);
        CHECK(series_exp(series_log(f)) == f);
        const auto g = random_series(rng, K, 0);
        CHECK(series_log(series_exp(g)) == g);
    }
    CHECK_THROWS(series_log(series({2, 1})));
    CHECK_THROWS(series_exp(series({1, 1})));
}

TEST_CASE("compositional inverse")
{
    CHECK(comp_inverse(FormalSeries::identity(6)) == FormalSeries::identity(6));
    // z / (1 - z) inverts to z / (1 + z).
    const auto f = series({0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1});
    CHECK(comp_inverse(f) == series({0, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1}));
    std::mt19937_64 rng(2);
    for (int t = 0; t < 10; ++t) {
        auto h = random_series(rng, 8, 0);
        h.set_coeff(1, Rational(t + 1, 3));
        const auto g = comp_inverse(h);
        CHECK(compose(h, g) == FormalSeries::identity(8));
        CHECK(compose(g, h) == FormalSeries::identity(8));
    }
    CHECK_THROWS(comp_inverse(series({0, 0, 1})));
}

TEST_CASE("classical R-transform")
{
    CHECK(r1_transform(MomentSequence(std::vector<CycloNum>(6, CycloNum(1))), 6) == FormalSeries::identity(6));
    FormalSeries half_z2(12);
    half_z2.set_coeff(2, Rational(1, 2));
    CHECK(r1_transform(gaussian(12), 12) == half_z2);
    CHECK(r1_via_log(gaussian(12), 12) == half_z2);
    std::mt19937_64 rng(4);
    for (int t = 0; t < 5; ++t) {
        const auto mu = random_moments(rng, 10);
        CHECK(r1_transform(mu, 10) == r1_via_log(mu, 10));
    }
}

TEST_CASE("free R-transform")
{
    // Semicircle moments are Catalan numbers on even indices.
    const MomentSequence semicircle({0, 1, 0, 2, 0, 5, 0, 14, 0, 42});
    FormalSeries z2(10);
    z2.set_coeff(2, 1);
    CHECK(r0_transform(semicircle, 10) == z2);
    CHECK(r0_functional_relation_holds(semicircle, 10));
    std::mt19937_64 rng(6);
    for (int t = 0; t < 5; ++t) {
        const auto mu = random_moments(rng, 8);
        CHECK(r0_functional_relation_holds(mu, 8));
        const auto alpha = cumulants_from_moments(mu, 0, 8);
        CHECK(r0_transform(mu, 8).coeff(5) == alpha.at(5));
    }
}

TEST_CASE("r_{n,q} transform")
{
    const auto g = rnq_transform(gaussian(12), 2, -1, 12);
    for (int k = 1; k <= 12; k += 2) {
        CHECK(g.coeff(k).is_zero());
    }
    CHECK(rnq_transform(MomentSequence(std::vector<CycloNum>(12)), 3, CycloNum::root_of_unity(3, 1), 12) ==
          FormalSeries(12));
    std::mt19937_64 rng(8);
    for (int n : {2, 3, 4}) {
        const auto q = CycloNum::root_of_unity(n, 1);
        const auto mu = random_moments(rng, 12, n);
        CHECK(rnq_transform(mu, n, q, 12) == r1_transform(power_moments(mu, n, 12 / n), 12 / n).substitute_power(n, 12));
    }
    CHECK_THROWS_AS(rnq_transform(random_moments(rng, 6, 1), 2, -1, 6), HypothesisError);
    CHECK_THROWS_AS(rnq_transform(random_moments(rng, 6, 2), 2, 1, 6), HypothesisError);
}

TEST_CASE("graded r-transform")
{
    std::mt19937_64 rng(10);
    const auto mu = random_moments(rng, 12);
    const auto z6 = CycloNum::root_of_unity(6, 1);
    CHECK(graded_r_transform(mu, 0, 6, z6, 12) == r1_transform(mu, 12));
    CHECK(graded_period(4, 6) == 3);
    CHECK(graded_period(0, 6) == 1);
    CHECK(graded_period(5, 6) == 6);
    const auto mu3 = random_moments(rng, 12, 3);
    CHECK(graded_r_transform(mu3, 4, 6, z6, 12) == rnq_transform(mu3, 3, power(z6, 4), 12));
    CHECK(graded_r_transform(mu3, 4, 6, z6, 12) == graded_r_log_formula(mu3, 4, 6, 12));
    CHECK_THROWS_AS(graded_r_transform(mu3, 2, 6, power(z6, 2), 12), HypothesisError);
}

TEST_CASE("truncation bookkeeping")
{
    const auto a = series({1, 2, 3, 4}), b = series({1, 1});
    CHECK((a * b).truncation() == 1);
    CHECK((a + b) == series({2, 3}));
    CHECK(series({0, 1, 2}).substitute_power(3, 7) == series({0, 0, 0, 1, 0, 0, 2, 0}));
    CHECK_THROWS(series({0, 1}).substitute_power(2, 4));
}
