#include <doctest.h>

#include <random>

#include "gradind/cyclo.hpp"

using namespace gradind;

namespace {

CycloNum zeta(int n, long long k = 1) { return CycloNum::root_of_unity(n, k); }

CycloNum random_cyclo(std::mt19937_64& rng, int N)
{
    std::uniform_int_distribution<long> d(-30, 30), den(1, 9);
    std::vector<Rational> c(static_cast<std::size_t>(euler_phi(N)));
    for (auto& x : c) {
        x = Rational(d(rng), den(rng));
        x.canonicalize();
    }
    return CycloNum(N, c);
}

}  // namespace

TEST_CASE("cyclotomic polynomials")
{
    CHECK(cyclotomic_poly(1) == IntPoly{-1, 1});
    CHECK(cyclotomic_poly(4) == IntPoly{1, 0, 1});
    CHECK(cyclotomic_poly(6) == IntPoly{1, -1, 1});
    CHECK(cyclotomic_poly(12) == IntPoly{1, 0, -1, 0, 1});
    // Phi_105 is the first with a coefficient of absolute value 2.
    const auto& p = cyclotomic_poly(105);
    CHECK(p.size() == 49);
    CHECK(std::count(p.begin(), p.end(), Integer(-2)) == 2);
}

TEST_CASE("roots of unity")
{
    CHECK(zeta(4, 2) == CycloNum(-1));
    CHECK(zeta(7, 0).is_one());
    CHECK(zeta(3, 1) + zeta(3, 2) == CycloNum(-1));
    CHECK(zeta(4) * zeta(4) == CycloNum(-1));
    CHECK(CycloNum(1) / zeta(9) == zeta(9, 8));
    CHECK((zeta(3) + zeta(3, 2)) + CycloNum(1) == CycloNum(0));
    CHECK(zeta(6, 2) == zeta(3, 1));
    CHECK(zeta(12, -3) == zeta(4, 3));
}

TEST_CASE("powers")
{
    CHECK(power(zeta(5), 5).is_one());
    CHECK(power(zeta(5), -1) == zeta(5, 4));
    CHECK(power(CycloNum(2), 3) == CycloNum(8));
    CHECK(power(CycloNum(0), 0).is_one());
    CHECK_THROWS_AS(power(CycloNum(0), -1), std::domain_error);
    CHECK_THROWS_AS(CycloNum(1) / CycloNum(0), std::domain_error);
}

TEST_CASE("unity order")
{
    CHECK(unity_order(zeta(6, 2)) == 3);
    CHECK(unity_order(CycloNum(-1).embed(4)) == 2);
    CHECK(unity_order(CycloNum(1)) == 1);
    CHECK(unity_order(zeta(12, 5)) == 12);
    CHECK(unity_order(-zeta(3)) == 6);
    CHECK_THROWS_AS(unity_order(CycloNum(2)), std::domain_error);
    CHECK_THROWS_AS(unity_order(CycloNum(1) + zeta(5)), std::domain_error);
    CHECK(is_primitive_root(zeta(8, 3), 8));
    CHECK_FALSE(is_primitive_root(zeta(8, 2), 8));
}

TEST_CASE("geometric sums vanish exactly when q^r != 1")
{
    for (int n = 1; n <= 12; ++n) {
        for (int d = 1; d <= n; ++d) {
            if (n % d != 0) {
                continue;
            }
            for (int j = 0; j < d; ++j) {
                const CycloNum q = zeta(d, j);
                for (int r = 0; r < n; ++r) {
                    CycloNum sum;
                    for (int k = 0; k < n; ++k) {
                        sum += power(q, static_cast<long long>(k) * r);
                    }
                    const bool trivial = power(q, r).is_one();
                    CHECK(sum == (trivial ? CycloNum(n) : CycloNum(0)));
                }
            }
        }
    }
}

TEST_CASE("random inverses round trip")
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> cond(1, 12);
    for (int t = 0; t < 200; ++t) {
        const CycloNum x = random_cyclo(rng, cond(rng));
        if (x.is_zero()) {
            continue;
        }
        CHECK(field_arith(x, field_arith(CycloNum(1), x, ArithOp::div), ArithOp::mul).is_one());
    }
}

TEST_CASE("embedding is a field homomorphism")
{
    std::mt19937_64 rng(11);
    for (int n = 1; n <= 12; ++n) {
        const CycloNum x = random_cyclo(rng, n), y = random_cyclo(rng, n);
        CHECK((x * y).embed(2 * n) == x.embed(2 * n) * y.embed(2 * n));
        CHECK((x + y).embed(2 * n) == x.embed(2 * n) + y.embed(2 * n));
        if (!y.is_zero()) {
            CHECK((x / y).embed(2 * n) == x.embed(2 * n) / y.embed(2 * n));
        }
        CHECK(x == x.embed(3 * n));
    }
}

TEST_CASE("parsing")
{
    CHECK(parse_rational("-6/4") == Rational(-3, 2));
    CHECK(format_rational(Rational(10, 4)) == "5/2");
    CHECK_THROWS(parse_rational("0.5"));
    CHECK_THROWS(parse_rational("1/0"));
    CHECK(parse_parameter("zeta:6:2") == zeta(3));
    CHECK(parse_parameter("-1") == CycloNum(-1));
    CHECK_THROWS(parse_parameter("zeta:0:1"));
    CHECK(zeta(12, 1).to_string().find("z12") != std::string::npos);
}
