#include <doctest.h>

#include <random>

#include "gradind/algebra.hpp"
#include "gradind/json_io.hpp"
#include "gradind/verify.hpp"

using namespace gradind;

namespace {

const CycloNum z3 = CycloNum::root_of_unity(3, 1);

AlgebraElement random_rotation_element(const AlgebraSpec& spec, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> e(-3, 3);
    AlgebraElement x(spec);
    for (int i = 0; i < 4; ++i) {
        x += AlgebraElement::basis(spec, {e(rng), e(rng)}, random_rational(rng, 9));
    }
    return x + AlgebraElement::scalar(spec, 2);
}

}  // namespace

TEST_CASE("normal ordering")
{
    const auto rot = AlgebraSpec::rotation(3, z3);
    const auto u = rotation_u(rot), v = rotation_v(rot);
    CHECK(v * u == z3 * (u * v));
    CHECK(power(u + v, 3) == power(u, 3) + power(v, 3));
    CHECK_FALSE(power(u + v, 2) == power(u, 2) + power(v, 2));

    const auto cl = AlgebraSpec::clifford(2, 3, z3);
    const auto e1 = clifford_e(cl, 1), e2 = clifford_e(cl, 2);
    CHECK(e2 * e1 == z3 * (e1 * e2));
    CHECK(power(e1, 3) == AlgebraElement::scalar(cl, 1));
    CHECK(clifford_e(cl, 2, 4) == e2);
    CHECK_THROWS(AlgebraElement::basis(cl, {1, 3}));
    CHECK_THROWS(AlgebraSpec::rotation(4, -1));
}

TEST_CASE("graded tensor product rule")
{
    const auto L = AlgebraSpec::laurent(4, CycloNum::root_of_unity(4, 1));
    const auto T = AlgebraSpec::tensor(L, L);
    const auto x = inject_left(T, laurent_x(L)), y = inject_right(T, laurent_x(L));
    CHECK(x * y == AlgebraElement::basis(T, {1, 1}));
    CHECK(y * x == T.q() * AlgebraElement::basis(T, {1, 1}));
    const auto rot = AlgebraSpec::rotation(4, CycloNum::root_of_unity(4, 1));
    for (int a = -3; a <= 3; ++a) {
        for (int b = -3; b <= 3; ++b) {
            for (int c = -3; c <= 3; ++c) {
                for (int d = -3; d <= 3; ++d) {
                    const auto p = multiply_monomials(T, {a, b}, {c, d});
                    const auto q = multiply_monomials(rot, {a, b}, {c, d});
                    REQUIRE(p.monomial == q.monomial);
                    REQUIRE((p.phase - q.phase) % 4 == 0);
                }
            }
        }
    }
}

TEST_CASE("expectation")
{
    const auto rot = AlgebraSpec::rotation(3, z3);
    const auto u = rotation_u(rot), v = rotation_v(rot);
    CHECK(phi(AlgebraElement::scalar(rot, 1)).is_one());
    CHECK(phi(rotation_u(rot, 2) * rotation_v(rot, -1)).is_zero());
    CHECK(phi(u * v * rotation_u(rot, -1) * rotation_v(rot, -1)) == power(z3, -1));
    const auto T = AlgebraSpec::tensor(AlgebraSpec::clifford(1, 3, z3), rot);
    const auto a = inject_left(T, AlgebraElement::scalar(T.left(), 5) + clifford_e(T.left(), 1));
    CHECK(phi(a) == CycloNum(5));
}

TEST_CASE("grading and projections")
{
    const auto rot = AlgebraSpec::rotation(5, CycloNum::root_of_unity(5, 2));
    const auto u = rotation_u(rot);
    CHECK(apply_grading(u) == rot.q() * u);
    std::mt19937_64 rng(12);
    for (int t = 0; t < 50; ++t) {
        const auto x = random_rotation_element(rot, rng);
        REQUIRE(grading_power(x, 5) == x);
        REQUIRE(phi(apply_grading(x)) == phi(x));
        AlgebraElement total(rot);
        for (int r = 0; r < 5; ++r) {
            total += homogeneous_projection(x, r);
            if (r != 0) {
                REQUIRE(phi(homogeneous_projection(x, r)).is_zero());
            }
        }
        REQUIRE(total == x);
    }
    const auto fixed = AlgebraElement::scalar(rot, 3) + rotation_u(rot, 5) + rotation_u(rot, 2) * rotation_v(rot, 3);
    CHECK(homogeneous_projection(fixed, 0) == fixed);
    const auto uv = degree_of(u * rotation_v(rot));
    CHECK(uv.kind == Degree::Kind::homogeneous);
    CHECK(uv.residue == 2);
    CHECK(degree_of(AlgebraElement(rot)).kind == Degree::Kind::zero);
    CHECK(degree_of(u + rotation_v(rot, 2)).kind == Degree::Kind::inhomogeneous);
}

TEST_CASE("inner grading matches the spectral grading")
{
    for (int n : {2, 3, 4, 6}) {
        const auto q = CycloNum::root_of_unity(n, 1);
        const auto rot = AlgebraSpec::rotation(n, q);
        for (int a = -4; a <= 4; ++a) {
            for (int b = -4; b <= 4; ++b) {
                const auto x = AlgebraElement::basis(rot, {a, b});
                REQUIRE(inner_grading(x) == apply_grading(x));
            }
        }
    }
    CHECK_THROWS(inner_grading(clifford_e(AlgebraSpec::clifford(2, 3, z3), 1)));
}

TEST_CASE("moments")
{
    const auto rot = AlgebraSpec::rotation(3, z3);
    CHECK(moments_of(rotation_u(rot), 6).values() == std::vector<CycloNum>(6, CycloNum(0)));
    const auto cl = AlgebraSpec::clifford(2, 4, CycloNum::root_of_unity(4, 1));
    CHECK(moments_of(clifford_e(cl, 1), 8).values() == std::vector<CycloNum>{0, 0, 0, 1, 0, 0, 0, 1});
    CHECK(moments_of(AlgebraElement::scalar(rot, 1), 4).values() == std::vector<CycloNum>(4, CycloNum(1)));
}

TEST_CASE("graded independence checks")
{
    const auto rot = AlgebraSpec::rotation(3, z3);
    const std::vector<AlgebraElement> us{rotation_u(rot)}, vs{rotation_v(rot)};
    CHECK(check_graded_independence(us, vs).independent);
    const auto cl = AlgebraSpec::clifford(4, 3, z3);
    const std::vector<AlgebraElement> a{clifford_e(cl, 1), clifford_e(cl, 2)}, b{clifford_e(cl, 3), clifford_e(cl, 4)};
    CHECK(check_graded_independence(a, b, 3).independent);
    const auto same = check_graded_independence(us, us, 2);
    CHECK_FALSE(same.independent);
    CHECK_FALSE(same.counterexample.empty());
    const std::vector<AlgebraElement> inhom{rotation_u(rot) + rotation_v(rot, 2)};
    CHECK_THROWS(check_graded_independence(inhom, vs));
}

TEST_CASE("power rule")
{
    for (int n = 2; n <= 5; ++n) {
        const auto rot = AlgebraSpec::rotation(n, CycloNum::root_of_unity(n, 1));
        CHECK(verify_power_rule(rotation_u(rot), rotation_v(rot)));
        CHECK(verify_power_rule(rotation_u(rot), AlgebraElement(rot)));
    }
    // q^{r^2} = q^4 = 1 here, so u^2 and v^2 commute and the cross term 2 u^2 v^2 survives.
    const auto rot4 = AlgebraSpec::rotation(4, CycloNum::root_of_unity(4, 1));
    CHECK_FALSE(verify_power_rule(rotation_u(rot4, 2), rotation_v(rot4, 2)));
    const auto sq = power(rotation_u(rot4, 2) + rotation_v(rot4, 2), 2);
    CHECK(sq == rotation_u(rot4, 4) + rotation_v(rot4, 4) + CycloNum(2) * rotation_u(rot4, 2) * rotation_v(rot4, 2));
    CHECK_THROWS_AS(verify_power_rule(rotation_u(rot4), rotation_v(rot4, 2)), HypothesisError);
}

TEST_CASE("linearization")
{
    const auto rot = AlgebraSpec::rotation(3, z3);
    CHECK(verify_linearization(rotation_u(rot), rotation_v(rot), 12).additive);
    const auto cl = AlgebraSpec::clifford(2, 4, CycloNum::root_of_unity(4, 1));
    CHECK(verify_linearization(clifford_e(cl, 1), clifford_e(cl, 2), 12).additive);
    const auto zero_degree = verify_linearization(rotation_u(rot, 3), rotation_v(rot, 3), 12);
    CHECK(zero_degree.additive);
    CHECK(zero_degree.degree == 0);
    const auto rich = verify_linearization(rotation_u(rot) + rotation_u(rot, -2),
                                           rotation_v(rot) + CycloNum(2) * rotation_v(rot, -2), 12);
    CHECK(rich.additive);
    CHECK_FALSE(rich.r_a.coeff(3).is_zero());

    // Degree 2 at n = 4: additivity fails at z^4.
    const auto rot4 = AlgebraSpec::rotation(4, CycloNum::root_of_unity(4, 1));
    const auto bad = verify_linearization(rotation_u(rot4, 2) + rotation_u(rot4, -2),
                                          rotation_v(rot4, 2) + rotation_v(rot4, -2), 8);
    CHECK_FALSE(bad.additive);
    CHECK(bad.r_sum.coeff(4) == CycloNum(10));
    CHECK((bad.r_a + bad.r_b).coeff(4) == CycloNum(2));
}

TEST_CASE("model and element JSON round trip")
{
    const auto rot = AlgebraSpec::rotation(4, CycloNum::root_of_unity(4, 3));
    const auto cl = AlgebraSpec::clifford(2, 4, CycloNum::root_of_unity(4, 3));
    const auto T = AlgebraSpec::tensor(rot, cl);
    for (const auto& spec : {rot, cl, T}) {
        REQUIRE(model_from_json(model_to_json(spec)) == spec);
    }
    const auto x = inject_left(T, rotation_u(rot) + CycloNum(Rational(3, 2)) * rotation_v(rot, -2)) +
                   inject_right(T, CycloNum::root_of_unity(4, 1) * clifford_e(cl, 2, 3));
    CHECK(element_from_json(T, element_to_json(x)) == x);
    CHECK(element_from_json(T, Json::parse(element_to_json(x).dump())) == x);
}
