#pragma once

// Z_n-graded probability spaces realized as q-commuting monomial algebras.
//
// Every model has a normal-ordered monomial basis, and the product of two
// basis monomials is q^e times a basis monomial. Supported models:
//
//   laurent      C[x, x^-1], gamma(x^a) = q^a x^a
//   rotation     u, v invertible, v u = q u v, basis u^a v^b, delta = a + b
//   clifford     e_1..e_m, e_i^n = 1, e_j e_i = q e_i e_j (i < j), delta = sum a_i
//   tensor       A (x)_q B with (a (x) b)(a' (x) b') = q^{delta(b) delta(a')} aa' (x) bb'
//
// In every model phi reads off the coefficient of the identity monomial.

#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "gradind/cumulants.hpp"
#include "gradind/cyclo.hpp"
#include "gradind/series.hpp"

namespace gradind {

/// Exponent vector; layout depends on the model (tensor: left then right).
using Monomial = std::vector<int>;

class AlgebraSpec {
public:
    enum class Kind { laurent, rotation, clifford, tensor };

    /// q must be a primitive n-th root of unity.
    static AlgebraSpec laurent(int n, const CycloNum& q);
    static AlgebraSpec rotation(int n, const CycloNum& q);
    static AlgebraSpec clifford(int m, int n, const CycloNum& q);
    /// Operands must share n and q.
    static AlgebraSpec tensor(const AlgebraSpec& left, const AlgebraSpec& right);

    Kind kind() const;
    int n() const;
    const CycloNum& q() const;
    /// Number of Clifford generators m.
    int generators() const;
    const AlgebraSpec& left() const;
    const AlgebraSpec& right() const;

    /// Length of a monomial exponent vector.
    int width() const;
    /// q^e for any integer e.
    const CycloNum& q_power(long long e) const;

    std::string describe() const;

    friend bool operator==(const AlgebraSpec& a, const AlgebraSpec& b);

private:
    struct Node;
    explicit AlgebraSpec(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

struct MonomialProduct {
    int phase = 0;  // the product is q^phase * monomial
    Monomial monomial;
};

void validate_monomial(const AlgebraSpec& spec, const Monomial& m);
Monomial identity_monomial(const AlgebraSpec& spec);
bool is_identity_monomial(const AlgebraSpec& spec, const Monomial& m);
MonomialProduct multiply_monomials(const AlgebraSpec& spec, const Monomial& a, const Monomial& b);
/// delta of a basis monomial, in [0, n).
int monomial_degree(const AlgebraSpec& spec, const Monomial& m);

class AlgebraElement {
public:
    explicit AlgebraElement(AlgebraSpec spec);

    static AlgebraElement scalar(const AlgebraSpec& spec, const CycloNum& c);
    static AlgebraElement basis(const AlgebraSpec& spec, Monomial m, const CycloNum& c = CycloNum(1));

    const AlgebraSpec& spec() const { return spec_; }
    const std::map<Monomial, CycloNum>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Monomial& m, const CycloNum& c);

    AlgebraElement& operator+=(const AlgebraElement& rhs);
    AlgebraElement& operator-=(const AlgebraElement& rhs);
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
    friend AlgebraElement operator*(const CycloNum& c, const AlgebraElement& a);

    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);

    std::string to_string() const;

private:
    AlgebraSpec spec_;
    std::map<Monomial, CycloNum> terms_;
};

AlgebraElement laurent_x(const AlgebraSpec& spec, int power = 1);
AlgebraElement rotation_u(const AlgebraSpec& spec, int power = 1);
AlgebraElement rotation_v(const AlgebraSpec& spec, int power = 1);
/// e_i^power, 1 <= i <= m.
AlgebraElement clifford_e(const AlgebraSpec& spec, int i, int power = 1);

AlgebraElement power(const AlgebraElement& x, int k);

CycloNum phi(const AlgebraElement& x);

/// gamma: each monomial scaled by q^delta.
AlgebraElement apply_grading(const AlgebraElement& x);
AlgebraElement grading_power(const AlgebraElement& x, int i);

/// E_r(x) = (1/n) sum_i q^{-ri} gamma^i(x), the projection onto the q^r eigenspace.
AlgebraElement homogeneous_projection(const AlgebraElement& x, int r);

struct Degree {
    enum class Kind { zero, homogeneous, inhomogeneous };
    Kind kind = Kind::zero;
    int residue = 0;  // meaningful only when homogeneous
};

Degree degree_of(const AlgebraElement& x);

/// Ad(u^-1 v) on the rotation model, Ad(x^-1 y) on laurent (x)_q laurent.
AlgebraElement inner_grading(const AlgebraElement& x);

/// a -> a (x) 1 and b -> 1 (x) b.
AlgebraElement inject_left(const AlgebraSpec& tensor_spec, const AlgebraElement& a);
AlgebraElement inject_right(const AlgebraSpec& tensor_spec, const AlgebraElement& b);

/// (phi(a), phi(a^2), ..., phi(a^K)).
MomentSequence moments_of(const AlgebraElement& a, int K);

struct IndependenceReport {
    bool independent = true;
    std::string counterexample;
};

/// Checks b a = q^{delta(a) delta(b)} a b and phi(ab) = phi(a) phi(b) for all
/// words of length <= depth in each generator list. Generators must be homogeneous.
IndependenceReport check_graded_independence(std::span<const AlgebraElement> a_gens,
                                             std::span<const AlgebraElement> b_gens, int depth = 4);

/// (a + b)^{n'} = a^{n'} + b^{n'} with n' = n / gcd(r, n) for a, b homogeneous of
/// degree r. Throws HypothesisError when a, b are not homogeneous of equal degree
/// or fail the independence check.
bool verify_power_rule(const AlgebraElement& a, const AlgebraElement& b);

struct LinearizationReport {
    bool additive = false;
    int degree = 0;
    FormalSeries r_a, r_b, r_sum;
};

/// Graded r-transforms of a, b and a + b through z^K and their additivity.
LinearizationReport verify_linearization(const AlgebraElement& a, const AlgebraElement& b, int K);

}  // namespace gradind
