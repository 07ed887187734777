#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_N).
//
// A CycloNum is a residue of Q[x] modulo the N-th cyclotomic polynomial,
// stored as deg(Phi_N) rational coefficients. The conductor N travels with
// every value; binary operations embed both operands into Q(zeta_lcm).

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace gradind {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p" or "p/q" (optional leading '-'). Decimal points are rejected.
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& r);

/// Coefficient i multiplies x^i.
using IntPoly = std::vector<Integer>;

/// Phi_n(x), obtained by dividing x^n - 1 by Phi_d for every proper divisor d.
/// The returned reference stays valid for the lifetime of the program.
const IntPoly& cyclotomic_poly(int n);

int euler_phi(int n);
long long lcm_conductor(long long a, long long b);

class CycloNum {
public:
    CycloNum();
    CycloNum(long long value);  // NOLINT(google-explicit-constructor)
    CycloNum(const Rational& value);  // NOLINT(google-explicit-constructor)

    /// Residue of sum_i coeffs[i] x^i modulo Phi_conductor. Any length is accepted.
    CycloNum(int conductor, std::vector<Rational> coeffs);

    /// zeta_n^k with zeta_n = x mod Phi_n; k may be negative.
    static CycloNum root_of_unity(int n, long long k);

    int conductor() const { return conductor_; }
    std::span<const Rational> coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    /// Throws std::domain_error when the value is irrational.
    Rational rational_value() const;

    /// Same value viewed in Q(zeta_target); target must be a multiple of conductor().
    CycloNum embed(int target) const;

    CycloNum inverse() const;

    CycloNum& operator+=(const CycloNum& rhs);
    CycloNum& operator-=(const CycloNum& rhs);
    CycloNum& operator*=(const CycloNum& rhs);
    CycloNum& operator/=(const CycloNum& rhs);

    friend CycloNum operator+(CycloNum lhs, const CycloNum& rhs) { return lhs += rhs; }
    friend CycloNum operator-(CycloNum lhs, const CycloNum& rhs) { return lhs -= rhs; }
    friend CycloNum operator*(CycloNum lhs, const CycloNum& rhs) { return lhs *= rhs; }
    friend CycloNum operator/(CycloNum lhs, const CycloNum& rhs) { return lhs /= rhs; }
    CycloNum operator-() const;

    friend bool operator==(const CycloNum& lhs, const CycloNum& rhs);

    /// Human-readable form such as "1/2 + 3*z12^2"; z<N> denotes zeta_N.
    std::string to_string() const;

private:
    int conductor_ = 1;
    std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const CycloNum& x);

enum class ArithOp { add, sub, mul, div };

/// Division by zero throws std::domain_error.
CycloNum field_arith(const CycloNum& x, const CycloNum& y, ArithOp op);

/// Square-and-multiply; negative exponents invert first. 0^0 = 1.
CycloNum power(const CycloNum& x, long long e);

/// Least d >= 1 with x^d = 1. Throws std::domain_error if x is not a root of unity.
int unity_order(const CycloNum& x);
bool is_primitive_root(const CycloNum& x, int n);

/// Parameter syntax used across the CLI: "0", "1", "-1", "p/q", or "zeta:n:k".
CycloNum parse_parameter(std::string_view text);

}  // namespace gradind
