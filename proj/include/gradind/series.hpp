#pragma once

// Truncated formal power series over Q(zeta_N) and the R-transforms built on
// the cumulant engine.

#include <span>
#include <string>
#include <vector>

#include "gradind/cumulants.hpp"
#include "gradind/cyclo.hpp"

namespace gradind {

inline constexpr int kDefaultTruncation = 12;

/// c_0 + c_1 z + ... + c_K z^K, arithmetic modulo z^{K+1}.
class FormalSeries {
public:
    /// The zero series at truncation K.
    explicit FormalSeries(int truncation = kDefaultTruncation);
    explicit FormalSeries(std::vector<CycloNum> coeffs);

    int truncation() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<CycloNum>& coeffs() const { return coeffs_; }
    /// Zero beyond the stored range.
    CycloNum coeff(int k) const;
    void set_coeff(int k, CycloNum value);

    /// The series z at truncation K.
    static FormalSeries identity(int K);

    FormalSeries truncated(int K) const;
    FormalSeries derivative() const;
    /// Antiderivative with zero constant term; keeps the truncation.
    FormalSeries integral() const;
    /// f(z^n) at truncation K; needs K < n * (truncation() + 1).
    FormalSeries substitute_power(int n, int K) const;

    FormalSeries& operator+=(const FormalSeries& rhs);
    FormalSeries& operator-=(const FormalSeries& rhs);
    friend FormalSeries operator+(FormalSeries a, const FormalSeries& b) { return a += b; }
    friend FormalSeries operator-(FormalSeries a, const FormalSeries& b) { return a -= b; }
    friend FormalSeries operator*(const FormalSeries& a, const FormalSeries& b);
    friend FormalSeries operator*(const CycloNum& s, const FormalSeries& a);

    friend bool operator==(const FormalSeries&, const FormalSeries&) = default;

    std::string to_string() const;

private:
    std::vector<CycloNum> coeffs_;
};

/// Multiplicative inverse; requires c_0 != 0.
FormalSeries reciprocal(const FormalSeries& f);

/// exp(f) via g' = f' g; requires c_0 = 0.
FormalSeries series_exp(const FormalSeries& f);

/// log(f) via g' = f' / f; requires c_0 = 1.
FormalSeries series_log(const FormalSeries& f);

/// f(g); requires g to have zero constant term.
FormalSeries compose(const FormalSeries& f, const FormalSeries& g);

/// g with f(g(z)) = z; requires c_0 = 0 and c_1 != 0.
FormalSeries comp_inverse(const FormalSeries& f);

/// sum_k mu_k z^k / k! for k <= K.
FormalSeries moment_egf(const MomentSequence& mu, int K);

/// sum_k alpha^1_k z^k / k! from the classical cumulants.
FormalSeries r1_transform(const MomentSequence& mu, int K);

/// log of the exponential moment generating function; agrees with r1_transform.
FormalSeries r1_via_log(const MomentSequence& mu, int K);

/// sum_k alpha^0_k z^k from the free cumulants.
FormalSeries r0_transform(const MomentSequence& mu, int K);

/// Checks G(K(z)) = z through z^K where G(w) = sum_k mu_k w^{k+1} is the
/// Cauchy transform in w = 1/zeta and K(z) = (1 + R0(z)) / z. The pole is
/// cleared by substituting w = 1/K(z) = z / (1 + R0(z)).
bool r0_functional_relation_holds(const MomentSequence& mu, int K);

/// sum_{k >= 1} alpha^q_{nk} z^{nk} / k!. q must be a proper n-th root of unity
/// and mu_k must vanish unless n divides k.
FormalSeries rnq_transform(const MomentSequence& mu, int n, const CycloNum& q, int K);

/// R1 when delta = 0 mod n, otherwise r_{n', q^delta} with n' = n / gcd(delta, n).
/// q must be a primitive n-th root of unity.
FormalSeries graded_r_transform(const MomentSequence& mu, int delta, int n, const CycloNum& q, int K);

/// log sum_k mu_{k n'} z^{k n'} / k! with n' = 1 for delta = 0 mod n.
FormalSeries graded_r_log_formula(const MomentSequence& mu, int delta, int n, int K);

/// n / gcd(delta, n), or 1 when delta = 0 mod n.
int graded_period(int delta, int n);

}  // namespace gradind
