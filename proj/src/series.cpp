#include "gradind/series.hpp"

#include <numeric>
#include <sstream>

namespace gradind {

namespace {

Rational factorial(int k)
{
    Integer f = 1;
    for (int i = 2; i <= k; ++i) {
        f *= i;
    }
    return Rational(f);
}

void check_moments(const MomentSequence& mu, int K, const char* what)
{
    if (K < 1) {
        throw std::invalid_argument(std::string(what) + ": truncation must be at least 1");
    }
    if (K > mu.truncation()) {
        throw std::invalid_argument(std::string(what) + ": K = " + std::to_string(K) +
                                    " exceeds moment truncation " + std::to_string(mu.truncation()));
    }
}

void check_support(const MomentSequence& mu, int n, int K, const char* what)
{
    for (int k = 1; k <= K; ++k) {
        if (k % n != 0 && !mu.at(k).is_zero()) {
            throw HypothesisError(std::string(what) + ": mu_" + std::to_string(k) +
                                  " is nonzero but " + std::to_string(n) + " does not divide " +
                                  std::to_string(k));
        }
    }
}

}  // namespace

FormalSeries::FormalSeries(int truncation)
{
    if (truncation < 0) {
        throw std::invalid_argument("FormalSeries: negative truncation");
    }
    coeffs_.resize(static_cast<std::size_t>(truncation) + 1);
}

FormalSeries::FormalSeries(std::vector<CycloNum> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty()) {
        throw std::invalid_argument("FormalSeries: need at least the constant coefficient");
    }
}

CycloNum FormalSeries::coeff(int k) const
{
    if (k < 0 || k > truncation()) {
        return CycloNum(0);
    }
    return coeffs_[static_cast<std::size_t>(k)];
}

void FormalSeries::set_coeff(int k, CycloNum value)
{
    if (k < 0 || k > truncation()) {
        throw std::out_of_range("set_coeff: index beyond truncation");
    }
    coeffs_[static_cast<std::size_t>(k)] = std::move(value);
}

FormalSeries FormalSeries::identity(int K)
{
    FormalSeries z(K);
    if (K >= 1) {
        z.set_coeff(1, CycloNum(1));
    }
    return z;
}

FormalSeries FormalSeries::truncated(int K) const
{
    if (K > truncation()) {
        throw std::invalid_argument("truncated: cannot raise truncation");
    }
    return FormalSeries(std::vector<CycloNum>(coeffs_.begin(), coeffs_.begin() + K + 1));
}

FormalSeries FormalSeries::derivative() const
{
    FormalSeries out(truncation());
    for (int k = 1; k <= truncation(); ++k) {
        out.coeffs_[k - 1] = CycloNum(static_cast<long long>(k)) * coeffs_[k];
    }
    return out;
}

FormalSeries FormalSeries::integral() const
{
    FormalSeries out(truncation());
    for (int k = 1; k <= truncation(); ++k) {
        out.coeffs_[k] = coeffs_[k - 1] * CycloNum(Rational(1, k));
    }
    return out;
}

FormalSeries FormalSeries::substitute_power(int n, int K) const
{
    if (n < 1 || K < 0) {
        throw std::invalid_argument("substitute_power: exponent must be positive");
    }
    if (K >= n * (truncation() + 1)) {
        throw std::invalid_argument("substitute_power: target truncation needs unknown coefficients");
    }
    FormalSeries out(K);
    for (int k = 0; k * n <= K; ++k) {
        out.coeffs_[k * n] = coeffs_[k];
    }
    return out;
}

FormalSeries& FormalSeries::operator+=(const FormalSeries& rhs)
{
    coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] += rhs.coeffs_[i];
    }
    return *this;
}

FormalSeries& FormalSeries::operator-=(const FormalSeries& rhs)
{
    coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] -= rhs.coeffs_[i];
    }
    return *this;
}

FormalSeries operator*(const FormalSeries& a, const FormalSeries& b)
{
    const int K = std::min(a.truncation(), b.truncation());
    FormalSeries out(K);
    for (int i = 0; i <= K; ++i) {
        if (a.coeffs_[i].is_zero()) {
            continue;
        }
        for (int j = 0; i + j <= K; ++j) {
            if (!b.coeffs_[j].is_zero()) {
                out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
    }
    return out;
}

FormalSeries operator*(const CycloNum& s, const FormalSeries& a)
{
    FormalSeries out = a;
    for (auto& c : out.coeffs_) {
        c *= s;
    }
    return out;
}

std::string FormalSeries::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= truncation(); ++k) {
        if (coeffs_[k].is_zero()) {
            continue;
        }
        os << (first ? "" : " + ") << '(' << coeffs_[k] << ')';
        if (k > 0) {
            os << "*z^" << k;
        }
        first = false;
    }
    if (first) {
        os << '0';
    }
    os << " + O(z^" << truncation() + 1 << ')';
    return os.str();
}

FormalSeries reciprocal(const FormalSeries& f)
{
    if (f.coeff(0).is_zero()) {
        throw std::domain_error("reciprocal: constant term is zero");
    }
    const int K = f.truncation();
    const CycloNum inv0 = f.coeff(0).inverse();
    FormalSeries h(K);
    h.set_coeff(0, inv0);
    for (int k = 1; k <= K; ++k) {
        CycloNum acc;
        for (int j = 1; j <= k; ++j) {
            acc += f.coeff(j) * h.coeff(k - j);
        }
        h.set_coeff(k, -(acc * inv0));
    }
    return h;
}

FormalSeries series_exp(const FormalSeries& f)
{
    if (!f.coeff(0).is_zero()) {
        throw std::domain_error("series_exp: constant term must be 0");
    }
    const int K = f.truncation();
    FormalSeries g(K);
    g.set_coeff(0, CycloNum(1));
    for (int k = 1; k <= K; ++k) {
        CycloNum acc;
        for (int j = 1; j <= k; ++j) {
            acc += CycloNum(static_cast<long long>(j)) * f.coeff(j) * g.coeff(k - j);
        }
        g.set_coeff(k, acc * CycloNum(Rational(1, k)));
    }
    return g;
}

FormalSeries series_log(const FormalSeries& f)
{
    if (!f.coeff(0).is_one()) {
        throw std::domain_error("series_log: constant term must be 1");
    }
    const int K = f.truncation();
    FormalSeries g(K);
    for (int k = 1; k <= K; ++k) {
        CycloNum acc = CycloNum(static_cast<long long>(k)) * f.coeff(k);
        for (int j = 1; j < k; ++j) {
            acc -= CycloNum(static_cast<long long>(j)) * g.coeff(j) * f.coeff(k - j);
        }
        g.set_coeff(k, acc * CycloNum(Rational(1, k)));
    }
    return g;
}

FormalSeries compose(const FormalSeries& f, const FormalSeries& g)
{
    if (!g.coeff(0).is_zero()) {
        throw std::domain_error("compose: inner series must have zero constant term");
    }
    const int K = std::min(f.truncation(), g.truncation());
    const FormalSeries inner = g.truncated(K);
    FormalSeries acc(K);
    for (int i = K; i >= 0; --i) {
        acc = acc * inner;
        acc.set_coeff(0, acc.coeff(0) + f.coeff(i));
    }
    return acc;
}

FormalSeries comp_inverse(const FormalSeries& f)
{
    const int K = f.truncation();
    if (!f.coeff(0).is_zero() || K < 1 || f.coeff(1).is_zero()) {
        throw std::domain_error("comp_inverse: need c_0 = 0 and c_1 != 0");
    }
    const CycloNum inv1 = f.coeff(1).inverse();
    FormalSeries g(K);
    g.set_coeff(1, inv1);
    // [z^k] f(g) is f_1 g_k plus terms in g_1..g_{k-1}.
    for (int k = 2; k <= K; ++k) {
        const CycloNum residual = compose(f, g).coeff(k);
        g.set_coeff(k, -(residual * inv1));
    }
    return g;
}

FormalSeries moment_egf(const MomentSequence& mu, int K)
{
    check_moments(mu, K, "moment_egf");
    FormalSeries e(K);
    for (int k = 0; k <= K; ++k) {
        e.set_coeff(k, mu.at(k) * CycloNum(1 / factorial(k)));
    }
    return e;
}

FormalSeries r1_transform(const MomentSequence& mu, int K)
{
    check_moments(mu, K, "r1_transform");
    const auto alpha = cumulants_from_moments(mu, CycloNum(1), K);
    FormalSeries r(K);
    for (int k = 1; k <= K; ++k) {
        r.set_coeff(k, alpha.at(k) * CycloNum(1 / factorial(k)));
    }
    return r;
}

FormalSeries r1_via_log(const MomentSequence& mu, int K)
{
    return series_log(moment_egf(mu, K));
}

FormalSeries r0_transform(const MomentSequence& mu, int K)
{
    check_moments(mu, K, "r0_transform");
    const auto alpha = cumulants_from_moments(mu, CycloNum(0), K);
    FormalSeries r(K);
    for (int k = 1; k <= K; ++k) {
        r.set_coeff(k, alpha.at(k));
    }
    return r;
}

bool r0_functional_relation_holds(const MomentSequence& mu, int K)
{
    FormalSeries one_plus_r = r0_transform(mu, K);
    one_plus_r.set_coeff(0, CycloNum(1));
    const FormalSeries w = FormalSeries::identity(K) * reciprocal(one_plus_r);
    // G evaluated at w: sum_k mu_k w^{k+1}.
    FormalSeries power = w;
    FormalSeries total(K);
    for (int k = 0; k < K; ++k) {
        total += mu.at(k) * power;
        power = power * w;
    }
    return total == FormalSeries::identity(K);
}

FormalSeries rnq_transform(const MomentSequence& mu, int n, const CycloNum& q, int K)
{
    check_moments(mu, K, "rnq_transform");
    if (n < 1) {
        throw HypothesisError("rnq_transform: n must be positive");
    }
    if (q.is_one() || !power(q, n).is_one()) {
        throw HypothesisError("rnq_transform: q = " + q.to_string() + " is not a proper " +
                              std::to_string(n) + "-th root of unity");
    }
    check_support(mu, n, K, "rnq_transform");
    const auto alpha = cumulants_from_moments(mu, q, K);
    FormalSeries r(K);
    for (int k = 1; n * k <= K; ++k) {
        r.set_coeff(n * k, alpha.at(n * k) * CycloNum(1 / factorial(k)));
    }
    return r;
}

int graded_period(int delta, int n)
{
    if (n < 1) {
        throw std::invalid_argument("graded_period: n must be positive");
    }
    const int d = ((delta % n) + n) % n;
    return d == 0 ? 1 : n / std::gcd(d, n);
}

FormalSeries graded_r_transform(const MomentSequence& mu, int delta, int n, const CycloNum& q, int K)
{
    if (!is_primitive_root(q, n)) {
        throw HypothesisError("graded_r_transform: q = " + q.to_string() + " is not a primitive " +
                              std::to_string(n) + "-th root of unity");
    }
    const int d = ((delta % n) + n) % n;
    if (d == 0) {
        return r1_transform(mu, K);
    }
    return rnq_transform(mu, graded_period(d, n), power(q, d), K);
}

FormalSeries graded_r_log_formula(const MomentSequence& mu, int delta, int n, int K)
{
    check_moments(mu, K, "graded_r_log_formula");
    const int period = graded_period(delta, n);
    FormalSeries e(K);
    for (int k = 0; k * period <= K; ++k) {
        e.set_coeff(k * period, mu.at(k * period) * CycloNum(1 / factorial(k)));
    }
    return series_log(e);
}

}  // namespace gradind
