#include "gradind/cumulants.hpp"

#include <array>
#include <mutex>

namespace gradind {

namespace {

void check_order(int K)
{
    if (K < 0 || K > kMaxCumulantOrder) {
        throw std::invalid_argument("truncation must lie in [0, " + std::to_string(kMaxCumulantOrder) + "]");
    }
}

CycloNum product_over_parts(const IntPartition& lambda, const std::vector<CycloNum>& alpha)
{
    CycloNum prod(1);
    for (int part : lambda.parts) {
        prod *= alpha[static_cast<std::size_t>(part) - 1];
    }
    return prod;
}

}  // namespace

CycloNum MomentSequence::at(int k) const
{
    if (k == 0) {
        return CycloNum(1);
    }
    if (k < 0 || k > truncation()) {
        throw std::out_of_range("moment index " + std::to_string(k) + " outside truncation " +
                                std::to_string(truncation()));
    }
    return values_[static_cast<std::size_t>(k) - 1];
}

const CycloNum& CumulantSequence::at(int k) const
{
    if (k < 1 || k > truncation()) {
        throw std::out_of_range("cumulant index " + std::to_string(k) + " outside truncation " +
                                std::to_string(truncation()));
    }
    return values_[static_cast<std::size_t>(k) - 1];
}

const PartitionStatistics& cached_partition_statistics(int k)
{
    check_order(k);
    static std::array<std::once_flag, kMaxCumulantOrder + 1> flags;
    static std::array<PartitionStatistics, kMaxCumulantOrder + 1> tables;
    std::call_once(flags[k], [k] { tables[k] = partition_statistics(k); });
    return tables[k];
}

std::vector<std::pair<IntPartition, CycloNum>> type_weights(int k, const CycloNum& q)
{
    const auto& stats = cached_partition_statistics(k);
    int max_c0 = 0;
    for (const auto& [key, count] : stats) {
        max_c0 = std::max(max_c0, key.second);
    }
    std::vector<CycloNum> powers{CycloNum(1)};
    for (int e = 1; e <= max_c0; ++e) {
        powers.push_back(q.is_zero() ? CycloNum(0) : powers.back() * q);
    }
    std::vector<std::pair<IntPartition, CycloNum>> out;
    for (const auto& [key, count] : stats) {
        const CycloNum term = CycloNum(static_cast<long long>(count)) * powers[key.second];
        if (out.empty() || out.back().first != key.first) {
            out.emplace_back(key.first, term);
        } else {
            out.back().second += term;
        }
    }
    return out;
}

MomentSequence moments_from_cumulants(const CumulantSequence& alpha, int K)
{
    check_order(K);
    if (K > alpha.truncation()) {
        throw std::invalid_argument("moments_from_cumulants: K exceeds cumulant truncation");
    }
    std::vector<CycloNum> mu;
    for (int k = 1; k <= K; ++k) {
        CycloNum total;
        for (const auto& [lambda, weight] : type_weights(k, alpha.weight())) {
            if (!weight.is_zero()) {
                total += weight * product_over_parts(lambda, alpha.values());
            }
        }
        mu.push_back(std::move(total));
    }
    return MomentSequence(std::move(mu));
}

CumulantSequence cumulants_from_moments(const MomentSequence& mu, const CycloNum& q, int K)
{
    check_order(K);
    if (K > mu.truncation()) {
        throw std::invalid_argument("cumulants_from_moments: K exceeds moment truncation");
    }
    std::vector<CycloNum> alpha;
    for (int k = 1; k <= K; ++k) {
        // The one-block partition contributes alpha_k with weight 1; every
        // other partition involves only alpha_j with j < k.
        CycloNum rest;
        for (const auto& [lambda, weight] : type_weights(k, q)) {
            if (lambda.parts.size() == 1 || weight.is_zero()) {
                continue;
            }
            rest += weight * product_over_parts(lambda, alpha);
        }
        alpha.push_back(mu.at(k) - rest);
    }
    return CumulantSequence(std::move(alpha), q);
}

SupportCheck check_divisible_support(const MomentSequence& mu, int n, const CycloNum& q, int K)
{
    if (n < 1) {
        throw std::invalid_argument("check_divisible_support: n must be positive");
    }
    SupportCheck out;
    for (int k = 1; k <= K; ++k) {
        if (k % n != 0 && !mu.at(k).is_zero()) {
            return out;
        }
    }
    out.hypothesis_met = true;
    const auto alpha = cumulants_from_moments(mu, q, K);
    for (int k = 1; k <= K; ++k) {
        if (k % n != 0 && !alpha.at(k).is_zero()) {
            out.violation = k;
            break;
        }
    }
    return out;
}

MomentSequence power_moments(const MomentSequence& mu, int n, int K)
{
    if (n < 1 || K < 0) {
        throw std::invalid_argument("power_moments: n must be positive and K nonnegative");
    }
    if (mu.truncation() < n * K) {
        throw std::invalid_argument("power_moments: need " + std::to_string(n * K) +
                                    " moments, have " + std::to_string(mu.truncation()));
    }
    std::vector<CycloNum> out;
    for (int k = 1; k <= K; ++k) {
        out.push_back(mu.at(n * k));
    }
    return MomentSequence(std::move(out));
}

AlphaBetaReport verify_alpha_equals_beta(const MomentSequence& mu, int n, const CycloNum& q, int K)
{
    AlphaBetaReport report;
    auto hypothesis = [&](std::string msg) {
        report.status = AlphaBetaReport::Status::hypothesis_violation;
        report.message = std::move(msg);
        return report;
    };
    if (n < 1) {
        return hypothesis("n must be positive");
    }
    if (q.is_one() || !power(q, n).is_one()) {
        return hypothesis("q is not a proper n-th root of unity");
    }
    if (K > mu.truncation()) {
        return hypothesis("K exceeds moment truncation");
    }
    for (int k = 1; k <= K; ++k) {
        if (k % n != 0 && !mu.at(k).is_zero()) {
            return hypothesis("mu_" + std::to_string(k) + " is nonzero but n does not divide " +
                              std::to_string(k));
        }
    }
    const auto alpha = cumulants_from_moments(mu, q, K);
    const auto beta = cumulants_from_moments(power_moments(mu, n, K / n), CycloNum(1), K / n);
    for (int k = 1; k * n <= K; ++k) {
        if (!(alpha.at(n * k) == beta.at(k))) {
            report.status = AlphaBetaReport::Status::theorem_violation;
            report.k = k;
            report.message = "alpha_" + std::to_string(n * k) + " = " + alpha.at(n * k).to_string() +
                             " but beta_" + std::to_string(k) + " = " + beta.at(k).to_string();
            return report;
        }
    }
    return report;
}

}  // namespace gradind
