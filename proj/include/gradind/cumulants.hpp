#pragma once

// Moment <-> q-cumulant conversion by the weighted partition sum
//
//     mu_k = sum_{P in P[k]} q^{c0(P)} prod_{B in P} alpha_{|B|},
//
// with q = 1 giving classical cumulants and q = 0 (0^0 = 1) free cumulants.
// Partition sums are evaluated through a per-k table of (type, c0) counts,
// which is independent of q and built once.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gradind/cyclo.hpp"
#include "gradind/kernels.hpp"

namespace gradind {

/// A precondition of a theorem or transform does not hold for the input.
class HypothesisError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Moments mu_1..mu_K; mu_0 = 1 is implicit.
class MomentSequence {
public:
    MomentSequence() = default;
    explicit MomentSequence(std::vector<CycloNum> values) : values_(std::move(values)) {}

    int truncation() const { return static_cast<int>(values_.size()); }
    /// mu_k for 0 <= k <= truncation().
    CycloNum at(int k) const;
    const std::vector<CycloNum>& values() const { return values_; }

    friend bool operator==(const MomentSequence&, const MomentSequence&) = default;

private:
    std::vector<CycloNum> values_;
};

/// alpha_1..alpha_K together with the weight q they were computed for.
class CumulantSequence {
public:
    CumulantSequence() = default;
    CumulantSequence(std::vector<CycloNum> values, CycloNum weight)
        : values_(std::move(values)), weight_(std::move(weight))
    {
    }

    int truncation() const { return static_cast<int>(values_.size()); }
    /// alpha_k for 1 <= k <= truncation().
    const CycloNum& at(int k) const;
    const std::vector<CycloNum>& values() const { return values_; }
    const CycloNum& weight() const { return weight_; }

    friend bool operator==(const CumulantSequence&, const CumulantSequence&) = default;

private:
    std::vector<CycloNum> values_;
    CycloNum weight_;
};

/// Largest k the cached partition tables support.
inline constexpr int kMaxCumulantOrder = 14;

/// Cached (type, c0) counts for partitions of [k]; thread-safe, built on first use.
const PartitionStatistics& cached_partition_statistics(int k);

/// sum_{P in P[k], type(P) = lambda} q^{c0(P)}, one entry per type of k.
std::vector<std::pair<IntPartition, CycloNum>> type_weights(int k, const CycloNum& q);

MomentSequence moments_from_cumulants(const CumulantSequence& alpha, int K);
CumulantSequence cumulants_from_moments(const MomentSequence& mu, const CycloNum& q, int K);

struct SupportCheck {
    bool hypothesis_met = false;
    /// First k with n not dividing k but alpha_k != 0.
    std::optional<int> violation;
    bool holds() const { return hypothesis_met && !violation; }
};

/// If mu_k = 0 whenever n does not divide k, checks the same for the q-cumulants.
SupportCheck check_divisible_support(const MomentSequence& mu, int n, const CycloNum& q, int K);

/// Moments of a^n: (mu_n, mu_2n, ..., mu_Kn).
MomentSequence power_moments(const MomentSequence& mu, int n, int K);

struct AlphaBetaReport {
    enum class Status { holds, hypothesis_violation, theorem_violation };
    Status status = Status::holds;
    /// First k with alpha_{nk} != beta_k when the theorem fails.
    std::optional<int> k;
    std::string message;
};

/// Compares alpha^q_{nk}(mu) with the classical cumulants beta_k of mu_{a^n}
/// for all nk <= K. q must satisfy q^n = 1, q != 1.
AlphaBetaReport verify_alpha_equals_beta(const MomentSequence& mu, int n, const CycloNum& q, int K);

}  // namespace gradind
