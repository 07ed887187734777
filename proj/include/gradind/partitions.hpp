#pragma once

// Set partitions of [N] = {1..N}, ordered set partitions, crossing
// statistics, and the two cyclic actions used by the cancellation lemmas.
//
// Elements are 1-based everywhere in the public interface. Restricted-growth
// strings (RGS) are 0-based block labels: rgs[i] is the label of element i+1
// and labels are numbered by first occurrence.

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gradind/cyclo.hpp"

namespace gradind {

using Block = std::vector<int>;

/// Integer partition lambda_1 >= ... >= lambda_r > 0.
struct IntPartition {
    std::vector<int> parts;

    IntPartition() = default;
    /// Sorts into weakly decreasing order; rejects nonpositive parts.
    explicit IntPartition(std::vector<int> p);
    /// "4,4" or "3,1,1".
    static IntPartition parse(std::string_view text);

    int weight() const;
    IntPartition scaled(int factor) const;
    std::string to_string() const;

    friend auto operator<=>(const IntPartition&, const IntPartition&) = default;
};

/// All partitions of m, in reverse lexicographic order starting with (m).
std::vector<IntPartition> integer_partitions(int m);

class SetPartition {
public:
    SetPartition() = default;

    /// Validates disjointness, nonemptiness and coverage of [ground_size];
    /// stores blocks sorted internally and ordered by minimum.
    SetPartition(int ground_size, std::vector<Block> blocks);

    static SetPartition from_rgs(std::span<const std::uint8_t> rgs);

    int ground_size() const { return ground_size_; }
    const std::vector<Block>& blocks() const { return blocks_; }
    std::size_t block_count() const { return blocks_.size(); }

    std::vector<std::uint8_t> rgs() const;
    /// JSON array of arrays, e.g. [[1,3],[2,4]].
    std::string to_string() const;

    friend auto operator<=>(const SetPartition&, const SetPartition&) = default;

private:
    int ground_size_ = 0;
    std::vector<Block> blocks_;
};

/// (A_1, ..., A_s) with significant part order.
class OrderedSetPartition {
public:
    OrderedSetPartition() = default;
    OrderedSetPartition(int ground_size, std::vector<Block> parts);

    int ground_size() const { return ground_size_; }
    const std::vector<Block>& parts() const { return parts_; }
    std::size_t part_count() const { return parts_.size(); }

    /// f_P as a 1-based vector: f[x-1] = j iff x lies in part j (1-based).
    std::vector<int> part_map() const;
    std::string to_string() const;

    friend auto operator<=>(const OrderedSetPartition&, const OrderedSetPartition&) = default;

private:
    int ground_size_ = 0;
    std::vector<Block> parts_;
};

/// Lexicographic enumeration of restricted-growth strings of length n whose
/// first prefix.size() entries are fixed. The prefix must itself be an RGS.
class RgsEnumerator {
public:
    explicit RgsEnumerator(int n, std::span<const std::uint8_t> prefix = {});

    bool valid() const { return valid_; }
    void advance();
    std::span<const std::uint8_t> rgs() const { return rgs_; }

private:
    std::vector<std::uint8_t> rgs_;
    std::vector<std::uint8_t> running_max_;
    std::size_t fixed_;
    bool valid_ = true;
};

std::uint64_t bell_number(int n);

/// Every partition of [N] once, in RGS-lexicographic order. N = 0 gives the empty partition.
std::vector<SetPartition> enumerate_set_partitions(int N);

template <class F>
void for_each_set_partition(int N, F&& visit)
{
    for (RgsEnumerator it(N); it.valid(); it.advance()) {
        visit(SetPartition::from_rgs(it.rgs()));
    }
}

/// Partitions of [mn] whose block sizes are all multiples of n.
std::vector<SetPartition> enumerate_divisible(int m, int n);

/// True iff each interval J_k = {kn+1, ..., (k+1)n} lies inside one block.
bool is_block_aligned(const SetPartition& p, int m, int n);

/// Block-aligned partitions of [mn], built by inflating each partition of [m].
std::vector<SetPartition> enumerate_block_aligned(int m, int n);

/// All ordered set partitions of [n] (surjections onto [s], every s).
std::vector<OrderedSetPartition> enumerate_ordered_set_partitions(int n);

/// c(P) by a scan over quadruples a1 < b1 < a2 < b2.
int crossing_number(const SetPartition& p);

/// c0(P) as the sum over ordered block pairs of c0(A, B).
int restricted_crossing_number(const SetPartition& p);

/// c0(P) by scanning quadruples for left-reduced crossings.
int restricted_crossing_number_scan(const SetPartition& p);

/// |{(x, y) : x < y, f_P(x) < f_P(y)}|.
int sorting_number(const OrderedSetPartition& p);

/// {T cap A : A in P} relabelled along T -> [|T|]. T must be nonempty, in range.
SetPartition induced_partition(const SetPartition& p, std::span<const int> subset);

IntPartition partition_type(const SetPartition& p);

/// Applies sigma^k, sigma = (1 2 ... n), elementwise; part order is kept.
OrderedSetPartition rotate_labels(const OrderedSetPartition& p, long long k);

/// Shifts the first part cyclically and transports the remaining parts along
/// the order-preserving bijection [n] \ A_1 -> sigma([n] \ A_1).
OrderedSetPartition bold_sigma(const OrderedSetPartition& p);

/// Z_n action on partitions of [mn] with block sizes divisible by n. Fixed
/// points are the block-aligned partitions; otherwise the action rotates the
/// induced partition on the last non-aligned interval.
SetPartition bold_sigma_divisible(const SetPartition& p, int n);

/// Iterates step from start until it returns; throws std::logic_error if
/// that takes more than max_length steps.
template <class T, class Step>
std::vector<T> orbit(const T& start, Step step, int max_length)
{
    std::vector<T> out{start};
    T cur = step(start);
    while (!(cur == start)) {
        if (static_cast<int>(out.size()) >= max_length) {
            throw std::logic_error("orbit longer than " + std::to_string(max_length));
        }
        out.push_back(cur);
        cur = step(cur);
    }
    return out;
}

std::vector<OrderedSetPartition> orbit_bold_sigma(const OrderedSetPartition& p);
std::vector<SetPartition> orbit_bold_sigma_divisible(const SetPartition& p, int n);

/// q^e with the convention 0^0 = 1, so q = 0 keeps only e = 0.
CycloNum crossing_weight(const CycloNum& q, long long exponent);

/// Exact sum of q^{c0(P)} over the family, optionally restricted to one type.
CycloNum weighted_c0_sum(std::span<const SetPartition> family, const CycloNum& q,
                         const std::optional<IntPartition>& type = std::nullopt);

}  // namespace gradind
