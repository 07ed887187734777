#pragma once

// Enumeration kernels over all set partitions of [N].
//
// Each kernel has a serial reference path (one RgsEnumerator pass) and an
// OpenMP path that splits the RGS-lexicographic stream by fixed prefixes.
// Per-prefix accumulators are merged in prefix order, so the parallel result
// is identical to the serial one for any worker count.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <omp.h>

#include "gradind/partitions.hpp"

namespace gradind {

enum class Execution { serial, parallel };

struct KernelOptions {
    Execution execution = Execution::parallel;
    int workers = 0;  // 0: OpenMP default
};

/// c0 straight from a restricted-growth string, O(N^2).
int c0_from_rgs(std::span<const std::uint8_t> rgs);

/// c straight from a restricted-growth string, O(N^2) with per-block prefix counts.
int crossings_from_rgs(std::span<const std::uint8_t> rgs);

/// Block sizes in decreasing order.
IntPartition type_from_rgs(std::span<const std::uint8_t> rgs);

/// All RGS of length min(N, depth); they split the enumeration of [N].
std::vector<std::vector<std::uint8_t>> rgs_prefixes(int N, int depth);

template <class Acc, class Visit, class Merge>
Acc reduce_partitions(int N, const KernelOptions& options, const Acc& init, Visit visit, Merge merge)
{
    if (options.execution == Execution::serial) {
        Acc acc = init;
        for (RgsEnumerator it(N); it.valid(); it.advance()) {
            visit(acc, it.rgs());
        }
        return acc;
    }
    const auto prefixes = rgs_prefixes(N, 6);
    std::vector<Acc> partial(prefixes.size(), init);
    const int count = static_cast<int>(prefixes.size());
    const int workers = options.workers > 0 ? options.workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(workers)
    for (int i = 0; i < count; ++i) {
        for (RgsEnumerator it(N, prefixes[i]); it.valid(); it.advance()) {
            visit(partial[i], it.rgs());
        }
    }
    Acc acc = init;
    for (auto& p : partial) {
        merge(acc, std::move(p));
    }
    return acc;
}

/// Number of partitions of [N] per (type, c0).
using PartitionStatistics = std::map<std::pair<IntPartition, int>, std::uint64_t>;

PartitionStatistics partition_statistics(int N, const KernelOptions& options = {});

enum class Statistic { restricted_crossings, crossings };

/// Histogram statistic -> count over partitions of [mn] with block sizes
/// divisible by n, optionally restricted to one type.
std::map<int, std::uint64_t> statistic_histogram_divisible(int m, int n, Statistic statistic,
                                                           const std::optional<IntPartition>& type = std::nullopt,
                                                           const KernelOptions& options = {});

inline std::map<int, std::uint64_t> c0_histogram_divisible(int m, int n,
                                                           const std::optional<IntPartition>& type = std::nullopt,
                                                           const KernelOptions& options = {})
{
    return statistic_histogram_divisible(m, n, Statistic::restricted_crossings, type, options);
}

struct CongruenceScan {
    std::uint64_t family_size = 0;
    std::uint64_t violations = 0;
    /// First partition in RGS order with c0 != c (mod n), if any.
    std::optional<SetPartition> witness;
};

/// Compares c0 and c modulo n over partitions of [mn] with block sizes divisible by n.
CongruenceScan congruence_scan(int m, int n, const KernelOptions& options = {});

/// Sum of count * q^c0 over a histogram (0^0 = 1).
CycloNum evaluate_histogram(const std::map<int, std::uint64_t>& histogram, const CycloNum& q);

}  // namespace gradind
