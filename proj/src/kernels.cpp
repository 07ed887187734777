#include "gradind/kernels.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace gradind {

namespace {

constexpr int kMaxGround = 24;

bool sizes_divisible(std::span<const std::uint8_t> rgs, int n, std::array<int, kMaxGround>& sizes)
{
    sizes.fill(0);
    for (auto label : rgs) {
        ++sizes[label];
    }
    for (int s : sizes) {
        if (s % n != 0) {
            return false;
        }
    }
    return true;
}

void check_ground(int N)
{
    if (N < 0 || N > kMaxGround) {
        throw std::invalid_argument("kernel ground size must lie in [0, " + std::to_string(kMaxGround) + "]");
    }
}

}  // namespace

int c0_from_rgs(std::span<const std::uint8_t> rgs)
{
    // Pairs i < j with label(i) < label(j) and first(label(j)) < i.
    std::array<int, kMaxGround> first{};
    first.fill(-1);
    int count = 0;
    for (std::size_t j = 0; j < rgs.size(); ++j) {
        const auto b = rgs[j];
        if (first[b] < 0) {
            first[b] = static_cast<int>(j);
            continue;
        }
        for (std::size_t i = static_cast<std::size_t>(first[b]) + 1; i < j; ++i) {
            count += rgs[i] < b;
        }
    }
    return count;
}

int crossings_from_rgs(std::span<const std::uint8_t> rgs)
{
    const int N = static_cast<int>(rgs.size());
    int blocks = 0;
    for (auto label : rgs) {
        blocks = std::max(blocks, label + 1);
    }
    // before[b][p]: elements of block b among positions < p.
    std::array<std::array<std::uint8_t, kMaxGround + 1>, kMaxGround> before{};
    for (int b = 0; b < blocks; ++b) {
        before[b][0] = 0;
        for (int p = 0; p < N; ++p) {
            before[b][p + 1] = before[b][p] + (rgs[p] == b);
        }
    }
    // Fix the middle pair b1 < a2 from distinct blocks B, A; count a1 < b1 in A
    // and b2 > a2 in B.
    int count = 0;
    for (int b1 = 0; b1 < N; ++b1) {
        const int B = rgs[b1];
        for (int a2 = b1 + 1; a2 < N; ++a2) {
            const int A = rgs[a2];
            if (A == B) {
                continue;
            }
            const int left = before[A][b1];
            const int right = before[B][N] - before[B][a2 + 1];
            count += left * right;
        }
    }
    return count;
}

IntPartition type_from_rgs(std::span<const std::uint8_t> rgs)
{
    std::vector<int> sizes;
    for (auto label : rgs) {
        if (label >= sizes.size()) {
            sizes.resize(label + 1u, 0);
        }
        ++sizes[label];
    }
    IntPartition t;
    std::sort(sizes.begin(), sizes.end(), std::greater<>());
    t.parts = std::move(sizes);
    return t;
}

std::vector<std::vector<std::uint8_t>> rgs_prefixes(int N, int depth)
{
    check_ground(N);
    std::vector<std::vector<std::uint8_t>> out;
    for (RgsEnumerator it(std::min(N, depth)); it.valid(); it.advance()) {
        out.emplace_back(it.rgs().begin(), it.rgs().end());
    }
    return out;
}

PartitionStatistics partition_statistics(int N, const KernelOptions& options)
{
    check_ground(N);
    return reduce_partitions(
        N, options, PartitionStatistics{},
        [](PartitionStatistics& acc, std::span<const std::uint8_t> rgs) {
            ++acc[{type_from_rgs(rgs), c0_from_rgs(rgs)}];
        },
        [](PartitionStatistics& acc, PartitionStatistics&& part) {
            for (auto& [key, count] : part) {
                acc[key] += count;
            }
        });
}

std::map<int, std::uint64_t> statistic_histogram_divisible(int m, int n, Statistic statistic,
                                                           const std::optional<IntPartition>& type,
                                                           const KernelOptions& options)
{
    if (m < 1 || n < 1) {
        throw std::invalid_argument("statistic_histogram_divisible: m and n must be positive");
    }
    using Histogram = std::map<int, std::uint64_t>;
    return reduce_partitions(
        m * n, options, Histogram{},
        [n, statistic, &type](Histogram& acc, std::span<const std::uint8_t> rgs) {
            std::array<int, kMaxGround> sizes;
            if (!sizes_divisible(rgs, n, sizes)) {
                return;
            }
            if (type && type_from_rgs(rgs) != *type) {
                return;
            }
            ++acc[statistic == Statistic::crossings ? crossings_from_rgs(rgs) : c0_from_rgs(rgs)];
        },
        [](Histogram& acc, Histogram&& part) {
            for (auto& [c0, count] : part) {
                acc[c0] += count;
            }
        });
}

CongruenceScan congruence_scan(int m, int n, const KernelOptions& options)
{
    if (m < 1 || n < 1) {
        throw std::invalid_argument("congruence_scan: m and n must be positive");
    }
    return reduce_partitions(
        m * n, options, CongruenceScan{},
        [n](CongruenceScan& acc, std::span<const std::uint8_t> rgs) {
            std::array<int, kMaxGround> sizes;
            if (!sizes_divisible(rgs, n, sizes)) {
                return;
            }
            ++acc.family_size;
            if ((c0_from_rgs(rgs) - crossings_from_rgs(rgs)) % n != 0) {
                ++acc.violations;
                if (!acc.witness) {
                    acc.witness = SetPartition::from_rgs(rgs);
                }
            }
        },
        [](CongruenceScan& acc, CongruenceScan&& part) {
            acc.family_size += part.family_size;
            acc.violations += part.violations;
            if (!acc.witness && part.witness) {
                acc.witness = std::move(part.witness);
            }
        });
}

CycloNum evaluate_histogram(const std::map<int, std::uint64_t>& histogram, const CycloNum& q)
{
    CycloNum total;
    for (const auto& [c0, count] : histogram) {
        total += CycloNum(static_cast<long long>(count)) * crossing_weight(q, c0);
    }
    return total;
}

}  // namespace gradind
