#include "gradind/partitions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gradind {

namespace {

std::string join_blocks(const std::vector<Block>& blocks)
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (i) {
            os << ',';
        }
        os << '[';
        for (std::size_t j = 0; j < blocks[i].size(); ++j) {
            if (j) {
                os << ',';
            }
            os << blocks[i][j];
        }
        os << ']';
    }
    os << ']';
    return os.str();
}

// Sorts each block and checks that the blocks partition [ground_size].
void validate_blocks(int ground_size, std::vector<Block>& blocks, const char* what)
{
    if (ground_size < 0) {
        throw std::invalid_argument(std::string(what) + ": negative ground size");
    }
    std::vector<char> seen(static_cast<std::size_t>(ground_size) + 1, 0);
    int covered = 0;
    for (auto& b : blocks) {
        if (b.empty()) {
            throw std::invalid_argument(std::string(what) + ": empty block");
        }
        std::sort(b.begin(), b.end());
        for (int x : b) {
            if (x < 1 || x > ground_size) {
                throw std::invalid_argument(std::string(what) + ": element " + std::to_string(x) +
                                            " outside [" + std::to_string(ground_size) + "]");
            }
            if (seen[x]) {
                throw std::invalid_argument(std::string(what) + ": element " + std::to_string(x) +
                                            " appears twice");
            }
            seen[x] = 1;
            ++covered;
        }
    }
    if (covered != ground_size) {
        throw std::invalid_argument(std::string(what) + ": blocks do not cover the ground set");
    }
}

int cyclic_successor(int j, int n)
{
    return j == n ? 1 : j + 1;
}

}  // namespace

// --- IntPartition ----------------------------------------------------------

IntPartition::IntPartition(std::vector<int> p) : parts(std::move(p))
{
    for (int x : parts) {
        if (x <= 0) {
            throw std::invalid_argument("IntPartition: parts must be positive");
        }
    }
    std::sort(parts.begin(), parts.end(), std::greater<>());
}

IntPartition IntPartition::parse(std::string_view text)
{
    std::vector<int> parts;
    std::string s(text);
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::logic_error&) {
            throw std::invalid_argument("malformed integer partition '" + s + "'");
        }
        if (used != item.size()) {
            throw std::invalid_argument("malformed integer partition '" + s + "'");
        }
        parts.push_back(v);
    }
    if (parts.empty()) {
        throw std::invalid_argument("empty integer partition");
    }
    return IntPartition(std::move(parts));
}

int IntPartition::weight() const
{
    return std::accumulate(parts.begin(), parts.end(), 0);
}

IntPartition IntPartition::scaled(int factor) const
{
    IntPartition out = *this;
    for (int& x : out.parts) {
        x *= factor;
    }
    return out;
}

std::string IntPartition::to_string() const
{
    std::ostringstream os;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        os << (i ? "," : "") << parts[i];
    }
    return os.str();
}

std::vector<IntPartition> integer_partitions(int m)
{
    std::vector<IntPartition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int cap) {
        if (remaining == 0) {
            IntPartition p;
            p.parts = cur;
            out.push_back(std::move(p));
            return;
        }
        for (int x = std::min(remaining, cap); x >= 1; --x) {
            cur.push_back(x);
            rec(remaining - x, x);
            cur.pop_back();
        }
    };
    rec(m, m);
    return out;
}

// --- SetPartition ----------------------------------------------------------

SetPartition::SetPartition(int ground_size, std::vector<Block> blocks)
    : ground_size_(ground_size), blocks_(std::move(blocks))
{
    validate_blocks(ground_size_, blocks_, "SetPartition");
    std::sort(blocks_.begin(), blocks_.end(),
              [](const Block& a, const Block& b) { return a.front() < b.front(); });
}

SetPartition SetPartition::from_rgs(std::span<const std::uint8_t> rgs)
{
    SetPartition p;
    p.ground_size_ = static_cast<int>(rgs.size());
    for (std::size_t i = 0; i < rgs.size(); ++i) {
        if (rgs[i] == p.blocks_.size()) {
            p.blocks_.emplace_back();
        } else if (rgs[i] > p.blocks_.size()) {
            throw std::invalid_argument("from_rgs: not a restricted growth string");
        }
        p.blocks_[rgs[i]].push_back(static_cast<int>(i) + 1);
    }
    return p;
}

std::vector<std::uint8_t> SetPartition::rgs() const
{
    std::vector<std::uint8_t> out(static_cast<std::size_t>(ground_size_));
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        for (int x : blocks_[b]) {
            out[x - 1] = static_cast<std::uint8_t>(b);
        }
    }
    return out;
}

std::string SetPartition::to_string() const
{
    return join_blocks(blocks_);
}

// --- OrderedSetPartition ---------------------------------------------------

OrderedSetPartition::OrderedSetPartition(int ground_size, std::vector<Block> parts)
    : ground_size_(ground_size), parts_(std::move(parts))
{
    validate_blocks(ground_size_, parts_, "OrderedSetPartition");
}

std::vector<int> OrderedSetPartition::part_map() const
{
    std::vector<int> f(static_cast<std::size_t>(ground_size_));
    for (std::size_t j = 0; j < parts_.size(); ++j) {
        for (int x : parts_[j]) {
            f[x - 1] = static_cast<int>(j) + 1;
        }
    }
    return f;
}

std::string OrderedSetPartition::to_string() const
{
    return join_blocks(parts_);
}

// --- Enumeration -----------------------------------------------------------

RgsEnumerator::RgsEnumerator(int n, std::span<const std::uint8_t> prefix)
    : rgs_(static_cast<std::size_t>(n), 0), running_max_(static_cast<std::size_t>(n), 0),
      fixed_(prefix.size())
{
    if (n < 0 || prefix.size() > rgs_.size()) {
        throw std::invalid_argument("RgsEnumerator: prefix longer than string");
    }
    std::copy(prefix.begin(), prefix.end(), rgs_.begin());
    for (std::size_t i = 0; i < rgs_.size(); ++i) {
        const int prev = i == 0 ? -1 : running_max_[i - 1];
        if (rgs_[i] > prev + 1) {
            throw std::invalid_argument("RgsEnumerator: prefix is not a restricted growth string");
        }
        running_max_[i] = static_cast<std::uint8_t>(std::max<int>(prev, rgs_[i]));
    }
}

void RgsEnumerator::advance()
{
    const std::size_t lo = std::max<std::size_t>(fixed_, 1);
    for (std::size_t i = rgs_.size(); i-- > lo;) {
        if (rgs_[i] <= running_max_[i - 1]) {
            ++rgs_[i];
            running_max_[i] = std::max(running_max_[i - 1], rgs_[i]);
            for (std::size_t j = i + 1; j < rgs_.size(); ++j) {
                rgs_[j] = 0;
                running_max_[j] = running_max_[i];
            }
            return;
        }
    }
    valid_ = false;
}

std::uint64_t bell_number(int n)
{
    if (n < 0) {
        throw std::invalid_argument("bell_number: negative argument");
    }
    std::vector<std::uint64_t> row{1};
    for (int i = 0; i < n; ++i) {
        std::vector<std::uint64_t> next{row.back()};
        for (auto x : row) {
            next.push_back(next.back() + x);
        }
        row = std::move(next);
    }
    return row.front();
}

std::vector<SetPartition> enumerate_set_partitions(int N)
{
    std::vector<SetPartition> out;
    for_each_set_partition(N, [&](SetPartition p) { out.push_back(std::move(p)); });
    return out;
}

std::vector<SetPartition> enumerate_divisible(int m, int n)
{
    if (m < 1 || n < 1) {
        throw std::invalid_argument("enumerate_divisible: m and n must be positive");
    }
    std::vector<SetPartition> out;
    std::vector<int> sizes;
    for (RgsEnumerator it(m * n); it.valid(); it.advance()) {
        sizes.assign(sizes.size(), 0);
        for (auto label : it.rgs()) {
            if (label >= sizes.size()) {
                sizes.resize(label + 1u, 0);
            }
            ++sizes[label];
        }
        if (std::all_of(sizes.begin(), sizes.end(), [n](int s) { return s % n == 0; })) {
            out.push_back(SetPartition::from_rgs(it.rgs()));
        }
    }
    return out;
}

bool is_block_aligned(const SetPartition& p, int m, int n)
{
    if (p.ground_size() != m * n) {
        throw std::invalid_argument("is_block_aligned: partition is not of [mn]");
    }
    const auto labels = p.rgs();
    for (int k = 0; k < m; ++k) {
        for (int i = 1; i < n; ++i) {
            if (labels[k * n + i] != labels[k * n]) {
                return false;
            }
        }
    }
    return true;
}

std::vector<SetPartition> enumerate_block_aligned(int m, int n)
{
    std::vector<SetPartition> out;
    for_each_set_partition(m, [&](const SetPartition& base) {
        std::vector<Block> blocks;
        for (const auto& b : base.blocks()) {
            Block inflated;
            for (int k : b) {
                for (int i = 1; i <= n; ++i) {
                    inflated.push_back((k - 1) * n + i);
                }
            }
            blocks.push_back(std::move(inflated));
        }
        out.emplace_back(m * n, std::move(blocks));
    });
    return out;
}

std::vector<OrderedSetPartition> enumerate_ordered_set_partitions(int n)
{
    std::vector<OrderedSetPartition> out;
    for_each_set_partition(n, [&](const SetPartition& p) {
        std::vector<std::size_t> order(p.block_count());
        std::iota(order.begin(), order.end(), 0);
        do {
            std::vector<Block> parts;
            for (auto i : order) {
                parts.push_back(p.blocks()[i]);
            }
            out.emplace_back(n, std::move(parts));
        } while (std::next_permutation(order.begin(), order.end()));
    });
    return out;
}

// --- Statistics ------------------------------------------------------------

int crossing_number(const SetPartition& p)
{
    const auto lab = p.rgs();
    const int N = p.ground_size();
    int count = 0;
    for (int a1 = 0; a1 < N; ++a1) {
        for (int b1 = a1 + 1; b1 < N; ++b1) {
            if (lab[b1] == lab[a1]) {
                continue;
            }
            for (int a2 = b1 + 1; a2 < N; ++a2) {
                if (lab[a2] != lab[a1]) {
                    continue;
                }
                for (int b2 = a2 + 1; b2 < N; ++b2) {
                    count += lab[b2] == lab[b1];
                }
            }
        }
    }
    return count;
}

int restricted_crossing_number(const SetPartition& p)
{
    const auto& blocks = p.blocks();
    int total = 0;
    for (const auto& a : blocks) {
        for (const auto& b : blocks) {
            if (&a == &b || a.front() > b.front()) {
                continue;
            }
            // c0(A, B) = |{(x, y) in A x B : min B < x < y}|
            const int min_b = b.front();
            for (int x : a) {
                if (x <= min_b) {
                    continue;
                }
                total += static_cast<int>(b.end() - std::upper_bound(b.begin(), b.end(), x));
            }
        }
    }
    return total;
}

int restricted_crossing_number_scan(const SetPartition& p)
{
    const auto lab = p.rgs();
    const int N = p.ground_size();
    std::vector<int> block_min(p.block_count());
    for (std::size_t b = 0; b < p.block_count(); ++b) {
        block_min[b] = p.blocks()[b].front() - 1;
    }
    int count = 0;
    for (int a1 = 0; a1 < N; ++a1) {
        if (block_min[lab[a1]] != a1) {
            continue;
        }
        for (int b1 = a1 + 1; b1 < N; ++b1) {
            if (lab[b1] == lab[a1] || block_min[lab[b1]] != b1) {
                continue;
            }
            for (int a2 = b1 + 1; a2 < N; ++a2) {
                if (lab[a2] != lab[a1]) {
                    continue;
                }
                for (int b2 = a2 + 1; b2 < N; ++b2) {
                    count += lab[b2] == lab[b1];
                }
            }
        }
    }
    return count;
}

int sorting_number(const OrderedSetPartition& p)
{
    const auto f = p.part_map();
    int count = 0;
    for (std::size_t x = 0; x < f.size(); ++x) {
        for (std::size_t y = x + 1; y < f.size(); ++y) {
            count += f[x] < f[y];
        }
    }
    return count;
}

SetPartition induced_partition(const SetPartition& p, std::span<const int> subset)
{
    if (subset.empty()) {
        throw std::invalid_argument("induced_partition: empty subset");
    }
    std::vector<int> t(subset.begin(), subset.end());
    std::sort(t.begin(), t.end());
    if (std::adjacent_find(t.begin(), t.end()) != t.end() || t.front() < 1 ||
        t.back() > p.ground_size()) {
        throw std::invalid_argument("induced_partition: subset is not a subset of the ground set");
    }
    std::vector<Block> blocks;
    for (const auto& b : p.blocks()) {
        Block part;
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (std::binary_search(b.begin(), b.end(), t[i])) {
                part.push_back(static_cast<int>(i) + 1);
            }
        }
        if (!part.empty()) {
            blocks.push_back(std::move(part));
        }
    }
    return SetPartition(static_cast<int>(t.size()), std::move(blocks));
}

IntPartition partition_type(const SetPartition& p)
{
    std::vector<int> sizes;
    for (const auto& b : p.blocks()) {
        sizes.push_back(static_cast<int>(b.size()));
    }
    return IntPartition(std::move(sizes));
}

// --- Cyclic actions --------------------------------------------------------

OrderedSetPartition rotate_labels(const OrderedSetPartition& p, long long k)
{
    const int n = p.ground_size();
    if (n < 1) {
        throw std::invalid_argument("rotate_labels: ground size must be positive");
    }
    const long long shift = ((k % n) + n) % n;
    std::vector<Block> parts = p.parts();
    for (auto& part : parts) {
        for (int& x : part) {
            x = static_cast<int>((x - 1 + shift) % n) + 1;
        }
    }
    return OrderedSetPartition(n, std::move(parts));
}

OrderedSetPartition bold_sigma(const OrderedSetPartition& p)
{
    const int n = p.ground_size();
    if (n < 1) {
        throw std::invalid_argument("bold_sigma: ground size must be positive");
    }
    if (p.part_count() == 1) {
        return p;
    }
    const auto& parts = p.parts();
    Block first;
    for (int x : parts[0]) {
        first.push_back(cyclic_successor(x, n));
    }
    // B = [n] \ A_1 and B' = sigma(B), both ascending.
    std::vector<int> rest;
    for (int x = 1; x <= n; ++x) {
        if (!std::binary_search(parts[0].begin(), parts[0].end(), x)) {
            rest.push_back(x);
        }
    }
    std::vector<int> shifted;
    for (int x : rest) {
        shifted.push_back(cyclic_successor(x, n));
    }
    std::sort(shifted.begin(), shifted.end());
    std::vector<int> theta(static_cast<std::size_t>(n) + 1, 0);
    for (std::size_t i = 0; i < rest.size(); ++i) {
        theta[rest[i]] = shifted[i];
    }
    std::vector<Block> out{std::move(first)};
    for (std::size_t j = 1; j < parts.size(); ++j) {
        Block b;
        for (int x : parts[j]) {
            b.push_back(theta[x]);
        }
        out.push_back(std::move(b));
    }
    return OrderedSetPartition(n, std::move(out));
}

SetPartition bold_sigma_divisible(const SetPartition& p, int n)
{
    const int N = p.ground_size();
    if (n < 1 || N % n != 0) {
        throw std::invalid_argument("bold_sigma_divisible: ground size is not a multiple of n");
    }
    for (const auto& b : p.blocks()) {
        if (b.size() % static_cast<std::size_t>(n) != 0) {
            throw std::invalid_argument("bold_sigma_divisible: block size not divisible by n");
        }
    }
    const int m = N / n;
    const auto lab = p.rgs();
    int k0 = -1;
    for (int k = m - 1; k >= 0 && k0 < 0; --k) {
        for (int i = 1; i < n; ++i) {
            if (lab[k * n + i] != lab[k * n]) {
                k0 = k;
                break;
            }
        }
    }
    if (k0 < 0) {
        return p;
    }
    const int lo = k0 * n + 1;
    const int hi = (k0 + 1) * n;
    // Induced ordered partition on J_{k0}, parts ordered by the minima of their blocks.
    std::vector<std::size_t> owners;
    std::vector<Block> induced;
    for (std::size_t i = 0; i < p.block_count(); ++i) {
        Block part;
        for (int x : p.blocks()[i]) {
            if (x >= lo && x <= hi) {
                part.push_back(x - lo + 1);
            }
        }
        if (!part.empty()) {
            owners.push_back(i);
            induced.push_back(std::move(part));
        }
    }
    const OrderedSetPartition moved = bold_sigma(OrderedSetPartition(n, std::move(induced)));
    std::vector<Block> blocks = p.blocks();
    for (std::size_t j = 0; j < owners.size(); ++j) {
        Block& b = blocks[owners[j]];
        std::erase_if(b, [&](int x) { return x >= lo && x <= hi; });
        for (int x : moved.parts()[j]) {
            b.push_back(x + lo - 1);
        }
    }
    return SetPartition(N, std::move(blocks));
}

std::vector<OrderedSetPartition> orbit_bold_sigma(const OrderedSetPartition& p)
{
    return orbit(p, [](const OrderedSetPartition& x) { return bold_sigma(x); }, p.ground_size());
}

std::vector<SetPartition> orbit_bold_sigma_divisible(const SetPartition& p, int n)
{
    return orbit(p, [n](const SetPartition& x) { return bold_sigma_divisible(x, n); }, n);
}

// --- Weighted sums ---------------------------------------------------------

CycloNum crossing_weight(const CycloNum& q, long long exponent)
{
    if (q.is_zero()) {
        return exponent == 0 ? CycloNum(1) : CycloNum(0);
    }
    return power(q, exponent);
}

CycloNum weighted_c0_sum(std::span<const SetPartition> family, const CycloNum& q,
                         const std::optional<IntPartition>& type)
{
    std::map<int, long long> histogram;
    for (const auto& p : family) {
        if (type && partition_type(p) != *type) {
            continue;
        }
        ++histogram[restricted_crossing_number(p)];
    }
    CycloNum total;
    for (const auto& [c0, count] : histogram) {
        total += CycloNum(count) * crossing_weight(q, c0);
    }
    return total;
}

}  // namespace gradind
