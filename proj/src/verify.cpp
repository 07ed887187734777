#include "gradind/verify.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "gradind/kernels.hpp"

namespace gradind {

namespace {

using Suite = std::function<void(const RunConfig&, VerificationReport&)>;

KernelOptions kernel_options(const RunConfig& config)
{
    return KernelOptions{Execution::parallel, config.workers};
}

int worker_count(const RunConfig& config)
{
    return config.workers > 0 ? config.workers : omp_get_max_threads();
}

std::string root_label(const CycloNum& q)
{
    if (q.is_rational()) {
        return format_rational(q.rational_value());
    }
    const int d = unity_order(q);
    for (int k = 1; k < d; ++k) {
        if (CycloNum::root_of_unity(d, k) == q) {
            return "zeta:" + std::to_string(d) + ":" + std::to_string(k);
        }
    }
    return q.to_string();
}

std::optional<CycloNum> q_override(const RunConfig& config)
{
    if (!config.q) {
        return std::nullopt;
    }
    return parse_parameter(*config.q);
}

/// The primitive roots a strict suite sweeps for n, or the --q override.
std::vector<CycloNum> strict_roots(const RunConfig& config, int n)
{
    if (auto q = q_override(config)) {
        if (!is_primitive_root(*q, n)) {
            throw HypothesisError("q = " + *config.q + " is not a primitive " + std::to_string(n) +
                                  "-th root of unity; use the probe-nonprimitive suite or `sums` instead");
        }
        return {*q};
    }
    return primitive_roots(n);
}

std::vector<int> n_values(const RunConfig& config, std::vector<int> defaults, int lo, int hi)
{
    if (!config.n) {
        return defaults;
    }
    if (*config.n < lo || *config.n > hi) {
        throw std::invalid_argument("--n must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) +
                                    "] for this suite");
    }
    return {*config.n};
}

std::vector<std::pair<int, int>> nm_grid(const RunConfig& config)
{
    static const std::vector<std::pair<int, int>> grid{{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {4, 2}};
    if (config.n && config.m) {
        if (*config.n < 2 || *config.m < 1 || *config.n * *config.m > 12) {
            throw std::invalid_argument("need n >= 2, m >= 1 and mn <= 12");
        }
        return {{*config.n, *config.m}};
    }
    std::vector<std::pair<int, int>> out;
    for (auto [n, m] : grid) {
        if ((!config.n || *config.n == n) && (!config.m || *config.m == m)) {
            out.emplace_back(n, m);
        }
    }
    if (out.empty()) {
        throw std::invalid_argument("no grid point matches the requested n/m");
    }
    return out;
}

std::string nm_name(int n, int m) { return "n=" + std::to_string(n) + " m=" + std::to_string(m); }

// q^e through a precomputed table of q^0..q^{n-1}.
struct PowerTable {
    std::vector<CycloNum> powers;
    PowerTable(const CycloNum& q, int n)
    {
        powers.push_back(CycloNum(1));
        for (int i = 1; i < n; ++i) {
            powers.push_back(powers.back() * q);
        }
    }
    const CycloNum& operator()(long long e) const
    {
        const long long n = static_cast<long long>(powers.size());
        return powers[static_cast<std::size_t>(((e % n) + n) % n)];
    }
};

std::uint64_t count_of_type(int m, const IntPartition& lambda)
{
    std::uint64_t total = 0;
    for (const auto& [key, count] : partition_statistics(m, {})) {
        if (key.first == lambda) {
            total += count;
        }
    }
    return total;
}

// ---- suites ----------------------------------------------------------------

void suite_cumulant_tables(const RunConfig& config, VerificationReport& report)
{
    const CycloNum two_plus_q_cases[] = {CycloNum::root_of_unity(3, 1), CycloNum::root_of_unity(4, 1),
                                         CycloNum::root_of_unity(5, 2), CycloNum(Rational(2, 7))};
    auto alpha2_only = [](const CycloNum& q) {
        return CumulantSequence({CycloNum(0), CycloNum(1), CycloNum(0), CycloNum(0)}, q);
    };
    auto mu4 = [&](const CycloNum& q) { return moments_from_cumulants(alpha2_only(q), 4).at(4); };

    report.instances.push_back({"mu4 classical", mu4(CycloNum(1)) == CycloNum(3), "mu4 = " + mu4(CycloNum(1)).to_string()});
    report.instances.push_back({"mu4 free", mu4(CycloNum(0)) == CycloNum(2), "mu4 = " + mu4(CycloNum(0)).to_string()});
    for (const auto& q : two_plus_q_cases) {
        const CycloNum got = mu4(q);
        report.instances.push_back({"mu4 = 2 + q at q=" + root_label(q), got == CycloNum(2) + q, "mu4 = " + got.to_string()});
    }

    // Full mu_1..mu_4 tables at random rational cumulants.
    std::mt19937_64 rng(config.seed);
    std::vector<CycloNum> qs{CycloNum(1), CycloNum(0), CycloNum::root_of_unity(3, 1), CycloNum::root_of_unity(6, 1),
                             CycloNum(Rational(-3, 5))};
    for (const auto& q : qs) {
        bool ok = true;
        std::string detail;
        for (int t = 0; t < config.trials && ok; ++t) {
            const CycloNum a1 = random_rational(rng), a2 = random_rational(rng), a3 = random_rational(rng),
                           a4 = random_rational(rng);
            const auto mu = moments_from_cumulants(CumulantSequence({a1, a2, a3, a4}, q), 4);
            const CycloNum expected[] = {
                a1,
                a1 * a1 + a2,
                a1 * a1 * a1 + CycloNum(3) * a1 * a2 + a3,
                power(a1, 4) + CycloNum(4) * a1 * a3 + (CycloNum(2) + q) * a2 * a2 + CycloNum(6) * a2 * a1 * a1 + a4,
            };
            for (int k = 1; k <= 4; ++k) {
                if (!(mu.at(k) == expected[k - 1])) {
                    ok = false;
                    detail = "trial " + std::to_string(t) + ": mu_" + std::to_string(k) + " mismatch";
                    break;
                }
            }
            if (ok) {
                const auto back = cumulants_from_moments(mu, q, 4);
                if (!(back.values() == std::vector<CycloNum>{a1, a2, a3, a4})) {
                    ok = false;
                    detail = "trial " + std::to_string(t) + ": round trip failed";
                }
            }
        }
        report.instances.push_back({"table q=" + root_label(q), ok, ok ? std::to_string(config.trials) + " trials" : detail});
    }
    report.parameters["trials"] = config.trials;
}

void suite_lemma_sum_1(const RunConfig& config, VerificationReport& report)
{
    std::vector<int> ns{2, 3, 4, 5, 6, 7, 8};
    ns = n_values(config, ns, 2, 10);
    report.parameters["n"] = ns;
    for (int n : ns) {
        std::vector<OrderedSetPartition> two_part;
        for (auto& p : enumerate_ordered_set_partitions(n)) {
            if (p.part_count() == 2) {
                two_part.push_back(std::move(p));
            }
        }
        // Step law x(sigma P) = x(P) - |A| mod n.
        bool step_ok = true;
        std::string step_detail;
        for (const auto& p : two_part) {
            const int lhs = sorting_number(rotate_labels(p, 1));
            const int rhs = sorting_number(p) - static_cast<int>(p.parts()[0].size());
            if (((lhs - rhs) % n + n) % n != 0) {
                step_ok = false;
                step_detail = "fails at " + p.to_string();
                break;
            }
        }
        report.instances.push_back({"step law n=" + std::to_string(n), step_ok,
                                    step_ok ? std::to_string(two_part.size()) + " partitions" : step_detail});

        std::vector<std::vector<int>> exponents;
        for (const auto& p : two_part) {
            std::vector<int> xs;
            for (int k = 0; k < n; ++k) {
                xs.push_back(sorting_number(rotate_labels(p, k)));
            }
            exponents.push_back(std::move(xs));
        }
        for (const auto& q : strict_roots(config, n)) {
            const PowerTable qp(q, n);
            std::optional<std::size_t> bad;
            for (std::size_t i = 0; i < two_part.size() && !bad; ++i) {
                CycloNum sum;
                for (int x : exponents[i]) {
                    sum += qp(x);
                }
                if (!sum.is_zero()) {
                    bad = i;
                }
            }
            report.instances.push_back({"n=" + std::to_string(n) + " q=" + root_label(q), !bad,
                                        bad ? "nonzero orbit sum at " + two_part[*bad].to_string()
                                            : std::to_string(two_part.size()) + " orbit sums vanish"});
        }
    }
}

void suite_lemma_sum_2(const RunConfig& config, VerificationReport& report)
{
    const auto ns = n_values(config, {2, 3, 4, 5, 6}, 2, 7);
    report.parameters["n"] = ns;
    for (int n : ns) {
        std::vector<OrderedSetPartition> family;
        for (auto& p : enumerate_ordered_set_partitions(n)) {
            if (p.part_count() >= 2) {
                family.push_back(std::move(p));
            }
        }
        // x along the length-n walk P, sigma P, ..., sigma^{n-1} P.
        std::vector<std::vector<int>> exponents(family.size());
        bool order_ok = true;
        for (std::size_t i = 0; i < family.size(); ++i) {
            OrderedSetPartition cur = family[i];
            for (int k = 0; k < n; ++k) {
                exponents[i].push_back(sorting_number(cur));
                cur = bold_sigma(cur);
            }
            order_ok = order_ok && cur == family[i];
        }
        report.instances.push_back({"sigma^n = id n=" + std::to_string(n), order_ok,
                                    std::to_string(family.size()) + " partitions"});
        for (const auto& q : strict_roots(config, n)) {
            const PowerTable qp(q, n);
            std::optional<std::size_t> bad;
            for (std::size_t i = 0; i < family.size() && !bad; ++i) {
                CycloNum sum;
                for (int x : exponents[i]) {
                    sum += qp(x);
                }
                if (!sum.is_zero()) {
                    bad = i;
                }
            }
            report.instances.push_back({"n=" + std::to_string(n) + " q=" + root_label(q), !bad,
                                        bad ? "nonzero sum at " + family[*bad].to_string()
                                            : std::to_string(family.size()) + " sums vanish"});
        }
    }
}

void suite_prop_sum_3(const RunConfig& config, VerificationReport& report)
{
    const auto grid = nm_grid(config);
    Json g = Json::array();
    for (auto [n, m] : grid) {
        g.push_back(Json{{"n", n}, {"m", m}});
        const auto family = enumerate_divisible(m, n);
        // Orbits of the nontrivial part; fixed points must be exactly the aligned ones.
        std::map<SetPartition, bool> seen;
        std::vector<std::vector<SetPartition>> orbits;
        bool fixed_ok = true, sizes_ok = true;
        std::size_t aligned = 0;
        for (const auto& p : family) {
            const bool is_aligned = is_block_aligned(p, m, n);
            aligned += is_aligned;
            const bool fixed = bold_sigma_divisible(p, n) == p;
            fixed_ok = fixed_ok && fixed == is_aligned;
            if (is_aligned || seen.count(p)) {
                continue;
            }
            auto orb = orbit_bold_sigma_divisible(p, n);
            sizes_ok = sizes_ok && n % static_cast<int>(orb.size()) == 0;
            for (const auto& x : orb) {
                seen[x] = true;
            }
            orbits.push_back(std::move(orb));
        }
        report.instances.push_back({"fixed points " + nm_name(n, m), fixed_ok,
                                    std::to_string(aligned) + " aligned of " + std::to_string(family.size())});
        report.instances.push_back({"orbit sizes divide n " + nm_name(n, m), sizes_ok,
                                    std::to_string(orbits.size()) + " nontrivial orbits"});

        // Each orbit of length L is walked n / L times around in sigma^0..sigma^{n-1}.
        std::vector<std::vector<int>> c0s;
        for (const auto& orb : orbits) {
            std::vector<int> xs;
            for (int k = 0; k < n; ++k) {
                xs.push_back(restricted_crossing_number(orb[k % orb.size()]));
            }
            c0s.push_back(std::move(xs));
        }
        for (const auto& q : strict_roots(config, n)) {
            const PowerTable qp(q, n);
            std::optional<std::size_t> bad;
            for (std::size_t i = 0; i < orbits.size() && !bad; ++i) {
                CycloNum sum;
                for (int c : c0s[i]) {
                    sum += qp(c);
                }
                if (!sum.is_zero()) {
                    bad = i;
                }
            }
            report.instances.push_back({"orbit sums " + nm_name(n, m) + " q=" + root_label(q), !bad,
                                        bad ? "nonzero at " + orbits[*bad].front().to_string()
                                            : std::to_string(orbits.size()) + " orbit sums vanish"});
        }
    }
    report.parameters["grid"] = g;
}

void suite_cor_4_5(const RunConfig& config, VerificationReport& report)
{
    const auto grid = nm_grid(config);
    Json g = Json::array();
    for (auto [n, m] : grid) {
        g.push_back(Json{{"n", n}, {"m", m}});
        const auto bell = CycloNum(static_cast<long long>(bell_number(m)));
        const auto aligned = enumerate_block_aligned(m, n).size();
        report.instances.push_back({"|P0| = B_m " + nm_name(n, m), aligned == bell_number(m),
                                    std::to_string(aligned) + " block-aligned"});
        const auto hist = c0_histogram_divisible(m, n, std::nullopt, kernel_options(config));
        for (const auto& q : strict_roots(config, n)) {
            const CycloNum sum = evaluate_histogram(hist, q);
            report.instances.push_back({"sum " + nm_name(n, m) + " q=" + root_label(q), sum == bell,
                                        "sum = " + sum.to_string() + ", B_m = " + bell.to_string()});
        }
    }
    report.parameters["grid"] = g;
}

void suite_cor_5(const RunConfig& config, VerificationReport& report)
{
    const auto grid = nm_grid(config);
    Json g = Json::array();
    for (auto [n, m] : grid) {
        g.push_back(Json{{"n", n}, {"m", m}});
        const auto qs = strict_roots(config, n);
        for (const auto& lambda : integer_partitions(m)) {
            const auto hist = c0_histogram_divisible(m, n, lambda.scaled(n), kernel_options(config));
            const CycloNum expected(static_cast<long long>(count_of_type(m, lambda)));
            for (const auto& q : qs) {
                const CycloNum sum = evaluate_histogram(hist, q);
                report.instances.push_back({nm_name(n, m) + " type " + lambda.to_string() + " q=" + root_label(q),
                                            sum == expected,
                                            "sum = " + sum.to_string() + ", expected " + expected.to_string()});
            }
        }
    }
    report.parameters["grid"] = g;
}

void suite_thm_alpha_beta(const RunConfig& config, VerificationReport& report)
{
    const auto ns = n_values(config, {2, 3, 4}, 2, 12);
    report.parameters["n"] = ns;
    report.parameters["K"] = config.K;
    report.parameters["trials"] = config.trials;
    report.parameters["seed"] = config.seed;
    std::mt19937_64 rng(config.seed);
    for (int n : ns) {
        const auto qs = strict_roots(config, n);
        std::vector<MomentSequence> inputs;
        for (int t = 0; t < config.trials; ++t) {
            inputs.push_back(random_moments(rng, config.K, n));
        }
        for (const auto& q : qs) {
            std::vector<AlphaBetaReport> results(inputs.size());
            const int trials = static_cast<int>(inputs.size());
#pragma omp parallel for schedule(dynamic) num_threads(worker_count(config))
            for (int t = 0; t < trials; ++t) {
                results[t] = verify_alpha_equals_beta(inputs[t], n, q, config.K);
            }
            std::string detail = std::to_string(trials) + " trials";
            bool ok = true;
            for (int t = 0; t < trials; ++t) {
                if (results[t].status != AlphaBetaReport::Status::holds) {
                    ok = false;
                    detail = "trial " + std::to_string(t) + ": " + results[t].message;
                    break;
                }
            }
            report.instances.push_back({"n=" + std::to_string(n) + " q=" + root_label(q), ok, detail});
        }
    }
}

void suite_thm_rq_formula(const RunConfig& config, VerificationReport& report)
{
    const auto ns = n_values(config, {2, 3, 4, 6}, 1, 12);
    report.parameters["n"] = ns;
    report.parameters["K"] = config.K;
    report.parameters["trials"] = config.trials;
    std::mt19937_64 rng(config.seed);
    for (int n : ns) {
        for (const auto& q : strict_roots(config, n)) {
            for (int delta = 0; delta < n; ++delta) {
                const int period = graded_period(delta, n);
                std::vector<MomentSequence> inputs;
                for (int t = 0; t < config.trials; ++t) {
                    inputs.push_back(random_moments(rng, config.K, period));
                }
                std::vector<char> ok(inputs.size());
                const int trials = static_cast<int>(inputs.size());
#pragma omp parallel for schedule(dynamic) num_threads(worker_count(config))
                for (int t = 0; t < trials; ++t) {
                    ok[t] = graded_r_transform(inputs[t], delta, n, q, config.K) ==
                            graded_r_log_formula(inputs[t], delta, n, config.K);
                }
                const auto bad = std::find(ok.begin(), ok.end(), 0);
                report.instances.push_back(
                    {"n=" + std::to_string(n) + " q=" + root_label(q) + " delta=" + std::to_string(delta),
                     bad == ok.end(),
                     bad == ok.end() ? "n' = " + std::to_string(period) + ", " + std::to_string(trials) + " trials"
                                     : "trial " + std::to_string(bad - ok.begin()) + " differs"});
            }
        }
    }
}

template <class Check>
InstanceResult random_trials(const std::string& name, int trials, Check check)
{
    for (int t = 0; t < trials; ++t) {
        if (!check(t)) {
            return {name, false, "trial " + std::to_string(t) + " fails"};
        }
    }
    return {name, true, std::to_string(trials) + " trials"};
}

FormalSeries random_series(std::mt19937_64& rng, int K, CycloNum c0)
{
    FormalSeries f(K);
    f.set_coeff(0, c0);
    for (int k = 1; k <= K; ++k) {
        f.set_coeff(k, random_rational(rng, 50));
    }
    return f;
}

void suite_series_identities(const RunConfig& config, VerificationReport& report)
{
    const int K = config.K;
    report.parameters["K"] = K;
    report.parameters["trials"] = config.trials;
    std::mt19937_64 rng(config.seed);
    report.instances.push_back(random_trials("exp/log inverse", config.trials, [&](int) {
        const auto f = random_series(rng, K, CycloNum(1));
        const auto g = random_series(rng, K, CycloNum(0));
        return series_exp(series_log(f)) == f && series_log(series_exp(g)) == g;
    }));
    report.instances.push_back(random_trials("comp_inverse two-sided", config.trials, [&](int) {
        auto f = random_series(rng, std::min(K, 8), CycloNum(0));
        if (f.coeff(1).is_zero()) {
            f.set_coeff(1, CycloNum(1));
        }
        const auto g = comp_inverse(f);
        const auto z = FormalSeries::identity(f.truncation());
        return compose(f, g) == z && compose(g, f) == z;
    }));
    report.instances.push_back(random_trials("R1 cumulants = log EGF", config.trials, [&](int) {
        const auto mu = random_moments(rng, K, 1);
        return r1_transform(mu, K) == r1_via_log(mu, K);
    }));
    report.instances.push_back(random_trials("R0 relation G(K(z)) = z", config.trials, [&](int) {
        const auto mu = random_moments(rng, std::min(K, 8), 1);
        return r0_functional_relation_holds(mu, std::min(K, 8));
    }));
    report.instances.push_back(random_trials("R1 additive under classical convolution", config.trials, [&](int) {
        const auto x = random_moments(rng, K, 1);
        const auto y = random_moments(rng, K, 1);
        std::vector<CycloNum> sum;
        for (int k = 1; k <= K; ++k) {
            CycloNum acc;
            Integer binom = 1;
            for (int j = 0; j <= k; ++j) {
                acc += CycloNum(Rational(binom)) * x.at(j) * y.at(k - j);
                binom = binom * (k - j) / (j + 1);
            }
            sum.push_back(acc);
        }
        return r1_transform(MomentSequence(sum), K) == r1_transform(x, K) + r1_transform(y, K);
    }));
    for (int n : {2, 3, 4}) {
        for (const auto& q : primitive_roots(n)) {
            report.instances.push_back(
                random_trials("r_{n,q} = R1[mu_{a^n}](z^n) n=" + std::to_string(n) + " q=" + root_label(q),
                              std::max(1, config.trials / 4), [&](int) {
                                  const auto mu = random_moments(rng, K, n);
                                  const auto lhs = rnq_transform(mu, n, q, K);
                                  const auto rhs = r1_transform(power_moments(mu, n, K / n), K / n).substitute_power(n, K);
                                  return lhs == rhs;
                              }));
        }
    }
}

void suite_lemma_power_rule(const RunConfig& config, VerificationReport& report)
{
    const auto ns = n_values(config, {2, 3, 4, 5, 6}, 2, 8);
    report.parameters["n"] = ns;
    for (int n : ns) {
        for (const auto& q : strict_roots(config, n)) {
            const auto rot = AlgebraSpec::rotation(n, q);
            const auto cl = AlgebraSpec::clifford(2, n, q);
            for (int r = 0; r < n; ++r) {
                const int np = graded_period(r, n);
                // b a = q^{r^2} a b; the expansion cancels only if q^{r^2} has order n'.
                const std::string detail = "n' = " + std::to_string(np) + ", q^{r^2} has order " +
                                           std::to_string(unity_order(power(q, r * r)));
                const std::string tag = "n=" + std::to_string(n) + " q=" + root_label(q) + " r=" + std::to_string(r);
                report.instances.push_back({"rotation u^r, v^r " + tag,
                                            verify_power_rule(rotation_u(rot, r), rotation_v(rot, r)), detail});
                report.instances.push_back({"clifford e1^r, e2^r " + tag,
                                            verify_power_rule(clifford_e(cl, 1, r), clifford_e(cl, 2, r)), detail});
            }
            report.instances.push_back({"b = 0 n=" + std::to_string(n) + " q=" + root_label(q),
                                        verify_power_rule(rotation_u(rot), AlgebraElement(rot)), "trivial"});
        }
    }
}

void suite_thm_linearize(const RunConfig& config, VerificationReport& report)
{
    const int K = config.K;
    report.parameters["K"] = K;
    auto add = [&](const std::string& name, const AlgebraElement& a, const AlgebraElement& b) {
        const auto rep = verify_linearization(a, b, K);
        std::string detail = "degree " + std::to_string(rep.degree);
        const FormalSeries sum = rep.r_a + rep.r_b;
        for (int k = 0; k <= K; ++k) {
            if (!(rep.r_sum.coeff(k) == sum.coeff(k))) {
                detail += ", z^" + std::to_string(k) + ": r[a+b] has " + rep.r_sum.coeff(k).to_string() +
                          ", r[a] + r[b] has " + sum.coeff(k).to_string();
                break;
            }
        }
        report.instances.push_back({name, rep.additive, detail});
    };
    const auto ns = n_values(config, {2, 3, 4}, 2, 6);
    report.parameters["n"] = ns;
    for (int n : ns) {
        for (const auto& q : strict_roots(config, n)) {
            const std::string tag = " n=" + std::to_string(n) + " q=" + root_label(q);
            const auto rot = AlgebraSpec::rotation(n, q);
            const auto cl = AlgebraSpec::clifford(2, n, q);
            add("rotation u, v" + tag, rotation_u(rot), rotation_v(rot));
            add("clifford e1, e2" + tag, clifford_e(cl, 1), clifford_e(cl, 2));
            // Homogeneous of degree 1 with nonzero moments.
            add("rotation u + u^{1-n}, v + 2v^{1-n}" + tag, rotation_u(rot) + rotation_u(rot, 1 - n),
                rotation_v(rot) + CycloNum(2) * rotation_v(rot, 1 - n));
            add("clifford 3e1, e2/2" + tag, CycloNum(3) * clifford_e(cl, 1),
                CycloNum(Rational(1, 2)) * clifford_e(cl, 2));
            if (n % 2 == 0 && n > 2) {
                add("rotation u^2 + u^{2-n}, v^2 + v^{2-n}" + tag, rotation_u(rot, 2) + rotation_u(rot, 2 - n),
                    rotation_v(rot, 2) + rotation_v(rot, 2 - n));
            }
            if (n == 3) {
                add("rotation u^3, v^3" + tag, rotation_u(rot, 3), rotation_v(rot, 3));
                add("rotation 1 + u^3, v^3 - v^{-3}" + tag, AlgebraElement::scalar(rot, CycloNum(1)) + rotation_u(rot, 3),
                    rotation_v(rot, 3) - rotation_v(rot, -3));
            }
        }
    }
}

void suite_remark_n2(const RunConfig& config, VerificationReport& report)
{
    const int max_m = config.m ? *config.m : 4;
    if (max_m < 1 || max_m > 6) {
        throw std::invalid_argument("--m must lie in [1, 6] for this suite");
    }
    report.parameters["m_max"] = max_m;
    for (int m = 1; m <= max_m; ++m) {
        const auto scan = congruence_scan(m, 2, kernel_options(config));
        report.instances.push_back({"c0 = c mod 2 on P_2[" + std::to_string(2 * m) + "]", scan.violations == 0,
                                    std::to_string(scan.family_size) + " partitions, " +
                                        std::to_string(scan.violations) + " violations"});
    }
}

void suite_remark_n3(const RunConfig& config, VerificationReport& report)
{
    const int m = config.m ? *config.m : 3;
    if (m < 1 || m > 4) {
        throw std::invalid_argument("--m must lie in [1, 4] for this suite");
    }
    report.parameters["n"] = 3;
    report.parameters["m"] = m;
    const auto scan = congruence_scan(m, 3, kernel_options(config));
    std::string detail = std::to_string(scan.violations) + " of " + std::to_string(scan.family_size) + " violate";
    if (scan.witness) {
        detail += "; witness " + scan.witness->to_string() + " with c0 = " +
                  std::to_string(restricted_crossing_number(*scan.witness)) +
                  ", c = " + std::to_string(crossing_number(*scan.witness));
    }
    report.instances.push_back({"witness with c0 != c mod 3 in P_3[" + std::to_string(3 * m) + "]",
                                scan.witness.has_value(), detail});
}

AlgebraSpec structural_model(int index)
{
    const auto z3 = CycloNum::root_of_unity(3, 1);
    const auto z4 = CycloNum::root_of_unity(4, 1);
    switch (index) {
    case 0: return AlgebraSpec::rotation(3, z3);
    case 1: return AlgebraSpec::rotation(4, CycloNum::root_of_unity(4, 3));
    case 2: return AlgebraSpec::clifford(3, 3, z3);
    case 3: return AlgebraSpec::clifford(2, 4, z4);
    case 4: return AlgebraSpec::laurent(5, CycloNum::root_of_unity(5, 2));
    case 5: return AlgebraSpec::tensor(AlgebraSpec::clifford(1, 3, z3), AlgebraSpec::rotation(3, z3));
    case 6: return AlgebraSpec::tensor(AlgebraSpec::laurent(4, z4), AlgebraSpec::laurent(4, z4));
    default: return AlgebraSpec::tensor(AlgebraSpec::tensor(AlgebraSpec::laurent(3, z3), AlgebraSpec::clifford(2, 3, z3)),
                                        AlgebraSpec::rotation(3, z3));
    }
}
constexpr int kStructuralModels = 8;

Monomial random_monomial(const AlgebraSpec& spec, std::mt19937_64& rng)
{
    switch (spec.kind()) {
    case AlgebraSpec::Kind::tensor: {
        Monomial left = random_monomial(spec.left(), rng);
        const Monomial right = random_monomial(spec.right(), rng);
        left.insert(left.end(), right.begin(), right.end());
        return left;
    }
    case AlgebraSpec::Kind::clifford: {
        std::uniform_int_distribution<int> d(0, spec.n() - 1);
        Monomial m(static_cast<std::size_t>(spec.width()));
        for (auto& e : m) {
            e = d(rng);
        }
        return m;
    }
    default: {
        std::uniform_int_distribution<int> d(-3, 3);
        Monomial m(static_cast<std::size_t>(spec.width()));
        for (auto& e : m) {
            e = d(rng);
        }
        return m;
    }
    }
}

AlgebraElement random_element(const AlgebraSpec& spec, std::mt19937_64& rng, int terms = 4)
{
    AlgebraElement x(spec);
    std::uniform_int_distribution<int> k(0, spec.n() - 1);
    for (int i = 0; i < terms; ++i) {
        const CycloNum c = CycloNum(random_rational(rng, 20)) * CycloNum::root_of_unity(spec.n(), k(rng));
        x += AlgebraElement::basis(spec, random_monomial(spec, rng), c);
    }
    // Make phi nontrivial.
    x += AlgebraElement::scalar(spec, CycloNum(random_rational(rng, 20)));
    return x;
}

void suite_structural(const RunConfig& config, VerificationReport& report)
{
    std::mt19937_64 rng(config.seed);
    const int trials = config.trials;
    report.parameters["trials"] = trials;
    report.parameters["seed"] = config.seed;
    for (int i = 0; i < kStructuralModels; ++i) {
        const auto spec = structural_model(i);
        const int n = spec.n();
        const std::string tag = " [" + spec.describe() + "]";
        report.instances.push_back(random_trials("phi o gamma = phi, gamma^n = id" + tag, trials, [&](int) {
            const auto x = random_element(spec, rng);
            return phi(apply_grading(x)) == phi(x) && grading_power(x, n) == x;
        }));
        report.instances.push_back(random_trials("phi = phi o E_0, phi o E_r = 0" + tag, trials, [&](int) {
            const auto x = random_element(spec, rng);
            if (!(phi(homogeneous_projection(x, 0)) == phi(x))) {
                return false;
            }
            AlgebraElement total(spec);
            for (int r = 0; r < n; ++r) {
                const auto e = homogeneous_projection(x, r);
                total += e;
                if (r != 0 && !phi(e).is_zero()) {
                    return false;
                }
                const auto d = degree_of(e);
                if (d.kind == Degree::Kind::inhomogeneous ||
                    (d.kind == Degree::Kind::homogeneous && d.residue != r)) {
                    return false;
                }
            }
            return total == x;
        }));
        report.instances.push_back(random_trials("eigenspace multiplicativity" + tag, trials, [&](int t) {
            const auto x = random_element(spec, rng);
            const auto y = random_element(spec, rng);
            const int r = t % n, s = (t / n) % n;
            const auto d = degree_of(homogeneous_projection(x, r) * homogeneous_projection(y, s));
            return d.kind == Degree::Kind::zero ||
                   (d.kind == Degree::Kind::homogeneous && d.residue == (r + s) % n);
        }));
        report.instances.push_back(random_trials("associativity" + tag, trials, [&](int) {
            const auto x = random_element(spec, rng, 3);
            const auto y = random_element(spec, rng, 3);
            const auto z = random_element(spec, rng, 3);
            return (x * y) * z == x * (y * z);
        }));
        if (spec.kind() == AlgebraSpec::Kind::tensor) {
            const auto& L = spec.left();
            const auto& R = spec.right();
            report.instances.push_back(random_trials("injections are morphisms" + tag, trials, [&](int) {
                const auto a = random_element(L, rng, 3), a2 = random_element(L, rng, 3);
                const auto b = random_element(R, rng, 3), b2 = random_element(R, rng, 3);
                return inject_left(spec, a * a2) == inject_left(spec, a) * inject_left(spec, a2) &&
                       inject_right(spec, b * b2) == inject_right(spec, b) * inject_right(spec, b2) &&
                       phi(inject_left(spec, a)) == phi(a) && phi(inject_right(spec, b)) == phi(b) &&
                       apply_grading(inject_left(spec, a)) == inject_left(spec, apply_grading(a)) &&
                       apply_grading(inject_right(spec, b)) == inject_right(spec, apply_grading(b));
            }));
        }
    }

    // (A (x) B) (x) C against A (x) (B (x) C) on basis monomials.
    {
        const auto z3 = CycloNum::root_of_unity(3, 1);
        const auto A = AlgebraSpec::rotation(3, z3), B = AlgebraSpec::clifford(2, 3, z3), C = AlgebraSpec::laurent(3, z3);
        const auto lhs = AlgebraSpec::tensor(AlgebraSpec::tensor(A, B), C);
        const auto rhs = AlgebraSpec::tensor(A, AlgebraSpec::tensor(B, C));
        report.instances.push_back(random_trials("tensor associativity on bases", trials * 5, [&](int) {
            const auto x = random_monomial(lhs, rng);
            const auto y = random_monomial(lhs, rng);
            const auto p = multiply_monomials(lhs, x, y);
            const auto q = multiply_monomials(rhs, x, y);
            return p.monomial == q.monomial && (p.phase - q.phase) % 3 == 0;
        }));
    }

    // The inner automorphism Ad(u^-1 v) against the spectral grading.
    for (int n : {3, 4, 5}) {
        const auto q = CycloNum::root_of_unity(n, 1);
        for (const auto& spec : {AlgebraSpec::rotation(n, q), AlgebraSpec::tensor(AlgebraSpec::laurent(n, q),
                                                                                  AlgebraSpec::laurent(n, q))}) {
            bool ok = true;
            for (int a = -4; a <= 4 && ok; ++a) {
                for (int b = -4; b <= 4 && ok; ++b) {
                    const auto x = AlgebraElement::basis(spec, {a, b});
                    ok = inner_grading(x) == apply_grading(x);
                }
            }
            report.instances.push_back({"Ad(u^-1 v) = gamma [" + spec.describe() + "]", ok, "exponents in [-4, 4]^2"});
        }
    }
}

void suite_probe_nonprimitive(const RunConfig& config, VerificationReport& report)
{
    report.probe = true;
    const auto ns = n_values(config, {4, 6}, 2, 10);
    report.parameters["n"] = ns;
    std::mt19937_64 rng(config.seed);
    for (int n : ns) {
        std::vector<CycloNum> qs;
        if (auto q = q_override(config)) {
            qs.push_back(*q);
        } else {
            for (int d = 2; d < n; ++d) {
                if (n % d == 0) {
                    for (const auto& q : primitive_roots(d)) {
                        qs.push_back(q);
                    }
                }
            }
        }
        std::vector<OrderedSetPartition> two_part;
        for (auto& p : enumerate_ordered_set_partitions(n)) {
            if (p.part_count() == 2) {
                two_part.push_back(std::move(p));
            }
        }
        const int m = 12 / n;
        const auto hist = c0_histogram_divisible(m, n, std::nullopt, kernel_options(config));
        for (const auto& q : qs) {
            if (q.is_one() || !power(q, n).is_one()) {
                throw HypothesisError("probe needs a proper n-th root of unity, got " + root_label(q));
            }
            const std::string tag = "n=" + std::to_string(n) + " q=" + root_label(q);
            const PowerTable qp(q, n);
            std::size_t nonzero = 0;
            for (const auto& p : two_part) {
                CycloNum sum;
                for (int k = 0; k < n; ++k) {
                    sum += qp(sorting_number(rotate_labels(p, k)));
                }
                nonzero += !sum.is_zero();
            }
            report.instances.push_back({"two-part rotation sums " + tag, nonzero == 0,
                                        std::to_string(nonzero) + " of " + std::to_string(two_part.size()) +
                                            " orbit sums are nonzero"});
            const CycloNum sum = evaluate_histogram(hist, q);
            report.instances.push_back({"divisible sum m=" + std::to_string(m) + " " + tag,
                                        sum == CycloNum(static_cast<long long>(bell_number(m))),
                                        "sum = " + sum.to_string() + ", B_m = " + std::to_string(bell_number(m))});
            int holds = 0;
            const int trials = std::max(1, config.trials / 4);
            for (int t = 0; t < trials; ++t) {
                holds += verify_alpha_equals_beta(random_moments(rng, config.K, n), n, q, config.K).status ==
                         AlphaBetaReport::Status::holds;
            }
            report.instances.push_back({"alpha = beta " + tag, holds == trials,
                                        std::to_string(holds) + " of " + std::to_string(trials) + " trials agree"});
        }
    }
}

const std::vector<std::pair<std::string, Suite>>& registry()
{
    static const std::vector<std::pair<std::string, Suite>> suites{
        {"cumulant-tables", suite_cumulant_tables},
        {"lemma-sum-1", suite_lemma_sum_1},
        {"lemma-sum-2", suite_lemma_sum_2},
        {"prop-sum-3", suite_prop_sum_3},
        {"cor-4.5", suite_cor_4_5},
        {"cor-5", suite_cor_5},
        {"thm-alpha-beta", suite_thm_alpha_beta},
        {"thm-rq-formula", suite_thm_rq_formula},
        {"series-identities", suite_series_identities},
        {"lemma-power-rule", suite_lemma_power_rule},
        {"thm-linearize", suite_thm_linearize},
        {"remark-n2-congruence", suite_remark_n2},
        {"remark-n3-counterexample", suite_remark_n3},
        {"structural", suite_structural},
        {"probe-nonprimitive", suite_probe_nonprimitive},
    };
    return suites;
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        out += c;
        if (c == '"') {
            out += '"';
        }
    }
    return out + "\"";
}

}  // namespace

bool VerificationReport::passed() const
{
    return probe || std::all_of(instances.begin(), instances.end(), [](const auto& r) { return r.pass; });
}

const std::vector<std::string>& suite_ids()
{
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out;
        for (const auto& [id, suite] : registry()) {
            if (id != "probe-nonprimitive") {
                out.push_back(id);
            }
        }
        return out;
    }();
    return ids;
}

const std::vector<std::string>& all_suite_ids()
{
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out;
        for (const auto& [id, suite] : registry()) {
            out.push_back(id);
        }
        return out;
    }();
    return ids;
}

VerificationReport run_suite(const std::string& id, const RunConfig& config)
{
    if (config.K < 1 || config.K > kMaxCumulantOrder) {
        throw std::invalid_argument("--K must lie in [1, " + std::to_string(kMaxCumulantOrder) + "]");
    }
    if (config.trials < 1) {
        throw std::invalid_argument("--trials must be positive");
    }
    for (const auto& [name, suite] : registry()) {
        if (name == id) {
            VerificationReport report;
            report.suite = id;
            if (config.q) {
                report.parameters["q"] = *config.q;
            }
            const auto start = std::chrono::steady_clock::now();
            suite(config, report);
            report.wall_ms =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
            return report;
        }
    }
    throw std::invalid_argument("unknown suite '" + id + "'");
}

Json report_to_json(const VerificationReport& report, bool timing)
{
    Json j;
    j["suite"] = report.suite;
    j["status"] = report.probe ? "observed" : (report.passed() ? "pass" : "fail");
    j["parameters"] = report.parameters;
    Json instances = Json::array();
    for (const auto& r : report.instances) {
        instances.push_back(Json{{"name", r.name}, {report.probe ? "holds" : "pass", r.pass}, {"detail", r.detail}});
    }
    j["instances"] = std::move(instances);
    if (timing) {
        j["wall_ms"] = report.wall_ms;
    }
    return j;
}

std::string report_to_csv(const std::vector<VerificationReport>& reports)
{
    std::ostringstream os;
    os << "suite,instance,result,detail\n";
    for (const auto& report : reports) {
        for (const auto& r : report.instances) {
            const char* result = report.probe ? (r.pass ? "holds" : "fails") : (r.pass ? "PASS" : "FAIL");
            os << csv_field(report.suite) << ',' << csv_field(r.name) << ',' << result << ',' << csv_field(r.detail)
               << '\n';
        }
    }
    return os.str();
}

std::string report_to_pretty(const VerificationReport& report, bool timing)
{
    std::ostringstream os;
    const auto passed = std::count_if(report.instances.begin(), report.instances.end(), [](const auto& r) { return r.pass; });
    os << report.suite << ": "
       << (report.probe ? "OBSERVED (probe, not asserted)" : (report.passed() ? "PASS" : "FAIL")) << " (" << passed
       << '/' << report.instances.size() << ')';
    if (timing) {
        os << " in " << static_cast<long long>(report.wall_ms) << " ms";
    }
    os << '\n';
    for (const auto& r : report.instances) {
        const char* tag = report.probe ? (r.pass ? "holds" : "fails") : (r.pass ? "PASS" : "FAIL");
        os << "  [" << tag << "] " << r.name;
        if (!r.detail.empty()) {
            os << "  (" << r.detail << ')';
        }
        os << '\n';
    }
    return os.str();
}

Rational random_rational(std::mt19937_64& rng, long bound)
{
    std::uniform_int_distribution<long> num(-bound, bound);
    std::uniform_int_distribution<long> den(1, bound);
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

MomentSequence random_moments(std::mt19937_64& rng, int K, int period)
{
    std::vector<CycloNum> values;
    for (int k = 1; k <= K; ++k) {
        values.push_back(k % period == 0 ? CycloNum(random_rational(rng)) : CycloNum(0));
    }
    return MomentSequence(std::move(values));
}

std::vector<CycloNum> primitive_roots(int n)
{
    std::vector<CycloNum> out;
    for (int k = 1; k <= n; ++k) {
        if (std::gcd(k, n) == 1) {
            out.push_back(CycloNum::root_of_unity(n, k % n));
        }
    }
    return out;
}

}  // namespace gradind
