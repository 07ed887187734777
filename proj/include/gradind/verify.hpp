#pragma once

// Verification suites, one per combinatorial or transform identity. Each
// suite sweeps a parameter grid and records one pass/fail line per instance.
// Reports are deterministic given the configuration and seed; wall time is
// kept out of the serialized report unless explicitly requested.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gradind/json_io.hpp"

namespace gradind {

struct RunConfig {
    std::optional<int> n;
    std::optional<int> m;
    std::optional<std::string> q;
    int K = kDefaultTruncation;
    std::uint64_t seed = 20240601;
    int trials = 20;
    int workers = 0;
};

struct InstanceResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerificationReport {
    std::string suite;
    Json parameters = Json::object();
    std::vector<InstanceResult> instances;
    /// Observational reports never fail.
    bool probe = false;
    double wall_ms = 0;

    bool passed() const;
};

/// Suites run by "all", in order.
const std::vector<std::string>& suite_ids();
/// Every known suite id, including probes.
const std::vector<std::string>& all_suite_ids();

/// Throws std::invalid_argument for an unknown id.
VerificationReport run_suite(const std::string& id, const RunConfig& config);

Json report_to_json(const VerificationReport& report, bool timing);
std::string report_to_csv(const std::vector<VerificationReport>& reports);
std::string report_to_pretty(const VerificationReport& report, bool timing);

/// Uniform rational p/q with |p| <= bound and 1 <= q <= bound.
Rational random_rational(std::mt19937_64& rng, long bound = 1000000);

/// Moments mu_1..mu_K, random on multiples of period and zero elsewhere.
MomentSequence random_moments(std::mt19937_64& rng, int K, int period = 1);

/// Primitive n-th roots zeta_n^k, gcd(k, n) = 1, in increasing k.
std::vector<CycloNum> primitive_roots(int n);

}  // namespace gradind
