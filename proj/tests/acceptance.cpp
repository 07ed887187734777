// Acceptance gate: one PASS/FAIL line per criterion, exact arithmetic throughout.

#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "gradind/algebra.hpp"
#include "gradind/verify.hpp"

using namespace gradind;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

Outcome from_suites(std::initializer_list<const char*> ids)
{
    Outcome o;
    std::ostringstream detail;
    for (const char* id : ids) {
        const auto report = run_suite(id, RunConfig{});
        int ok = 0;
        std::string first_failure;
        for (const auto& inst : report.instances) {
            ok += inst.pass;
            if (!inst.pass && first_failure.empty()) {
                first_failure = inst.name + ": " + inst.detail;
            }
        }
        detail << (detail.tellp() > 0 ? "; " : "") << id << ' ' << ok << '/' << report.instances.size();
        if (!first_failure.empty()) {
            detail << " first failure " << first_failure;
        }
        o.pass = o.pass && report.passed();
    }
    o.detail = detail.str();
    return o;
}

Outcome power_rule()
{
    Outcome o;
    int checked = 0;
    std::ostringstream bad;
    for (int n = 2; n <= 6; ++n) {
        const auto q = CycloNum::root_of_unity(n, 1);
        const auto rot = AlgebraSpec::rotation(n, q);
        for (int r = 1; r <= n; ++r) {
            ++checked;
            const int np = n / std::gcd(r, n);
            const auto a = rotation_u(rot, r), b = rotation_v(rot, r);
            if (verify_power_rule(a, b)) {
                continue;
            }
            o.pass = false;
            const auto lhs = power(a + b, np);
            bad << " [n=" << n << " r=" << r << " n'=" << np << ": (u^r+v^r)^n' = " << lhs.to_string()
                << ", q^{r^2} = " << power(q, static_cast<long long>(r) * r).to_string() << ']';
        }
    }
    o.detail = std::to_string(checked) + " cases";
    if (!o.pass) {
        o.detail += ", failing:" + bad.str() +
                    " (u^r and v^r commute up to q^{r^2}, which is 1 rather than a primitive n'-th root when gcd(r^2, n) != gcd(r, n))";
    }
    return o;
}

Outcome linearization()
{
    Outcome o;
    int checked = 0;
    auto check = [&](const std::string& name, const AlgebraElement& a, const AlgebraElement& b) {
        ++checked;
        const auto rep = verify_linearization(a, b, 12);
        if (!rep.additive) {
            o.pass = false;
            o.detail += " [" + name + " not additive]";
        }
    };
    for (int n : {2, 3, 4}) {
        const auto q = CycloNum::root_of_unity(n, 1);
        const auto rot = AlgebraSpec::rotation(n, q);
        check("rotation n=" + std::to_string(n), rotation_u(rot), rotation_v(rot));
        const auto cl = AlgebraSpec::clifford(2, n, q);
        check("clifford n=" + std::to_string(n), clifford_e(cl, 1), clifford_e(cl, 2));
    }
    const auto rot3 = AlgebraSpec::rotation(3, CycloNum::root_of_unity(3, 1));
    check("u^3, v^3", rotation_u(rot3, 3), rotation_v(rot3, 3));
    o.detail = std::to_string(checked) + " instances through z^12" + o.detail;
    return o;
}

struct Criterion {
    int id;
    const char* title;
    double limit_s;
    std::function<Outcome()> run;
};

}  // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "cumulant tables", 1, [] { return from_suites({"cumulant-tables"}); }},
        {2, "orbit sums over 2-part ordered partitions", 30, [] { return from_suites({"lemma-sum-1"}); }},
        {3, "orbit sums over ordered partitions", 60, [] { return from_suites({"lemma-sum-2"}); }},
        {4, "orbit sums vanish and q^c0 sums equal Bell numbers", 120,
         [] { return from_suites({"prop-sum-3", "cor-4.5"}); }},
        {5, "type-restricted sums", 120, [] { return from_suites({"cor-5"}); }},
        {6, "alpha = beta", 120, [] { return from_suites({"thm-alpha-beta"}); }},
        {7, "graded r-transform log formula", 120, [] { return from_suites({"thm-rq-formula"}); }},
        {8, "power rule, all r and n <= 6", 60, power_rule},
        {9, "r-transform linearizes on listed instances", 60, linearization},
        {10, "n=2 congruence and n=3 witness", 60,
         [] { return from_suites({"remark-n2-congruence", "remark-n3-counterexample"}); }},
        {11, "structural identities", 120, [] { return from_suites({"structural"}); }},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > c.limit_s) {
            o.pass = false;
            o.detail += " (over time limit " + std::to_string(static_cast<int>(c.limit_s)) + " s)";
        }
        failed += !o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << c.id << "  " << c.title << "  ("
                  << o.detail << ")\n";
    }
    std::cout << (criteria.size() - failed) << '/' << criteria.size() << " criteria pass\n";
    return failed == 0 ? 0 : 1;
}
