#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "gradind/cli.hpp"
#include "gradind/json_io.hpp"

using namespace gradind;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args, const std::string& input = "")
{
    args.insert(args.begin(), "gradind");
    std::vector<const char*> argv;
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), in, out, err);
    return {code, out.str(), err.str()};
}

int count_lines(const std::string& s)
{
    return static_cast<int>(std::count(s.begin(), s.end(), '\n'));
}

std::string write_temp(const std::string& name, const std::string& body)
{
    const std::string path = "cli_test_" + name + ".json";
    std::ofstream(path) << body;
    return path;
}

}  // namespace

TEST_CASE("partitions listing")
{
    auto r = run({"partitions", "--N", "4"});
    CHECK(r.code == 0);
    CHECK(count_lines(r.out) == 16);
    CHECK(r.out.rfind("partition,c,c0,type\n", 0) == 0);

    r = run({"partitions", "--N", "8", "--divisible", "4", "--type", "4,4"});
    CHECK(r.code == 0);
    CHECK(count_lines(r.out) == 36);

    r = run({"partitions", "--N", "6", "--divisible", "2", "--block-aligned", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out).size() == 5);

    CHECK(run({"partitions", "--N", "13"}).code == 2);
}

TEST_CASE("sums")
{
    auto r = run({"sums", "--n", "2", "--m", "3", "--q", "-1", "--format", "json"});
    CHECK(r.code == 0);
    auto j = Json::parse(r.out);
    CHECK(j["sum"] == "5");
    CHECK(j["block_aligned"] == 5);
    CHECK(j["verdict"] == "PASS");

    r = run({"sums", "--n", "3", "--m", "2", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out)["sum"] == "2");

    r = run({"sums", "--n", "2", "--m", "3", "--type", "2,1", "--per-orbit", "--format", "json"});
    CHECK(r.code == 0);
    j = Json::parse(r.out);
    CHECK(j["sum"] == "3");
    CHECK(j["family_size"] == 15);

    r = run({"sums", "--n", "4", "--m", "2", "--q", "-1", "--format", "json"});
    CHECK(r.code == 0);
    j = Json::parse(r.out);
    CHECK(j["mode"] == "probe");
    CHECK(j["sum"] == "4");
    CHECK(j["verdict"] == "observed-different");

    CHECK(run({"sums", "--n", "4", "--m", "2", "--q", "1"}).code == 2);
    CHECK(run({"sums", "--n", "3", "--m", "2", "--type", "1"}).code == 2);
}

TEST_CASE("verify output does not depend on workers")
{
    const auto a = run({"verify", "lemma-sum-1", "--n", "3", "--workers", "1", "--format", "json"});
    const auto b = run({"verify", "lemma-sum-1", "--n", "3", "--workers", "3", "--format", "json"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const auto c = run({"verify", "cumulant-tables", "--format", "csv"});
    CHECK(c.code == 0);
    CHECK(c.out.rfind("suite,instance,result,detail\n", 0) == 0);
}

TEST_CASE("verify exit codes")
{
    CHECK(run({"verify", "no-such-suite"}).code == 2);
    CHECK(run({"verify", "lemma-sum-1", "--n", "3", "--q", "-1"}).code == 2);
    CHECK(run({"verify", "lemma-power-rule", "--n", "3"}).code == 0);
    const auto bad = run({"verify", "lemma-power-rule", "--n", "4", "--format", "json"});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("\"fail\"") != std::string::npos);
}

TEST_CASE("cumulant conversion")
{
    auto r = run({"cumulants", "convert", "--q", "zeta:3:1", "--direction", "c2m"}, "[0, 1, 0, 0]");
    CHECK(r.code == 0);
    const auto mu = values_from_json(Json::parse(r.out));
    CHECK(mu[3] == CycloNum(2) + CycloNum::root_of_unity(3, 1));

    r = run({"cumulants", "convert", "--q", "1/2", "--direction", "m2c"}, "[1,2,3,4,5,6]");
    CHECK(r.code == 0);
    const auto back = run({"cumulants", "convert", "--q", "1/2", "--direction", "c2m"}, r.out);
    CHECK(Json::parse(back.out) == Json::parse("[\"1\",\"2\",\"3\",\"4\",\"5\",\"6\"]"));

    CHECK(run({"cumulants", "convert", "--q", "1"}, "not json").code == 2);
}

TEST_CASE("series")
{
    auto r = run({"series", "r1", "--K", "4"}, "[0, 1, 0, 3]");
    CHECK(r.code == 0);
    const auto s = series_from_json(Json::parse(r.out));
    CHECK(s.coeff(2) == CycloNum(Rational(1, 2)));
    CHECK(s.coeff(4).is_zero());

    r = run({"series", "rnq", "--n", "2", "--K", "4"}, "[1, 0, 1, 0]");
    CHECK(r.code == 2);
}

TEST_CASE("algebra actions")
{
    const auto model = write_temp("model", R"({"kind": "rotation", "n": 3, "q": "zeta:3:1"})");
    const auto u = write_temp("u", R"([{"monomial": [1, 0], "coeff": 1}])");
    const auto v = write_temp("v", R"([{"monomial": [0, 1], "coeff": 1}])");
    auto r = run({"algebra", "moments", "--model", model, "--element", u, "--K", "6"});
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out) == Json::parse(R"(["0","0","0","0","0","0"])"));

    r = run({"algebra", "linearize", "--model", model, "--element", u, "--other", v, "--K", "9"});
    CHECK(r.code == 0);

    r = run({"algebra", "rtransform", "--model", "-", "--element", u, "--K", "6"},
            R"({"kind": "rotation", "n": 3, "q": "zeta:3:1"})");
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out)["degree"] == 1);

    CHECK(run({"algebra", "moments", "--model", model, "--element", "missing.json"}).code == 2);
    for (const auto& p : {model, u, v}) {
        std::remove(p.c_str());
    }
}
