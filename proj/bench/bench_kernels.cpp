// Serial reference vs OpenMP kernels on the partition statistics.

#include <chrono>
#include <cstdio>

#include <CLI11.hpp>

#include "gradind/kernels.hpp"

using namespace gradind;

namespace {

template <class F>
double seconds(F&& f)
{
    const auto start = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"kernel benchmark"};
    int N = 11, workers = 0, m = 3, n = 4;
    app.add_option("--N", N, "Ground set for partition_statistics")->capture_default_str();
    app.add_option("--m", m)->capture_default_str();
    app.add_option("--n", n)->capture_default_str();
    app.add_option("--workers", workers, "0 uses the OpenMP default");
    CLI11_PARSE(app, argc, argv);

    KernelOptions serial;
    serial.execution = Execution::serial;
    KernelOptions parallel;
    parallel.execution = Execution::parallel;
    parallel.workers = workers;

    PartitionStatistics a, b;
    const double ts = seconds([&] { a = partition_statistics(N, serial); });
    const double tp = seconds([&] { b = partition_statistics(N, parallel); });
    std::printf("partition_statistics N=%d  serial %.3f s  parallel %.3f s  speedup %.2f  %s\n", N, ts, tp,
                ts / tp, a == b ? "agree" : "DISAGREE");

    std::map<int, std::uint64_t> ha, hb;
    const double hs = seconds([&] { ha = c0_histogram_divisible(m, n, std::nullopt, serial); });
    const double hp = seconds([&] { hb = c0_histogram_divisible(m, n, std::nullopt, parallel); });
    std::printf("c0_histogram_divisible m=%d n=%d  serial %.3f s  parallel %.3f s  speedup %.2f  %s\n", m, n, hs,
                hp, hs / hp, ha == hb ? "agree" : "DISAGREE");
    return a == b && ha == hb ? 0 : 1;
}
