// Times the OpenMP discovery against the serial reference implementation on
// synthetic datasets of growing size and checks that both agree.

#include <chrono>
#include <cstdio>
#include <functional>

#include <omp.h>

#include "movelets/discovery.hpp"
#include "movelets/reference.hpp"
#include "movelets/synth.hpp"

using namespace movelets;

namespace {

double time_seconds(const std::function<DiscoveryResult()>& run, DiscoveryResult& out) {
    auto start = std::chrono::steady_clock::now();
    out = run();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

bool same_output(const DiscoveryResult& a, const DiscoveryResult& b) {
    if (a.movelets.size() != b.movelets.size()) return false;
    for (size_t i = 0; i < a.movelets.size(); ++i) {
        const Movelet& x = a.movelets[i];
        const Movelet& y = b.movelets[i];
        if (x.tid != y.tid || x.start != y.start || x.end != y.end || x.dims != y.dims ||
            x.relevance.score != y.relevance.score ||
            x.relevance.split_points != y.relevance.split_points) {
            return false;
        }
    }
    return true;
}

}  // namespace

int main() {
    const int hw_threads = omp_get_max_threads();
    std::printf("%-28s %10s %10s %10s %8s %s\n", "dataset", "serial(s)", "omp1(s)", "ompN(s)",
                "speedup", "agree");

    for (int per_class : {4, 8, 12}) {
        SynthConfig config;
        config.classes = 2;
        config.per_class = per_class;
        config.length = 16;
        config.dims = 3;
        config.pattern_length = 3;
        config.pattern_dims = 2;
        config.vocab_sizes = {5};
        config.seed = 7;
        Dataset ds = synth_dataset(config).dataset;

        DiscoveryResult serial, omp1, ompn;
        double t_serial = time_seconds([&] { return discover_reference(ds); }, serial);
        double t_omp1 =
            time_seconds([&] { return discover(ds, {.max_length = 0, .threads = 1}); }, omp1);
        double t_ompn =
            time_seconds([&] { return discover(ds, {.max_length = 0, .threads = hw_threads}); },
                         ompn);

        bool agree = same_output(serial, omp1) && same_output(serial, ompn);
        char name[64];
        std::snprintf(name, sizeof(name), "2x%d traj, len %d, d=%d", per_class, config.length,
                      config.dims);
        std::printf("%-28s %10.3f %10.3f %10.3f %7.2fx %s\n", name, t_serial, t_omp1, t_ompn,
                    t_serial / t_ompn, agree ? "yes" : "NO");
        if (!agree) return 1;
    }
    return 0;
}
