// Benchmark comparing the serial reference implementations of the subgroup
// enumeration kernels against the parallel ones.  Not registered with ctest;
// build and run the `bench_enum` target directly.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "igrowth/perm_group.hpp"
#include "igrowth/subgroup_enum.hpp"

namespace {

double now_seconds() {
    using clock = std::chrono::steady_clock;
    static const clock::time_point start = clock::now();
    return std::chrono::duration<double>(clock::now() - start).count();
}

struct Workload {
    std::string label;
    igrowth::PermGroup group;
    igrowth::EnumStrategy strategy;
    int bound;  // index bound for the search strategy; ignored by the lattice
};

double run_once(const Workload& w, igrowth::ExecMode exec, std::size_t* count) {
    igrowth::EnumOptions opt;
    opt.strategy = w.strategy;
    opt.exec = exec;
    const double t0 = now_seconds();
    igrowth::SubgroupList list =
        (w.strategy == igrowth::EnumStrategy::Lattice)
            ? igrowth::all_subgroups(w.group, opt)
            : igrowth::subgroups_up_to_index(w.group, w.bound, opt);
    const double elapsed = now_seconds() - t0;
    *count = list.items.size();
    return elapsed;
}

}  // namespace

int main() {
    using igrowth::EnumStrategy;
    using igrowth::PermGroup;

    const std::vector<Workload> workloads = {
        {"lattice S4", PermGroup::symmetric(4), EnumStrategy::Lattice, 0},
        {"lattice A5", PermGroup::alternating(5), EnumStrategy::Lattice, 0},
        {"lattice A4xA4",
         igrowth::direct_product(PermGroup::alternating(4),
                                 PermGroup::alternating(4)),
         EnumStrategy::Lattice, 0},
        {"search A5 to index 6", PermGroup::alternating(5),
         EnumStrategy::CosetSearch, 6},
        {"search A6 to index 6", PermGroup::alternating(6),
         EnumStrategy::CosetSearch, 6},
        {"search A5xA5 to index 5",
         igrowth::direct_product(PermGroup::alternating(5),
                                 PermGroup::alternating(5)),
         EnumStrategy::CosetSearch, 5},
    };

    std::printf("%-24s %12s %12s %10s %8s\n", "workload", "serial (s)",
                "parallel (s)", "speedup", "found");
    for (const Workload& w : workloads) {
        std::size_t count_serial = 0;
        std::size_t count_parallel = 0;
        const double ts = run_once(w, igrowth::ExecMode::Serial, &count_serial);
        const double tp =
            run_once(w, igrowth::ExecMode::Parallel, &count_parallel);
        if (count_serial != count_parallel) {
            std::printf("%-24s MISMATCH: serial found %zu, parallel found %zu\n",
                        w.label.c_str(), count_serial, count_parallel);
            return 1;
        }
        std::printf("%-24s %12.4f %12.4f %9.2fx %8zu\n", w.label.c_str(), ts,
                    tp, tp > 0.0 ? ts / tp : 0.0, count_serial);
    }
    return 0;
}
