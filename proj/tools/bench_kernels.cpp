// Timing comparison between the serial reference kernels and their
// OpenMP-parallel counterparts. Each workload checks that both paths agree
// before reporting the speedup.

#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cmchordal/reisner.hpp"
#include "cmchordal/sweep.hpp"

using namespace cmchordal;
using h_clock = std::chrono::high_resolution_clock;

namespace {

double ms_since(h_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(h_clock::now() - t0).count();
}

void report(const char* name, double serial_ms, double parallel_ms) {
    std::printf("%-34s %10.1f ms %10.1f ms %8.2fx\n", name, serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0);
}

void bench_reisner() {
    // face-rich pure complexes: independence complexes of disjoint unions of
    // small cliques (matchings and triangle packings on 12 vertices)
    std::vector<SimplicialComplex> complexes;
    Graph matching = Graph::path(2);
    for (int i = 1; i < 6; ++i)
        matching = Graph::disjoint_union(matching, Graph::path(2));
    complexes.push_back(independence_complex(matching)); // 729 faces

    Graph triangles = Graph::complete(3);
    for (int i = 1; i < 4; ++i)
        triangles = Graph::disjoint_union(triangles, Graph::complete(3));
    complexes.push_back(independence_complex(triangles)); // 256 faces

    for (int i = 0; i < 8; ++i)
        complexes.push_back(independence_complex(random_chordal(11, 3, 1000 + i)));

    FieldSpec q = FieldSpec::rationals();
    auto t0 = h_clock::now();
    std::vector<bool> serial;
    for (const auto& c : complexes)
        serial.push_back(reisner_is_cm_serial(c, q));
    double serial_ms = ms_since(t0);

    t0 = h_clock::now();
    std::vector<bool> parallel;
    for (const auto& c : complexes)
        parallel.push_back(reisner_is_cm(c, q));
    double parallel_ms = ms_since(t0);

    if (serial != parallel) {
        std::printf("MISMATCH in reisner kernels\n");
        std::exit(1);
    }
    report("reisner links, 12-vertex batch (Q)", serial_ms, parallel_ms);
}

void bench_sweep_exhaustive(int n) {
    SweepOptions serial_opt;
    serial_opt.fields = {FieldSpec::prime(2)};
    serial_opt.jobs = 1;
    SweepOptions parallel_opt = serial_opt;
    parallel_opt.jobs = 0;

    auto t0 = h_clock::now();
    SweepStats s = sweep_all_graphs(n, serial_opt);
    double serial_ms = ms_since(t0);

    t0 = h_clock::now();
    SweepStats p = sweep_all_graphs(n, parallel_opt);
    double parallel_ms = ms_since(t0);

    if (s.cm != p.cm || s.chordal != p.chordal || s.disagreements != p.disagreements) {
        std::printf("MISMATCH in exhaustive sweep\n");
        std::exit(1);
    }
    char label[64];
    std::snprintf(label, sizeof label, "exhaustive sweep n=%d (F2)", n);
    report(label, serial_ms, parallel_ms);
}

void bench_sweep_random(int n, int count) {
    SweepOptions serial_opt;
    serial_opt.fields = {FieldSpec::rationals(), FieldSpec::prime(2), FieldSpec::prime(3)};
    serial_opt.jobs = 1;
    SweepOptions parallel_opt = serial_opt;
    parallel_opt.jobs = 0;

    auto t0 = h_clock::now();
    SweepStats s = sweep_random_chordal(n, 2, count, 7, serial_opt);
    double serial_ms = ms_since(t0);

    t0 = h_clock::now();
    SweepStats p = sweep_random_chordal(n, 2, count, 7, parallel_opt);
    double parallel_ms = ms_since(t0);

    if (s.cm != p.cm || s.disagreements != p.disagreements) {
        std::printf("MISMATCH in random sweep\n");
        std::exit(1);
    }
    char label[64];
    std::snprintf(label, sizeof label, "random sweep n=%d x%d (Q,F2,F3)", n, count);
    report(label, serial_ms, parallel_ms);
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP)\n");
#endif
    std::printf("%-34s %13s %13s %9s\n", "workload", "serial", "parallel", "speedup");

    bench_reisner();
    bench_sweep_exhaustive(6);
    bench_sweep_random(9, 250);
    return 0;
}
