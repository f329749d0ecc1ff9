#include "cmchordal/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>

#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cmchordal/chordal.hpp"
#include "cmchordal/classify.hpp"
#include "cmchordal/reisner.hpp"

namespace cmchordal {

namespace {

std::string one_line(const Graph& g) {
    std::string s = serialize_graph(g);
    std::replace(s.begin(), s.end(), '\n', ';');
    return s;
}

} // namespace

GraphVerdict check_graph(const Graph& g, const SweepOptions& opt) {
    GraphVerdict v;
    if (g.vertex_count() == 0 || g.has_isolated_vertex()) {
        v.skipped = true;
        return v;
    }

    auto fail = [&](const std::string& what) { v.failures.push_back(what + " [" + one_line(g) + "]"); };

    v.chordal = is_chordal(g);
    FacetList facets = maximal_cliques(g);

    if (opt.check_leaf_order || opt.check_leaf_converse) {
        bool has_order = quasi_forest_leaf_order(facets).has_value();
        if (opt.check_leaf_order && v.chordal && !has_order)
            fail("chordal graph's clique complex admits no leaf order");
        if (opt.check_leaf_converse && !v.chordal && has_order)
            fail("non-chordal graph's clique complex admits a leaf order");
    }

    if (!v.chordal)
        return v;

    ClassificationReport r = classify(g);
    v.cm = r.cm.value_or(false);
    v.gorenstein = r.gorenstein.value_or(false);

    // unmixedness and the facet partition are computed along disjoint routes
    if (r.unmixed != v.cm)
        fail(std::string("unmixed=") + (r.unmixed ? "true" : "false") +
             " but partition " + (v.cm ? "exists" : "missing"));

    for (FieldSpec k : opt.fields) {
        bool oracle = reisner_is_cm(independence_complex(g), k);
        if (oracle != v.cm)
            fail("reisner verdict over " + k.name() + " = " + (oracle ? "true" : "false") +
                 " but combinatorial verdict = " + (v.cm ? "true" : "false"));
    }

    if (v.cm) {
        if (opt.check_type) {
            long combinatorial = *r.cm_type;
            long socle = socle_type_oracle(g);
            if (combinatorial != socle)
                fail("type " + std::to_string(combinatorial) + " != socle count " + std::to_string(socle));
        }
        if (opt.check_gorenstein) {
            bool structural = is_gorenstein(g);
            if (structural != (*r.cm_type == 1))
                fail("gorenstein structure test disagrees with type");
        }
        if (opt.check_cover_sizes) {
            int expected = g.vertex_count() - r.m;
            if (r.cover_size_min != expected || r.cover_size_max != expected)
                fail("minimal cover sizes " + std::to_string(r.cover_size_min) + ".." +
                     std::to_string(r.cover_size_max) + " != n - m = " + std::to_string(expected));
        }
    } else if (opt.check_gorenstein) {
        // not CM: the structural test must come back false as well
        if (is_gorenstein(g))
            fail("gorenstein structure test true on a non-CM graph");
    }

    return v;
}

namespace {

struct Accumulator {
    std::atomic<long long> graphs{0}, skipped{0}, chordal{0}, cm{0}, gorenstein{0};
    std::atomic<long long> oracle_runs{0}, type_checks{0}, disagreements{0};
    std::vector<std::pair<long long, std::string>> failures; // (graph index, message)

    void absorb(long long index, const GraphVerdict& v, const SweepOptions& opt) {
        graphs.fetch_add(1, std::memory_order_relaxed);
        if (v.skipped) {
            skipped.fetch_add(1, std::memory_order_relaxed);
            return;
        }
        if (v.chordal) {
            chordal.fetch_add(1, std::memory_order_relaxed);
            oracle_runs.fetch_add(static_cast<long long>(opt.fields.size()), std::memory_order_relaxed);
        }
        if (v.cm) {
            cm.fetch_add(1, std::memory_order_relaxed);
            if (opt.check_type)
                type_checks.fetch_add(1, std::memory_order_relaxed);
        }
        if (v.gorenstein)
            gorenstein.fetch_add(1, std::memory_order_relaxed);
        if (!v.failures.empty())
            disagreements.fetch_add(1, std::memory_order_relaxed);
    }

    SweepStats finish(const SweepOptions& opt) {
        SweepStats s;
        s.graphs = graphs.load();
        s.skipped = skipped.load();
        s.chordal = chordal.load();
        s.cm = cm.load();
        s.gorenstein = gorenstein.load();
        s.oracle_runs = oracle_runs.load();
        s.type_checks = type_checks.load();
        s.disagreements = disagreements.load();
        std::sort(failures.begin(), failures.end());
        for (const auto& [idx, msg] : failures) {
            if (static_cast<int>(s.failures.size()) >= opt.max_recorded_failures)
                break;
            s.failures.push_back(msg);
        }
        return s;
    }
};

template <typename MakeGraph>
SweepStats run_sweep(long long total, const SweepOptions& opt, MakeGraph make) {
    Accumulator acc;

    auto handle = [&](long long i) {
        GraphVerdict v;
        try {
            v = check_graph(make(i), opt);
        } catch (const std::exception& e) {
            v.failures.push_back(std::string("exception: ") + e.what());
        }
        acc.absorb(i, v, opt);
        if (!v.failures.empty()) {
#ifdef _OPENMP
#pragma omp critical(cmchordal_sweep_failures)
#endif
            for (const auto& f : v.failures)
                acc.failures.emplace_back(i, f);
        }
    };

    if (opt.jobs == 1) {
        for (long long i = 0; i < total; ++i)
            handle(i);
    } else {
#ifdef _OPENMP
        int threads = opt.jobs > 0 ? opt.jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 64) num_threads(threads)
        for (long long i = 0; i < total; ++i)
            handle(i);
#else
        for (long long i = 0; i < total; ++i)
            handle(i);
#endif
    }
    return acc.finish(opt);
}

} // namespace

SweepStats sweep_all_graphs(int n, const SweepOptions& opt) {
    if (n < 1)
        throw precondition_error("sweep: n must be >= 1");
    if (n > 8)
        throw cap_error("exhaustive sweep supports n <= 8");

    std::vector<std::pair<int, int>> pairs;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            pairs.emplace_back(u, v);
    long long total = 1LL << pairs.size();

    return run_sweep(total, opt, [&](long long mask) {
        std::vector<std::pair<int, int>> edges;
        for (std::size_t b = 0; b < pairs.size(); ++b)
            if (mask >> b & 1)
                edges.push_back(pairs[b]);
        return Graph::from_edges(n, edges);
    });
}

SweepStats sweep_random_chordal(int n, int extra, int count, std::uint64_t seed,
                                const SweepOptions& opt) {
    if (count < 0)
        throw precondition_error("sweep: count must be >= 0");
    return run_sweep(count, opt, [&](long long i) {
        return random_chordal(n, extra, seed + static_cast<std::uint64_t>(i));
    });
}

std::string stats_to_text(const SweepStats& s) {
    std::ostringstream out;
    out << "graphs tested:      " << s.graphs << '\n'
        << "skipped (isolated): " << s.skipped << '\n'
        << "chordal:            " << s.chordal << '\n'
        << "cohen-macaulay:     " << s.cm << '\n'
        << "gorenstein:         " << s.gorenstein << '\n'
        << "oracle runs:        " << s.oracle_runs << '\n'
        << "type cross-checks:  " << s.type_checks << '\n'
        << "disagreements:      " << s.disagreements << '\n';
    for (const auto& f : s.failures)
        out << "failure: " << f << '\n';
    return out.str();
}

std::string stats_to_json(const SweepStats& s) {
    nlohmann::ordered_json j;
    j["graphs"] = s.graphs;
    j["skipped"] = s.skipped;
    j["chordal"] = s.chordal;
    j["cm"] = s.cm;
    j["gorenstein"] = s.gorenstein;
    j["oracle_runs"] = s.oracle_runs;
    j["type_checks"] = s.type_checks;
    j["disagreements"] = s.disagreements;
    j["failures"] = s.failures;
    return j.dump(2);
}

} // namespace cmchordal
