// Command-line front end: classify graphs, compute Cohen-Macaulay type, run
// homology oracle cross-checks, generate test graphs, and drive batch
// verification sweeps.
//
// Exit codes: 0 ok, 1 oracle disagreement, 2 parse/usage error,
// 3 precondition violation, 4 size cap exceeded.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cmchordal/classify.hpp"
#include "cmchordal/complex.hpp"
#include "cmchordal/reisner.hpp"
#include "cmchordal/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDisagreement = 1;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitCap = 4;

constexpr int kOracleCap = 12;        // faces grow as 2^n
constexpr int kCombinatorialCap = 24;

cmchordal::Graph load_graph(const std::string& input) {
    if (input == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return cmchordal::parse_graph(buf.str());
    }
    return cmchordal::read_graph_file(input);
}

std::vector<cmchordal::FieldSpec> parse_fields(const std::string& list) {
    std::vector<cmchordal::FieldSpec> out;
    if (list == "none")
        return out;
    std::istringstream in(list);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item == "q")
            out.push_back(cmchordal::FieldSpec::rationals());
        else if (item == "f2")
            out.push_back(cmchordal::FieldSpec::prime(2));
        else if (item == "f3")
            out.push_back(cmchordal::FieldSpec::prime(3));
        else
            throw cmchordal::parse_error("unknown field \"" + item + "\" (expected q, f2, f3 or none)");
    }
    if (out.empty())
        throw cmchordal::parse_error("empty field list");
    return out;
}

void apply_jobs(int jobs) {
#ifdef _OPENMP
    if (jobs > 0)
        omp_set_num_threads(jobs);
#else
    (void)jobs;
#endif
}

void require_cap(int n, int cap, const std::string& what) {
    if (n > cap)
        throw cmchordal::cap_error(what + " supports n <= " + std::to_string(cap) +
                                   ", got n = " + std::to_string(n));
}

int run_classify(const std::string& input, const std::string& format, bool type_only) {
    cmchordal::Graph g = load_graph(input);
    require_cap(g.vertex_count(), kCombinatorialCap, "classify");
    cmchordal::ClassificationReport r = cmchordal::classify(g);
    if (type_only) {
        if (!r.cm.value_or(false))
            throw cmchordal::precondition_error(
                r.chordal ? "graph is not Cohen-Macaulay; no type"
                          : "graph is not chordal; no type");
        std::cout << *r.cm_type << '\n';
        return kExitOk;
    }
    std::cout << (format == "json" ? cmchordal::report_to_json(r) + "\n" : cmchordal::report_to_text(r));
    return kExitOk;
}

int run_oracle(const std::string& input, const std::string& format, const std::string& fields) {
    cmchordal::Graph g = load_graph(input);
    require_cap(g.vertex_count(), kOracleCap, "oracle");
    auto field_list = parse_fields(fields);
    if (field_list.empty())
        throw cmchordal::parse_error("oracle needs at least one field");

    cmchordal::ClassificationReport r = cmchordal::classify(g);
    cmchordal::SimplicialComplex ic = cmchordal::independence_complex(g);
    std::map<std::string, bool> oracle;
    for (auto k : field_list)
        oracle[k.name()] = cmchordal::reisner_is_cm(ic, k);

    bool agree = true;
    if (r.cm) {
        for (auto& [name, verdict] : oracle)
            agree = agree && verdict == *r.cm;
    }

    if (format == "json") {
        nlohmann::ordered_json j;
        j["chordal"] = r.chordal;
        j["unmixed"] = r.unmixed;
        if (r.cm)
            j["cm"] = *r.cm;
        else
            j["note"] = "not chordal: no combinatorial verdict (unmixedness alone does not "
                        "decide Cohen-Macaulayness)";
        nlohmann::ordered_json o;
        for (auto& [name, verdict] : oracle)
            o[name] = verdict;
        j["oracle"] = o;
        if (r.cm)
            j["agree"] = agree;
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "chordal: " << (r.chordal ? "true" : "false") << '\n';
        std::cout << "unmixed: " << (r.unmixed ? "true" : "false") << '\n';
        if (r.cm)
            std::cout << "combinatorial cm: " << (*r.cm ? "true" : "false") << '\n';
        else
            std::cout << "combinatorial cm: n/a (not chordal: unmixedness alone does not "
                         "decide Cohen-Macaulayness)\n";
        for (auto& [name, verdict] : oracle)
            std::cout << "oracle cm over " << name << ": " << (verdict ? "true" : "false") << '\n';
        if (r.cm)
            std::cout << "agreement: " << (agree ? "AGREE" : "DISAGREE") << '\n';
    }
    return r.cm && !agree ? kExitDisagreement : kExitOk;
}

int run_verify(int n, int max_n, int count, int extra, std::uint64_t seed, const std::string& fields,
               int jobs, const std::string& format) {
    cmchordal::SweepOptions opt;
    opt.fields = parse_fields(fields);
    opt.jobs = jobs;

    int top = max_n > 0 ? max_n : n;
    require_cap(top, opt.fields.empty() ? kCombinatorialCap : kOracleCap, "verify");

    cmchordal::SweepStats total;
    auto accumulate = [&](const cmchordal::SweepStats& s) {
        total.graphs += s.graphs;
        total.skipped += s.skipped;
        total.chordal += s.chordal;
        total.cm += s.cm;
        total.gorenstein += s.gorenstein;
        total.oracle_runs += s.oracle_runs;
        total.type_checks += s.type_checks;
        total.disagreements += s.disagreements;
        total.failures.insert(total.failures.end(), s.failures.begin(), s.failures.end());
    };

    if (count > 0) {
        accumulate(cmchordal::sweep_random_chordal(n, extra, count, seed, opt));
    } else if (max_n > 0) {
        for (int k = 1; k <= max_n; ++k) {
            auto o = opt;
            o.check_leaf_converse = k <= 6;
            accumulate(cmchordal::sweep_all_graphs(k, o));
        }
    } else {
        auto o = opt;
        o.check_leaf_converse = n <= 6;
        accumulate(cmchordal::sweep_all_graphs(n, o));
    }

    std::cout << (format == "json" ? cmchordal::stats_to_json(total) + "\n"
                                   : cmchordal::stats_to_text(total));
    return total.disagreements == 0 ? kExitOk : kExitDisagreement;
}

const std::map<std::string, std::vector<cmchordal::VertexSet>> kBuiltinComplexes = {
    {"point", {{1}}},
    {"two-points", {{1}, {2}}},
    {"edge", {{1, 2}}},
    {"path2", {{1, 2}, {2, 3}}},
    {"hollow-triangle", {{1, 2}, {2, 3}, {1, 3}}},
    {"solid-triangle", {{1, 2, 3}}},
};

int run_gen(const std::string& kind, int n, int extra, std::uint64_t seed, const std::string& sample,
            const std::string& out_path) {
    std::ostringstream out;
    if (kind == "chordal") {
        if (n < 1)
            throw cmchordal::parse_error("gen chordal: need --n >= 1");
        require_cap(n, kCombinatorialCap, "gen");
        out << cmchordal::serialize_graph(cmchordal::random_chordal(n, extra, seed));
    } else if (kind == "poset") {
        auto it = kBuiltinComplexes.find(sample);
        if (it == kBuiltinComplexes.end()) {
            std::string names;
            for (const auto& [name, f] : kBuiltinComplexes)
                names += (names.empty() ? "" : ", ") + name;
            throw cmchordal::parse_error("gen poset: unknown sample \"" + sample +
                                         "\" (available: " + names + ")");
        }
        int ambient = 0;
        for (const auto& f : it->second)
            for (int v : f)
                ambient = std::max(ambient, v);
        auto fp = cmchordal::incomparability_graph_of_face_poset(
            cmchordal::make_complex(ambient, it->second));
        out << "# incomparability graph of the face poset of sample \"" << sample << "\"\n";
        for (std::size_t i = 0; i < fp.faces.size(); ++i) {
            out << "# vertex " << i + 1 << " = face {";
            for (std::size_t j = 0; j < fp.faces[i].size(); ++j)
                out << (j ? "," : "") << fp.faces[i][j];
            out << "}\n";
        }
        out << cmchordal::serialize_graph(fp.graph);
    } else {
        throw cmchordal::parse_error("gen: unknown kind \"" + kind + "\" (expected chordal or poset)");
    }

    if (out_path.empty() || out_path == "-") {
        std::cout << out.str();
    } else {
        std::ofstream file(out_path);
        if (!file)
            throw cmchordal::precondition_error("cannot open output file: " + out_path);
        file << out.str();
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cohen-Macaulay classification of chordal graphs via free-vertex facets,\n"
                 "with exact simplicial-homology cross-checks"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string format = "text";
    std::string fields = "q,f2,f3";
    std::string kind = "chordal";
    std::string sample = "edge";
    std::string out_path;
    int n = 0, max_n = 0, count = 0, extra = 2, jobs = 0;
    std::uint64_t seed = 1;

    auto* cls = app.add_subcommand("classify", "classify one graph (chordality, CM, type, Gorenstein)");
    cls->add_option("--input", input, "edge-list file, or - for stdin");
    cls->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* typ = app.add_subcommand("type", "print the Cohen-Macaulay type of one graph");
    typ->add_option("--input", input, "edge-list file, or - for stdin");

    auto* orc = app.add_subcommand("oracle", "compare the combinatorial verdict with Reisner-criterion homology");
    orc->add_option("--input", input, "edge-list file, or - for stdin");
    orc->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    orc->add_option("--fields", fields, "comma list of q,f2,f3");
    orc->add_option("--jobs", jobs, "OpenMP threads (0 = all)");

    auto* ver = app.add_subcommand("verify", "batch cross-check sweeps (exhaustive or random)");
    ver->add_option("--n", n, "vertex count (exhaustive unless --count given)");
    ver->add_option("--max-n", max_n, "run exhaustive sweeps for every n up to this");
    ver->add_option("--count", count, "number of random chordal samples (0 = exhaustive)");
    ver->add_option("--extra", extra, "clique-growth parameter for the generator");
    ver->add_option("--seed", seed, "base seed for the generator");
    ver->add_option("--fields", fields, "comma list of q,f2,f3, or none for combinatorial-only");
    ver->add_option("--jobs", jobs, "parallelism degree (1 = serial reference path)");
    ver->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* gen = app.add_subcommand("gen", "generate test graphs");
    gen->add_option("--kind", kind, "chordal | poset");
    gen->add_option("--n", n, "vertex count (chordal kind)");
    gen->add_option("--extra", extra, "clique-growth parameter");
    gen->add_option("--seed", seed, "generator seed");
    gen->add_option("--sample", sample, "built-in complex for poset kind");
    gen->add_option("--out", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success))
            return app.exit(e);
        app.exit(e);
        return kExitParse;
    }

    try {
        apply_jobs(jobs);
        if (cls->parsed())
            return run_classify(input, format, false);
        if (typ->parsed())
            return run_classify(input, "text", true);
        if (orc->parsed())
            return run_oracle(input, format, fields);
        if (ver->parsed()) {
            if (n == 0 && max_n == 0)
                throw cmchordal::parse_error("verify: need --n or --max-n");
            if (count > 0 && n == 0)
                throw cmchordal::parse_error("verify: random sweeps need --n");
            return run_verify(n, max_n, count, extra, seed, fields, jobs, format);
        }
        if (gen->parsed())
            return run_gen(kind, n, extra, seed, sample, out_path);
    } catch (const cmchordal::parse_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const cmchordal::cap_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCap;
    } catch (const cmchordal::precondition_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitPrecondition;
    }
    return kExitOk;
}
