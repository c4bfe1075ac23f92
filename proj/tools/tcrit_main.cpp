// Command-line front end: generate family members, analyze .trn files, test
// isomorphism, run exhaustive censuses and the verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 parse/parameter error,
// 3 I/O error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "tcrit/census.hpp"
#include "tcrit/criticality.hpp"
#include "tcrit/families.hpp"
#include "tcrit/intervals.hpp"
#include "tcrit/isomorphism.hpp"
#include "tcrit/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitParseError = 2;
constexpr int kExitIoError = 3;

std::string set_text(tcrit::VertexSet s) {
    std::string out = "{";
    bool first = true;
    for (int v : s) {
        if (!first) out += ",";
        out += std::to_string(v);
        first = false;
    }
    return out + "}";
}

class Timer {
public:
    explicit Timer(bool enabled) : enabled_(enabled), start_(std::chrono::steady_clock::now()) {}
    void report() const {
        if (!enabled_) return;
        const auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_);
        char buf[64];
        std::snprintf(buf, sizeof(buf), "elapsed: %.3fs", dt.count());
        std::cout << buf << "\n";
    }

private:
    bool enabled_;
    std::chrono::steady_clock::time_point start_;
};

struct RangeArg {
    int lo = 0;
    int hi = 0;
};

// "3..6" or a single "4".
RangeArg parse_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            std::size_t pos = 0;
            const int v = std::stoi(text, &pos);
            if (pos != text.size()) throw tcrit::BadParams("bad range");
            return {v, v};
        }
        std::size_t pos = 0;
        const int lo = std::stoi(text.substr(0, dots), &pos);
        if (pos != dots) throw tcrit::BadParams("bad range");
        const int hi = std::stoi(text.substr(dots + 2), &pos);
        if (pos != text.size() - dots - 2) throw tcrit::BadParams("bad range");
        if (lo > hi) throw tcrit::BadParams("empty range");
        return {lo, hi};
    } catch (const tcrit::BadParams&) {
        throw;
    } catch (const std::exception&) {
        throw tcrit::BadParams("range must be N or A..B, got '" + text + "'");
    }
}

int run_gen(const std::string& family, int n, std::optional<int> k, const std::string& out_path,
            const std::string& dot_path) {
    const tcrit::Family fam = tcrit::parse_family(family);
    if (tcrit::family_takes_offset(fam) && !k)
        throw tcrit::BadParams("family " + family + " needs the offset parameter k");
    if (!tcrit::family_takes_offset(fam) && k)
        throw tcrit::BadParams("family " + family + " takes no offset parameter");
    const tcrit::Tournament t = tcrit::make_family(fam, n, k.value_or(0));
    tcrit::write_trn_file(out_path, t);
    if (!dot_path.empty()) {
        std::ofstream dot(dot_path);
        if (!dot) throw tcrit::IoError("cannot open " + dot_path + " for writing");
        dot << tcrit::to_dot(t);
        if (!dot) throw tcrit::IoError("write failure on " + dot_path);
    }
    std::cout << "wrote " << out_path << " (" << t.order() << " vertices)\n";
    return kExitOk;
}

int run_analyze(const std::string& path, const std::string& dot_path,
                const std::string& graph_dot_path) {
    const tcrit::Tournament t = tcrit::read_trn_file(path);
    std::cout << "order: " << t.order() << "\n";
    const auto witness = tcrit::find_nontrivial_interval(t);
    std::cout << "indecomposable: " << (witness ? "no" : "yes") << "\n";
    if (witness) std::cout << "witness: " << set_text(*witness) << "\n";

    tcrit::IndecomposabilityGraph graph;
    tcrit::VertexSet tagged;
    std::vector<tcrit::Component> components;
    if (!witness) {
        const auto rep = tcrit::classify(t);
        std::cout << "critical: " << set_text(rep.critical) << "\n";
        std::cout << "non-critical: " << set_text(rep.non_critical) << "\n";
        std::cout << "k: " << rep.non_critical_count << "\n";
        std::string label = "(-" + std::to_string(rep.non_critical_count) + ")-critical";
        if (rep.non_critical_count == 0) label = "critical";
        if (rep.small_order) label += " (order below 5; boundary conventions apply)";
        std::cout << "classification: " << label << "\n";
        graph = rep.graph;
        components = rep.components;
        tagged = rep.non_critical;
    } else {
        graph = tcrit::indecomposability_graph(t);
        components = tcrit::component_shapes(graph);
    }
    std::cout << "I(T) edges:";
    for (auto [x, y] : graph.edge_list()) std::cout << " {" << x << "," << y << "}";
    std::cout << "\n";
    for (const auto& comp : components)
        std::cout << "component: " << tcrit::shape_name(comp.shape) << " " << set_text(comp.vertices)
                  << "\n";
    auto write_text = [](const std::string& out_path, const std::string& text) {
        std::ofstream out(out_path);
        if (!out) throw tcrit::IoError("cannot open " + out_path + " for writing");
        out << text;
        if (!out) throw tcrit::IoError("write failure on " + out_path);
    };
    if (!dot_path.empty()) write_text(dot_path, tcrit::to_dot(t));
    if (!graph_dot_path.empty()) write_text(graph_dot_path, tcrit::to_dot(graph, tagged));
    return kExitOk;
}

int run_iso(const std::string& path1, const std::string& path2) {
    const tcrit::Tournament a = tcrit::read_trn_file(path1);
    const tcrit::Tournament b = tcrit::read_trn_file(path2);
    const auto p = tcrit::find_isomorphism(a, b);
    if (!p) {
        std::cout << "not isomorphic\n";
        return kExitOk;
    }
    std::cout << "isomorphic: [";
    for (int i = 0; i < p->size(); ++i) std::cout << (i ? "," : "") << (*p)(i);
    std::cout << "]\n";
    return kExitOk;
}

int run_census(int m, int jobs, bool big, bool no_classes, const std::string& json_path,
               bool no_timing) {
    if (m == 8 && !big)
        throw tcrit::BadParams("the order-8 census sweeps 2^28 tournaments; pass --big to confirm");
    Timer timer(!no_timing);
    tcrit::CensusOptions opts;
    opts.jobs = jobs;
    opts.collect_classes = !no_classes;
    const auto result = tcrit::run_census(m, opts);
    std::cout << tcrit::census_summary(result);
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) throw tcrit::IoError("cannot open " + json_path + " for writing");
        out << tcrit::census_json(result);
        if (!out) throw tcrit::IoError("write failure on " + json_path);
    }
    timer.report();
    return kExitOk;
}

int run_verify(const std::string& suite, const std::string& range_text, int jobs, bool no_timing) {
    const RangeArg range = parse_range(range_text);
    Timer timer(!no_timing);
    tcrit::CensusOptions opts;
    opts.jobs = jobs;
    bool all_ok = true;
    for (int n = range.lo; n <= range.hi; ++n) {
        tcrit::VerifyReport report;
        if (suite == "thm13")
            report = tcrit::verify_minus_one_characterization(n, opts);
        else if (suite == "prop11")
            report = tcrit::verify_critical_characterization(n, opts);
        else if (suite == "remark45")
            report = tcrit::verify_indecomposability_graphs(n);
        else if (suite == "lemmas")
            report = tcrit::verify_structural_lemmas(n);
        else
            throw tcrit::BadParams("unknown suite '" + suite +
                                   "' (expected thm13, prop11, remark45 or lemmas)");
        std::cout << "suite " << report.suite << " n=" << n << "\n";
        for (const auto& line : report.lines) std::cout << "  " << line << "\n";
        all_ok = all_ok && report.ok;
    }
    std::cout << (all_ok ? "PASS" : "FAIL") << "\n";
    timer.report();
    return all_ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tournament interval/criticality toolkit"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("gen", "generate a family member as a .trn file");
    std::string gen_family;
    int gen_n = 0;
    std::optional<int> gen_k;
    std::string gen_out, gen_dot;
    gen->add_option("family", gen_family, "family tag: L, T, U, V, E, F, Fdual, G, Gdual, H")
        ->required();
    gen->add_option("n", gen_n, "order parameter")->required();
    gen->add_option("k", gen_k, "offset parameter (E/F/Fdual/G/Gdual/H)");
    gen->add_option("-o,--output", gen_out, "output .trn path")->required();
    gen->add_option("--dot", gen_dot, "also write a Graphviz file");

    auto* analyze = app.add_subcommand("analyze", "report intervals, criticality and I(T)");
    std::string analyze_path, analyze_dot, analyze_graph_dot;
    analyze->add_option("file", analyze_path, "input .trn path")->required();
    analyze->add_option("--dot", analyze_dot, "write the tournament as Graphviz");
    analyze->add_option("--graph-dot", analyze_graph_dot,
                        "write I(T) as Graphviz, non-critical vertices filled");

    auto* iso = app.add_subcommand("iso", "isomorphism witness between two .trn files");
    std::string iso_a, iso_b;
    iso->add_option("first", iso_a)->required();
    iso->add_option("second", iso_b)->required();

    auto* census = app.add_subcommand("census", "exhaustive census of all labeled tournaments");
    int census_m = 0, census_jobs = 1;
    bool census_big = false, census_no_timing = false;
    std::string census_json_path;
    bool census_no_classes = false;
    census->add_option("m", census_m, "order (1..8)")->required();
    census->add_option("-j,--jobs", census_jobs, "shard count (output is identical for any value)");
    census->add_flag("--big", census_big, "confirm the long order-8 sweep");
    census->add_flag("--no-classes", census_no_classes,
                     "histogram only, skip isomorphism classes");
    census->add_option("--json", census_json_path, "write the machine-readable report here");
    census->add_flag("--no-timing", census_no_timing, "suppress the elapsed-time line");

    auto* verify = app.add_subcommand("verify", "run a verification suite over a parameter range");
    std::string verify_suite, verify_range;
    int verify_jobs = 1;
    bool verify_no_timing = false;
    verify->add_option("suite", verify_suite, "thm13, prop11, remark45 or lemmas")->required();
    verify->add_option("range", verify_range, "parameter n, as N or A..B")->required();
    verify->add_option("-j,--jobs", verify_jobs, "shard count for census-backed checks");
    verify->add_flag("--no-timing", verify_no_timing, "suppress the elapsed-time line");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitParseError;
    }

    try {
        if (gen->parsed()) return run_gen(gen_family, gen_n, gen_k, gen_out, gen_dot);
        if (analyze->parsed()) return run_analyze(analyze_path, analyze_dot, analyze_graph_dot);
        if (iso->parsed()) return run_iso(iso_a, iso_b);
        if (census->parsed())
            return run_census(census_m, census_jobs, census_big, census_no_classes, census_json_path,
                              census_no_timing);
        if (verify->parsed()) return run_verify(verify_suite, verify_range, verify_jobs, verify_no_timing);
    } catch (const tcrit::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIoError;
    } catch (const tcrit::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParseError;
    }
    return kExitParseError;
}
