// matchtop: build family graphs and their complexes, compute homology, replay
// reduction scripts and run the verification suites.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include <matchtop/matchtop.hpp>

namespace {

using namespace matchtop;
using nlohmann::json;

enum Exit { Ok = 0, Mismatch = 1, Usage = 2, Budget_ = 3 };

struct BudgetFlags {
    std::optional<std::size_t> max_simplices, max_entries;

    void add(CLI::App* app) {
        app->add_option("--max-simplices", max_simplices, "Maximum number of simplices in any complex");
        app->add_option("--budget-matrix", max_entries, "Maximum number of boundary matrix entries");
    }
    Budget get() const {
        Budget b = Budget::from_env();
        if (max_simplices) b.max_simplices = *max_simplices;
        if (max_entries) b.max_matrix_entries = *max_entries;
        return b;
    }
};

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return json::parse(in);
}

/// "NxM" -> (N, M)
std::pair<int, int> parse_product(const std::string& s) {
    auto x = s.find_first_of("xX");
    if (x == std::string::npos) throw std::invalid_argument("product must be NxM, got \"" + s + "\"");
    std::size_t a = 0, b = 0;
    const int n = std::stoi(s.substr(0, x), &a);
    const int m = std::stoi(s.substr(x + 1), &b);
    if (a != x || b != s.size() - x - 1 || n < 1 || m < 1) throw std::invalid_argument("product must be NxM, got \"" + s + "\"");
    return {n, m};
}

/// "a..b" -> (a, b)
std::pair<int, int> parse_range(const std::string& s) {
    auto dots = s.find("..");
    if (dots == std::string::npos) throw std::invalid_argument("dimension range must be a..b, got \"" + s + "\"");
    return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
}

void print_profile_table(const HomologyProfile& p) {
    if (p.is_void) {
        std::cout << "void complex\n";
        return;
    }
    if (p.trivial()) {
        std::cout << "trivial reduced homology\n";
        return;
    }
    std::cout << "dim  betti  torsion\n";
    std::map<int, int> dims;
    for (auto [d, n] : p.betti) dims[d] = 1;
    for (const auto& [d, t] : p.torsion) dims[d] = 1;
    for (auto [d, unused] : dims) {
        std::string tor;
        for (const auto& x : p.t(d)) tor += (tor.empty() ? "Z/" : " Z/") + x.str();
        std::printf("%3d  %5llu  %s\n", d, static_cast<unsigned long long>(p.b(d)), tor.c_str());
    }
}

struct GraphSource {
    std::string family, product, graph_file;

    void add(CLI::App* app) {
        auto* f = app->add_option("--family", family, "Family spec, e.g. Gamma:5:3");
        auto* p = app->add_option("--product", product, "Categorical product P_N x P_M, written NxM");
        auto* g = app->add_option("--graph", graph_file, "Graph JSON file");
        f->excludes(p)->excludes(g);
        p->excludes(g);
    }
    bool is_product() const { return !product.empty(); }
    Graph get() const {
        if (!family.empty()) return build(FamilyId::parse(family));
        if (!product.empty()) {
            auto [n, m] = parse_product(product);
            return categorical_product(path(n), path(m));
        }
        if (!graph_file.empty()) return Graph::from_json(read_json_file(graph_file));
        throw CLI::ValidationError("one of --family, --product, --graph is required");
    }
};

int cmd_homology(const GraphSource& src, bool matching, bool independence, const std::string& dims, bool as_table,
                 const std::string& method, unsigned jobs, const BudgetFlags& bf) {
    const Graph g = src.get();
    // products default to their matching complex, everything else to Ind
    const bool use_matching = matching || (!independence && src.is_product());
    const Budget budget = bf.get();
    HomologyOptions o;
    o.budget = budget;
    o.jobs = jobs;
    if (method == "direct") o.method = HomologyOptions::Method::Direct;
    if (!dims.empty()) {
        auto [a, b] = parse_range(dims);
        o.lo = a;
        o.hi = b;
    }
    json sizes{{"graph_vertices", g.order()}, {"graph_edges", g.size()}};
    try {
        auto c = use_matching ? matching_complex(g, std::nullopt, budget) : independence_complex(g, std::nullopt, budget);
        sizes["simplices"] = c.total();
        sizes["dim"] = c.dim();
        auto p = reduced_homology(c, o);
        if (as_table)
            print_profile_table(p);
        else
            std::cout << p.to_json().dump() << "\n";
        return Ok;
    } catch (const BudgetExceeded& e) {
        std::cout << json{{"error", e.what()}, {"partial", sizes}}.dump() << "\n";
        return Budget_;
    }
}

int cmd_verify(const std::string& suite, VerifyOptions o, bool strict, bool timing, bool as_json) {
    const auto t0 = std::chrono::steady_clock::now();
    auto rs = run_suite(suite, o);
    const auto s = summarize(rs);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (as_json) {
        auto j = reports_json(suite, o, rs, timing);
        if (timing) j["seconds"] = secs;
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& r : rs) {
            std::cout << status_name(r.status) << "  " << r.id << "  " << r.statement;
            if (!r.detail.empty()) std::cout << "  [" << r.detail << "]";
            if (timing) std::printf("  (%.3fs)", r.seconds);
            std::cout << "\n";
        }
        std::cout << "summary: " << s.match << " match, " << s.mismatch << " mismatch, " << s.skipped << " skipped over budget";
        if (timing) std::printf(", %.2fs", secs);
        std::cout << "\n";
    }
    if (s.mismatch) return Mismatch;
    if (strict && s.skipped) return Budget_;
    return Ok;
}

int cmd_replay(const std::string& script_file, const std::string& spec, bool check, const BudgetFlags& bf) {
    const json script = read_json_file(script_file);
    std::optional<FamilyId> id;
    Graph g;
    if (spec.find(':') != std::string::npos) {
        id = FamilyId::parse(spec);
        g = build(*id);
    } else {
        g = Graph::from_json(read_json_file(spec));
    }
    ReductionTrace tr(g);
    try {
        tr = replay(script, g, id);
    } catch (const ScriptError& e) {
        std::cout << json{{"error", e.what()}, {"step", e.step}}.dump() << "\n";
        return Mismatch;
    }
    json out = tr.to_json();
    int rc = Ok;
    if (check) {
        try {
            auto c = check_trace(tr, bf.get());
            out["check"] = {{"initial", c.initial.to_json()}, {"composed", c.composed.to_json()}, {"consistent", c.consistent()}};
            if (!c.consistent()) rc = Mismatch;
        } catch (const BudgetExceeded& e) {
            out["check"] = {{"skipped", e.what()}};
            rc = Budget_;
        }
    }
    std::cout << out.dump(2) << "\n";
    return rc;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Matching and independence complexes of path products: homology, reductions, verification"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    // homology
    auto* hom = app.add_subcommand("homology", "Reduced integral homology of Ind(G) or M(G)");
    GraphSource hsrc;
    hsrc.add(hom);
    bool h_matching = false, h_independence = false, h_table = false, h_json = false;
    std::string h_dims, h_method = "morse";
    unsigned h_jobs = 1;
    BudgetFlags h_budget;
    auto* fm = hom->add_flag("--matching", h_matching, "Use the matching complex M(G)");
    auto* fi = hom->add_flag("--independence", h_independence, "Use the independence complex Ind(G)");
    fm->excludes(fi);
    hom->add_option("--dims", h_dims, "Dimension range a..b");
    auto* ft = hom->add_flag("--table", h_table, "Human-readable table");
    auto* fj = hom->add_flag("--json", h_json, "JSON output (default)");
    ft->excludes(fj);
    hom->add_option("--method", h_method, "morse or direct")->check(CLI::IsMember({"morse", "direct"}));
    hom->add_option("--jobs", h_jobs, "Threads for the per-dimension reductions");
    h_budget.add(hom);

    // verify
    auto* ver = app.add_subcommand("verify", "Run a verification suite");
    std::string v_suite;
    std::vector<std::string> suites = suite_names();
    suites.push_back("all");
    ver->add_option("suite", v_suite, "Suite name")->required()->check(CLI::IsMember(suites));
    VerifyOptions vo;
    bool v_strict = false, v_timing = false, v_json = false, v_table = false;
    BudgetFlags v_budget;
    ver->add_flag("--strict", v_strict, "Exit 3 when items were skipped over budget");
    ver->add_flag("--timing", v_timing, "Include wall times");
    auto* vj = ver->add_flag("--json", v_json, "JSON report");
    auto* vt = ver->add_flag("--table", v_table, "One line per item (default)");
    vj->excludes(vt);
    ver->add_option("--jobs", vo.jobs, "Worker threads");
    ver->add_flag("--amended", vo.amended, "Predict from the amended recurrence table");
    ver->add_option("--max-n", vo.max_n, "Largest index in the homology sweeps");
    ver->add_option("--seed", vo.seed, "Seed for the random rewrite graphs");
    ver->add_option("--random-graphs", vo.random_graphs, "Number of random rewrite graphs");
    ver->add_option("--fixtures", vo.fixture_dir, "Directory of reduction scripts");
    v_budget.add(ver);

    // replay
    auto* rep = app.add_subcommand("replay", "Replay a reduction script");
    std::string r_script, r_target;
    bool r_check = false;
    BudgetFlags r_budget;
    rep->add_option("script", r_script, "Script JSON file")->required();
    rep->add_option("target", r_target, "Family spec (e.g. Gamma:5:3) or graph JSON file")->required();
    rep->add_flag("--check", r_check, "Compare Ind(initial) with the homology the expression implies");
    r_budget.add(rep);

    // predictions
    auto* pred = app.add_subcommand("predict", "Predicted homotopy type of Ind(family member)");
    std::string p_spec;
    bool p_amended = false;
    pred->add_option("family", p_spec, "Family spec")->required();
    pred->add_flag("--amended", p_amended, "Use the amended recurrence table");

    auto* pm = app.add_subcommand("predict-matching", "Predicted homotopy type of M(P_n x P_m)");
    int pm_n = 0, pm_m = 0;
    bool pm_amended = false;
    pm->add_option("n", pm_n)->required();
    pm->add_option("m", pm_m)->required();
    pm->add_flag("--amended", pm_amended, "Use the amended recurrence table");

    auto* dm = app.add_subcommand("dims", "Tabulated and predicted extreme sphere dimensions of M(P_n x P_m)");
    int d_n = 0, d_m = 0;
    dm->add_option("n", d_n)->required();
    dm->add_option("m", d_m)->required();

    auto* gr = app.add_subcommand("graph", "Print a graph as JSON");
    GraphSource gsrc;
    gsrc.add(gr);
    bool g_line = false;
    gr->add_flag("--line", g_line, "Print the line graph instead");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? Ok : Usage;
    }

    try {
        if (*hom) return cmd_homology(hsrc, h_matching, h_independence, h_dims, h_table, h_method, h_jobs, h_budget);
        if (*ver) {
            vo.budget = v_budget.get();
            return cmd_verify(v_suite, vo, v_strict, v_timing, v_json);
        }
        if (*rep) return cmd_replay(r_script, r_target, r_check, r_budget);
        if (*pred) {
            Predictor p(p_amended ? amended_recurrence_table() : recurrence_table());
            const auto id = FamilyId::parse(p_spec);
            auto w = p.predict(id);
            std::cout << json{{"family", id.str()}, {"descriptor", w.to_json()}, {"text", w.str()}}.dump() << "\n";
            return Ok;
        }
        if (*pm) {
            Predictor p(pm_amended ? amended_recurrence_table() : recurrence_table());
            auto w = predict_matching(pm_n, pm_m, p);
            std::cout << json{{"n", pm_n}, {"m", pm_m}, {"descriptor", w.to_json()}, {"text", w.str()}}.dump() << "\n";
            return Ok;
        }
        if (*dm) {
            auto w = predict_matching(d_n, d_m);
            json out{{"n", d_n}, {"m", d_m}, {"predicted", {{"d_min", w.min_dim() ? json(*w.min_dim()) : json()},
                                                            {"d_max", w.max_dim() ? json(*w.max_dim()) : json()}}}};
            if (d_m == 3 && d_n >= 2) {
                out["closed_form"] = {{"dim", closed_form_dim_m3(d_n)}, {"count", closed_form_count(d_n).str()}};
            } else if ((d_m == 4 || d_m == 5) && d_n >= 3) {
                auto t = closed_form_dims(d_n, d_m);
                out["closed_form"] = {{"d_min", t.d_min}, {"d_max", t.d_max}};
            }
            std::cout << out.dump() << "\n";
            return Ok;
        }
        if (*gr) {
            Graph g = gsrc.get();
            std::cout << (g_line ? line_graph(g) : g).to_json().dump() << "\n";
            return Ok;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Usage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Usage;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Mismatch;
    }
    return Usage;
}
