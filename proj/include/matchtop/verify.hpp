#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "complex.hpp"
#include "descriptor.hpp"
#include "families.hpp"
#include "homology.hpp"
#include "recurrence.hpp"
#include "reduction.hpp"
#include "tables.hpp"

#ifndef MATCHTOP_FIXTURE_DIR
#define MATCHTOP_FIXTURE_DIR "fixtures"
#endif

namespace matchtop {

inline constexpr const char* report_schema = "matchtop-report/1";

enum class Status { Match, Mismatch, SkippedOverBudget };

inline std::string status_name(Status s) {
    switch (s) {
    case Status::Match: return "Match";
    case Status::Mismatch: return "Mismatch";
    case Status::SkippedOverBudget: return "SkippedOverBudget";
    }
    return {};
}

/// Outcome of checking one claim instance.
struct VerificationReport {
    std::string id;          // stable key, e.g. "rec-Gamma-5-n3"
    std::string suite;
    std::string statement;   // what was checked, in words
    nlohmann::json predicted;
    nlohmann::json computed;
    Status status = Status::Match;
    std::string detail;
    nlohmann::json sizes = nlohmann::json::object();
    double seconds = 0;

    nlohmann::json to_json(bool timing = false) const {
        nlohmann::json j{{"id", id},       {"suite", suite},       {"statement", statement}, {"status", status_name(status)},
                         {"predicted", predicted}, {"computed", computed}, {"sizes", sizes}};
        if (!detail.empty()) j["detail"] = detail;
        if (timing) j["seconds"] = seconds;
        return j;
    }
};

struct VerifyOptions {
    Budget budget{};
    unsigned jobs = 1;
    bool amended = false;         // predict from amended_recurrence_table()
    int max_n = 12;               // upper end of the per-family homology sweep
    int table_n = 60;             // symbolic table checks run for n <= table_n
    int random_graphs = 500;
    int random_max_vertices = 10;
    std::uint64_t seed = 1;
    std::string fixture_dir = std::string(MATCHTOP_FIXTURE_DIR) + "/scripts";
};

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> s{"laws",       "base-cases", "recurrences", "tables",
                                            "matching",   "components", "rewrites",    "scripts"};
    return s;
}

namespace detail {

using Clock = std::chrono::steady_clock;

inline double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

inline const std::vector<RecurrenceRule>& table_for(const VerifyOptions& o) {
    return o.amended ? amended_recurrence_table() : recurrence_table();
}

/// Reduced homology of Ind(g) under the budget; records sizes.
inline HomologyProfile ind_homology(const Graph& g, const Budget& budget, nlohmann::json& sizes) {
    auto c = independence_complex(g, std::nullopt, budget);
    sizes["vertices"] = g.order();
    sizes["edges"] = g.size();
    sizes["simplices"] = c.total();
    sizes["dim"] = c.dim();
    HomologyOptions o;
    o.budget = budget;
    return reduced_homology(c, o);
}

inline HomologyProfile ind_homology(const Graph& g, const Budget& budget = Budget{}) {
    nlohmann::json unused;
    return ind_homology(g, budget, unused);
}

inline VerificationReport compare(std::string id, std::string suite, std::string statement, const WedgeDescriptor& pred,
                                  const HomologyProfile& comp) {
    VerificationReport r;
    r.id = std::move(id);
    r.suite = std::move(suite);
    r.statement = std::move(statement);
    r.predicted = pred.to_json();
    r.computed = comp.to_json();
    r.status = pred.matches(comp) ? Status::Match : Status::Mismatch;
    if (r.status == Status::Mismatch) r.detail = "predicted " + pred.str() + ", computed " + comp.str();
    return r;
}

inline VerificationReport skipped(std::string id, std::string suite, std::string statement, const BudgetExceeded& e) {
    VerificationReport r;
    r.id = std::move(id);
    r.suite = std::move(suite);
    r.statement = std::move(statement);
    r.status = Status::SkippedOverBudget;
    r.detail = e.what();
    return r;
}

inline VerificationReport failed(std::string id, std::string suite, std::string statement, const std::string& why) {
    VerificationReport r;
    r.id = std::move(id);
    r.suite = std::move(suite);
    r.statement = std::move(statement);
    r.status = Status::Mismatch;
    r.detail = why;
    return r;
}

/// Ind(build(id)) against a descriptor.
inline VerificationReport check_family(std::string rid, std::string suite, const FamilyId& id, const WedgeDescriptor& pred,
                                       const Budget& budget) {
    const std::string st = "Ind(" + id.str() + ") = " + pred.str();
    const auto t0 = Clock::now();
    try {
        nlohmann::json sizes = nlohmann::json::object();
        auto h = ind_homology(build(id), budget, sizes);
        auto r = compare(std::move(rid), std::move(suite), st, pred, h);
        r.sizes = std::move(sizes);
        r.seconds = since(t0);
        return r;
    } catch (const BudgetExceeded& e) {
        auto r = skipped(std::move(rid), std::move(suite), st, e);
        r.seconds = since(t0);
        return r;
    }
}

using Task = std::function<std::vector<VerificationReport>()>;

/// Runs tasks on up to `jobs` threads; output keeps task order.
inline std::vector<VerificationReport> run_pool(const std::vector<Task>& tasks, unsigned jobs) {
    std::vector<std::vector<VerificationReport>> out(tasks.size());
    auto guarded = [&](std::size_t i) {
        try {
            out[i] = tasks[i]();
        } catch (const std::exception& e) {
            out[i] = {failed("task-" + std::to_string(i), "internal", "task completed", std::string("error: ") + e.what())};
        }
    };
    if (jobs <= 1 || tasks.size() <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) guarded(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        const unsigned n = std::min<unsigned>(jobs, static_cast<unsigned>(tasks.size()));
        for (unsigned t = 0; t < n; ++t)
            pool.emplace_back([&] {
                for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) guarded(i);
            });
        for (auto& th : pool) th.join();
    }
    std::vector<VerificationReport> flat;
    for (auto& v : out)
        for (auto& r : v) flat.push_back(std::move(r));
    return flat;
}

inline std::string rule_key(const RecurrenceRule& r) { return family_name(r.family) + "-" + std::to_string(r.m); }

inline nlohmann::json dims_json(std::optional<int> lo, std::optional<int> hi) {
    return {{"d_min", lo ? nlohmann::json(*lo) : nlohmann::json()}, {"d_max", hi ? nlohmann::json(*hi) : nlohmann::json()}};
}

// ---------------------------------------------------------------- suites

inline std::vector<Task> laws_tasks(const VerifyOptions& o) {
    std::vector<Task> t;
    t.push_back([o] {
        std::vector<VerificationReport> out;
        for (int n = 1; n <= 15; ++n)
            out.push_back([&] {
                auto t0 = Clock::now();
                auto r = compare("law-path-P" + std::to_string(n), "laws", "Ind(P_" + std::to_string(n) + ") = " + path_law(n).str(),
                                 path_law(n), ind_homology(path(n), o.budget));
                r.seconds = since(t0);
                return r;
            }());
        for (int n = 3; n <= 15; ++n)
            out.push_back([&] {
                auto t0 = Clock::now();
                auto r = compare("law-cycle-C" + std::to_string(n), "laws", "Ind(C_" + std::to_string(n) + ") = " + cycle_law(n).str(),
                                 cycle_law(n), ind_homology(cycle(n), o.budget));
                r.seconds = since(t0);
                return r;
            }());
        return out;
    });
    return t;
}

inline std::vector<Task> base_case_tasks(const VerifyOptions& o) {
    std::vector<Task> t;
    for (const auto& rule : table_for(o))
        for (const auto& [n, desc] : rule.bases) {
            const FamilyId id{rule.family, rule.m, n};
            t.push_back([o, id, d = desc, key = rule_key(rule)] {
                return std::vector{check_family("base-" + key + "-n" + std::to_string(id.n), "base-cases", id, d, o.budget)};
            });
        }
    return t;
}

/// Smallest n a rule speaks about.
inline int first_n(const RecurrenceRule& r) {
    int lo = r.valid_from;
    if (!r.bases.empty()) lo = std::min(lo, r.bases.begin()->first);
    return std::max(lo, 0);
}

inline std::vector<Task> recurrence_tasks(const VerifyOptions& o) {
    std::vector<Task> t;
    for (const auto& rule : table_for(o)) {
        // rule right-hand side against each stated base case it also covers
        t.push_back([o, &rule] {
            std::vector<VerificationReport> out;
            Predictor p(table_for(o));
            for (const auto& [n, base] : rule.bases) {
                if (n < rule.valid_from) continue;
                VerificationReport r;
                r.id = "rec-" + rule_key(rule) + "-n" + std::to_string(n) + "-rule-vs-base";
                r.suite = "recurrences";
                const auto rhs = p.apply(rule, n);
                r.statement = "recurrence at n = " + std::to_string(n) + " agrees with the stated base case " + base.str();
                r.predicted = base.to_json();
                r.computed = rhs.to_json();
                r.status = rhs == base ? Status::Match : Status::Mismatch;
                if (r.status == Status::Mismatch) r.detail = "base " + base.str() + ", recurrence gives " + rhs.str();
                out.push_back(std::move(r));
            }
            return out;
        });
        // predictions against homology, n upward until the budget runs out
        t.push_back([o, &rule] {
            std::vector<VerificationReport> out;
            Predictor p(table_for(o));
            for (int n = first_n(rule); n <= o.max_n; ++n) {
                const FamilyId id{rule.family, rule.m, n};
                if (!is_constructible(id)) continue;
                auto r = check_family("rec-" + rule_key(rule) + "-n" + std::to_string(n), "recurrences", id, p.predict(id), o.budget);
                const bool stop = r.status == Status::SkippedOverBudget;
                out.push_back(std::move(r));
                if (stop) break;
            }
            return out;
        });
    }
    return t;
}

inline VerificationReport dims_report(std::string id, std::string statement, std::optional<int> tmin, std::optional<int> tmax,
                                      const WedgeDescriptor& w) {
    VerificationReport r;
    r.id = std::move(id);
    r.suite = "tables";
    r.statement = std::move(statement);
    r.predicted = dims_json(tmin, tmax);
    r.computed = dims_json(w.min_dim(), w.max_dim());
    const bool ok = (!tmin || w.min_dim() == tmin) && (!tmax || w.max_dim() == tmax);
    r.status = ok ? Status::Match : Status::Mismatch;
    if (!ok) r.detail = "tabulated " + r.predicted.dump() + ", recurrences give " + r.computed.dump() + " (" + w.str() + ")";
    return r;
}

inline std::vector<Task> table_tasks(const VerifyOptions& o) {
    std::vector<Task> t;
    for (int m : {5, 4})
        t.push_back([o, m] {
            std::vector<VerificationReport> out;
            Predictor p(table_for(o));
            for (int n = 3; n <= o.table_n; ++n) {
                auto d = closed_form_dims(n, m);
                auto w = predict_matching(n, m, p);
                out.push_back(dims_report("table-dims-P" + std::to_string(n) + "xP" + std::to_string(m),
                                          "extreme sphere dimensions of M(P_" + std::to_string(n) + " x P_" + std::to_string(m) +
                                              ") equal the closed form",
                                          d.d_min, d.d_max, w));
            }
            return out;
        });
    t.push_back([o] {
        std::vector<VerificationReport> out;
        Predictor p(table_for(o));
        for (int n = 2; n <= o.table_n; ++n) {
            VerificationReport r;
            r.id = "table-count-P" + std::to_string(n) + "xP3";
            r.suite = "tables";
            const auto want = WedgeDescriptor::sphere(closed_form_dim_m3(n), closed_form_count(n));
            const auto got = predict_matching(n, 3, p);
            r.statement = "M(P_" + std::to_string(n) + " x P_3) = " + want.str();
            r.predicted = want.to_json();
            r.computed = got.to_json();
            r.status = want == got ? Status::Match : Status::Mismatch;
            if (r.status == Status::Mismatch) r.detail = "recurrences give " + got.str();
            out.push_back(std::move(r));
        }
        for (Family f : {Family::Gamma, Family::A, Family::Lambda, Family::LambdaTilde})
            for (int n = 0; n <= std::min(o.table_n, 30); ++n) {
                const FamilyId id{f, 3, n};
                VerificationReport r;
                r.id = "table-closed-" + family_name(f) + "-3-n" + std::to_string(n);
                r.suite = "tables";
                const auto want = closed_form_family_m3(id);
                const auto got = p.predict(id);
                r.statement = "Ind(" + id.str() + ") = " + want.str() + " by the direct formula";
                r.predicted = want.to_json();
                r.computed = got.to_json();
                r.status = want == got ? Status::Match : Status::Mismatch;
                if (r.status == Status::Mismatch) r.detail = "recurrences give " + got.str();
                out.push_back(std::move(r));
            }
        return out;
    });
    for (int m : {5, 4})
        t.push_back([o, m] {
            std::vector<VerificationReport> out;
            Predictor p(table_for(o));
            for (Family f : all_families)
                for (int n = 0; n <= o.table_n; ++n) {
                    const FamilyId id{f, m, n};
                    if (!is_constructible(id)) continue;
                    auto tmin = table_dmin(id), tmax = table_dmax(id);
                    if (!tmin && !tmax) continue;
                    out.push_back(dims_report("table-family-" + family_name(f) + "-" + std::to_string(m) + "-n" + std::to_string(n),
                                              "extreme sphere dimensions of Ind(" + id.str() + ") equal the table", tmin, tmax,
                                              p.predict(id)));
                }
            return out;
        });
    return t;
}

/// Homology of M(P_n x P_m) composed from its line-graph components, and directly when `direct`.
struct MatchingHomology {
    HomologyProfile composed;
    std::optional<HomologyProfile> direct;
    nlohmann::json sizes = nlohmann::json::object();
};

inline MatchingHomology matching_homology(int n, int m, const Budget& budget, bool direct) {
    MatchingHomology out;
    const Graph prod = categorical_product(path(n), path(m));
    const Graph lg = line_graph(prod);
    if (lg.order() == 0) {
        out.composed.is_void = true;
    } else {
        auto comps = connected_components(lg);
        nlohmann::json cs = nlohmann::json::array();
        std::optional<HomologyProfile> acc;
        for (const auto& c : comps) {
            nlohmann::json s = nlohmann::json::object();
            auto h = ind_homology(c, budget, s);
            cs.push_back(s);
            acc = acc ? join(*acc, h) : h;
        }
        out.composed = *acc;
        out.sizes["components"] = cs;
    }
    if (direct) {
        auto c = matching_complex(prod, std::nullopt, budget);
        HomologyOptions ho;
        ho.budget = budget;
        out.direct = reduced_homology(c, ho);
        out.sizes["simplices"] = c.total();
    }
    return out;
}

inline VerificationReport matching_report(int n, int m, const WedgeDescriptor& pred, const Budget& budget, bool want_direct) {
    const std::string id = "matching-P" + std::to_string(n) + "xP" + std::to_string(m);
    const std::string st = "M(P_" + std::to_string(n) + " x P_" + std::to_string(m) + ") = " + pred.str();
    const auto t0 = Clock::now();
    MatchingHomology mh;
    try {
        mh = matching_homology(n, m, budget, false);
    } catch (const BudgetExceeded& e) {
        auto r = skipped(id, "matching", st, e);
        r.seconds = since(t0);
        return r;
    }
    std::string direct_note;
    if (want_direct) {
        try {
            mh.direct = matching_homology(n, m, budget, true).direct;
        } catch (const BudgetExceeded& e) {
            direct_note = std::string("direct check skipped: ") + e.what();
        }
    }
    VerificationReport r;
    r.id = id;
    r.suite = "matching";
    r.statement = st;
    r.predicted = pred.to_json();
    r.computed = {{"components_joined", mh.composed.to_json()},
                  {"direct", mh.direct ? mh.direct->to_json() : nlohmann::json()}};
    r.sizes = mh.sizes;
    bool ok = pred.matches(mh.composed);
    if (mh.direct) ok = ok && pred.matches(*mh.direct);
    r.status = ok ? Status::Match : Status::Mismatch;
    if (!ok) {
        r.detail = "predicted " + pred.str() + ", components give " + mh.composed.str();
        if (mh.direct) r.detail += ", direct gives " + mh.direct->str();
    }
    if (!direct_note.empty()) r.detail += (r.detail.empty() ? "" : "; ") + direct_note;
    r.seconds = since(t0);
    return r;
}

inline std::vector<Task> matching_tasks(const VerifyOptions& o) {
    std::vector<Task> t;
    for (int m = 1; m <= 5; ++m)
        t.push_back([o, m] {
            std::vector<VerificationReport> out;
            Predictor p(table_for(o));
            const int top = m <= 2 ? 8 : 2 * o.max_n + 3;
            for (int n = 2; n <= top; ++n) {
                // the full complex is checked only while it is small
                auto r = matching_report(n, m, predict_matching(n, m, p), o.budget, n * m <= 20);
                const bool stop = r.status == Status::SkippedOverBudget;
                out.push_back(std::move(r));
                if (stop) break;
            }
            return out;
        });
    return t;
}

inline std::vector<Task> component_tasks(const VerifyOptions&) {
    std::vector<Task> t;
    for (int m = 3; m <= 5; ++m)
        t.push_back([m] {
            std::vector<VerificationReport> out;
            for (int n = 2; n <= 9; ++n) {
                const auto t0 = Clock::now();
                auto [a, b] = product_component_families(n, m);
                VerificationReport r;
                r.id = "components-P" + std::to_string(n) + "xP" + std::to_string(m);
                r.suite = "components";
                r.statement = "L(P_" + std::to_string(n) + " x P_" + std::to_string(m) + ") = " + a.str() + " + " + b.str();
                r.predicted = nlohmann::json::array({a.str(), b.str()});
                try {
                    auto cs = components_of_product(n, m);
                    r.computed = nlohmann::json::array({cs[0].family.str(), cs[1].family.str()});
                    r.sizes = {{"orders", {cs[0].graph.order(), cs[1].graph.order()}}};
                } catch (const FamilyError& e) {
                    r.status = Status::Mismatch;
                    r.detail = e.what();
                }
                r.seconds = since(t0);
                out.push_back(std::move(r));
            }
            return out;
        });
    return t;
}

/// Every applicable rewrite on g, checked against Ind(g). Returns failure descriptions.
inline std::vector<std::string> rewrite_failures(const Graph& g, nlohmann::json& counts) {
    std::vector<std::string> bad;
    const auto h = ind_homology(g);
    std::size_t nf = 0, nt = 0, ns = 0, nl = 0;
    for (const auto& f : find_folds(g)) {
        ++nf;
        if (!(ind_homology(apply_fold(g, f.v, f.w)) == h)) bad.push_back("fold " + f.v.str() + " " + f.w.str());
    }
    for (const auto& x : find_edge_invariant_triplets(g)) {
        ++nt;
        if (!(ind_homology(toggle_edge(g, x.u, x.v, x.x)) == h))
            bad.push_back("toggle " + x.u.str() + " " + x.v.str() + " ; " + x.x.str());
    }
    for (const auto& v : simplicial_vertices(g)) {
        ++ns;
        std::vector<HomologyProfile> parts;
        for (const auto& b : simplicial_split(g, v).branches) parts.push_back(suspend(ind_homology(b), 1));
        if (!(wedge(parts) == h)) bad.push_back("simplicial split at " + v.str());
    }
    for (const auto& v : g.vertices())
        for (const auto& u : g.vertices()) {
            if (!is_cone_witness(g, v, u)) continue;
            ++nl;
            auto ld = link_deletion_split(g, v, u);
            if (!(wedge({ind_homology(ld.deletion), suspend(ind_homology(ld.link), 1)}) == h))
                bad.push_back("link/deletion at " + v.str() + " witness " + u.str());
        }
    counts = {{"fold", nf}, {"toggle", nt}, {"simplicial_split", ns}, {"link_deletion", nl}};
    return bad;
}

inline Graph random_graph(std::mt19937_64& rng, int max_vertices) {
    std::uniform_int_distribution<int> nv(1, max_vertices);
    std::uniform_real_distribution<double> pd(0.1, 0.7);
    const int n = nv(rng);
    const double p = pd(rng);
    std::bernoulli_distribution coin(p);
    std::vector<Label> vs;
    for (int i = 0; i < n; ++i) vs.emplace_back(i);
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) es.emplace_back(Label(i), Label(j));
    return Graph(std::move(vs), es);
}

inline VerificationReport rewrite_report(std::string id, const Graph& g) {
    const auto t0 = Clock::now();
    VerificationReport r;
    r.id = std::move(id);
    r.suite = "rewrites";
    r.statement = "every applicable rewrite preserves or decomposes Ind homology";
    nlohmann::json counts;
    auto bad = rewrite_failures(g, counts);
    r.predicted = counts;
    r.computed = nlohmann::json{{"failures", bad}};
    r.sizes = {{"vertices", g.order()}, {"edges", g.size()}};
    r.status = bad.empty() ? Status::Match : Status::Mismatch;
    if (!bad.empty()) r.detail = "graph " + g.str() + ": " + bad.front();
    r.seconds = since(t0);
    return r;
}

inline std::vector<Task> rewrite_tasks(const VerifyOptions& o) {
    std::vector<Task> t;
    std::mt19937_64 rng(o.seed);
    std::vector<Graph> graphs;
    for (int i = 0; i < o.random_graphs; ++i) graphs.push_back(random_graph(rng, o.random_max_vertices));
    const std::size_t chunk = 50;
    for (std::size_t s = 0; s < graphs.size(); s += chunk)
        t.push_back([graphs, s, chunk] {
            std::vector<VerificationReport> out;
            for (std::size_t i = s; i < std::min(graphs.size(), s + chunk); ++i) {
                char buf[32];
                std::snprintf(buf, sizeof buf, "rewrite-random-%03zu", i);
                out.push_back(rewrite_report(buf, graphs[i]));
            }
            return out;
        });
    t.push_back([] {
        std::vector<VerificationReport> out;
        for (int m : {3, 4, 5})
            for (const auto& id : family_members(m, -1, 3)) {
                Graph g = build(id);
                if (g.order() > 14) continue;
                out.push_back(rewrite_report("rewrite-family-" + family_name(id.family) + "-" + std::to_string(m) + "-n" +
                                                 std::to_string(id.n),
                                             g));
            }
        return out;
    });
    return t;
}

struct ScriptFixture {
    std::string file;
    nlohmann::json script;
    std::string family;   // "Name:m"
    int n_lo = 0, n_hi = 0;
};

inline std::vector<ScriptFixture> load_fixtures(const std::string& dir) {
    namespace fs = std::filesystem;
    std::vector<ScriptFixture> out;
    if (!fs::is_directory(dir)) throw std::runtime_error("fixture directory not found: " + dir);
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.path().extension() == ".json") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
        std::ifstream in(f);
        ScriptFixture s;
        s.file = f.filename().string();
        s.script = nlohmann::json::parse(in);
        s.family = s.script.at("family").get<std::string>();
        s.n_lo = s.script.at("n").at(0).get<int>();
        s.n_hi = s.script.at("n").at(1).get<int>();
        out.push_back(std::move(s));
    }
    return out;
}

/// Replays one fixture on one family member and checks the trace against direct homology.
inline VerificationReport script_report(const ScriptFixture& fx, int n, const Budget& budget) {
    const auto t0 = Clock::now();
    const auto id = FamilyId::parse(fx.family + ":" + std::to_string(n));
    const std::string name = fx.script.value("name", fx.file);
    VerificationReport r;
    r.id = "script-" + name + "-n" + std::to_string(n);
    r.suite = "scripts";
    r.statement = "replay of " + fx.file + " on " + id.str() + " is consistent with Ind homology";
    try {
        auto tr = replay(fx.script, build(id), id);
        r.predicted = {{"expression", tr.expression().str()}, {"steps", tr.steps().size()}};
        auto c = check_trace(tr, budget);
        r.computed = {{"initial", c.initial.to_json()}, {"composed", c.composed.to_json()}};
        r.status = c.consistent() ? Status::Match : Status::Mismatch;
        if (!c.consistent()) r.detail = "Ind(initial) " + c.initial.str() + ", expression gives " + c.composed.str();
        r.sizes = {{"vertices", tr.initial().order()}};
    } catch (const ScriptError& e) {
        r.status = Status::Mismatch;
        r.detail = e.what();
    } catch (const BudgetExceeded& e) {
        r.status = Status::SkippedOverBudget;
        r.detail = e.what();
    }
    r.seconds = since(t0);
    return r;
}

inline std::vector<Task> script_tasks(const VerifyOptions& o) {
    std::vector<Task> t;
    for (const auto& fx : load_fixtures(o.fixture_dir))
        for (int n = fx.n_lo; n <= fx.n_hi; ++n) t.push_back([fx, n, o] { return std::vector{script_report(fx, n, o.budget)}; });
    return t;
}

inline std::vector<Task> suite_tasks(const std::string& suite, const VerifyOptions& o) {
    if (suite == "laws") return laws_tasks(o);
    if (suite == "base-cases") return base_case_tasks(o);
    if (suite == "recurrences") return recurrence_tasks(o);
    if (suite == "tables") return table_tasks(o);
    if (suite == "matching") return matching_tasks(o);
    if (suite == "components") return component_tasks(o);
    if (suite == "rewrites") return rewrite_tasks(o);
    if (suite == "scripts") return script_tasks(o);
    if (suite == "all") {
        std::vector<Task> all;
        for (const auto& s : suite_names()) {
            auto v = suite_tasks(s, o);
            all.insert(all.end(), v.begin(), v.end());
        }
        return all;
    }
    throw std::invalid_argument("unknown suite \"" + suite + "\"");
}

} // namespace detail

/// Runs a suite ("laws", "base-cases", ..., or "all"); reports come back in a fixed order.
inline std::vector<VerificationReport> run_suite(const std::string& suite, const VerifyOptions& o = {}) {
    return detail::run_pool(detail::suite_tasks(suite, o), o.jobs);
}

struct ReportSummary {
    std::size_t match = 0, mismatch = 0, skipped = 0;
};

inline ReportSummary summarize(const std::vector<VerificationReport>& rs) {
    ReportSummary s;
    for (const auto& r : rs) {
        switch (r.status) {
        case Status::Match: ++s.match; break;
        case Status::Mismatch: ++s.mismatch; break;
        case Status::SkippedOverBudget: ++s.skipped; break;
        }
    }
    return s;
}

inline nlohmann::json reports_json(const std::string& suite, const VerifyOptions& o, const std::vector<VerificationReport>& rs,
                                   bool timing = false) {
    auto s = summarize(rs);
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rs) arr.push_back(r.to_json(timing));
    return {{"schema", report_schema},
            {"suite", suite},
            {"recurrence_table", o.amended ? "amended" : "as-stated"},
            {"budget", {{"max_simplices", o.budget.max_simplices}, {"max_matrix_entries", o.budget.max_matrix_entries}}},
            {"summary", {{"match", s.match}, {"mismatch", s.mismatch}, {"skipped_over_budget", s.skipped}}},
            {"reports", arr}};
}

} // namespace matchtop
