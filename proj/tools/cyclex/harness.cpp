#include "harness.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "cyclex/constructions.hpp"
#include "cyclex/cycles.hpp"
#include "cyclex/error.hpp"
#include "cyclex/fragments.hpp"
#include "cyclex/graph6.hpp"
#include "cyclex/invariants.hpp"
#include "cyclex/parallel.hpp"
#include "cyclex/schemes.hpp"
#include "graph_enum.hpp"
#include "oracles.hpp"

namespace cyclex::cli {

using nlohmann::json;

namespace {

constexpr int kSchemaVersion = 1;
constexpr std::size_t kBatch = 1024;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string_view strip(std::string_view s) {
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    constexpr std::string_view header = ">>graph6<<";
    if (s.starts_with(header)) s.remove_prefix(header.size());
    return s;
}

json to_json(const InvariantRecord& r) {
    return {{"n", r.n}, {"delta", r.delta}, {"kappa", r.kappa}, {"alpha", r.alpha}, {"edges", r.edge_count}};
}

std::string witness_text(const std::optional<CycleSeq>& c) {
    if (!c) return "";
    std::string s;
    for (int v : c->vertices) s += (s.empty() ? "" : " ") + std::to_string(v);
    return s;
}

json to_json(const Verdict& v) {
    json j{{"statement", to_string(v.id)},
           {"applicable", v.applicable},
           {"evaluated", v.evaluated},
           {"holds", v.holds},
           {"indeterminate", v.indeterminate},
           {"target", v.target},
           {"witness_kind", to_string(v.witness_kind)}};
    j["witness"] = v.witness ? json(v.witness->vertices) : json(nullptr);
    if (!v.detail.empty()) j["detail"] = v.detail;
    return j;
}

std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

// One decoded input line.  Lines are processed in batches; each batch runs
// in parallel and is appended in input order.
struct LineWork {
    std::size_t line = 0;
    std::string text;
    std::optional<Graph> graph;
    std::string error;  ///< decode or evaluation failure
    bool skipped = false;
};

template <typename Body>
void for_each_batch(std::istream& in, const RunConfig& config, Body&& body) {
    std::size_t line_no = 0;
    std::string line;
    std::vector<LineWork> batch;
    bool more = true;
    while (more) {
        batch.clear();
        while (batch.size() < kBatch && (more = static_cast<bool>(std::getline(in, line)))) {
            ++line_no;
            const std::string_view text = strip(line);
            if (text.empty()) continue;
            LineWork w;
            w.line = line_no;
            w.text = std::string(text);
            batch.push_back(std::move(w));
        }
        if (batch.empty()) break;
        parallel_for(batch.size(), config.workers, [&](std::size_t i) {
            LineWork& w = batch[i];
            try {
                Graph g = decode_graph6(w.text);
                if (g.order() > config.max_n) {
                    w.skipped = true;
                    return;
                }
                w.graph = std::move(g);
            } catch (const Error& e) {
                w.error = e.what();
            }
        });
        body(batch);
    }
}

struct GraphResult {
    std::optional<InvariantRecord> invariants;
    std::vector<Verdict> verdicts;
    std::string error;
};

struct StatementTally {
    std::uint64_t applicable = 0;
    std::uint64_t holds = 0;
    std::uint64_t indeterminate = 0;
    std::vector<std::size_t> counterexamples;
};

}  // namespace

int cmd_check(const RunConfig& config, std::istream& in, std::ostream& out) {
    const SearchBudget budget{config.budget, nullptr};
    json graphs = json::array();
    json errors = json::array();
    std::vector<StatementTally> tally(config.statements.size());
    std::uint64_t scanned = 0;
    std::uint64_t skipped = 0;
    std::ostringstream rows;
    if (config.format == Format::Csv) {
        rows << "line,graph6,n,delta,kappa,alpha,edges,statement,applicable,holds,indeterminate,target,witness_kind,"
                "witness\n";
    }

    for_each_batch(in, config, [&](std::vector<LineWork>& batch) {
        std::vector<GraphResult> results(batch.size());
        parallel_for(batch.size(), config.workers, [&](std::size_t i) {
            if (!batch[i].graph) return;
            GraphResult& r = results[i];
            try {
                GraphProfile profile(*batch[i].graph, budget);
                r.invariants = profile.invariants();
                for (StatementId id : config.statements) r.verdicts.push_back(check_statement(profile, id));
            } catch (const Error& e) {
                r.error = e.what();
                r.verdicts.clear();
            }
        });
        for (std::size_t i = 0; i < batch.size(); ++i) {
            const LineWork& w = batch[i];
            const GraphResult& r = results[i];
            if (w.skipped) {
                ++skipped;
                continue;
            }
            const std::string& err = w.graph ? r.error : w.error;
            if (!err.empty()) {
                errors.push_back({{"line", w.line}, {"message", err}});
                if (config.format == Format::Text) rows << "line " << w.line << ": error: " << err << "\n";
                continue;
            }
            ++scanned;
            json record{{"line", w.line}, {"graph6", w.text}, {"invariants", to_json(*r.invariants)}};
            json verdicts = json::array();
            for (std::size_t s = 0; s < r.verdicts.size(); ++s) {
                const Verdict& v = r.verdicts[s];
                StatementTally& t = tally[s];
                if (v.applicable) {
                    ++t.applicable;
                    if (v.indeterminate) {
                        ++t.indeterminate;
                    } else if (v.holds) {
                        ++t.holds;
                    }
                }
                if (v.counterexample() && !is_conjecture(v.id)) t.counterexamples.push_back(w.line);
                verdicts.push_back(to_json(v));
                const InvariantRecord& inv = *r.invariants;
                if (config.format == Format::Csv) {
                    rows << w.line << ',' << csv_field(w.text) << ',' << inv.n << ',' << inv.delta << ','
                         << inv.kappa << ',' << inv.alpha << ',' << inv.edge_count << ',' << to_string(v.id) << ','
                         << v.applicable << ',' << v.holds << ',' << v.indeterminate << ',' << v.target << ','
                         << to_string(v.witness_kind) << ',' << witness_text(v.witness) << '\n';
                } else if (config.format == Format::Text) {
                    rows << "line " << w.line << " " << w.text << " n=" << inv.n << " δ=" << inv.delta
                         << " κ=" << inv.kappa << " α=" << inv.alpha << " " << to_string(v.id) << ": "
                         << (!v.applicable      ? "not applicable"
                             : v.indeterminate ? "indeterminate"
                             : v.holds         ? "holds"
                                               : "FAILS");
                    if (v.target > 0) rows << " target=" << v.target;
                    if (v.witness) rows << " witness=[" << witness_text(v.witness) << "]";
                    rows << "\n";
                }
            }
            record["verdicts"] = std::move(verdicts);
            graphs.push_back(std::move(record));
        }
    });

    bool failed = false;
    json per_statement = json::array();
    for (std::size_t s = 0; s < config.statements.size(); ++s) {
        const StatementTally& t = tally[s];
        failed = failed || !t.counterexamples.empty() || (config.strict && t.indeterminate > 0);
        per_statement.push_back({{"statement", to_string(config.statements[s])},
                                 {"applicable", t.applicable},
                                 {"holds", t.holds},
                                 {"indeterminate", t.indeterminate},
                                 {"counterexamples", t.counterexamples}});
    }
    failed = failed || (config.strict && !errors.empty());

    if (config.format == Format::Json) {
        json report{{"schema_version", kSchemaVersion},
                    {"command", "check"},
                    {"graphs", std::move(graphs)},
                    {"errors", std::move(errors)},
                    {"summary", {{"scanned", scanned}, {"skipped", skipped}, {"statements", per_statement}}}};
        out << report.dump(2) << "\n";
    } else {
        out << rows.str();
        if (config.format == Format::Text) {
            out << "scanned " << scanned << ", skipped " << skipped << ", errors " << errors.size() << "\n";
            for (const json& s : per_statement) {
                out << s["statement"].get<std::string>() << ": applicable " << s["applicable"] << ", holds "
                    << s["holds"] << ", indeterminate " << s["indeterminate"] << ", counterexamples "
                    << s["counterexamples"].size() << "\n";
            }
        }
    }
    return failed ? kExitFailure : kExitOk;
}

int cmd_invariants(const RunConfig& config, std::istream& in, std::ostream& out) {
    const SearchBudget budget{config.budget, nullptr};
    json graphs = json::array();
    json errors = json::array();
    std::uint64_t skipped = 0;
    std::ostringstream rows;
    if (config.format == Format::Csv) rows << "line,graph6,n,delta,kappa,alpha,edges,circumference,dominating\n";

    struct Row {
        std::optional<InvariantRecord> inv;
        std::optional<int> circumference;
        std::optional<bool> dominating;
        std::string error;
    };
    for_each_batch(in, config, [&](std::vector<LineWork>& batch) {
        std::vector<Row> results(batch.size());
        parallel_for(batch.size(), config.workers, [&](std::size_t i) {
            if (!batch[i].graph) return;
            Row& r = results[i];
            try {
                GraphProfile profile(*batch[i].graph, budget);
                r.inv = profile.invariants();
                try {
                    r.circumference = profile.circumference().length;
                } catch (const Error& e) {
                    if (e.code() != ErrorCode::BudgetExhausted) throw;
                }
                try {
                    r.dominating = profile.dominating_cycle().has_value();
                } catch (const Error& e) {
                    if (e.code() != ErrorCode::BudgetExhausted) throw;
                }
            } catch (const Error& e) {
                r.error = e.what();
            }
        });
        for (std::size_t i = 0; i < batch.size(); ++i) {
            const LineWork& w = batch[i];
            const Row& r = results[i];
            if (w.skipped) {
                ++skipped;
                continue;
            }
            const std::string& err = w.graph ? r.error : w.error;
            if (!err.empty()) {
                errors.push_back({{"line", w.line}, {"message", err}});
                if (config.format == Format::Text) rows << "line " << w.line << ": error: " << err << "\n";
                continue;
            }
            const InvariantRecord& inv = *r.inv;
            json record{{"line", w.line}, {"graph6", w.text}, {"invariants", to_json(inv)}};
            record["circumference"] = r.circumference ? json(*r.circumference) : json(nullptr);
            record["dominating"] = r.dominating ? json(*r.dominating) : json(nullptr);
            graphs.push_back(std::move(record));
            const std::string c = r.circumference ? std::to_string(*r.circumference) : "?";
            const std::string d = r.dominating ? (*r.dominating ? "true" : "false") : "?";
            if (config.format == Format::Csv) {
                rows << w.line << ',' << csv_field(w.text) << ',' << inv.n << ',' << inv.delta << ',' << inv.kappa
                     << ',' << inv.alpha << ',' << inv.edge_count << ',' << c << ',' << d << '\n';
            } else if (config.format == Format::Text) {
                rows << w.text << " (" << inv.n << ',' << inv.delta << ',' << inv.kappa << ',' << inv.alpha << ','
                     << c << ',' << d << ")\n";
            }
        }
    });

    if (config.format == Format::Json) {
        json report{{"schema_version", kSchemaVersion},
                    {"command", "invariants"},
                    {"graphs", std::move(graphs)},
                    {"errors", std::move(errors)},
                    {"summary", {{"scanned", graphs.size()}, {"skipped", skipped}}}};
        report["summary"]["scanned"] = report["graphs"].size();
        out << report.dump(2) << "\n";
    } else {
        out << rows.str();
    }
    return kExitOk;
}

namespace {

int parse_int(const std::string& s) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) throw UsageError("not an integer: " + s);
    return value;
}

}  // namespace

int cmd_construct(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const std::vector<std::string>& args = config.construct_args;
    try {
        if (args.empty()) throw UsageError("construct needs a family: mKa+Kb m a b | H a b t kappa");
        const std::string& family = args[0];
        std::vector<int> p;
        for (std::size_t i = 1; i < args.size(); ++i) p.push_back(parse_int(args[i]));
        Graph g;
        if (family == "mKa+Kb") {
            if (p.size() != 3) throw UsageError("mKa+Kb takes m a b");
            if (p[0] < 1 || p[1] < 1 || p[2] < 1) throw UsageError("mKa+Kb parameters must be positive");
            if (p[0] * p[1] + p[2] > kMaxVertices) throw UsageError("more than 64 vertices");
            g = join(disjoint_copies(p[0], complete_graph(p[1])), complete_graph(p[2]));
        } else if (family == "H") {
            if (p.size() != 4) throw UsageError("H takes a b t kappa");
            g = construct_H(p[0], p[1], p[2], p[3]);
        } else {
            throw UsageError("unknown family: " + family);
        }
        out << encode_graph6(g) << "\n";
        return kExitOk;
    } catch (const UsageError& e) {
        err << "cyclex construct: " << e.what() << "\n";
    } catch (const Error& e) {
        err << "cyclex construct: " << e.what() << "\n";
    }
    return kExitUsage;
}

namespace {

struct Suite {
    std::string name;
    bool passed = false;
    std::uint64_t checked = 0;
    std::uint64_t failures = 0;
    json detail = json::object();
};

Suite scheme_suite(const RunConfig& config) {
    SweepOptions opts;
    opts.max_length = std::clamp(config.max_n, opts.min_length, opts.max_length);
    opts.workers = config.workers;
    opts.bound_shift = config.bound_shift;
    const SweepReport r = scheme_soundness_sweep(opts);
    Suite s{"scheme-sweep", r.clean(), r.schemes_checked, r.violations.size()};
    json by_clause = json::object();
    for (const SweepFinding& f : r.violations) {
        const std::string key = std::string(to_string(f.check.clause)) + "@r=" + std::to_string(f.r);
        by_clause[key] = by_clause.value(key, 0) + 1;
    }
    s.detail = {{"max_length", opts.max_length},
                {"clause_checks", r.clause_checks},
                {"review_failures", r.review_failures},
                {"violations_by_clause", by_clause}};
    if (!r.violations.empty()) {
        const SweepFinding& f = r.violations.front();
        json z = json::array();
        for (const VertexSet& set : f.zsets) z.push_back(set.to_vector());
        s.detail["first_violation"] = {{"clause", to_string(f.check.clause)},
                                       {"cycle_length", f.cycle_length},
                                       {"r", f.r},
                                       {"zsets", z},
                                       {"bound", f.check.bound}};
    }
    return s;
}

Suite duality_suite(const RunConfig& config) {
    std::vector<Graph> graphs;
    for (int n = 1; n <= std::min(7, config.max_n); ++n) {
        for (Graph& g : testing::graphs_up_to_iso(n)) graphs.push_back(std::move(g));
    }
    std::vector<std::uint8_t> bad(graphs.size(), 0);
    parallel_for(graphs.size(), config.workers, [&](std::size_t i) {
        const Graph& g = graphs[i];
        if (is_complete(g) || !testing::brute_connected(g, g.vertices().bits())) return;
        const int kappa = testing::brute_connectivity(g);
        for (const Fragment& f : fragments_of(g)) {
            const Neighborhood dual = neighborhood_and_hat(g, f.hat);
            if (dual.boundary.size() != kappa || dual.hat != f.x) bad[i] = 1;
        }
    });
    const auto failures = static_cast<std::uint64_t>(std::count(bad.begin(), bad.end(), 1));
    return {"fragment-duality", failures == 0, graphs.size(), failures};
}

Suite oracle_suite(const RunConfig& config) {
    constexpr int kGraphs = 2000;
    const int top = std::min(9, config.max_n);
    std::mt19937_64 rng(7);
    std::vector<Graph> graphs;
    for (int i = 0; i < kGraphs; ++i) {
        const int n = 1 + static_cast<int>(rng() % static_cast<unsigned>(top));
        const double p = 0.15 + 0.8 * static_cast<double>(rng() % 1000) / 1000.0;
        graphs.push_back(testing::random_graph(n, p, rng));
    }
    std::vector<std::uint8_t> bad(graphs.size(), 0);
    parallel_for(graphs.size(), config.workers, [&](std::size_t i) {
        bad[i] = circumference(graphs[i]).length != testing::permutation_circumference(graphs[i]);
    });
    const auto failures = static_cast<std::uint64_t>(std::count(bad.begin(), bad.end(), 1));
    return {"oracle-equivalence", failures == 0, graphs.size(), failures};
}

Suite limit_suite(const RunConfig& config) {
    const std::vector<LimitExample> results = certify_limit_examples(SearchBudget{config.budget, nullptr});
    Suite s{"limit-examples", true, results.size(), 0};
    for (const LimitExample& e : results) {
        if (!e.passed()) {
            s.passed = false;
            ++s.failures;
            s.detail[e.name] = e.failures;
        }
    }
    return s;
}

}  // namespace

int cmd_selftest(const RunConfig& config, std::ostream& out) {
    std::vector<Suite> suites;
    suites.push_back(scheme_suite(config));
    suites.push_back(duality_suite(config));
    suites.push_back(oracle_suite(config));
    suites.push_back(limit_suite(config));
    bool all = true;
    json list = json::array();
    for (const Suite& s : suites) {
        all = all && s.passed;
        list.push_back({{"name", s.name},
                        {"passed", s.passed},
                        {"checked", s.checked},
                        {"failures", s.failures},
                        {"detail", s.detail}});
    }
    if (config.format == Format::Json) {
        out << json{{"schema_version", kSchemaVersion}, {"command", "selftest"}, {"passed", all}, {"suites", list}}
                   .dump(2)
            << "\n";
    } else if (config.format == Format::Csv) {
        out << "suite,passed,checked,failures\n";
        for (const Suite& s : suites) out << s.name << ',' << s.passed << ',' << s.checked << ',' << s.failures << '\n';
    } else {
        for (const Suite& s : suites) {
            out << (s.passed ? "PASS " : "FAIL ") << s.name << ": checked " << s.checked << ", failures "
                << s.failures;
            if (!s.detail.empty()) out << " " << s.detail.dump();
            out << "\n";
        }
    }
    return all ? kExitOk : kExitFailure;
}

int cmd_hunt(const RunConfig& config, std::istream& in, std::ostream& out) {
    HuntOptions opts;
    opts.workers = config.workers;
    opts.budget = SearchBudget{config.budget, nullptr};
    opts.max_n = config.max_n;
    const StatementId id = config.statements.front();
    const HuntReport r = hunt_counterexamples(in, id, opts);
    const bool failed = !r.clean() || (config.strict && (r.indeterminate > 0 || !r.decode_errors.empty()));
    if (config.format == Format::Json) {
        json errors = json::array();
        for (const DecodeFailure& d : r.decode_errors) errors.push_back({{"line", d.line}, {"message", d.message}});
        json found = json::array();
        for (const Counterexample& c : r.counterexamples) {
            found.push_back({{"line", c.line},
                             {"graph6", c.graph6},
                             {"invariants", to_json(c.verdict.invariants)},
                             {"target", c.verdict.target}});
        }
        out << json{{"schema_version", kSchemaVersion},
                    {"command", "hunt"},
                    {"statement", to_string(id)},
                    {"scanned", r.scanned},
                    {"applicable", r.applicable},
                    {"holds", r.holds},
                    {"indeterminate", r.indeterminate},
                    {"skipped", r.skipped},
                    {"errors", errors},
                    {"counterexamples", found}}
                   .dump(2)
            << "\n";
    } else if (config.format == Format::Csv) {
        out << "line,graph6,n,delta,kappa,alpha,target\n";
        for (const Counterexample& c : r.counterexamples) {
            const InvariantRecord& inv = c.verdict.invariants;
            out << c.line << ',' << csv_field(c.graph6) << ',' << inv.n << ',' << inv.delta << ',' << inv.kappa << ','
                << inv.alpha << ',' << c.verdict.target << '\n';
        }
    } else {
        for (const Counterexample& c : r.counterexamples) {
            out << "line " << c.line << " " << c.graph6 << ": " << to_string(id) << " fails, target " << c.verdict.target
                << "\n";
        }
        for (const DecodeFailure& d : r.decode_errors) out << "line " << d.line << ": error: " << d.message << "\n";
        out << to_string(id) << ": scanned " << r.scanned << ", applicable " << r.applicable << ", holds " << r.holds
            << ", indeterminate " << r.indeterminate << ", skipped " << r.skipped << ", counterexamples "
            << r.counterexamples.size() << "\n";
    }
    return failed ? kExitFailure : kExitOk;
}

namespace {

int resolve_workers(std::optional<int> flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("CYCLEX_WORKERS"); env && *env) {
        const int w = parse_int(env);
        if (w < 1) throw UsageError("CYCLEX_WORKERS must be at least 1");
        return w;
    }
    return std::max(1, static_cast<int>(std::thread::hardware_concurrency()));
}

}  // namespace

int run(int argc, char** argv, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"cyclex: cycle-length statements on small graphs"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig config;
    std::vector<std::string> statement_names;
    std::optional<int> workers;
    std::string format = "json";
    app.add_option("--input", config.input, "graph6 file, - for standard input");
    app.add_option("--statement", statement_names, "statement ids (A..M, Lemma4, Conjecture1, Conjecture2, T1, "
                                                   "T1-strict, T2..T5)");
    app.add_option("--workers", workers, "worker threads (default: CYCLEX_WORKERS, then hardware concurrency)")
        ->check(CLI::PositiveNumber);
    app.add_option("--budget", config.budget, "search nodes per graph and search, 0 unlimited");
    app.add_option("--max-n", config.max_n, "skip graphs with more vertices")->check(CLI::Range(1, kMaxVertices));
    app.add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_flag("--strict", config.strict, "indeterminate verdicts and bad lines fail the run");
    app.add_option("--inject-bound-shift", config.bound_shift, "add to every scheme bound")->group("");

    CLI::App* check = app.add_subcommand("check", "evaluate statements per graph");
    CLI::App* invariants = app.add_subcommand("invariants", "n, δ, κ, α, circumference and dominating per graph");
    CLI::App* construct = app.add_subcommand("construct", "print graph6 of mKa+Kb m a b or H a b t kappa");
    construct->add_option("args", config.construct_args)->expected(0, -1);
    CLI::App* selftest = app.add_subcommand("selftest", "scheme, duality, oracle and limit-example suites");
    CLI::App* hunt = app.add_subcommand("hunt", "stream graph6 and list counterexamples to one statement");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "cyclex: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        config.workers = resolve_workers(workers);
        config.format = format == "csv" ? Format::Csv : format == "text" ? Format::Text : Format::Json;
        for (const std::string& name : statement_names) {
            const auto id = parse_statement(name);
            if (!id) throw UsageError("unknown statement: " + name);
            config.statements.push_back(*id);
        }
    } catch (const UsageError& e) {
        err << "cyclex: " << e.what() << "\n";
        return kExitUsage;
    }

    if (construct->parsed()) return cmd_construct(config, out, err);
    if (selftest->parsed()) {
        config.command = "selftest";
        return cmd_selftest(config, out);
    }

    if (config.statements.empty()) config.statements.push_back(StatementId::T1);
    if (hunt->parsed() && config.statements.size() != 1) {
        err << "cyclex hunt: exactly one --statement\n";
        return kExitUsage;
    }
    std::ifstream file;
    std::istream* source = &in;
    if (config.input != "-") {
        file.open(config.input);
        if (!file) {
            err << "cyclex: cannot open " << config.input << "\n";
            return kExitUsage;
        }
        source = &file;
    }
    int code = kExitOk;
    if (check->parsed()) code = cmd_check(config, *source, out);
    if (invariants->parsed()) code = cmd_invariants(config, *source, out);
    if (hunt->parsed()) code = cmd_hunt(config, *source, out);
    if (source->bad()) {
        err << "cyclex: read error on " << config.input << "\n";
        return kExitUsage;
    }
    return code;
}

}  // namespace cyclex::cli
