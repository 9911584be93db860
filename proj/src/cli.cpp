#include "gpar/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>

#include "gpar/error.hpp"
#include "gpar/exporter.hpp"
#include "gpar/generative.hpp"
#include "gpar/io.hpp"
#include "gpar/matcher.hpp"
#include "gpar/metrics.hpp"
#include "gpar/reframe.hpp"
#include "gpar/rule.hpp"
#include "parallel.hpp"

namespace gpar::cli {
namespace {

struct UsageError : Error {
    using Error::Error;
};

struct Options {
    std::string graph, graphs, rules, pattern, query, out;
    std::string semantics = "nra";
    std::string mode;
    std::string ns{kDefaultNamespace};
    std::string cap = std::to_string(kDefaultCap);
    std::size_t max_steps = 100;
    unsigned jobs = 1;
    int decimal = -1;
};

GraphBag load_bag(const Options& o) {
    if (!o.graph.empty() && !o.graphs.empty()) throw UsageError("use either --graph or --graphs, not both");
    if (!o.graphs.empty()) return parse_graph_bag(read_file(o.graphs));
    if (!o.graph.empty()) {
        GraphBag bag;
        bag.add(o.graph, parse_graph(read_file(o.graph)));
        return bag;
    }
    throw UsageError("--graph or --graphs is required");
}

Graph load_graph(const Options& o) {
    if (o.graph.empty()) throw UsageError("--graph is required");
    return parse_graph(read_file(o.graph));
}

std::vector<Rule> load_rules(const Options& o) {
    if (o.rules.empty()) throw UsageError("--rules is required");
    return parse_rules(read_file(o.rules));
}

std::vector<SimplifiedRule> load_simplified(const Options& o) {
    std::vector<SimplifiedRule> out;
    for (const auto& r : load_rules(o)) out.push_back(to_simplified(r));
    return out;
}

Semantics semantics_of(const Options& o) {
    return o.semantics == "hom" ? Semantics::HOM : Semantics::NRA;
}

BigInt cap_of(const Options& o) {
    try {
        BigInt cap(o.cap);
        if (cap < 0) throw std::runtime_error("negative");
        return cap;
    } catch (const std::exception&) {
        throw UsageError("--cap expects a non-negative integer");
    }
}

std::string metric_row(const std::string& id, const MetricReport& r, const Options& o) {
    const auto& s = r.stats;
    std::string row = id + '\t' + to_string(r.regime) + '\t' + s.tau.str() + '\t' + s.e1.str() + '\t' +
                      s.e2.str() + '\t' + s.joint.str();
    const MetricValue* values[] = {&r.support1, &r.support2, &r.confidence, &r.lift, &r.leverage, &r.conviction};
    for (const auto* v : values) row += '\t' + v->to_string();
    if (r.applicability) row += '\t' + r.applicability->to_string();
    if (o.decimal >= 0) {
        row += "\tapprox=";
        for (std::size_t i = 0; i < 6; ++i) row += (i ? "," : "") + values[i]->to_decimal(o.decimal);
    }
    return row + '\n';
}

void cmd_match(const Options& o, std::ostream& out) {
    if (o.pattern.empty()) throw UsageError("--pattern is required");
    Pattern p = parse_pattern(read_file(o.pattern));
    GraphBag bag = load_bag(o);
    bool headers = !o.graphs.empty();
    for (const auto& [id, g] : bag) {
        if (headers) out << "@graph " << render_label(id) << '\n';
        for (const auto& m : evaluate(p, g, semantics_of(o))) out << m.to_string() << '\n';
    }
}

void cmd_metrics(const Options& o, std::ostream& out) {
    if (o.semantics == "hom") throw UsageError("metrics are defined only under nra semantics");
    GraphBag bag = load_bag(o);
    auto rules = load_rules(o);
    std::string mode = o.mode.empty() ? (o.graphs.empty() ? "single" : "micro") : o.mode;

    std::vector<std::string> rows(rules.size());
    unsigned inner = rules.size() > 1 ? 1 : o.jobs;
    detail::parallel_for(rules.size(), rules.size() > 1 ? o.jobs : 1, [&](std::size_t i) {
        const Rule& r = rules[i];
        if (mode == "single") {
            auto per = event_stats_per_graph(bag, r, inner);
            for (std::size_t k = 0; k < per.size(); ++k) {
                std::string id = bag.size() == 1 && o.graphs.empty() ? r.name : r.name + "@" + bag.id(k);
                rows[i] += metric_row(id, metrics_from_stats(per[k]), o);
            }
        } else if (mode == "micro") {
            rows[i] = metric_row(r.name, metrics_micro(bag, r, inner), o);
        } else {
            rows[i] = metric_row(r.name, metrics_macro(bag, r, inner), o);
        }
    });
    for (const auto& row : rows) out << row;
}

void cmd_apply(const Options& o, std::ostream& out) {
    Graph g = load_graph(o);
    auto rules = load_simplified(o);
    out << serialize_graph(extend_once(g, rules));
}

void cmd_closure(const Options& o, std::ostream& out) {
    Graph g = load_graph(o);
    auto rules = load_simplified(o);
    auto result = closure(g, rules, o.max_steps);
    out << serialize_graph(result.graph);
    out << (result.fixpoint ? "FIXPOINT" : "PARTIAL") << " steps=" << result.steps << '\n';
}

void cmd_trivial(const Options& o, std::ostream& out) {
    for (const auto& r : load_rules(o)) {
        auto t = is_trivial(r);
        out << r.name << '\t' << (t.trivial ? "TRIVIAL" : "NONTRIVIAL");
        if (t.witness) out << '\t' << t.witness->to_string();
        out << '\n';
    }
}

void cmd_rewrite(const Options& o, std::ostream& out) {
    auto rules = load_simplified(o);
    for (std::size_t i = 0; i < rules.size(); ++i) out << (i ? "\n" : "") << serialize_rule(rules[i]);
}

void cmd_predict(const Options& o, std::ostream& out) {
    Graph g = load_graph(o);
    auto rules = load_simplified(o);
    if (!o.query.empty()) {
        for (const auto& p : link_predict(g, rules, parse_link_query(o.query)))
            out << render_label(p.term.label()) << '\t' << p.rule << '\t' << p.confidence.to_string() << '\n';
        return;
    }
    for (const auto& r : rules) {
        auto preds = predict_patterns(g, r);
        for (std::size_t k = 0; k < preds.size(); ++k)
            out << "@prediction " << render_label(r.name) << ' ' << k + 1 << '\n' << serialize_pattern(preds[k]);
    }
}

void cmd_oracle(const Options& o, std::ostream& out) {
    GraphBag bag = load_bag(o);
    auto rules = load_rules(o);
    std::string mode = o.mode.empty() ? "micro" : o.mode;
    if (mode == "single") throw UsageError("oracle supports --mode micro or macro");
    BigInt cap = cap_of(o);
    bool all = true;
    for (const auto& r : rules) {
        auto rep = mode == "micro" ? check_correspondence(bag, r, cap) : check_macro_correspondence(bag, r, cap);
        out << r.name << "\tdb_size\t" << rep.db_size.str() << '\n';
        for (const auto& p : rep.pairs)
            out << r.name << '\t' << p.metric << '\t' << p.gpar.to_string() << '\t' << p.isar.to_string() << '\t'
                << (p.equal ? "EQUAL" : "DIFFERENT") << '\n';
        all = all && rep.all_equal;
    }
    out << "ALL_EQUAL " << (all ? "true" : "false") << '\n';
}

void cmd_export(const Options& o, std::ostream& out, bool sparql) {
    auto rules = load_simplified(o);
    for (std::size_t i = 0; i < rules.size(); ++i) {
        if (i) out << '\n';
        if (sparql) {
            out << "# rule " << rules[i].name << '\n' << to_sparql_construct(rules[i], o.ns);
        } else {
            out << to_swrl(rules[i], o.ns);
        }
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Graph pattern-based association rules: matching, metrics, rule application and export"};
    app.name("gpar");
    app.require_subcommand(1, 1);
    Options o;

    auto add_graphs = [&](CLI::App* sub) {
        sub->add_option("--graph", o.graph, "Graph file");
        sub->add_option("--graphs", o.graphs, "Graph-bag file with @graph headers");
    };
    auto add_rules = [&](CLI::App* sub) { sub->add_option("--rules", o.rules, "Rule file"); };
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--semantics", o.semantics, "hom or nra")->check(CLI::IsMember({"hom", "nra"}));
        sub->add_option("--out", o.out, "Write output to this file");
        sub->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
    };

    auto* match = app.add_subcommand("match", "Print the matches of a pattern");
    add_graphs(match);
    match->add_option("--pattern", o.pattern, "Pattern file");
    add_common(match);

    auto* metrics = app.add_subcommand("metrics", "Exact rule metrics");
    add_graphs(metrics);
    add_rules(metrics);
    metrics->add_option("--mode", o.mode, "single, micro or macro")->check(CLI::IsMember({"single", "micro", "macro"}));
    metrics->add_option("--decimal", o.decimal, "Add an approximate decimal column with this many digits")
        ->check(CLI::Range(0, 100));
    add_common(metrics);

    auto* apply = app.add_subcommand("apply", "Extend a graph once with every rule");
    add_graphs(apply);
    add_rules(apply);
    add_common(apply);

    auto* clos = app.add_subcommand("closure", "Apply rules until nothing new is added");
    add_graphs(clos);
    add_rules(clos);
    clos->add_option("--max-steps", o.max_steps, "Upper bound on extending steps");
    add_common(clos);

    auto* trivial = app.add_subcommand("trivial", "Report trivial rules with a witness");
    add_rules(trivial);
    add_common(trivial);

    auto* rewrite = app.add_subcommand("rewrite", "Print rules in simplified form");
    add_rules(rewrite);
    add_common(rewrite);

    auto* predict = app.add_subcommand("predict", "Predicted consequent patterns or ranked link candidates");
    add_graphs(predict);
    add_rules(predict);
    predict->add_option("--query", o.query, "Triple with one '?' hole, e.g. \"t3 t8 ?\"");
    add_common(predict);

    auto* oracle = app.add_subcommand("oracle", "Compare metrics with the transaction-database reframing");
    add_graphs(oracle);
    add_rules(oracle);
    oracle->add_option("--mode", o.mode, "micro or macro")->check(CLI::IsMember({"single", "micro", "macro"}));
    oracle->add_option("--cap", o.cap, "Maximum number of generated transactions");
    add_common(oracle);

    auto* sparql = app.add_subcommand("export-sparql", "Rules as SPARQL CONSTRUCT queries");
    add_rules(sparql);
    sparql->add_option("--namespace", o.ns, "IRI prefix for terms");
    add_common(sparql);

    auto* swrl = app.add_subcommand("export-swrl", "Rules as SWRL rules");
    add_rules(swrl);
    swrl->add_option("--namespace", o.ns, "IRI prefix for terms");
    add_common(swrl);

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "ERR:usage: " << e.what() << '\n' << app.help();
        return 1;
    }

    std::ostringstream buffer;
    try {
        CLI::App* sub = app.get_subcommands().front();
        const std::string name = sub->get_name();
        if (name == "match") cmd_match(o, buffer);
        else if (name == "metrics") cmd_metrics(o, buffer);
        else if (name == "apply") cmd_apply(o, buffer);
        else if (name == "closure") cmd_closure(o, buffer);
        else if (name == "trivial") cmd_trivial(o, buffer);
        else if (name == "rewrite") cmd_rewrite(o, buffer);
        else if (name == "predict") cmd_predict(o, buffer);
        else if (name == "oracle") cmd_oracle(o, buffer);
        else if (name == "export-sparql") cmd_export(o, buffer, true);
        else cmd_export(o, buffer, false);
    } catch (const UsageError& e) {
        err << "ERR:usage: " << e.what() << '\n';
        return 1;
    } catch (const CapExceeded& e) {
        err << "ERR:cap: " << e.what() << '\n';
        return 3;
    } catch (const ParseError& e) {
        err << "ERR:parse: " << e.what() << '\n';
        return 2;
    } catch (const ContractError& e) {
        err << "ERR:contract: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "ERR:io: " << e.what() << '\n';
        return 2;
    }

    if (o.out.empty()) {
        out << buffer.str();
    } else {
        std::ofstream file(o.out, std::ios::binary);
        if (!(file << buffer.str())) {
            err << "ERR:io: cannot write '" << o.out << "'\n";
            return 2;
        }
    }
    return 0;
}

}  // namespace gpar::cli
