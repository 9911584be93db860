#include "gpar/generative.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "gpar/error.hpp"
#include "gpar/io.hpp"
#include "gpar/matcher.hpp"
#include "gpar/metrics.hpp"

namespace gpar {
namespace {

void require_ground_consequent(const SimplifiedRule& s) {
    for (Variable v : s.p2pp.variables())
        if (!s.p1.has_variable(v))
            throw ContractError("rule '" + s.name + "': consequent variable ?" + v.name() +
                                " is not bound by the antecedent; use predict_patterns");
}

void collect_extension(const Graph& g, const SimplifiedRule& s, std::vector<Triple>& out) {
    for_each_match(s.p1, g, Semantics::NRA, Mapping{}, [&](const Mapping& mu) {
        for (const auto& tp : s.p2pp.triple_patterns()) {
            auto bound = [&](const Node& n) { return n.is_term() ? n.term() : *mu.find(n.variable()); };
            out.push_back(Triple{bound(tp.s), bound(tp.p), bound(tp.o)});
        }
        return true;
    });
}

}  // namespace

Graph extend_once(const Graph& g, const SimplifiedRule& s) {
    return extend_once(g, std::span<const SimplifiedRule>(&s, 1));
}

Graph extend_once(const Graph& g, std::span<const SimplifiedRule> rules) {
    for (const auto& s : rules) require_ground_consequent(s);
    std::vector<Triple> added;
    for (const auto& s : rules) collect_extension(g, s, added);
    return g.with(added);
}

ClosureResult closure(const Graph& g, const SimplifiedRule& s, std::size_t max_steps) {
    return closure(g, std::span<const SimplifiedRule>(&s, 1), max_steps);
}

ClosureResult closure(const Graph& g, std::span<const SimplifiedRule> rules, std::size_t max_steps) {
    ClosureResult r{g, 0, false};
    while (true) {
        Graph next = extend_once(r.graph, rules);
        if (next.size() == r.graph.size()) {
            r.fixpoint = true;
            return r;
        }
        if (r.steps == max_steps) return r;
        r.graph = std::move(next);
        ++r.steps;
    }
}

std::vector<Pattern> predict_patterns(const Graph& g, const SimplifiedRule& s) {
    std::map<std::string, Pattern> unique;
    for_each_match(s.p1, g, Semantics::NRA, Mapping{}, [&](const Mapping& mu) {
        Pattern p = apply_mapping(mu, s.p2pp);
        unique.emplace(serialize_pattern(p), std::move(p));
        return true;
    });
    std::vector<Pattern> out;
    for (auto& [text, p] : unique) out.push_back(std::move(p));
    return out;
}

LinkQuery parse_link_query(std::string_view text) {
    auto tokens = tokenize(text, 1);
    if (tokens.size() != 3) throw ParseError(1, "a query needs exactly 3 tokens");
    std::optional<Term> pos[3];
    for (int i = 0; i < 3; ++i) {
        const auto& t = tokens[i];
        if (!t.quoted && t.text == "?") continue;
        if (t.is_variable() || t.is_directive()) throw ParseError(1, "unexpected token '" + t.text + "' in query");
        pos[i] = Term(t.text);
    }
    return LinkQuery{pos[0], pos[1], pos[2]};
}

std::vector<Prediction> link_predict(const Graph& g, std::span<const SimplifiedRule> rules, const LinkQuery& q) {
    const std::optional<Term> query[3] = {q.s, q.p, q.o};
    int hole = -1;
    int holes = 0;
    for (int i = 0; i < 3; ++i)
        if (!query[i]) {
            hole = i;
            ++holes;
        }
    if (holes != 1) throw ContractError("a link query needs exactly one hole, found " + std::to_string(holes));
    for (const auto& s : rules)
        if (s.p2pp.size() != 1)
            throw ContractError("rule '" + s.name + "': link prediction needs a single-triple consequent");

    std::vector<Prediction> out;
    for (const auto& s : rules) {
        const auto& tp = s.p2pp.triple_patterns()[0];
        std::set<Term> candidates;
        for_each_match(s.p1, g, Semantics::NRA, Mapping{}, [&](const Mapping& mu) {
            const Node nodes[3] = {tp.s, tp.p, tp.o};
            std::optional<Term> bound[3];
            for (int i = 0; i < 3; ++i) {
                if (nodes[i].is_term())
                    bound[i] = nodes[i].term();
                else
                    bound[i] = mu.find(nodes[i].variable());
            }
            for (int i = 0; i < 3; ++i)
                if (i != hole && bound[i] != query[i]) return true;
            if (bound[hole]) candidates.insert(*bound[hole]);
            return true;
        });
        if (candidates.empty()) continue;
        auto conf = metrics_single(g, from_simplified(s)).confidence;
        for (Term t : candidates) out.push_back(Prediction{t, s.name, conf});
    }
    std::sort(out.begin(), out.end(), [](const Prediction& a, const Prediction& b) {
        const auto& ca = a.confidence;
        const auto& cb = b.confidence;
        if (ca.is_undefined() != cb.is_undefined()) return cb.is_undefined();
        if (!ca.is_undefined() && ca.value() != cb.value()) return ca.value() > cb.value();
        if (a.term != b.term) return a.term.label() < b.term.label();
        return a.rule < b.rule;
    });
    return out;
}

}  // namespace gpar
