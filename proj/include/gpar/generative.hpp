#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gpar/graph.hpp"
#include "gpar/metric_value.hpp"
#include "gpar/pattern.hpp"
#include "gpar/rule.hpp"

namespace gpar {

/// g united with mu(p2'') for every nra match mu of p1 in g. Throws
/// ContractError when the consequent has variables outside the antecedent.
Graph extend_once(const Graph& g, const SimplifiedRule& s);

/// One simultaneous step of several rules, all matched against the same g.
Graph extend_once(const Graph& g, std::span<const SimplifiedRule> rules);

struct ClosureResult {
    Graph graph;
    std::size_t steps = 0;  // extending steps applied
    bool fixpoint = false;  // false when max_steps ran out first
};

ClosureResult closure(const Graph& g, const SimplifiedRule& s, std::size_t max_steps);
ClosureResult closure(const Graph& g, std::span<const SimplifiedRule> rules, std::size_t max_steps);

/// Distinct mu(p2'') over nra matches of p1; sorted by serialized text.
std::vector<Pattern> predict_patterns(const Graph& g, const SimplifiedRule& s);

/// A triple with exactly one unknown position.
struct LinkQuery {
    std::optional<Term> s, p, o;
};

/// Parses three tokens where `?` marks the hole, e.g. `t3 t8 ?`.
LinkQuery parse_link_query(std::string_view text);

struct Prediction {
    Term term;
    std::string rule;
    MetricValue confidence;
};

/// Candidates for the hole, best first: confidence descending (undefined last),
/// then term label, then rule name. Throws ContractError unless the query has
/// exactly one hole and every consequent is a single triple pattern.
std::vector<Prediction> link_predict(const Graph& g, std::span<const SimplifiedRule> rules, const LinkQuery& q);

}  // namespace gpar
