#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gpar/graph.hpp"
#include "gpar/metric_value.hpp"
#include "gpar/rule.hpp"

namespace gpar {

/// Event counts over the sample space of non-repetitive n-tuples.
struct EventStats {
    std::size_t n = 0;
    BigInt tau = 0;
    BigInt e1 = 0;
    BigInt e2 = 0;
    BigInt joint = 0;
    std::optional<std::string> graph_id;

    EventStats& operator+=(const EventStats& o);
    friend bool operator==(const EventStats& a, const EventStats& b) {
        return a.n == b.n && a.tau == b.tau && a.e1 == b.e1 && a.e2 == b.e2 && a.joint == b.joint;
    }
};

/// m * (m-1) * ... * (m-n+1); zero when n > m.
BigInt falling_factorial(std::size_t m, std::size_t n);

/// |T^n| with m = |T_g \ (T_p1 u T_p2)|.
BigInt tau_cardinality(const Graph& g, const Pattern& p1, const Pattern& p2, std::size_t n);

EventStats event_stats_single(const Graph& g, const Rule& r);
std::vector<EventStats> event_stats_per_graph(const GraphBag& G, const Rule& r, unsigned jobs = 1);
EventStats event_stats_micro(const GraphBag& G, const Rule& r, unsigned jobs = 1);

enum class Regime { Single, Micro, Macro };
const char* to_string(Regime r);

enum class Metric { Support1, Support2, Confidence, Lift, Leverage, Conviction };

/// Whether the metric's definedness condition holds for these counts.
bool is_defined(Metric m, const EventStats& s);

struct MetricReport {
    Regime regime = Regime::Single;
    EventStats stats;                  // summed over the bag outside the single regime
    std::vector<EventStats> per_graph;  // macro only
    MetricValue support1, support2, confidence, lift, leverage, conviction;
    std::optional<MetricValue> applicability;  // macro: share of graphs where lift is defined

    const MetricValue& get(Metric m) const;
};

MetricReport metrics_from_stats(const EventStats& s, Regime regime = Regime::Single);
/// Averages per-graph values; a metric is undefined if any graph violates its condition.
MetricReport macro_from_stats(std::span<const EventStats> per_graph);

MetricReport metrics_single(const Graph& g, const Rule& r);
MetricReport metrics_micro(const GraphBag& G, const Rule& r, unsigned jobs = 1);
MetricReport metrics_macro(const GraphBag& G, const Rule& r, unsigned jobs = 1);

/// The scaled conviction variant P(E1) * (1 - P(E2)) / (1 - confidence).
MetricValue conviction_scaled(const EventStats& s);

struct Applicability {
    MetricValue degree;
    GraphBag reduced;
};

Applicability degree_of_applicability(const GraphBag& G,
                                      const std::function<bool(const std::string&, const Graph&)>& cond);
/// Condition: the metric is defined on the graph.
Applicability degree_of_applicability(const GraphBag& G, const Rule& r, Metric m, unsigned jobs = 1);

struct RankedRule {
    std::string name;
    MetricValue applicability;
    MetricValue lift;  // macro lift on the reduced bag
};

/// Descending by lift applicability, then reduced-bag macro lift; ties by name.
std::vector<RankedRule> rank_rules(const GraphBag& G, std::span<const Rule> rules, unsigned jobs = 1);

enum class Situation { IDE, DIS, IND, POS, NEG, MIXED };
const char* to_string(Situation s);

/// Whether the situation's defining relation holds; false when tau = 0.
bool situation_holds(Situation sit, const EventStats& s);

/// IDE before DIS before IND before POS/NEG; nullopt when tau = 0.
std::optional<Situation> classify_situation(const EventStats& s);

/// The common per-graph situation, or MIXED; nullopt if any graph has tau = 0.
std::optional<Situation> classify_macro(std::span<const EventStats> per_graph);

}  // namespace gpar
