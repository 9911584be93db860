#include "gpar/metrics.hpp"

#include <algorithm>
#include <set>

#include "gpar/error.hpp"
#include "gpar/matcher.hpp"
#include "parallel.hpp"

namespace gpar {

EventStats& EventStats::operator+=(const EventStats& o) {
    n = o.n;
    tau += o.tau;
    e1 += o.e1;
    e2 += o.e2;
    joint += o.joint;
    graph_id.reset();
    return *this;
}

BigInt falling_factorial(std::size_t m, std::size_t n) {
    if (n > m) return 0;
    BigInt out = 1;
    for (std::size_t i = 0; i < n; ++i) out *= m - i;
    return out;
}

BigInt tau_cardinality(const Graph& g, const Pattern& p1, const Pattern& p2, std::size_t n) {
    std::size_t m = 0;
    for (Term t : g.terms())
        if (!p1.has_term(t) && !p2.has_term(t)) ++m;
    return falling_factorial(m, n);
}

namespace {

using HandleTuple = std::vector<std::uint32_t>;

// Distinct mu(V) over nra matches of p, dropping tuples that touch `excluded`.
std::set<HandleTuple> event_tuples(const Graph& g, const Pattern& p, const std::vector<Variable>& V,
                                   const Pattern& excluded) {
    std::set<HandleTuple> out;
    for_each_match(p, g, Semantics::NRA, Mapping{}, [&](const Mapping& mu) {
        HandleTuple t;
        t.reserve(V.size());
        for (Variable v : V) {
            Term term = *mu.find(v);
            if (excluded.has_term(term)) return true;
            t.push_back(term.id());
        }
        out.insert(std::move(t));
        return true;
    });
    return out;
}

const char* condition_text(Metric m) {
    switch (m) {
        case Metric::Support1:
        case Metric::Support2:
        case Metric::Leverage: return "tau=0";
        case Metric::Confidence: return "e1=0";
        case Metric::Lift: return "e1=0|e2=0";
        case Metric::Conviction: return "e1=0|e2=tau";
    }
    return "";
}

constexpr Metric kAllMetrics[] = {Metric::Support1, Metric::Support2, Metric::Confidence,
                                  Metric::Lift,     Metric::Leverage, Metric::Conviction};

MetricValue& slot(MetricReport& r, Metric m) {
    return const_cast<MetricValue&>(std::as_const(r).get(m));
}

}  // namespace

EventStats event_stats_single(const Graph& g, const Rule& r) {
    require_valid(r);
    EventStats s;
    s.n = r.n();
    s.tau = tau_cardinality(g, r.p1, r.p2, s.n);
    auto E1 = event_tuples(g, r.p1, r.V1, r.p2);
    auto E2 = event_tuples(g, r.p2, r.V2, r.p1);
    s.e1 = E1.size();
    s.e2 = E2.size();
    std::size_t joint = 0;
    for (const auto& t : E1) joint += E2.count(t);
    s.joint = joint;
    return s;
}

std::vector<EventStats> event_stats_per_graph(const GraphBag& G, const Rule& r, unsigned jobs) {
    require_valid(r);
    std::vector<EventStats> out(G.size());
    detail::parallel_for(G.size(), jobs, [&](std::size_t i) {
        out[i] = event_stats_single(G.graph(i), r);
        out[i].graph_id = G.id(i);
    });
    return out;
}

EventStats event_stats_micro(const GraphBag& G, const Rule& r, unsigned jobs) {
    EventStats total;
    total.n = r.n();
    for (const auto& s : event_stats_per_graph(G, r, jobs)) total += s;
    return total;
}

const char* to_string(Regime r) {
    switch (r) {
        case Regime::Single: return "single";
        case Regime::Micro: return "micro";
        case Regime::Macro: return "macro";
    }
    return "";
}

bool is_defined(Metric m, const EventStats& s) {
    switch (m) {
        case Metric::Support1:
        case Metric::Support2:
        case Metric::Leverage: return s.tau > 0;
        case Metric::Confidence: return s.e1 > 0;
        case Metric::Lift: return s.e1 > 0 && s.e2 > 0;
        case Metric::Conviction: return s.e1 > 0 && s.e2 < s.tau;
    }
    return false;
}

const MetricValue& MetricReport::get(Metric m) const {
    switch (m) {
        case Metric::Support1: return support1;
        case Metric::Support2: return support2;
        case Metric::Confidence: return confidence;
        case Metric::Lift: return lift;
        case Metric::Leverage: return leverage;
        case Metric::Conviction: return conviction;
    }
    return conviction;
}

MetricReport metrics_from_stats(const EventStats& s, Regime regime) {
    MetricReport r;
    r.regime = regime;
    r.stats = s;
    for (Metric m : kAllMetrics)
        if (!is_defined(m, s)) slot(r, m) = MetricValue::undefined(condition_text(m));

    if (is_defined(Metric::Support1, s)) {
        r.support1 = Rational(s.e1, s.tau);
        r.support2 = Rational(s.e2, s.tau);
        r.leverage = Rational(s.joint, s.tau) - Rational(s.e1 * s.e2, s.tau * s.tau);
    }
    if (is_defined(Metric::Confidence, s)) r.confidence = Rational(s.joint, s.e1);
    if (is_defined(Metric::Lift, s)) r.lift = Rational(s.joint * s.tau, s.e1 * s.e2);
    if (is_defined(Metric::Conviction, s)) {
        if (s.joint == s.e1)
            r.conviction = MetricValue::infinity();
        else
            r.conviction = Rational(s.e1 * (s.tau - s.e2), s.tau * (s.e1 - s.joint));
    }
    return r;
}

MetricReport macro_from_stats(std::span<const EventStats> per_graph) {
    MetricReport r;
    r.regime = Regime::Macro;
    r.per_graph.assign(per_graph.begin(), per_graph.end());
    for (const auto& s : per_graph) {
        r.stats.n = s.n;
        r.stats += s;
    }
    if (per_graph.empty()) {
        for (Metric m : kAllMetrics) slot(r, m) = MetricValue::undefined("empty bag");
        return r;
    }
    std::vector<MetricReport> singles;
    for (const auto& s : per_graph) singles.push_back(metrics_from_stats(s));
    for (Metric m : kAllMetrics) {
        std::vector<std::string> violators;
        bool any_inf = false;
        Rational sum = 0;
        for (std::size_t i = 0; i < singles.size(); ++i) {
            const auto& v = singles[i].get(m);
            if (v.is_undefined())
                violators.push_back(per_graph[i].graph_id.value_or(std::to_string(i)));
            else if (v.is_infinite())
                any_inf = true;
            else
                sum += v.value();
        }
        if (!violators.empty())
            slot(r, m) = MetricValue::undefined(condition_text(m), std::move(violators));
        else if (any_inf)
            slot(r, m) = MetricValue::infinity();
        else
            slot(r, m) = Rational(sum / BigInt(singles.size()));
    }
    std::size_t lift_defined = 0;
    for (const auto& s : per_graph) lift_defined += is_defined(Metric::Lift, s);
    r.applicability = MetricValue(Rational(BigInt(lift_defined), BigInt(per_graph.size())));
    return r;
}

MetricReport metrics_single(const Graph& g, const Rule& r) {
    return metrics_from_stats(event_stats_single(g, r), Regime::Single);
}

MetricReport metrics_micro(const GraphBag& G, const Rule& r, unsigned jobs) {
    return metrics_from_stats(event_stats_micro(G, r, jobs), Regime::Micro);
}

MetricReport metrics_macro(const GraphBag& G, const Rule& r, unsigned jobs) {
    auto per = event_stats_per_graph(G, r, jobs);
    return macro_from_stats(per);
}

MetricValue conviction_scaled(const EventStats& s) {
    auto c = metrics_from_stats(s).conviction;
    if (!c.is_finite()) return c;
    return Rational(c.value() * Rational(s.e1, s.tau));
}

Applicability degree_of_applicability(const GraphBag& G,
                                      const std::function<bool(const std::string&, const Graph&)>& cond) {
    Applicability out;
    if (G.empty()) {
        out.degree = MetricValue::undefined("empty bag");
        return out;
    }
    std::size_t hits = 0;
    for (const auto& [id, g] : G) {
        if (!cond(id, g)) continue;
        ++hits;
        out.reduced.add(id, g);
    }
    out.degree = Rational(BigInt(hits), BigInt(G.size()));
    return out;
}

Applicability degree_of_applicability(const GraphBag& G, const Rule& r, Metric m, unsigned jobs) {
    auto per = event_stats_per_graph(G, r, jobs);
    std::size_t i = 0;
    return degree_of_applicability(G, [&](const std::string&, const Graph&) { return is_defined(m, per[i++]); });
}

std::vector<RankedRule> rank_rules(const GraphBag& G, std::span<const Rule> rules, unsigned jobs) {
    std::vector<RankedRule> out(rules.size());
    detail::parallel_for(rules.size(), jobs, [&](std::size_t i) {
        auto app = degree_of_applicability(G, rules[i], Metric::Lift);
        out[i] = RankedRule{rules[i].name, app.degree, metrics_macro(app.reduced, rules[i]).lift};
    });
    // Undefined sorts below every defined value.
    auto key_less = [](const MetricValue& a, const MetricValue& b) {
        if (a.is_undefined() || b.is_undefined()) return a.is_undefined() && !b.is_undefined();
        if (a.is_infinite() || b.is_infinite()) return !a.is_infinite() && b.is_infinite();
        return a.value() < b.value();
    };
    std::sort(out.begin(), out.end(), [&](const RankedRule& a, const RankedRule& b) {
        if (key_less(b.applicability, a.applicability)) return true;
        if (key_less(a.applicability, b.applicability)) return false;
        if (key_less(b.lift, a.lift)) return true;
        if (key_less(a.lift, b.lift)) return false;
        return a.name < b.name;
    });
    return out;
}

const char* to_string(Situation s) {
    switch (s) {
        case Situation::IDE: return "IDE";
        case Situation::DIS: return "DIS";
        case Situation::IND: return "IND";
        case Situation::POS: return "POS";
        case Situation::NEG: return "NEG";
        case Situation::MIXED: return "MIXED";
    }
    return "";
}

bool situation_holds(Situation sit, const EventStats& s) {
    if (s.tau == 0) return false;
    switch (sit) {
        case Situation::IDE: return s.e1 == s.e2 && s.e1 == s.joint;
        case Situation::DIS: return s.joint == 0;
        case Situation::IND: return s.joint * s.tau == s.e1 * s.e2;
        case Situation::POS: return s.joint * s.tau > s.e1 * s.e2;
        case Situation::NEG: return s.joint * s.tau < s.e1 * s.e2;
        case Situation::MIXED: return false;
    }
    return false;
}

std::optional<Situation> classify_situation(const EventStats& s) {
    if (s.tau == 0) return std::nullopt;
    for (Situation sit : {Situation::IDE, Situation::DIS, Situation::IND, Situation::POS, Situation::NEG})
        if (situation_holds(sit, s)) return sit;
    return std::nullopt;
}

std::optional<Situation> classify_macro(std::span<const EventStats> per_graph) {
    std::optional<Situation> common;
    for (const auto& s : per_graph) {
        auto c = classify_situation(s);
        if (!c) return std::nullopt;
        if (common && *common != *c) return Situation::MIXED;
        common = c;
    }
    return common;
}

}  // namespace gpar
