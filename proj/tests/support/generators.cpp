#include "generators.hpp"

#include <algorithm>

namespace gpar::gen {

std::string node_label(int i) { return "n" + std::to_string(i); }
std::string pred_label(int i) { return std::string(1, static_cast<char>('a' + i)); }

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

namespace {

Triple random_triple(Rng& rng, const Shape& shape) {
    return Triple{Term(node_label(uniform(rng, 0, shape.nodes - 1))), Term(pred_label(uniform(rng, 0, shape.preds - 1))),
                  Term(node_label(uniform(rng, 0, shape.nodes - 1)))};
}

Node random_node(Rng& rng, const Shape& shape, const PatternShape& ps) {
    if (coin(rng, ps.node_term_prob)) return Term(node_label(uniform(rng, 0, shape.nodes - 1)));
    return Variable(ps.vars[uniform(rng, 0, static_cast<int>(ps.vars.size()) - 1)]);
}

Node random_pred(Rng& rng, const Shape& shape, const PatternShape& ps) {
    if (coin(rng, ps.pred_var_prob)) return Variable("p" + std::to_string(uniform(rng, 0, 1)));
    return Term(pred_label(uniform(rng, 0, shape.preds - 1)));
}

bool shares_variable(const Pattern& a, const Pattern& b) {
    for (Variable v : a.variables())
        if (b.has_variable(v)) return true;
    return false;
}

std::vector<Variable> random_sequence(Rng& rng, std::span<const Variable> pool, std::size_t k) {
    std::vector<Variable> v(pool.begin(), pool.end());
    std::shuffle(v.begin(), v.end(), rng);
    v.resize(k);
    return v;
}

}  // namespace

Graph random_graph(Rng& rng, const Shape& shape) {
    std::vector<Triple> ts;
    int k = uniform(rng, shape.min_triples, shape.max_triples);
    for (int i = 0; i < k; ++i) ts.push_back(random_triple(rng, shape));
    return Graph(std::move(ts));
}

Graph perturb(Rng& rng, const Graph& base, const Shape& shape) {
    std::vector<Triple> ts(base.triples().begin(), base.triples().end());
    int edits = uniform(rng, 0, 2);
    for (int i = 0; i < edits; ++i) {
        if (!ts.empty() && coin(rng, 0.5))
            ts.erase(ts.begin() + uniform(rng, 0, static_cast<int>(ts.size()) - 1));
        else
            ts.push_back(random_triple(rng, shape));
    }
    return Graph(std::move(ts));
}

GraphBag random_bag(Rng& rng, const Shape& shape, int min_graphs, int max_graphs) {
    GraphBag bag;
    int k = uniform(rng, min_graphs, max_graphs);
    Graph base = random_graph(rng, shape);
    bool related = coin(rng, 0.5);
    for (int i = 0; i < k; ++i)
        bag.add("g" + std::to_string(i + 1), related ? perturb(rng, base, shape) : random_graph(rng, shape));
    return bag;
}

Pattern random_pattern(Rng& rng, const Shape& shape, const PatternShape& ps) {
    while (true) {
        std::vector<TriplePattern> tps;
        int k = uniform(rng, ps.min_size, ps.max_size);
        for (int i = 0; i < k; ++i)
            tps.push_back(TriplePattern{random_node(rng, shape, ps), random_pred(rng, shape, ps), random_node(rng, shape, ps)});
        Pattern p(std::move(tps));
        if (!p.variables().empty()) return p;
    }
}

SimplifiedRule random_simplified_rule(Rng& rng, const Shape& shape, const PatternShape& p1, const PatternShape& p2) {
    while (true) {
        Pattern a = random_pattern(rng, shape, p1);
        Pattern b = random_pattern(rng, shape, p2);
        if (shares_variable(a, b)) return SimplifiedRule{"r", a, b};
    }
}

SimplifiedRule random_ground_rule(Rng& rng, const Shape& shape, const PatternShape& p1) {
    while (true) {
        Pattern a = random_pattern(rng, shape, p1);
        PatternShape cs;
        cs.vars.clear();
        for (Variable v : a.variables())
            if (v.name().front() != 'p') cs.vars.push_back(v.name());
        if (cs.vars.empty()) continue;
        Pattern b = random_pattern(rng, shape, cs);
        if (shares_variable(a, b)) return SimplifiedRule{"r", a, b};
    }
}

Rule random_rule(Rng& rng, const Shape& shape, const PatternShape& p1, const PatternShape& p2, std::size_t max_n) {
    Pattern a = random_pattern(rng, shape, p1);
    Pattern b = random_pattern(rng, shape, p2);
    std::size_t limit = std::min({a.variables().size(), b.variables().size(), max_n});
    auto k = static_cast<std::size_t>(uniform(rng, 1, static_cast<int>(limit)));
    return Rule{"r", a, b, random_sequence(rng, a.variables(), k), random_sequence(rng, b.variables(), k)};
}

TransactionDB random_db(Rng& rng, int items, int min_size, int max_size) {
    TransactionDB db;
    int k = uniform(rng, min_size, max_size);
    for (int i = 0; i < k; ++i) {
        std::vector<Item> t;
        for (int j = 0; j < items; ++j)
            if (coin(rng, 0.5)) t.push_back(Item(pred_label(j)));
        db.add(Itemset(std::move(t)));
    }
    return db;
}

}  // namespace gpar::gen
