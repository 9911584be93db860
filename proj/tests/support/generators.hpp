#pragma once

#include <random>
#include <string>
#include <vector>

#include "gpar/graph.hpp"
#include "gpar/isar.hpp"
#include "gpar/pattern.hpp"
#include "gpar/rule.hpp"

namespace gpar::gen {

using Rng = std::mt19937;

struct Shape {
    int nodes = 5;        // node labels n0..n{nodes-1}
    int preds = 2;        // predicate labels a, b, c, ...
    int min_triples = 2;
    int max_triples = 8;
};

std::string node_label(int i);
std::string pred_label(int i);

int uniform(Rng& rng, int lo, int hi);
bool coin(Rng& rng, double p);

Graph random_graph(Rng& rng, const Shape& shape);

/// A graph that differs from `base` by a few added or removed triples.
Graph perturb(Rng& rng, const Graph& base, const Shape& shape);

GraphBag random_bag(Rng& rng, const Shape& shape, int min_graphs, int max_graphs);

struct PatternShape {
    std::vector<std::string> vars = {"x", "y", "z"};
    int min_size = 1;
    int max_size = 2;
    double node_term_prob = 0.1;  // chance a subject/object is a node term
    double pred_var_prob = 0.0;   // chance a predicate is a variable
};

Pattern random_pattern(Rng& rng, const Shape& shape, const PatternShape& ps);

/// A simplified rule built from two random patterns that share a variable.
SimplifiedRule random_simplified_rule(Rng& rng, const Shape& shape, const PatternShape& p1,
                                      const PatternShape& p2);

/// A simplified rule whose consequent only uses antecedent variables.
SimplifiedRule random_ground_rule(Rng& rng, const Shape& shape, const PatternShape& p1);

/// A valid rule with arbitrary joining sequences of length at most `max_n`.
Rule random_rule(Rng& rng, const Shape& shape, const PatternShape& p1, const PatternShape& p2,
                 std::size_t max_n);

TransactionDB random_db(Rng& rng, int items, int min_size, int max_size);

}  // namespace gpar::gen
