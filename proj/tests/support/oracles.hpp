#pragma once

#include <vector>

#include "gpar/generative.hpp"
#include "gpar/graph.hpp"
#include "gpar/matcher.hpp"
#include "gpar/metrics.hpp"
#include "gpar/pattern.hpp"
#include "gpar/rule.hpp"

// Brute-force reference implementations. They share no code with the library
// beyond the plain data types and are only fit for tiny inputs.
namespace gpar::oracle {

/// Every total function from the pattern's variables to the graph's terms,
/// kept when it satisfies the hom or nra definition directly.
std::vector<Mapping> evaluate(const Pattern& p, const Graph& g, Semantics sem);

/// Evaluate restricted to mappings with mu(V) = T.
bool m_g(const Graph& g, const TermTuple& T, const Pattern& p, const std::vector<Variable>& V, Semantics sem);

/// Explicit list of all non-repetitive n-tuples over T_g minus both patterns' terms.
std::vector<TermTuple> sample_space(const Graph& g, const Pattern& p1, const Pattern& p2, std::size_t n);

/// Event counts by testing every tuple of the sample space.
EventStats event_stats(const Graph& g, const Rule& r);

/// One simultaneous extension step.
Graph extend(const Graph& g, const std::vector<SimplifiedRule>& rules);

/// Iterates extend() until nothing changes; returns the graph and the number of
/// steps that added something.
std::pair<Graph, std::size_t> closure(const Graph& g, const std::vector<SimplifiedRule>& rules);

/// Canonical text of a mapping set, for set comparison.
std::vector<std::string> canonical(const std::vector<Mapping>& ms);

}  // namespace gpar::oracle
