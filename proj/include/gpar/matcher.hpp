#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gpar/graph.hpp"
#include "gpar/pattern.hpp"

namespace gpar {

enum class Semantics { HOM, NRA };

const char* to_string(Semantics s);

using TermTuple = std::vector<Term>;

/// Variable-to-term bindings, kept sorted by variable name.
class Mapping {
public:
    Mapping() = default;
    explicit Mapping(std::vector<std::pair<Variable, Term>> bindings);

    std::span<const std::pair<Variable, Term>> bindings() const { return bindings_; }
    std::size_t size() const { return bindings_.size(); }
    std::optional<Term> find(Variable v) const;

    /// `?v1=Alice ?v2=Bob`
    std::string to_string() const;

    friend bool operator==(const Mapping&, const Mapping&) = default;

private:
    std::vector<std::pair<Variable, Term>> bindings_;
};

/// Lexicographic comparison of term tuples by label.
bool tuple_label_less(const TermTuple& a, const TermTuple& b);

/// Enumerates matches of `p` in `g` that extend `fixed`. `visit` returns false
/// to stop early. Throws ContractError for an empty pattern or when `fixed`
/// binds a variable that is not in `p`.
void for_each_match(const Pattern& p, const Graph& g, Semantics sem, const Mapping& fixed,
                    const std::function<bool(const Mapping&)>& visit);

/// The full match set, sorted by bound-term labels in canonical variable order.
std::vector<Mapping> evaluate(const Pattern& p, const Graph& g, Semantics sem);

/// Replaces bound variables; unbound ones pass through.
Pattern apply_mapping(const Mapping& mu, const Pattern& p);

/// Distinct tuples mu(V), sorted by label.
std::vector<TermTuple> project(std::span<const Mapping> matches, std::span<const Variable> V);

/// True iff some match of `p` binds V to T.
bool m_g(const Graph& g, std::span<const Term> T, const Pattern& p, std::span<const Variable> V, Semantics sem);

}  // namespace gpar
