#pragma once

#include <optional>
#include <span>
#include <vector>

#include "gpar/graph.hpp"
#include "gpar/term.hpp"

namespace gpar {

/// One position of a triple pattern: a term or a variable.
class Node {
public:
    Node(Term t) : id_(t.id()), is_var_(false) {}
    Node(Variable v) : id_(v.id()), is_var_(true) {}

    bool is_variable() const { return is_var_; }
    bool is_term() const { return !is_var_; }
    Term term() const { return Term::from_id(id_); }
    Variable variable() const { return Variable::from_id(id_); }

    /// Label as written in text: `?name` for variables.
    std::string text() const;

    friend bool operator==(const Node&, const Node&) = default;
    friend auto operator<=>(const Node& a, const Node& b) {
        if (a.is_var_ != b.is_var_) return a.is_var_ <=> b.is_var_;
        return a.id_ <=> b.id_;
    }

private:
    std::uint32_t id_;
    bool is_var_;
};

struct TriplePattern {
    Node s, p, o;

    friend bool operator==(const TriplePattern&, const TriplePattern&) = default;
    friend auto operator<=>(const TriplePattern&, const TriplePattern&) = default;
};

/// A finite set of triple patterns with derived variable and term sets.
class Pattern {
public:
    Pattern() = default;
    explicit Pattern(std::vector<TriplePattern> tps);
    Pattern(std::initializer_list<TriplePattern> tps) : Pattern(std::vector<TriplePattern>(tps)) {}

    /// A graph viewed as a ground pattern.
    static Pattern from_graph(const Graph& g);

    std::span<const TriplePattern> triple_patterns() const { return tps_; }
    std::size_t size() const { return tps_.size(); }
    bool empty() const { return tps_.empty(); }

    /// Variables sorted by name (the canonical variable order).
    std::span<const Variable> variables() const { return vars_; }
    /// Terms sorted by handle.
    std::span<const Term> terms() const { return terms_; }

    bool has_variable(Variable v) const;
    bool has_term(Term t) const;
    bool is_ground() const { return vars_.empty(); }

    /// The triples of a ground pattern; nullopt if any variable remains.
    std::optional<Graph> to_graph() const;

    friend bool operator==(const Pattern& a, const Pattern& b) { return a.tps_ == b.tps_; }

private:
    std::vector<TriplePattern> tps_;
    std::vector<Variable> vars_;
    std::vector<Term> terms_;
};

/// Sorted union of two term sets.
std::vector<Term> term_union(std::span<const Term> a, std::span<const Term> b);

}  // namespace gpar
