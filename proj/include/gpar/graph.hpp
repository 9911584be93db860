#pragma once

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gpar/term.hpp"

namespace gpar {

struct Triple {
    Term s, p, o;

    friend bool operator==(const Triple&, const Triple&) = default;
    friend auto operator<=>(const Triple&, const Triple&) = default;
};

Triple make_triple(std::string_view s, std::string_view p, std::string_view o);

/// Orders triples by (s, p, o) labels.
bool label_order(const Triple& a, const Triple& b);

/// Per-position candidate lists built on first use.
struct TripleIndex;

/// A finite set of triples (a directed labeled multigraph). Immutable.
class Graph {
public:
    Graph();
    explicit Graph(std::vector<Triple> triples);
    Graph(std::initializer_list<Triple> triples);

    std::span<const Triple> triples() const { return triples_; }
    std::size_t size() const { return triples_.size(); }
    bool empty() const { return triples_.empty(); }
    bool contains(const Triple& t) const;

    /// Terms occurring in any position, sorted by handle.
    std::span<const Term> terms() const { return terms_; }
    bool has_term(Term t) const;

    /// Union with extra triples; returns *this unchanged when nothing is new.
    Graph with(std::span<const Triple> extra) const;

    const TripleIndex& index() const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.triples_ == b.triples_; }

private:
    struct IndexCache;

    std::vector<Triple> triples_;  // sorted by handle, unique
    std::vector<Term> terms_;      // sorted by handle, unique
    std::shared_ptr<IndexCache> index_;
};

struct TripleIndex {
    struct Postings {
        std::vector<std::pair<Term, std::vector<std::uint32_t>>> entries;  // sorted by term
        std::span<const std::uint32_t> find(Term t) const;
    };
    Postings by_s, by_p, by_o;
};

/// True iff every triple of `sub` is in `host`.
bool subgraph_contains(const Graph& host, const Graph& sub);

/// A list of graphs with distinct identifiers; duplicate graphs are allowed.
class GraphBag {
public:
    GraphBag() = default;

    void add(std::string id, Graph g);
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    const std::string& id(std::size_t i) const { return entries_[i].first; }
    const Graph& graph(std::size_t i) const { return entries_[i].second; }

    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

private:
    std::vector<std::pair<std::string, Graph>> entries_;
};

}  // namespace gpar
