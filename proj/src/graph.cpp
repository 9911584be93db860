#include "gpar/graph.hpp"

#include "gpar/error.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace gpar {

struct Graph::IndexCache {
    std::once_flag once;
    TripleIndex index;
};

Triple make_triple(std::string_view s, std::string_view p, std::string_view o) {
    return Triple{Term(s), Term(p), Term(o)};
}

bool label_order(const Triple& a, const Triple& b) {
    if (a.s != b.s) return a.s.label() < b.s.label();
    if (a.p != b.p) return a.p.label() < b.p.label();
    if (a.o != b.o) return a.o.label() < b.o.label();
    return false;
}

Graph::Graph() : index_(std::make_shared<IndexCache>()) {}

Graph::Graph(std::initializer_list<Triple> triples) : Graph(std::vector<Triple>(triples)) {}

Graph::Graph(std::vector<Triple> triples)
    : triples_(std::move(triples)), index_(std::make_shared<IndexCache>()) {
    std::sort(triples_.begin(), triples_.end());
    triples_.erase(std::unique(triples_.begin(), triples_.end()), triples_.end());
    terms_.reserve(triples_.size() * 3);
    for (const auto& t : triples_) {
        terms_.push_back(t.s);
        terms_.push_back(t.p);
        terms_.push_back(t.o);
    }
    std::sort(terms_.begin(), terms_.end());
    terms_.erase(std::unique(terms_.begin(), terms_.end()), terms_.end());
}

bool Graph::contains(const Triple& t) const {
    return std::binary_search(triples_.begin(), triples_.end(), t);
}

bool Graph::has_term(Term t) const {
    return std::binary_search(terms_.begin(), terms_.end(), t);
}

Graph Graph::with(std::span<const Triple> extra) const {
    bool grows = std::any_of(extra.begin(), extra.end(), [&](const Triple& t) { return !contains(t); });
    if (!grows) return *this;
    std::vector<Triple> all(triples_.begin(), triples_.end());
    all.insert(all.end(), extra.begin(), extra.end());
    return Graph(std::move(all));
}

namespace {

void build_postings(TripleIndex::Postings& out, const std::vector<Triple>& triples, Term Triple::*field) {
    std::map<Term, std::vector<std::uint32_t>> lists;
    for (std::uint32_t i = 0; i < triples.size(); ++i) lists[triples[i].*field].push_back(i);
    out.entries.assign(std::make_move_iterator(lists.begin()), std::make_move_iterator(lists.end()));
}

}  // namespace

const TripleIndex& Graph::index() const {
    std::call_once(index_->once, [this] {
        build_postings(index_->index.by_s, triples_, &Triple::s);
        build_postings(index_->index.by_p, triples_, &Triple::p);
        build_postings(index_->index.by_o, triples_, &Triple::o);
    });
    return index_->index;
}

std::span<const std::uint32_t> TripleIndex::Postings::find(Term t) const {
    auto it = std::lower_bound(entries.begin(), entries.end(), t,
                               [](const auto& e, Term key) { return e.first < key; });
    if (it == entries.end() || it->first != t) return {};
    return it->second;
}

bool subgraph_contains(const Graph& host, const Graph& sub) {
    auto h = host.triples();
    auto s = sub.triples();
    return std::includes(h.begin(), h.end(), s.begin(), s.end());
}

void GraphBag::add(std::string id, Graph g) {
    for (const auto& e : entries_)
        if (e.first == id) throw ContractError("duplicate graph id '" + id + "'");
    entries_.emplace_back(std::move(id), std::move(g));
}

}  // namespace gpar
