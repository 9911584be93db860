#include "gpar/pattern.hpp"

#include <algorithm>

namespace gpar {

std::string Node::text() const {
    return is_var_ ? "?" + label_of(id_) : render_label(label_of(id_));
}

Pattern::Pattern(std::vector<TriplePattern> tps) : tps_(std::move(tps)) {
    std::sort(tps_.begin(), tps_.end());
    tps_.erase(std::unique(tps_.begin(), tps_.end()), tps_.end());
    for (const auto& tp : tps_) {
        for (const Node& n : {tp.s, tp.p, tp.o}) {
            if (n.is_variable())
                vars_.push_back(n.variable());
            else
                terms_.push_back(n.term());
        }
    }
    std::sort(vars_.begin(), vars_.end(), LabelLess{});
    vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
    std::sort(terms_.begin(), terms_.end());
    terms_.erase(std::unique(terms_.begin(), terms_.end()), terms_.end());
}

Pattern Pattern::from_graph(const Graph& g) {
    std::vector<TriplePattern> tps;
    tps.reserve(g.size());
    for (const auto& t : g.triples()) tps.push_back({t.s, t.p, t.o});
    return Pattern(std::move(tps));
}

bool Pattern::has_variable(Variable v) const {
    return std::find(vars_.begin(), vars_.end(), v) != vars_.end();
}

bool Pattern::has_term(Term t) const {
    return std::binary_search(terms_.begin(), terms_.end(), t);
}

std::optional<Graph> Pattern::to_graph() const {
    if (!is_ground()) return std::nullopt;
    std::vector<Triple> triples;
    triples.reserve(tps_.size());
    for (const auto& tp : tps_) triples.push_back({tp.s.term(), tp.p.term(), tp.o.term()});
    return Graph(std::move(triples));
}

std::vector<Term> term_union(std::span<const Term> a, std::span<const Term> b) {
    std::vector<Term> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace gpar
