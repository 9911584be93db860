#include "gpar/matcher.hpp"

#include <algorithm>
#include <limits>

#include "gpar/error.hpp"

namespace gpar {

const char* to_string(Semantics s) {
    return s == Semantics::HOM ? "hom" : "nra";
}

Mapping::Mapping(std::vector<std::pair<Variable, Term>> bindings) : bindings_(std::move(bindings)) {
    std::sort(bindings_.begin(), bindings_.end(),
              [](const auto& a, const auto& b) { return LabelLess{}(a.first, b.first); });
}

std::optional<Term> Mapping::find(Variable v) const {
    for (const auto& [var, term] : bindings_)
        if (var == v) return term;
    return std::nullopt;
}

std::string Mapping::to_string() const {
    std::string out;
    for (const auto& [var, term] : bindings_) {
        if (!out.empty()) out += ' ';
        out += '?' + var.name() + '=' + render_label(term.label());
    }
    return out;
}

bool tuple_label_less(const TermTuple& a, const TermTuple& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), LabelLess{});
}

namespace {

constexpr std::uint32_t kUnbound = std::numeric_limits<std::uint32_t>::max();

struct Slot {
    bool is_var;
    std::uint32_t value;  // variable index or term handle
};

struct CompiledTriple {
    Slot pos[3];
};

class Search {
public:
    Search(const Pattern& p, const Graph& g, Semantics sem, const std::function<bool(const Mapping&)>& visit)
        : p_(p), g_(g), sem_(sem), visit_(visit), index_(g.index()) {
        auto vars = p.variables();
        vars_.assign(vars.begin(), vars.end());
        binding_.assign(vars_.size(), kUnbound);
        for (const auto& tp : p.triple_patterns()) {
            CompiledTriple ct{};
            const Node nodes[3] = {tp.s, tp.p, tp.o};
            for (int i = 0; i < 3; ++i) {
                if (nodes[i].is_variable()) {
                    auto it = std::find(vars_.begin(), vars_.end(), nodes[i].variable());
                    ct.pos[i] = {true, static_cast<std::uint32_t>(it - vars_.begin())};
                } else {
                    ct.pos[i] = {false, nodes[i].term().id()};
                }
            }
            triples_.push_back(ct);
        }
        done_.assign(triples_.size(), false);
    }

    bool prebind(const Mapping& fixed) {
        for (const auto& [var, term] : fixed.bindings()) {
            auto it = std::find(vars_.begin(), vars_.end(), var);
            if (it == vars_.end())
                throw ContractError("variable ?" + var.name() + " does not occur in the pattern");
            auto idx = static_cast<std::size_t>(it - vars_.begin());
            if (!bind(idx, term.id())) return false;
        }
        return true;
    }

    void run() { step(0); }

private:
    std::uint32_t resolve(const Slot& s) const { return s.is_var ? binding_[s.value] : s.value; }

    bool bind(std::size_t var, std::uint32_t term) {
        if (binding_[var] != kUnbound) return binding_[var] == term;
        if (sem_ == Semantics::NRA) {
            if (p_.has_term(Term::from_id(term))) return false;
            for (auto b : binding_)
                if (b == term) return false;
        }
        binding_[var] = term;
        return true;
    }

    std::span<const std::uint32_t> candidates(const CompiledTriple& ct, bool& all) const {
        const TripleIndex::Postings* post[3] = {&index_.by_s, &index_.by_p, &index_.by_o};
        std::span<const std::uint32_t> best;
        all = true;
        for (int i = 0; i < 3; ++i) {
            auto t = resolve(ct.pos[i]);
            if (t == kUnbound) continue;
            auto list = post[i]->find(Term::from_id(t));
            if (all || list.size() < best.size()) best = list;
            all = false;
        }
        return best;
    }

    // Returns false once the visitor asked to stop.
    bool step(std::size_t matched) {
        if (matched == triples_.size()) return emit();

        std::size_t pick = triples_.size();
        std::size_t pick_count = std::numeric_limits<std::size_t>::max();
        for (std::size_t i = 0; i < triples_.size(); ++i) {
            if (done_[i]) continue;
            bool all = false;
            auto c = candidates(triples_[i], all);
            std::size_t count = all ? g_.size() : c.size();
            if (count < pick_count) {
                pick = i;
                pick_count = count;
            }
        }
        if (pick_count == 0) return true;

        const auto& ct = triples_[pick];
        bool all = false;
        auto cands = candidates(ct, all);
        done_[pick] = true;
        bool keep_going = true;
        auto try_triple = [&](const Triple& t) {
            const std::uint32_t vals[3] = {t.s.id(), t.p.id(), t.o.id()};
            std::size_t newly[3];
            std::size_t n_new = 0;
            bool ok = true;
            for (int i = 0; i < 3 && ok; ++i) {
                const Slot& s = ct.pos[i];
                if (!s.is_var) {
                    ok = s.value == vals[i];
                } else if (binding_[s.value] != kUnbound) {
                    ok = binding_[s.value] == vals[i];
                } else if (bind(s.value, vals[i])) {
                    newly[n_new++] = s.value;
                } else {
                    ok = false;
                }
            }
            if (ok) keep_going = step(matched + 1);
            for (std::size_t i = 0; i < n_new; ++i) binding_[newly[i]] = kUnbound;
        };
        auto triples = g_.triples();
        if (all) {
            for (const auto& t : triples) {
                try_triple(t);
                if (!keep_going) break;
            }
        } else {
            for (auto idx : cands) {
                try_triple(triples[idx]);
                if (!keep_going) break;
            }
        }
        done_[pick] = false;
        return keep_going;
    }

    bool emit() {
        std::vector<std::pair<Variable, Term>> b;
        b.reserve(vars_.size());
        for (std::size_t i = 0; i < vars_.size(); ++i) b.emplace_back(vars_[i], Term::from_id(binding_[i]));
        return visit_(Mapping(std::move(b)));
    }

    const Pattern& p_;
    const Graph& g_;
    Semantics sem_;
    const std::function<bool(const Mapping&)>& visit_;
    const TripleIndex& index_;
    std::vector<Variable> vars_;
    std::vector<std::uint32_t> binding_;
    std::vector<CompiledTriple> triples_;
    std::vector<bool> done_;
};

TermTuple values_of(const Mapping& m) {
    TermTuple out;
    out.reserve(m.size());
    for (const auto& b : m.bindings()) out.push_back(b.second);
    return out;
}

}  // namespace

void for_each_match(const Pattern& p, const Graph& g, Semantics sem, const Mapping& fixed,
                    const std::function<bool(const Mapping&)>& visit) {
    if (p.empty()) throw ContractError("cannot evaluate an empty pattern");
    Search search(p, g, sem, visit);
    if (!search.prebind(fixed)) return;
    search.run();
}

std::vector<Mapping> evaluate(const Pattern& p, const Graph& g, Semantics sem) {
    std::vector<Mapping> out;
    for_each_match(p, g, sem, Mapping{}, [&](const Mapping& m) {
        out.push_back(m);
        return true;
    });
    std::sort(out.begin(), out.end(),
              [](const Mapping& a, const Mapping& b) { return tuple_label_less(values_of(a), values_of(b)); });
    return out;
}

Pattern apply_mapping(const Mapping& mu, const Pattern& p) {
    auto sub = [&](const Node& n) -> Node {
        if (n.is_variable())
            if (auto t = mu.find(n.variable())) return *t;
        return n;
    };
    std::vector<TriplePattern> out;
    out.reserve(p.size());
    for (const auto& tp : p.triple_patterns()) out.push_back({sub(tp.s), sub(tp.p), sub(tp.o)});
    return Pattern(std::move(out));
}

std::vector<TermTuple> project(std::span<const Mapping> matches, std::span<const Variable> V) {
    std::vector<TermTuple> out;
    out.reserve(matches.size());
    for (const auto& m : matches) {
        TermTuple t;
        t.reserve(V.size());
        for (Variable v : V) {
            auto b = m.find(v);
            if (!b) throw ContractError("mapping does not bind ?" + v.name());
            t.push_back(*b);
        }
        out.push_back(std::move(t));
    }
    std::sort(out.begin(), out.end(), tuple_label_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool m_g(const Graph& g, std::span<const Term> T, const Pattern& p, std::span<const Variable> V, Semantics sem) {
    if (T.size() != V.size()) throw ContractError("term tuple and variable sequence differ in length");
    std::vector<std::pair<Variable, Term>> fixed;
    for (std::size_t i = 0; i < V.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j)
            if (V[i] == V[j]) throw ContractError("variable sequence repeats ?" + V[i].name());
        fixed.emplace_back(V[i], T[i]);
    }
    bool found = false;
    for_each_match(p, g, sem, Mapping(std::move(fixed)), [&](const Mapping&) {
        found = true;
        return false;
    });
    return found;
}

}  // namespace gpar
