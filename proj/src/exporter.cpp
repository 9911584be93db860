#include "gpar/exporter.hpp"

#include <algorithm>
#include <tuple>

#include "gpar/error.hpp"

namespace gpar {
namespace {

bool is_literal_label(const std::string& l) {
    return l.size() >= 2 && l.front() == '"' && l.back() == '"';
}

std::string sparql_string(std::string_view body) {
    std::string out = "\"";
    for (char c : body) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    return out + '"';
}

bool iri_safe(unsigned char c) {
    if (c <= 0x20 || c >= 0x7f) return false;
    switch (c) {
        case '<': case '>': case '"': case '{': case '}': case '|': case '^': case '`': case '\\': case '%':
            return false;
        default: return true;
    }
}

std::string render_var(Variable v) {
    const auto& name = v.name();
    bool ok = !name.empty() && std::all_of(name.begin(), name.end(), [](unsigned char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
    });
    if (!ok) throw ContractError("variable ?" + name + " cannot be written as a SPARQL/SWRL variable");
    return "?" + name;
}

std::string render_node(const Node& n, std::string_view ns, bool allow_literal) {
    return n.is_variable() ? render_var(n.variable()) : render_term(n.term(), ns, allow_literal);
}

std::vector<const TriplePattern*> ordered(const Pattern& p) {
    std::vector<const TriplePattern*> out;
    for (const auto& tp : p.triple_patterns()) out.push_back(&tp);
    std::sort(out.begin(), out.end(), [](const TriplePattern* a, const TriplePattern* b) {
        auto key = [](const TriplePattern* t) { return std::make_tuple(t->s.text(), t->p.text(), t->o.text()); };
        return key(a) < key(b);
    });
    return out;
}

}  // namespace

std::string render_term(Term t, std::string_view ns, bool allow_literal) {
    const auto& label = t.label();
    if (allow_literal && is_literal_label(label))
        return sparql_string(std::string_view(label).substr(1, label.size() - 2));
    static const char* hex = "0123456789ABCDEF";
    std::string out = "<";
    out += ns;
    for (unsigned char c : label) {
        if (iri_safe(c)) {
            out += static_cast<char>(c);
        } else {
            out += '%';
            out += hex[c >> 4];
            out += hex[c & 15];
        }
    }
    return out + '>';
}

Inequalities nra_inequalities(const SimplifiedRule& s) {
    Inequalities out;
    auto vars = s.p1.variables();
    std::vector<Term> terms(s.p1.terms().begin(), s.p1.terms().end());
    std::sort(terms.begin(), terms.end(), LabelLess{});
    for (std::size_t i = 0; i < vars.size(); ++i)
        for (std::size_t j = i + 1; j < vars.size(); ++j) out.pairs.emplace_back(vars[i], vars[j]);
    for (Variable v : vars)
        for (Term t : terms) out.terms.emplace_back(v, t);
    return out;
}

std::string to_sparql_construct(const SimplifiedRule& s, std::string_view ns) {
    auto triple_line = [&](const TriplePattern& tp) {
        return "  " + render_node(tp.s, ns, false) + ' ' + render_node(tp.p, ns, false) + ' ' +
               render_node(tp.o, ns, true) + " .\n";
    };
    std::string out = "CONSTRUCT {\n";
    for (const auto* tp : ordered(s.p2pp)) out += triple_line(*tp);
    out += "} WHERE {\n";
    for (const auto* tp : ordered(s.p1)) out += triple_line(*tp);

    auto ineq = nra_inequalities(s);
    std::vector<std::string> clauses;
    for (const auto& [a, b] : ineq.pairs) clauses.push_back(render_var(a) + " != " + render_var(b));
    for (const auto& [v, t] : ineq.terms) clauses.push_back(render_var(v) + " != " + render_term(t, ns));
    if (!clauses.empty()) {
        out += "  FILTER (\n";
        for (std::size_t i = 0; i < clauses.size(); ++i)
            out += "    " + clauses[i] + (i + 1 < clauses.size() ? " &&\n" : "\n");
        out += "  )\n";
    }
    out += "}\n";
    return out;
}

std::string to_swrl(const SimplifiedRule& s, std::string_view ns) {
    for (const Pattern* p : {&s.p1, &s.p2pp})
        for (const auto& tp : p->triple_patterns())
            if (tp.p.is_variable())
                throw ContractError("variable " + tp.p.text() +
                                    " occurs in predicate position, which SWRL does not allow");

    auto atom = [&](const TriplePattern& tp) {
        return render_term(tp.p.term(), ns, false) + "(" + render_node(tp.s, ns, false) + ", " +
               render_node(tp.o, ns, true) + ")";
    };
    std::vector<std::string> body;
    for (const auto* tp : ordered(s.p1)) body.push_back(atom(*tp));
    auto ineq = nra_inequalities(s);
    for (const auto& [a, b] : ineq.pairs) body.push_back("swrlb:notEqual(" + render_var(a) + ", " + render_var(b) + ")");
    for (const auto& [v, t] : ineq.terms)
        body.push_back("swrlb:notEqual(" + render_var(v) + ", " + render_term(t, ns) + ")");
    std::vector<std::string> head;
    for (const auto* tp : ordered(s.p2pp)) head.push_back(atom(*tp));

    std::string out;
    for (std::size_t i = 0; i < body.size(); ++i) out += body[i] + (i + 1 < body.size() ? " ^\n" : "\n");
    out += "-> ";
    for (std::size_t i = 0; i < head.size(); ++i) out += (i ? " ^ " : "") + head[i];
    out += '\n';
    return out;
}

}  // namespace gpar
