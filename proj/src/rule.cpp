#include "gpar/rule.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "gpar/error.hpp"
#include "gpar/io.hpp"

namespace gpar {
namespace {

bool repeats(const std::vector<Variable>& V) {
    std::set<Variable> seen(V.begin(), V.end());
    return seen.size() != V.size();
}

std::vector<Variable> shared_variables(const Pattern& a, const Pattern& b) {
    std::vector<Variable> out;
    for (Variable v : a.variables())
        if (b.has_variable(v)) out.push_back(v);
    return out;  // already in name order
}

Pattern substitute(const Pattern& p, const std::map<Variable, Variable>& ren) {
    auto sub = [&](const Node& n) -> Node {
        if (n.is_variable())
            if (auto it = ren.find(n.variable()); it != ren.end()) return it->second;
        return n;
    };
    std::vector<TriplePattern> out;
    for (const auto& tp : p.triple_patterns()) out.push_back({sub(tp.s), sub(tp.p), sub(tp.o)});
    return Pattern(std::move(out));
}

}  // namespace

std::vector<std::string> validate(const Rule& r) {
    std::vector<std::string> out;
    if (r.p1.variables().empty()) out.emplace_back("antecedent has no variables");
    if (r.p2.variables().empty()) out.emplace_back("consequent has no variables");
    if (r.V1.empty()) out.emplace_back("empty V1");
    if (r.V2.empty()) out.emplace_back("empty V2");
    if (repeats(r.V1)) out.emplace_back("repetitive V1");
    if (repeats(r.V2)) out.emplace_back("repetitive V2");
    if (r.V1.size() != r.V2.size()) out.emplace_back("length mismatch");
    for (Variable v : r.V1)
        if (!r.p1.has_variable(v)) out.push_back("V1 variable ?" + v.name() + " not in antecedent");
    for (Variable v : r.V2)
        if (!r.p2.has_variable(v)) out.push_back("V2 variable ?" + v.name() + " not in consequent");
    return out;
}

void require_valid(const Rule& r) {
    auto violations = validate(r);
    if (violations.empty()) return;
    std::string msg = "rule '" + r.name + "' is malformed:";
    for (const auto& v : violations) msg += " " + v + ";";
    msg.pop_back();
    throw ContractError(msg);
}

SimplifiedRule to_simplified(const Rule& r) {
    require_valid(r);

    std::set<std::string> used;
    for (Variable v : r.p1.variables()) used.insert(v.name());
    for (Variable v : r.p2.variables()) used.insert(v.name());

    // Step 1: variables shared by name but not joined get fresh names.
    std::map<Variable, Variable> step1;
    int k = 1;
    for (Variable v : r.p2.variables()) {
        bool in_v2 = std::find(r.V2.begin(), r.V2.end(), v) != r.V2.end();
        if (in_v2 || !r.p1.has_variable(v)) continue;
        while (used.count("v" + std::to_string(k))) ++k;
        std::string fresh = "v" + std::to_string(k);
        used.insert(fresh);
        step1.emplace(v, Variable(fresh));
    }
    Pattern p2p = substitute(r.p2, step1);

    // Step 2: simultaneous replacement V2[i] -> V1[i].
    std::map<Variable, Variable> step2;
    for (std::size_t i = 0; i < r.V1.size(); ++i) step2.emplace(r.V2[i], r.V1[i]);
    return SimplifiedRule{r.name, r.p1, substitute(p2p, step2)};
}

Rule from_simplified(const SimplifiedRule& s) {
    auto shared = shared_variables(s.p1, s.p2pp);
    if (shared.empty()) throw ContractError("rule '" + s.name + "' has an empty join");
    return Rule{s.name, s.p1, s.p2pp, shared, shared};
}

Node TrivialityWitness::apply(Node n) const {
    for (const auto& [from, to] : m)
        if (from == n) return to;
    return n;
}

std::string TrivialityWitness::to_string() const {
    std::string out;
    for (const auto& [from, to] : m) {
        if (!out.empty()) out += ' ';
        out += from.text() + "->" + to.text();
    }
    return out;
}

namespace {

class TrivialSearch {
public:
    TrivialSearch(const Pattern& p1, const Pattern& p2)
        : p1_(p1.triple_patterns().begin(), p1.triple_patterns().end()),
          p2_(p2.triple_patterns().begin(), p2.triple_patterns().end()) {}

    std::optional<TrivialityWitness> run() {
        if (!step(0)) return std::nullopt;
        TrivialityWitness w;
        for (const auto& [from, to] : fwd_) w.m.emplace_back(from, to);
        std::sort(w.m.begin(), w.m.end(), [](const auto& a, const auto& b) {
            if (a.first.is_variable() != b.first.is_variable()) return a.first.is_variable();
            return a.first.text() < b.first.text();
        });
        return w;
    }

private:
    bool bind(Node x, Node y, std::vector<Node>& added) {
        if (auto it = fwd_.find(x); it != fwd_.end()) return it->second == y;
        if (images_.count(y)) return false;
        if (x.is_term() && y.is_term() && x != y) return false;
        fwd_.emplace(x, y);
        images_.insert(y);
        added.push_back(x);
        return true;
    }

    void unbind(const std::vector<Node>& added) {
        for (Node x : added) {
            images_.erase(fwd_.at(x));
            fwd_.erase(x);
        }
    }

    bool step(std::size_t i) {
        if (i == p2_.size()) return true;
        const auto& a = p2_[i];
        // Terms mapping to themselves are preferred: try p1 triples that keep them fixed first.
        std::vector<const TriplePattern*> order;
        for (const auto& b : p1_) order.push_back(&b);
        std::stable_sort(order.begin(), order.end(), [&](const TriplePattern* x, const TriplePattern* y) {
            return fixed_terms(a, *x) > fixed_terms(a, *y);
        });
        for (const TriplePattern* b : order) {
            std::vector<Node> added;
            bool ok = bind(a.s, b->s, added) && bind(a.p, b->p, added) && bind(a.o, b->o, added);
            if (ok && step(i + 1)) return true;
            unbind(added);
        }
        return false;
    }

    static int fixed_terms(const TriplePattern& a, const TriplePattern& b) {
        int n = 0;
        if (a.s.is_term() && a.s == b.s) ++n;
        if (a.p.is_term() && a.p == b.p) ++n;
        if (a.o.is_term() && a.o == b.o) ++n;
        return n;
    }

    std::vector<TriplePattern> p1_, p2_;
    std::map<Node, Node> fwd_;
    std::set<Node> images_;
};

}  // namespace

TrivialityResult is_trivial(const Pattern& p1, const Pattern& p2) {
    auto w = TrivialSearch(p1, p2).run();
    return TrivialityResult{w.has_value(), std::move(w)};
}

namespace {

struct RuleBuilder {
    std::string name;
    std::size_t line = 0;
    std::vector<TriplePattern> antecedent, consequent;
    std::optional<std::vector<std::pair<Variable, Variable>>> join;
    enum class Section { None, Antecedent, Consequent } section = Section::None;

    Rule finish() const {
        if (antecedent.empty()) throw ParseError(line, "rule '" + name + "' has an empty antecedent");
        if (consequent.empty()) throw ParseError(line, "rule '" + name + "' has an empty consequent");
        std::vector<TriplePattern> all = antecedent;
        all.insert(all.end(), consequent.begin(), consequent.end());
        check_name_clash(Pattern(all), line);
        Pattern p1(antecedent), p2(consequent);
        Rule r;
        try {
            if (join) {
                r = Rule{name, p1, p2, {}, {}};
                for (const auto& [a, b] : *join) {
                    r.V1.push_back(a);
                    r.V2.push_back(b);
                }
                require_valid(r);
            } else {
                r = from_simplified(SimplifiedRule{name, p1, p2});
                require_valid(r);
            }
        } catch (const ContractError& e) {
            throw ParseError(line, e.what());
        }
        return r;
    }
};

std::pair<Variable, Variable> parse_join_pair(const Token& t, std::size_t line_no) {
    auto eq = t.text.find('=');
    if (t.quoted || eq == std::string::npos) throw ParseError(line_no, "join pair must look like ?a=?b");
    auto lhs = std::string_view(t.text).substr(0, eq);
    auto rhs = std::string_view(t.text).substr(eq + 1);
    if (lhs.size() < 2 || rhs.size() < 2 || lhs[0] != '?' || rhs[0] != '?')
        throw ParseError(line_no, "join pair must look like ?a=?b");
    return {Variable(lhs.substr(1)), Variable(rhs.substr(1))};
}

}  // namespace

std::vector<Rule> parse_rules(std::string_view text) {
    std::vector<Rule> rules;
    std::optional<RuleBuilder> cur;
    std::set<std::string> names;
    auto flush = [&] {
        if (cur) rules.push_back(cur->finish());
        cur.reset();
    };
    for_each_token_line(text, [&](const std::vector<Token>& tokens, std::size_t line_no) {
        const Token& head = tokens[0];
        if (head.is_directive()) {
            if (head.text == "@rule") {
                if (tokens.size() != 2) throw ParseError(line_no, "expected '@rule <name>'");
                flush();
                if (!names.insert(tokens[1].text).second)
                    throw ParseError(line_no, "duplicate rule name '" + tokens[1].text + "'");
                cur.emplace();
                cur->name = tokens[1].text;
                cur->line = line_no;
                return;
            }
            if (!cur) throw ParseError(line_no, "'" + head.text + "' before the first '@rule'");
            if (head.text == "@antecedent" || head.text == "@consequent") {
                if (tokens.size() != 1) throw ParseError(line_no, "'" + head.text + "' takes no arguments");
                cur->section = head.text == "@antecedent" ? RuleBuilder::Section::Antecedent
                                                          : RuleBuilder::Section::Consequent;
                return;
            }
            if (head.text == "@join") {
                if (cur->join) throw ParseError(line_no, "second '@join' in one rule");
                if (tokens.size() < 2) throw ParseError(line_no, "'@join' needs at least one pair");
                cur->join.emplace();
                for (std::size_t i = 1; i < tokens.size(); ++i) cur->join->push_back(parse_join_pair(tokens[i], line_no));
                cur->section = RuleBuilder::Section::None;
                return;
            }
            throw ParseError(line_no, "unknown directive '" + head.text + "'");
        }
        if (!cur || cur->section == RuleBuilder::Section::None)
            throw ParseError(line_no, "triple pattern outside '@antecedent'/'@consequent'");
        auto tp = triple_pattern_from_tokens(tokens, line_no);
        (cur->section == RuleBuilder::Section::Antecedent ? cur->antecedent : cur->consequent).push_back(tp);
    });
    flush();
    return rules;
}

std::string serialize_rule(const Rule& r) {
    std::string out = "@rule " + render_label(r.name) + "\n@antecedent\n" + serialize_pattern(r.p1) +
                      "@consequent\n" + serialize_pattern(r.p2);
    auto shared = shared_variables(r.p1, r.p2);
    if (!(r.V1 == r.V2 && r.V1 == shared)) {
        out += "@join";
        for (std::size_t i = 0; i < r.V1.size(); ++i) out += " ?" + r.V1[i].name() + "=?" + r.V2[i].name();
        out += '\n';
    }
    return out;
}

std::string serialize_rule(const SimplifiedRule& s) {
    return "@rule " + render_label(s.name) + "\n@antecedent\n" + serialize_pattern(s.p1) + "@consequent\n" +
           serialize_pattern(s.p2pp);
}

}  // namespace gpar
