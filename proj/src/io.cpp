#include "gpar/io.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "gpar/error.hpp"

namespace gpar {
namespace {

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
}

Node node_from_token(const Token& t) {
    if (t.is_variable()) return Variable(std::string_view(t.text).substr(1));
    return Term(t.text);
}

}  // namespace

std::vector<Token> tokenize(std::string_view line, std::size_t line_no) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (is_space(line[i])) {
            ++i;
            continue;
        }
        if (line[i] == '"') {
            Token tok{"", true};
            ++i;
            bool closed = false;
            while (i < line.size()) {
                char c = line[i++];
                if (c == '"') {
                    closed = true;
                    break;
                }
                if (c == '\\') {
                    if (i == line.size()) break;
                    char e = line[i++];
                    switch (e) {
                        case 'n': tok.text += '\n'; break;
                        case 'r': tok.text += '\r'; break;
                        case 't': tok.text += '\t'; break;
                        default: tok.text += e;
                    }
                    continue;
                }
                tok.text += c;
            }
            if (!closed) throw ParseError(line_no, "unterminated quoted label");
            if (i < line.size() && !is_space(line[i]))
                throw ParseError(line_no, "quoted label must be followed by whitespace");
            out.push_back(std::move(tok));
            continue;
        }
        if (line[i] == '#') break;
        auto start = i;
        while (i < line.size() && !is_space(line[i])) ++i;
        out.push_back(Token{std::string(line.substr(start, i - start)), false});
    }
    return out;
}

Triple triple_from_tokens(const std::vector<Token>& tokens, std::size_t line_no) {
    if (tokens.size() != 3)
        throw ParseError(line_no, "expected 3 tokens, found " + std::to_string(tokens.size()));
    for (const auto& t : tokens) {
        if (t.is_variable()) throw ParseError(line_no, "variable '" + t.text + "' not allowed in a graph");
        if (t.is_directive()) throw ParseError(line_no, "unexpected directive '" + t.text + "'");
        if (!t.quoted && t.text == "?") throw ParseError(line_no, "bare '?' is not a term");
    }
    return Triple{Term(tokens[0].text), Term(tokens[1].text), Term(tokens[2].text)};
}

TriplePattern triple_pattern_from_tokens(const std::vector<Token>& tokens, std::size_t line_no) {
    if (tokens.size() != 3)
        throw ParseError(line_no, "expected 3 tokens, found " + std::to_string(tokens.size()));
    for (const auto& t : tokens) {
        if (t.is_directive()) throw ParseError(line_no, "unexpected directive '" + t.text + "'");
        if (!t.quoted && t.text == "?") throw ParseError(line_no, "variable name missing after '?'");
    }
    return TriplePattern{node_from_token(tokens[0]), node_from_token(tokens[1]), node_from_token(tokens[2])};
}

void check_name_clash(const Pattern& p, std::size_t line_no) {
    for (Variable v : p.variables()) {
        if (p.has_term(Term::from_id(v.id())))
            throw ParseError(line_no, "label '" + v.name() + "' used both as variable and as term");
    }
}

Graph parse_graph(std::string_view text) {
    std::vector<Triple> triples;
    for_each_token_line(text, [&](const std::vector<Token>& tokens, std::size_t line_no) {
        triples.push_back(triple_from_tokens(tokens, line_no));
    });
    return Graph(std::move(triples));
}

Pattern parse_pattern(std::string_view text) {
    std::vector<TriplePattern> tps;
    std::size_t last_line = 0;
    for_each_token_line(text, [&](const std::vector<Token>& tokens, std::size_t line_no) {
        tps.push_back(triple_pattern_from_tokens(tokens, line_no));
        last_line = line_no;
    });
    Pattern p(std::move(tps));
    check_name_clash(p, last_line);
    return p;
}

GraphBag parse_graph_bag(std::string_view text) {
    GraphBag bag;
    std::optional<std::string> current;
    std::vector<Triple> triples;
    auto flush = [&] {
        if (current) bag.add(*current, Graph(std::move(triples)));
        triples.clear();
    };
    for_each_token_line(text, [&](const std::vector<Token>& tokens, std::size_t line_no) {
        if (tokens[0].is_directive()) {
            if (tokens[0].text != "@graph" || tokens.size() != 2)
                throw ParseError(line_no, "expected '@graph <id>'");
            flush();
            for (std::size_t i = 0; i < bag.size(); ++i)
                if (bag.id(i) == tokens[1].text) throw ParseError(line_no, "duplicate graph id '" + tokens[1].text + "'");
            current = tokens[1].text;
            return;
        }
        if (!current) throw ParseError(line_no, "triple before the first '@graph' header");
        triples.push_back(triple_from_tokens(tokens, line_no));
    });
    flush();
    return bag;
}

std::string serialize_graph(const Graph& g) {
    std::vector<Triple> sorted(g.triples().begin(), g.triples().end());
    std::sort(sorted.begin(), sorted.end(), label_order);
    std::string out;
    for (const auto& t : sorted) {
        out += render_label(t.s.label());
        out += ' ';
        out += render_label(t.p.label());
        out += ' ';
        out += render_label(t.o.label());
        out += '\n';
    }
    return out;
}

std::string serialize_pattern(const Pattern& p) {
    std::vector<std::string> lines;
    for (const auto& tp : p.triple_patterns())
        lines.push_back(tp.s.text() + ' ' + tp.p.text() + ' ' + tp.o.text());
    std::sort(lines.begin(), lines.end());
    std::string out;
    for (const auto& l : lines) out += l + '\n';
    return out;
}

std::string serialize_graph_bag(const GraphBag& bag) {
    std::string out;
    for (const auto& [id, g] : bag) {
        out += "@graph " + render_label(id) + '\n';
        out += serialize_graph(g);
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace gpar
