#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "gpar/graph.hpp"
#include "gpar/pattern.hpp"

namespace gpar {

/// A whitespace-separated token. Quoted tokens (`"..."`) keep their unescaped
/// content and are never variables or directives.
struct Token {
    std::string text;
    bool quoted = false;

    bool is_variable() const { return !quoted && text.size() > 1 && text.front() == '?'; }
    bool is_directive() const { return !quoted && !text.empty() && text.front() == '@'; }
};

/// Splits one line into tokens. An unquoted token starting with `#` begins a
/// comment that runs to end of line.
std::vector<Token> tokenize(std::string_view line, std::size_t line_no);

/// Calls `fn(tokens, line_no)` for every line that has at least one token.
template <typename Fn>
void for_each_token_line(std::string_view text, Fn&& fn) {
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        auto nl = text.find('\n');
        auto line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        auto tokens = tokenize(line, line_no);
        if (!tokens.empty()) fn(tokens, line_no);
    }
}

Triple triple_from_tokens(const std::vector<Token>& tokens, std::size_t line_no);
TriplePattern triple_pattern_from_tokens(const std::vector<Token>& tokens, std::size_t line_no);

/// Throws if a label appears both as `?label` and as a bare term.
void check_name_clash(const Pattern& p, std::size_t line_no);

Graph parse_graph(std::string_view text);
Pattern parse_pattern(std::string_view text);

/// `@graph <id>` headers start a new graph; triples follow until the next one.
GraphBag parse_graph_bag(std::string_view text);

/// One triple per line, sorted by (s, p, o) labels.
std::string serialize_graph(const Graph& g);
std::string serialize_pattern(const Pattern& p);
std::string serialize_graph_bag(const GraphBag& bag);

std::string read_file(const std::string& path);

}  // namespace gpar
