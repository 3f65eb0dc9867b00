#pragma once

// Line-oriented graph text format: '#' comment lines, a header "n m", then
// exactly m lines "u v". Output is byte-stable: LF endings, single spaces.

#include <charconv>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "meg/graph.hpp"

namespace meg {

class parse_error : public std::runtime_error {
public:
    parse_error(int line, int column, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + msg),
          line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

namespace detail {

struct NumberLine {
    std::vector<long long> values;
    int line;
};

// Yields non-comment, non-blank lines split into integers.
inline std::vector<NumberLine> tokenize_graph_text(std::string_view text) {
    std::vector<NumberLine> result;
    int line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                                               : eol - pos);
        ++line_no;
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

        size_t i = line.find_first_not_of(" \t\r");
        if (i == std::string_view::npos || line[i] == '#') continue;

        NumberLine nl{{}, line_no};
        while (i < line.size()) {
            size_t j = line.find_first_of(" \t\r", i);
            if (j == std::string_view::npos) j = line.size();
            std::string_view token = line.substr(i, j - i);
            long long value = 0;
            auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (ec != std::errc() || ptr != token.data() + token.size())
                throw parse_error(line_no, static_cast<int>(i) + 1,
                                  "expected an integer, got '" + std::string(token) + "'");
            nl.values.push_back(value);
            i = line.find_first_not_of(" \t\r", j);
            if (i == std::string_view::npos) break;
        }
        result.push_back(std::move(nl));
    }
    return result;
}

}  // namespace detail

inline DirectedGraph parse_graph(std::string_view text) {
    auto lines = detail::tokenize_graph_text(text);
    if (lines.empty()) throw parse_error(1, 1, "missing header line 'n m'");
    if (lines[0].values.size() != 2)
        throw parse_error(lines[0].line, 1, "header must be two integers 'n m'");
    long long n = lines[0].values[0], m = lines[0].values[1];
    if (n < 0 || m < 0) throw parse_error(lines[0].line, 1, "header values must be non-negative");
    if (static_cast<long long>(lines.size()) - 1 != m) {
        if (static_cast<long long>(lines.size()) - 1 < m)
            throw parse_error(lines.back().line, 1,
                              "expected " + std::to_string(m) + " edges, found " +
                                  std::to_string(lines.size() - 1));
        throw parse_error(lines[1 + m].line, 1,
                          "expected " + std::to_string(m) + " edges, found " +
                              std::to_string(lines.size() - 1));
    }

    std::vector<std::pair<VertexId, VertexId>> pairs;
    std::set<std::pair<long long, long long>> seen;
    for (size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].values.size() != 2)
            throw parse_error(lines[i].line, 1, "edge line must be two integers 'u v'");
        long long u = lines[i].values[0], v = lines[i].values[1];
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw parse_error(lines[i].line, 1, "edge endpoint out of range");
        if (u == v) throw parse_error(lines[i].line, 1, "self-loop");
        if (!seen.insert({u, v}).second)
            throw parse_error(lines[i].line, 1, "duplicate edge");
        pairs.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});
    }
    try {
        return build_graph(static_cast<int>(n), pairs);
    } catch (const graph_error& e) {
        throw parse_error(lines[0].line, 1, e.what());
    }
}

inline std::string serialize_edge_set(const DirectedGraph& g, const std::vector<EdgeId>& subset) {
    std::vector<EdgeId> ids(subset);
    for (EdgeId id : ids) g.check_edge_id(id);
    std::sort(ids.begin(), ids.end());
    std::string out = std::to_string(ids.size()) + "\n";
    for (EdgeId id : ids)
        out += std::to_string(g.edge(id).tail) + " " + std::to_string(g.edge(id).head) + "\n";
    return out;
}

inline std::string serialize_graph(const DirectedGraph& g) {
    std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) +
                      "\n";
    for (EdgeId id = 0; id < g.edge_count(); ++id)
        out += std::to_string(g.edge(id).tail) + " " + std::to_string(g.edge(id).head) + "\n";
    return out;
}

}  // namespace meg
