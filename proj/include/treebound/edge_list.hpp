#pragma once

#include "treebound/multigraph.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace treebound {

// Edge-list text format:
//   - '#' lines are comments, blank lines are ignored
//   - first data line: vertex count n
//   - then "u v" or "u v m" with 1-based endpoints and multiplicity m >= 1
//   - repeated lines accumulate multiplicity; LF and CRLF both accepted

namespace detail {

inline std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        if (i > start) tokens.push_back(line.substr(start, i - start));
    }
    return tokens;
}

inline std::int64_t parse_int(std::string_view token, int line_no, const char* what) {
    std::int64_t value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw std::invalid_argument("edge list line " + std::to_string(line_no) + ": malformed " +
                                    what + " '" + std::string(token) + "'");
    return value;
}

}  // namespace detail

inline Multigraph parse_edge_list(std::istream& in) {
    std::string line;
    int line_no = 0;
    int n = -1;
    Multigraph graph(1);
    bool have_graph = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto tokens = detail::split_tokens(line);
        if (tokens.empty() || tokens.front().front() == '#') continue;
        if (n < 0) {
            if (tokens.size() != 1)
                throw std::invalid_argument("edge list line " + std::to_string(line_no) +
                                            ": expected a single vertex count");
            const std::int64_t parsed = detail::parse_int(tokens[0], line_no, "vertex count");
            if (parsed < 1)
                throw std::invalid_argument("edge list line " + std::to_string(line_no) +
                                            ": vertex count must be at least 1");
            n = static_cast<int>(parsed);
            graph = Multigraph(n);
            have_graph = true;
            continue;
        }
        if (tokens.size() != 2 && tokens.size() != 3)
            throw std::invalid_argument("edge list line " + std::to_string(line_no) +
                                        ": expected 'u v' or 'u v m'");
        const std::int64_t u = detail::parse_int(tokens[0], line_no, "endpoint");
        const std::int64_t v = detail::parse_int(tokens[1], line_no, "endpoint");
        const std::int64_t m = tokens.size() == 3 ? detail::parse_int(tokens[2], line_no, "multiplicity") : 1;
        if (u < 1 || u > n || v < 1 || v > n)
            throw std::invalid_argument("edge list line " + std::to_string(line_no) +
                                        ": vertex index out of range [1.." + std::to_string(n) + "]");
        if (u == v)
            throw std::invalid_argument("edge list line " + std::to_string(line_no) +
                                        ": loop edge " + std::to_string(u) + " " + std::to_string(v));
        if (m < 1)
            throw std::invalid_argument("edge list line " + std::to_string(line_no) +
                                        ": multiplicity must be at least 1");
        graph.add_edge(static_cast<int>(u - 1), static_cast<int>(v - 1), m);
    }
    if (!have_graph) throw std::invalid_argument("edge list: missing vertex count line");
    return graph;
}

inline Multigraph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

inline Multigraph load_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return parse_edge_list(in);
}

inline std::string write_edge_list(const Multigraph& g) {
    std::string out = std::to_string(g.order());
    out.push_back('\n');
    for (int i = 0; i < g.order(); ++i) {
        for (int j = i + 1; j < g.order(); ++j) {
            const std::int64_t m = g.multiplicity(i, j);
            if (m == 0) continue;
            out += std::to_string(i + 1);
            out.push_back(' ');
            out += std::to_string(j + 1);
            if (m > 1) {
                out.push_back(' ');
                out += std::to_string(m);
            }
            out.push_back('\n');
        }
    }
    return out;
}

}  // namespace treebound
