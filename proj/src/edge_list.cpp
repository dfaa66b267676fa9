#include "bootperc/edge_list.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

namespace bootperc {

namespace {

bool blank(const std::string& s) {
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    return true;
}

// Parses exactly `want` non-negative integers from one line.
std::vector<long long> parse_ints(const std::string& line, int line_no, int want) {
    std::istringstream in(line);
    std::vector<long long> out;
    std::string tok;
    while (in >> tok) {
        try {
            std::size_t pos = 0;
            long long v = std::stoll(tok, &pos);
            if (pos != tok.size() || v < 0) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            throw ParseError(line_no, "expected non-negative integer, got '" + tok + "'");
        }
    }
    if (static_cast<int>(out.size()) != want)
        throw ParseError(line_no, "expected " + std::to_string(want) + " fields, got " +
                                      std::to_string(out.size()));
    return out;
}

} // namespace

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;

    long long n = -1, m = -1;
    while (std::getline(in, line)) {
        ++line_no;
        if (blank(line)) continue;
        auto header = parse_ints(line, line_no, 2);
        n = header[0];
        m = header[1];
        break;
    }
    if (n < 0) throw ParseError(line_no, "missing header 'n m'");
    if (n > kMaxVertices)
        throw ParseError(line_no, "vertex count " + std::to_string(n) + " exceeds cap " +
                                      std::to_string(kMaxVertices));

    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    long long seen = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (blank(line)) continue;
        if (seen == m) throw ParseError(line_no, "more than " + std::to_string(m) + " edge lines");
        auto uv = parse_ints(line, line_no, 2);
        long long u = uv[0], v = uv[1];
        if (u >= n || v >= n)
            throw ParseError(line_no, "vertex id " + std::to_string(std::max(u, v)) +
                                          " not below n=" + std::to_string(n));
        if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        ++seen;
    }
    if (seen != m)
        throw ParseError(line_no, "header promised " + std::to_string(m) + " edges, found " +
                                      std::to_string(seen));
    return Graph(static_cast<int>(n), edges);
}

std::string serialize_edge_list(const Graph& g) {
    auto edges = g.edges();
    std::ostringstream out;
    out << g.vertex_count() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) out << u << ' ' << v << '\n';
    return out.str();
}

Graph load_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_edge_list(buf.str());
}

void save_edge_list_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write graph file: " + path);
    out << serialize_edge_list(g);
}

} // namespace bootperc
