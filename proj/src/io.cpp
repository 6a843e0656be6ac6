#include "minorkit/io.hpp"

#include <fstream>
#include <sstream>

namespace mk {

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int declared_n = -1;
    std::vector<std::pair<int, int>> es;
    int max_id = -1;
    while (std::getline(in, line)) {
        ++lineno;
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;
        if (line.compare(first, 2, "n=") == 0) {
            try {
                declared_n = std::stoi(line.substr(first + 2));
            } catch (...) {
                throw ParseError("bad n= header", lineno, static_cast<int>(first));
            }
            if (declared_n < 0) throw ParseError("negative n", lineno, static_cast<int>(first));
            continue;
        }
        std::istringstream ls(line);
        long long u, v;
        if (!(ls >> u >> v)) throw ParseError("expected 'u v' pair", lineno, static_cast<int>(first));
        std::string rest;
        if (ls >> rest && !rest.empty() && rest[0] != '#')
            throw ParseError("trailing tokens after edge", lineno, static_cast<int>(line.find(rest)));
        if (u < 0 || v < 0) throw ParseError("negative vertex id", lineno, static_cast<int>(first));
        if (u == v) throw ParseError("self-loop", lineno, static_cast<int>(first));
        es.push_back({static_cast<int>(u), static_cast<int>(v)});
        max_id = std::max(max_id, static_cast<int>(std::max(u, v)));
    }
    int n = std::max(declared_n, max_id + 1);
    if (declared_n >= 0 && max_id >= declared_n)
        throw ParseError("vertex id exceeds declared n", lineno, 0);
    Graph g(n);
    for (auto [u, v] : es) g.add_edge(u, v);
    return g;
}

std::string serialize_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "n=" << g.n() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

namespace {
void append_bits6(std::string& s, const std::vector<bool>& bits) {
    for (size_t i = 0; i < bits.size(); i += 6) {
        int val = 0;
        for (size_t j = 0; j < 6; ++j) {
            val <<= 1;
            if (i + j < bits.size() && bits[i + j]) val |= 1;
        }
        s.push_back(static_cast<char>(val + 63));
    }
}
}  // namespace

Graph parse_graph6(const std::string& text) {
    std::string s = text;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
    size_t start = s.find_first_not_of(" \t");
    if (start == std::string::npos) throw ParseError("empty graph6 string", 0, 0);
    s = s.substr(start);
    if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
    size_t pos = 0;
    auto byte = [&](size_t i) -> int {
        if (i >= s.size()) throw ParseError("truncated graph6 string", 0, static_cast<int>(i));
        int c = static_cast<unsigned char>(s[i]);
        if (c < 63 || c > 126) throw ParseError("invalid graph6 byte", 0, static_cast<int>(i));
        return c - 63;
    };
    long long n;
    if (byte(0) < 63) {
        n = byte(0);
        pos = 1;
    } else if (s.size() >= 4 && byte(1) < 63) {
        n = (static_cast<long long>(byte(1)) << 12) | (byte(2) << 6) | byte(3);
        pos = 4;
    } else {
        n = (static_cast<long long>(byte(2)) << 30) | (static_cast<long long>(byte(3)) << 24) |
            (byte(4) << 18) | (byte(5) << 12) | (byte(6) << 6) | byte(7);
        pos = 8;
    }
    if (n > 5000) throw ParseError("graph6 order too large for this tool", 0, 0);
    Graph g(static_cast<int>(n));
    long long nbits = n * (n - 1) / 2;
    long long bit = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++bit) {
            int b = byte(pos + bit / 6);
            if ((b >> (5 - bit % 6)) & 1) g.add_edge(u, v);
        }
    size_t expect = pos + static_cast<size_t>((nbits + 5) / 6);
    if (s.size() != expect) throw ParseError("graph6 length mismatch", 0, static_cast<int>(s.size()));
    return g;
}

std::string serialize_graph6(const Graph& g) {
    std::string out;
    long long n = g.n();
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    std::vector<bool> bits;
    bits.reserve(static_cast<size_t>(n * (n - 1) / 2));
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) bits.push_back(g.has_edge(u, v));
    append_bits6(out, bits);
    return out;
}

Graph parse_graph(const std::string& text, GraphFormat fmt) {
    return fmt == GraphFormat::EdgeList ? parse_edge_list(text) : parse_graph6(text);
}

std::string serialize_graph(const Graph& g, GraphFormat fmt) {
    return fmt == GraphFormat::EdgeList ? serialize_edge_list(g) : serialize_graph6(g);
}

Graph load_graph_file(const std::string& path, GraphFormat fmt) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path, 0, 0);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str(), fmt);
}

}  // namespace mk
