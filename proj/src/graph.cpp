#include "minorkit/graph.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace minorkit {

namespace {

void check_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.n()) throw std::out_of_range("vertex label out of range");
}

std::uint64_t to_mask(const Graph& g, const std::vector<int>& vs) {
    std::uint64_t m = 0;
    for (int v : vs) {
        check_vertex(g, v);
        m |= 1ull << v;
    }
    return m;
}

// keep vertices of `keep_mask`, relabeled by order-preserving compaction
Graph compact(const Graph& g, std::uint64_t keep_mask) {
    std::array<int, kMaxVertices> newlab{};
    int k = 0;
    for (int v = 0; v < g.n(); ++v)
        if ((keep_mask >> v) & 1) newlab[v] = k++;
    Graph out = empty(k);
    for (auto [u, v] : g.edges())
        if (((keep_mask >> u) & 1) && ((keep_mask >> v) & 1))
            out.set_edge(newlab[u], newlab[v], true);
    return out;
}

}  // namespace

Graph::Graph(int n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    if (n > kMaxVertices) throw std::length_error("graph capacity is 64 vertices");
    n_ = n;
}

int Graph::m() const {
    int total = 0;
    for (int v = 0; v < n_; ++v) total += std::popcount(rows_[v]);
    return total / 2;
}

std::uint64_t Graph::vertex_mask() const {
    return n_ == kMaxVertices ? ~0ull : ((1ull << n_) - 1);
}

int Graph::degree(int v) const { return std::popcount(rows_[v]); }

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    std::uint64_t r = rows_[v];
    while (r) {
        int u = std::countr_zero(r);
        out.push_back(u);
        r &= r - 1;
    }
    return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u) {
        std::uint64_t r = rows_[u] >> (u + 1) << (u + 1);
        while (r) {
            int v = std::countr_zero(r);
            out.emplace_back(u, v);
            r &= r - 1;
        }
    }
    return out;
}

void Graph::set_edge(int u, int v, bool present) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) throw std::out_of_range("vertex label out of range");
    if (u == v) throw std::invalid_argument("loops are not allowed");
    if (present) {
        rows_[u] |= 1ull << v;
        rows_[v] |= 1ull << u;
    } else {
        rows_[u] &= ~(1ull << v);
        rows_[v] &= ~(1ull << u);
    }
}

bool Graph::operator==(const Graph& o) const {
    if (n_ != o.n_) return false;
    for (int v = 0; v < n_; ++v)
        if (rows_[v] != o.rows_[v]) return false;
    return true;
}

Graph empty(int n) { return Graph(n); }

Graph add_edge(const Graph& g, int u, int v) {
    Graph out = g;
    out.set_edge(u, v, true);
    return out;
}

Graph delete_edge(const Graph& g, int u, int v) {
    check_vertex(g, u);
    check_vertex(g, v);
    if (u == v || !g.has_edge(u, v)) throw std::invalid_argument("edge absent");
    Graph out = g;
    out.set_edge(u, v, false);
    return out;
}

Graph delete_vertex(const Graph& g, int v) {
    check_vertex(g, v);
    return compact(g, g.vertex_mask() & ~(1ull << v));
}

Graph contract_edge(const Graph& g, int u, int v) {
    check_vertex(g, u);
    check_vertex(g, v);
    if (u == v || !g.has_edge(u, v)) throw std::invalid_argument("edge absent");
    int a = u < v ? u : v, b = u < v ? v : u;
    Graph merged = g;
    for (int w : g.neighbors(b))
        if (w != a) merged.set_edge(a, w, true);
    return compact(merged, merged.vertex_mask() & ~(1ull << b));
}

Graph split_vertex(const Graph& g, int v, const std::vector<int>& xs, const std::vector<int>& ys) {
    check_vertex(g, v);
    if (g.n() + 1 > kMaxVertices) throw std::length_error("graph capacity is 64 vertices");
    if (g.degree(v) < 4) throw std::invalid_argument("split requires degree at least 4");
    std::uint64_t xm = to_mask(g, xs), ym = to_mask(g, ys);
    std::uint64_t nb = g.row(v);
    if ((xm | ym) != nb || (xm & ~nb) || (ym & ~nb))
        throw std::invalid_argument("split sides must cover the neighborhood exactly");
    if (std::popcount(xm) < 2 || std::popcount(ym) < 2)
        throw std::invalid_argument("each split side needs at least 2 vertices");

    Graph out = empty(g.n() + 1);
    int y = g.n();
    for (auto [a, b] : g.edges())
        if (a != v && b != v) out.set_edge(a, b, true);
    for (int w : g.neighbors(v)) {
        if ((xm >> w) & 1) out.set_edge(v, w, true);
        if ((ym >> w) & 1) out.set_edge(y, w, true);
    }
    out.set_edge(v, y, true);
    return out;
}

namespace {

int bit_count_upper(int n) { return n * (n - 1) / 2; }

}  // namespace

std::string encode_graph6(const Graph& g) {
    int n = g.n();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int nbits = bit_count_upper(n);
    int acc = 0, filled = 0;
    int pos = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
            ++pos;
        }
    (void)nbits;
    if (filled) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

Graph decode_graph6(const std::string& s0) {
    const std::string header = ">>graph6<<";
    const std::string s = s0.rfind(header, 0) == 0 ? s0.substr(header.size()) : s0;
    for (char c : s)
        if (c < 63 || c > 126) throw std::invalid_argument("graph6 character out of range");
    std::size_t idx = 0;
    int n;
    if (s.empty()) throw std::invalid_argument("empty graph6 string");
    if (s[0] == '~') {
        if (s.size() < 4) throw std::invalid_argument("truncated graph6 header");
        if (s[1] == '~') throw std::invalid_argument("graph6 order exceeds capacity");
        n = ((s[1] - 63) << 12) | ((s[2] - 63) << 6) | (s[3] - 63);
        idx = 4;
    } else {
        n = s[0] - 63;
        idx = 1;
    }
    if (n > kMaxVertices) throw std::invalid_argument("graph6 order exceeds capacity");
    int nbits = bit_count_upper(n);
    std::size_t expect = idx + (nbits + 5) / 6;
    if (s.size() != expect) throw std::invalid_argument("graph6 length mismatch");
    Graph g = empty(n);
    int pos = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            int c = s[idx + pos / 6] - 63;
            if ((c >> (5 - pos % 6)) & 1) g.set_edge(i, j, true);
            ++pos;
        }
    if (nbits % 6) {
        int c = s[expect - 1] - 63;
        if (c & ((1 << (6 - nbits % 6)) - 1)) throw std::invalid_argument("graph6 padding bits set");
    }
    return g;
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.n() << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

Graph from_edge_list(const std::string& text) {
    std::istringstream in(text);
    long long n, m;
    if (!(in >> n >> m)) throw std::invalid_argument("edge list: missing header");
    if (n < 0 || n > kMaxVertices) throw std::invalid_argument("edge list: bad vertex count");
    if (m < 0) throw std::invalid_argument("edge list: bad edge count");
    Graph g = empty(static_cast<int>(n));
    for (long long k = 0; k < m; ++k) {
        long long u, v;
        if (!(in >> u >> v)) throw std::invalid_argument("edge list: missing edges");
        if (u < 0 || u >= n || v < 0 || v >= n || u == v)
            throw std::invalid_argument("edge list: bad edge");
        if (g.has_edge(static_cast<int>(u), static_cast<int>(v)))
            throw std::invalid_argument("edge list: duplicate edge");
        g.set_edge(static_cast<int>(u), static_cast<int>(v), true);
    }
    long long trail;
    if (in >> trail) throw std::invalid_argument("edge list: trailing data");
    return g;
}

std::string to_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) == 0) out << "  " << v << ";\n";
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

Graph parse_graph_text(const std::string& text) {
    std::size_t a = text.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) throw std::invalid_argument("empty graph text");
    std::size_t b = text.find_last_not_of(" \t\r\n");
    std::string body = text.substr(a, b - a + 1);
    // edge-list inputs start with an "n m" line; graph6 is a single token
    // (decode_graph6 strips the optional >>graph6<< prefix itself)
    std::size_t eol = body.find('\n');
    std::string first = body.substr(0, eol);
    if (first.find(' ') != std::string::npos) return from_edge_list(body);
    return decode_graph6(first);
}

}  // namespace minorkit
