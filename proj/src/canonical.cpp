#include "minorkit/canonical.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace minorkit {

namespace {

// Ordered partition of the vertex set; cells listed front to back.
using Cells = std::vector<std::vector<int>>;

// Split cells by neighbor counts against every cell until stable.
// Sub-cells are ordered by signature, so the result is label-independent.
void refine(const Graph& g, Cells& cells) {
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<std::uint64_t> masks(cells.size(), 0);
        for (std::size_t c = 0; c < cells.size(); ++c)
            for (int v : cells[c]) masks[c] |= 1ull << v;
        Cells next;
        next.reserve(cells.size());
        for (auto& cell : cells) {
            if (cell.size() == 1) {
                next.push_back(cell);
                continue;
            }
            std::map<std::vector<int>, std::vector<int>> by_sig;
            for (int v : cell) {
                std::vector<int> sig(cells.size());
                for (std::size_t c = 0; c < cells.size(); ++c)
                    sig[c] = std::popcount(g.row(v) & masks[c]);
                by_sig[sig].push_back(v);
            }
            if (by_sig.size() > 1) changed = true;
            for (auto& [sig, vs] : by_sig) next.push_back(vs);
        }
        cells = std::move(next);
    }
}

struct Search {
    const Graph& g;
    std::string best;  // packed upper-triangle bits of the best ordering so far
    bool have_best = false;

    explicit Search(const Graph& graph) : g(graph) {}

    std::string pack(const std::vector<int>& perm, int upto) const {
        // column-major upper-triangle bits over the first `upto` ordered vertices
        std::string out;
        int acc = 0, filled = 0;
        for (int j = 1; j < upto; ++j)
            for (int i = 0; i < j; ++i) {
                acc = (acc << 1) | (g.has_edge(perm[i], perm[j]) ? 1 : 0);
                if (++filled == 6) {
                    out.push_back(static_cast<char>(acc));
                    acc = 0;
                    filled = 0;
                }
            }
        if (filled) out.push_back(static_cast<char>(acc << (6 - filled)));
        return out;
    }

    void run(Cells cells) {
        refine(g, cells);
        std::size_t branch = cells.size();
        for (std::size_t c = 0; c < cells.size(); ++c)
            if (cells[c].size() > 1) {
                branch = c;
                break;
            }
        // prefix of singleton cells fixes a prefix of the bit string
        int fixed = static_cast<int>(branch == cells.size() ? cells.size() : branch);
        if (have_best && fixed > 1) {
            std::vector<int> perm(fixed);
            for (int i = 0; i < fixed; ++i) perm[i] = cells[i][0];
            std::string part = pack(perm, fixed);
            int kbits = fixed * (fixed - 1) / 2;
            int whole = kbits / 6;
            if (!part.empty() && !best.empty()) {
                int cmp = part.compare(0, whole, best, 0, whole);
                if (cmp == 0 && kbits % 6) {
                    int shift = 6 - kbits % 6;
                    int pa = static_cast<unsigned char>(part[whole]) >> shift;
                    int pb = static_cast<unsigned char>(best[whole]) >> shift;
                    cmp = pa - pb;
                }
                if (cmp > 0) return;  // cannot beat the current best
            }
        }
        if (branch == cells.size()) {
            std::vector<int> perm(cells.size());
            for (std::size_t i = 0; i < cells.size(); ++i) perm[i] = cells[i][0];
            std::string leaf = pack(perm, g.n());
            if (!have_best || leaf < best) {
                best = std::move(leaf);
                have_best = true;
            }
            return;
        }
        for (int v : cells[branch]) {
            Cells child;
            child.reserve(cells.size() + 1);
            for (std::size_t c = 0; c < cells.size(); ++c) {
                if (c != branch) {
                    child.push_back(cells[c]);
                    continue;
                }
                child.push_back({v});
                std::vector<int> rest;
                for (int w : cells[c])
                    if (w != v) rest.push_back(w);
                child.push_back(std::move(rest));
            }
            run(std::move(child));
        }
    }
};

std::string with_header(int n, const std::string& bits) {
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    for (char c : bits) out.push_back(static_cast<char>(c + 63));
    return out;
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
    int n = g.n();
    if (n <= 1) return encode_graph6(g);
    int mm = g.m();
    if (mm == 0 || mm == n * (n - 1) / 2) return encode_graph6(g);  // every ordering equal
    Search s(g);
    Cells start(1);
    for (int v = 0; v < n; ++v) start[0].push_back(v);
    s.run(std::move(start));
    return with_header(n, s.best);
}

bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.n() != b.n() || a.m() != b.m()) return false;
    std::vector<int> da, db;
    for (int v = 0; v < a.n(); ++v) da.push_back(a.degree(v));
    for (int v = 0; v < b.n(); ++v) db.push_back(b.degree(v));
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    return canonical_form(a) == canonical_form(b);
}

std::vector<Graph> dedup(const std::vector<Graph>& graphs) {
    std::map<CanonicalForm, Graph> by_canon;
    for (const Graph& g : graphs) by_canon.emplace(canonical_form(g), g);
    std::vector<Graph> out;
    out.reserve(by_canon.size());
    for (auto& [c, g] : by_canon) out.push_back(g);
    return out;
}

}  // namespace minorkit
