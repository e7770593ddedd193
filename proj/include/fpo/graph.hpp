#ifndef FPO_GRAPH_HPP
#define FPO_GRAPH_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "fpo/pattern.hpp"

namespace fpo {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line)
        : std::runtime_error(msg + " at line " + std::to_string(line)), line_number(line) {}
    int line_number;
};

/// Simple undirected graph on vertex ids 0..n-1, dense adjacency.
struct Graph {
    int n = 0;
    long long m = 0;
    std::vector<std::uint8_t> adj;  // n*n, symmetric, irreflexive

    explicit Graph(int n_ = 0) : n(n_), adj(static_cast<std::size_t>(n_) * n_, 0) {}

    bool adjacent(int u, int v) const { return adj[static_cast<std::size_t>(u) * n + v] != 0; }

    void add_edge(int u, int v) {
        if (u == v) throw std::invalid_argument("self-loop");
        if (!adjacent(u, v)) {
            adj[static_cast<std::size_t>(u) * n + v] = 1;
            adj[static_cast<std::size_t>(v) * n + u] = 1;
            ++m;
        }
    }
};

/// Bipartite graph with U-vertices 0..p-1 and V-vertices 0..q-1 in
/// separate id spaces; edges only between the sides.
struct BipartiteGraph {
    int p = 0;
    int q = 0;
    long long m = 0;
    std::vector<std::uint8_t> adj;  // p*q

    BipartiteGraph(int p_ = 0, int q_ = 0)
        : p(p_), q(q_), adj(static_cast<std::size_t>(p_) * q_, 0) {}

    bool adjacent(int u, int v) const { return adj[static_cast<std::size_t>(u) * q + v] != 0; }

    void add_edge(int u, int v) {
        if (!adjacent(u, v)) {
            adj[static_cast<std::size_t>(u) * q + v] = 1;
            ++m;
        }
    }
};

namespace detail {

struct LineReader {
    std::istringstream in;
    int line_number = 0;
    explicit LineReader(const std::string& text) : in(text) {}

    // Next non-comment, non-blank line, or nullopt at end of input.
    std::optional<std::string> next() {
        std::string line;
        while (std::getline(in, line)) {
            ++line_number;
            std::string t = trim(line);
            if (t.empty() || t[0] == '#') continue;
            return t;
        }
        return std::nullopt;
    }
};

inline std::vector<long long> parse_ints(const std::string& line, std::size_t count, int line_number) {
    std::istringstream is(line);
    std::vector<long long> vals;
    long long v;
    while (is >> v) vals.push_back(v);
    std::string rest;
    if (is.bad() || (is.clear(), is >> rest))
        throw ParseError("malformed line '" + line + "'", line_number);
    if (vals.size() != count)
        throw ParseError("expected " + std::to_string(count) + " integers, got " +
                             std::to_string(vals.size()),
                         line_number);
    return vals;
}

}  // namespace detail

/// Parses "n m" followed by edge lines "u v". '#' lines are comments;
/// duplicate edges collapse.
inline Graph parse_graph(const std::string& text) {
    detail::LineReader rd(text);
    auto header = rd.next();
    if (!header) throw ParseError("missing 'n m' header", rd.line_number);
    auto hv = detail::parse_ints(*header, 2, rd.line_number);
    if (hv[0] < 0) throw ParseError("negative vertex count", rd.line_number);
    Graph g(static_cast<int>(hv[0]));
    while (auto line = rd.next()) {
        auto ev = detail::parse_ints(*line, 2, rd.line_number);
        long long u = ev[0], v = ev[1];
        if (u < 0 || u >= g.n || v < 0 || v >= g.n)
            throw ParseError("vertex id out of range", rd.line_number);
        if (u == v) throw ParseError("self-loop", rd.line_number);
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    return g;
}

/// Parses "p q m" followed by edge lines "u v" with u on the U side and v
/// on the V side.
inline BipartiteGraph parse_bigraph(const std::string& text) {
    detail::LineReader rd(text);
    auto header = rd.next();
    if (!header) throw ParseError("missing 'p q m' header", rd.line_number);
    auto hv = detail::parse_ints(*header, 3, rd.line_number);
    if (hv[0] < 0 || hv[1] < 0) throw ParseError("negative vertex count", rd.line_number);
    BipartiteGraph g(static_cast<int>(hv[0]), static_cast<int>(hv[1]));
    while (auto line = rd.next()) {
        auto ev = detail::parse_ints(*line, 2, rd.line_number);
        long long u = ev[0], v = ev[1];
        if (u < 0 || u >= g.p) throw ParseError("U vertex id out of range", rd.line_number);
        if (v < 0 || v >= g.q) throw ParseError("V vertex id out of range", rd.line_number);
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    return g;
}

inline Graph complement(const Graph& g) {
    Graph out(g.n);
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (!g.adjacent(u, v)) out.add_edge(u, v);
    return out;
}

inline std::optional<std::array<int, 3>> find_independent_triple(const Graph& g) {
    for (int a = 0; a < g.n; ++a)
        for (int b = a + 1; b < g.n; ++b) {
            if (g.adjacent(a, b)) continue;
            for (int c = b + 1; c < g.n; ++c)
                if (!g.adjacent(a, c) && !g.adjacent(b, c)) return std::array{a, b, c};
        }
    return std::nullopt;
}

inline std::optional<std::array<int, 3>> find_triangle(const Graph& g) {
    for (int a = 0; a < g.n; ++a)
        for (int b = a + 1; b < g.n; ++b) {
            if (!g.adjacent(a, b)) continue;
            for (int c = b + 1; c < g.n; ++c)
                if (g.adjacent(a, c) && g.adjacent(b, c)) return std::array{a, b, c};
        }
    return std::nullopt;
}

namespace detail {

// Enumerates ascending k-subsets of 0..n-1 until fn returns true.
template <typename Fn>
bool for_each_combination(int n, int k, Fn&& fn) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    if (k > n) return false;
    if (k == 0) return fn(idx);
    while (true) {
        if (fn(idx)) return true;
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return false;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace detail

/// Searches for an induced occurrence of an order-invariant pattern; the
/// returned vertex set induces it under any slot assignment. Rejects
/// patterns that are not order-invariant.
inline std::optional<std::array<int, 3>> find_order_invariant_occurrence(const Graph& g,
                                                                         TriPattern pat) {
    if (!pat.order_invariant())
        throw std::invalid_argument("pattern is not order-invariant: " + pat.to_string());
    if (pat.edges == 0) {
        if (auto t = find_independent_triple(g)) return t;
        return std::nullopt;
    }
    return find_triangle(g);
}

struct BiOccurrence {
    std::vector<int> u_vertices;
    std::vector<int> v_vertices;
};

inline std::optional<BiOccurrence> find_order_invariant_occurrence(const BipartiteGraph& g,
                                                                   const BiPattern& pat) {
    if (!pat.order_invariant())
        throw std::invalid_argument("pattern is not order-invariant: " + pat.to_string());
    std::optional<BiOccurrence> found;
    detail::for_each_combination(g.p, pat.u_arity, [&](const std::vector<int>& us) {
        return detail::for_each_combination(g.q, pat.v_arity, [&](const std::vector<int>& vs) {
            for (int i = 1; i <= pat.u_arity; ++i)
                for (int j = 1; j <= pat.v_arity; ++j)
                    if (g.adjacent(us[i - 1], vs[j - 1]) != pat.has(i, j)) return false;
            found = BiOccurrence{us, vs};
            return true;
        });
    });
    return found;
}

}  // namespace fpo

#endif  // FPO_GRAPH_HPP
