#ifndef FPO_TEST_HELPERS_HPP
#define FPO_TEST_HELPERS_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <utility>
#include <vector>

#include "fpo/fpo.hpp"

namespace fpo_test {

inline fpo::Graph random_graph(int n, double p, std::mt19937& rng) {
    fpo::Graph g(n);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

inline fpo::BipartiteGraph random_bigraph(int p, int q, double prob, std::mt19937& rng) {
    fpo::BipartiteGraph g(p, q);
    std::bernoulli_distribution coin(prob);
    for (int u = 0; u < p; ++u)
        for (int v = 0; v < q; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

// Graph on n vertices whose edge set is the bits of `code` over pairs
// (u,v), u < v, in lexicographic pair order.
inline fpo::Graph graph_from_code(int n, unsigned long long code) {
    fpo::Graph g(n);
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if ((code >> bit) & 1) g.add_edge(u, v);
    return g;
}

inline fpo::BipartiteGraph bigraph_from_code(int p, int q, unsigned long long code) {
    fpo::BipartiteGraph g(p, q);
    int bit = 0;
    for (int u = 0; u < p; ++u)
        for (int v = 0; v < q; ++v, ++bit)
            if ((code >> bit) & 1) g.add_edge(u, v);
    return g;
}

// Unipartite pattern set from an 8-bit mask over the edge subsets of
// {12,13,23} (bit e set means the pattern with edge mask e is a member).
inline fpo::PatternSet pattern_set_from_mask(unsigned mask) {
    fpo::PatternSet f;
    f.kind = fpo::PatternSet::Kind::unipartite;
    for (unsigned e = 0; e < 8; ++e)
        if ((mask >> e) & 1) f.tri.push_back(fpo::TriPattern{static_cast<std::uint8_t>(e)});
    f.canonicalize();
    return f;
}

// Independent reference model for the pair-constraint digraph, built
// directly from the definition (order-invariant members included) with
// its own SCC pass, for cross-checking the engine.
struct RefDigraph {
    int n = 0;
    std::vector<std::vector<int>> out;  // pair id u*n+v
    std::vector<std::vector<int>> in;

    int id(int x, int y) const { return x * n + y; }

    void add(int a, int b) {
        out[a].push_back(b);
        in[b].push_back(a);
    }
};

inline RefDigraph ref_build(const fpo::Graph& h, const fpo::PatternSet& f) {
    RefDigraph g;
    g.n = h.n;
    g.out.assign(static_cast<std::size_t>(h.n) * h.n, {});
    g.in.assign(static_cast<std::size_t>(h.n) * h.n, {});
    bool wanted[8] = {};
    for (const fpo::TriPattern& p : f.tri) wanted[p.edges] = true;
    for (int x = 0; x < h.n; ++x)
        for (int y = 0; y < h.n; ++y)
            for (int z = 0; z < h.n; ++z) {
                if (x == y || x == z || y == z) continue;
                unsigned mask = 0;
                if (h.adjacent(x, y)) mask |= 1;
                if (h.adjacent(x, z)) mask |= 2;
                if (h.adjacent(y, z)) mask |= 4;
                if (wanted[mask]) {
                    g.add(g.id(x, y), g.id(z, y));
                    g.add(g.id(y, z), g.id(y, x));
                }
            }
    return g;
}

// Kosaraju over the reference digraph's valid pair ids.
inline std::vector<int> ref_scc(const RefDigraph& g) {
    int ns = g.n * g.n;
    std::vector<int> order;
    std::vector<std::uint8_t> seen(ns, 0);
    auto valid = [&](int id) { return id / g.n != id % g.n; };
    for (int root = 0; root < ns; ++root) {
        if (!valid(root) || seen[root]) continue;
        std::vector<std::pair<int, std::size_t>> st{{root, 0}};
        seen[root] = 1;
        while (!st.empty()) {
            auto& [v, next] = st.back();
            if (next < g.out[v].size()) {
                int w = g.out[v][next++];
                if (!seen[w]) {
                    seen[w] = 1;
                    st.push_back({w, 0});
                }
            } else {
                order.push_back(v);
                st.pop_back();
            }
        }
    }
    std::vector<int> comp(ns, -1);
    int nc = 0;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        if (comp[*it] != -1) continue;
        std::vector<int> st{*it};
        comp[*it] = nc;
        while (!st.empty()) {
            int v = st.back();
            st.pop_back();
            for (int w : g.in[v])
                if (comp[w] == -1) {
                    comp[w] = nc;
                    st.push_back(w);
                }
        }
        ++nc;
    }
    return comp;
}

// True iff some strong component of the reference digraph, with its pairs
// read as directed edges over the host vertices, contains a directed
// cycle.
inline bool ref_has_component_circuit(const fpo::Graph& h, const fpo::PatternSet& f) {
    RefDigraph g = ref_build(h, f);
    std::vector<int> comp = ref_scc(g);
    int nc = 0;
    for (int c : comp) nc = std::max(nc, c + 1);
    for (int c = 0; c < nc; ++c) {
        std::vector<std::vector<int>> adj(h.n);
        std::vector<int> indeg(h.n, 0);
        for (int id = 0; id < g.n * g.n; ++id)
            if (comp[id] == c) {
                adj[id / g.n].push_back(id % g.n);
                ++indeg[id % g.n];
            }
        // Kahn peeling; leftovers mean a cycle.
        std::vector<int> queue;
        int removed = 0, edges = 0;
        for (int v = 0; v < h.n; ++v)
            if (indeg[v] == 0) queue.push_back(v);
        for (const auto& a : adj) edges += static_cast<int>(a.size());
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            ++removed;
            for (int w : adj[v])
                if (--indeg[w] == 0) queue.push_back(w);
        }
        if (removed < h.n && edges > 0) {
            bool cyclic = false;
            for (int v = 0; v < h.n; ++v)
                if (indeg[v] > 0) cyclic = true;
            if (cyclic) return true;
        }
    }
    return false;
}

// Backtracking oracle: grows the ordering left to right and prunes as
// soon as the placed prefix contains an occurrence ending at the new
// vertex. Equivalent to scanning all permutations.
inline bool fast_orderable(const fpo::Graph& h, const fpo::PatternSet& f) {
    bool wanted[8] = {};
    for (const fpo::TriPattern& p : f.tri) wanted[p.edges] = true;
    std::vector<int> prefix;
    std::vector<std::uint8_t> used(h.n, 0);
    auto ok_extend = [&](int w) {
        int k = static_cast<int>(prefix.size());
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) {
                int u = prefix[i], v = prefix[j];
                unsigned mask = 0;
                if (h.adjacent(u, v)) mask |= 1;
                if (h.adjacent(u, w)) mask |= 2;
                if (h.adjacent(v, w)) mask |= 4;
                if (wanted[mask]) return false;
            }
        return true;
    };
    std::function<bool()> go = [&]() {
        if (static_cast<int>(prefix.size()) == h.n) return true;
        for (int w = 0; w < h.n; ++w) {
            if (used[w] || !ok_extend(w)) continue;
            used[w] = 1;
            prefix.push_back(w);
            if (go()) return true;
            prefix.pop_back();
            used[w] = 0;
        }
        return false;
    };
    return go();
}

// Labeled trees on n >= 1 vertices enumerated from all sequences of
// length n-2 over 0..n-1.
inline std::vector<fpo::Graph> all_trees(int n) {
    std::vector<fpo::Graph> out;
    if (n == 1) {
        out.push_back(fpo::Graph(1));
        return out;
    }
    if (n == 2) {
        fpo::Graph g(2);
        g.add_edge(0, 1);
        out.push_back(g);
        return out;
    }
    std::vector<int> seq(n - 2, 0);
    while (true) {
        std::vector<int> degree(n, 1);
        for (int v : seq) ++degree[v];
        fpo::Graph g(n);
        std::vector<int> deg = degree;
        std::vector<std::uint8_t> done(n, 0);
        for (int v : seq) {
            int leaf = -1;
            for (int u = 0; u < n; ++u)
                if (deg[u] == 1 && !done[u]) {
                    leaf = u;
                    break;
                }
            g.add_edge(leaf, v);
            done[leaf] = 1;
            --deg[v];
        }
        int a = -1, b = -1;
        for (int u = 0; u < n; ++u)
            if (deg[u] == 1 && !done[u]) (a == -1 ? a : b) = u;
        g.add_edge(a, b);
        out.push_back(g);
        int i = n - 3;
        while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
        if (i < 0) break;
        ++seq[i];
    }
    return out;
}

inline fpo::Graph cycle_graph(int n) {
    fpo::Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

inline fpo::Graph complete_graph(int n) {
    fpo::Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline fpo::Graph path_graph(int n) {
    fpo::Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

// Star K_{1,k} with the center at vertex 0.
inline fpo::Graph star_graph(int k) {
    fpo::Graph g(k + 1);
    for (int i = 1; i <= k; ++i) g.add_edge(0, i);
    return g;
}

// Bipartite 2k-cycle u0-v0-u1-v1-...-u_{k-1}-v_{k-1}-u0.
inline fpo::BipartiteGraph bipartite_cycle(int k) {
    fpo::BipartiteGraph g(k, k);
    for (int i = 0; i < k; ++i) {
        g.add_edge(i, i);
        g.add_edge((i + 1) % k, i);
    }
    return g;
}

}  // namespace fpo_test

#endif  // FPO_TEST_HELPERS_HPP
