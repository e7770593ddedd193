#ifndef FPO_CONSTRAINT_DIGRAPH_HPP
#define FPO_CONSTRAINT_DIGRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fpo/graph.hpp"
#include "fpo/pattern.hpp"

namespace fpo {

/// An ordered pair of distinct host vertices (global ids; bipartite
/// V-vertices are offset by the U count).
struct PairNode {
    int first;
    int second;
    bool operator==(const PairNode&) const = default;
};

/// The constraint digraph H+ on ordered vertex pairs. An arc
/// (x,y) -> (x',y') means "if x precedes y then x' must precede y'".
/// Pair ids are first*n + second for the unipartite case; bipartite
/// V-side pairs are offset by p*p.
class ConstraintDigraph {
public:
    static ConstraintDigraph for_graph(int n) {
        ConstraintDigraph g;
        g.u_ = n;
        return g;
    }

    static ConstraintDigraph for_bigraph(int p, int q) {
        ConstraintDigraph g;
        g.u_ = p;
        g.v_ = q;
        g.bip_ = true;
        return g;
    }

    bool is_bipartite() const { return bip_; }
    int u_count() const { return u_; }
    int v_count() const { return v_; }
    int total_vertices() const { return u_ + v_; }
    int side_of(int vertex) const { return bip_ && vertex >= u_ ? 1 : 0; }

    int id_space() const { return u_ * u_ + v_ * v_; }

    bool valid_id(int id) const {
        if (id < 0 || id >= id_space()) return false;
        PairNode p = pair_of(id);
        return p.first != p.second;
    }

    int pair_id(int x, int y) const {
        if (bip_ && x >= u_) return u_ * u_ + (x - u_) * v_ + (y - u_);
        return x * u_ + y;
    }

    PairNode pair_of(int id) const {
        if (bip_ && id >= u_ * u_) {
            int r = id - u_ * u_;
            return {u_ + r / v_, u_ + r % v_};
        }
        return {id / u_, id % u_};
    }

    int dual(int id) const {
        PairNode p = pair_of(id);
        return pair_id(p.second, p.first);
    }

    std::vector<int> node_ids() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(u_) * (u_ - 1) +
                    (v_ > 0 ? static_cast<std::size_t>(v_) * (v_ - 1) : 0));
        for (int id = 0; id < id_space(); ++id)
            if (valid_id(id)) out.push_back(id);
        return out;
    }

    void add_arc(int from, int to) { arc_buf_.emplace_back(from, to); }

    void add_occurrence_arcs_tri(int x, int y, int z) {
        // x < y < z induces a forbidden pattern: arcs (x,y)->(z,y) and
        // (y,z)->(y,x).
        add_arc(pair_id(x, y), pair_id(z, y));
        add_arc(pair_id(y, z), pair_id(y, x));
    }

    void finalize() {
        std::sort(arc_buf_.begin(), arc_buf_.end());
        arc_buf_.erase(std::unique(arc_buf_.begin(), arc_buf_.end()), arc_buf_.end());
        off_.assign(id_space() + 1, 0);
        for (const auto& [from, to] : arc_buf_) ++off_[from + 1];
        for (int i = 0; i < id_space(); ++i) off_[i + 1] += off_[i];
        tgt_.resize(arc_buf_.size());
        for (std::size_t k = 0; k < arc_buf_.size(); ++k) tgt_[k] = arc_buf_[k].second;
        arc_buf_.clear();
        arc_buf_.shrink_to_fit();
        finalized_ = true;
    }

    std::span<const int> out(int id) const {
        return std::span<const int>(tgt_).subspan(off_[id], off_[id + 1] - off_[id]);
    }

    std::size_t arc_count() const { return tgt_.size(); }

    void dump(std::ostream& os) const {
        auto name = [this](int vertex) {
            if (!bip_) return std::to_string(vertex);
            return vertex < u_ ? "u" + std::to_string(vertex) : "v" + std::to_string(vertex - u_);
        };
        for (int id = 0; id < id_space(); ++id) {
            if (off_.empty()) break;
            PairNode a = pair_of(id);
            for (int to : out(id)) {
                PairNode b = pair_of(to);
                os << name(a.first) << ',' << name(a.second) << " -> " << name(b.first) << ','
                   << name(b.second) << '\n';
            }
        }
    }

private:
    int u_ = 0, v_ = 0;
    bool bip_ = false;
    std::vector<std::pair<int, int>> arc_buf_;
    std::vector<std::size_t> off_;
    std::vector<int> tgt_;
    bool finalized_ = false;
};

/// Builds H+ for a graph and a set of 3-patterns. Order-invariant members
/// must have been removed by preprocessing.
inline ConstraintDigraph build_tri(const Graph& h, const PatternSet& f) {
    if (f.kind != PatternSet::Kind::unipartite)
        throw std::invalid_argument("build_tri needs a unipartite pattern set");
    bool wanted[8] = {};
    for (const TriPattern& p : f.tri) {
        if (p.order_invariant())
            throw std::invalid_argument("order-invariant pattern must be removed before build: " +
                                        p.to_string());
        wanted[p.edges] = true;
    }
    ConstraintDigraph g = ConstraintDigraph::for_graph(h.n);
    for (int x = 0; x < h.n; ++x)
        for (int y = 0; y < h.n; ++y) {
            if (y == x) continue;
            bool xy = h.adjacent(x, y);
            for (int z = 0; z < h.n; ++z) {
                if (z == x || z == y) continue;
                std::uint8_t mask = 0;
                if (xy) mask |= TriPattern::E12;
                if (h.adjacent(x, z)) mask |= TriPattern::E13;
                if (h.adjacent(y, z)) mask |= TriPattern::E23;
                if (wanted[mask]) g.add_occurrence_arcs_tri(x, y, z);
            }
        }
    g.finalize();
    return g;
}

/// Builds the bipartite H+ over same-side pairs. Members must be of the
/// constraint shapes (3,1), (1,3) or (2,2), with order-invariant members
/// removed.
inline ConstraintDigraph build_bi(const BipartiteGraph& h, const PatternSet& f) {
    if (f.kind != PatternSet::Kind::bipartite)
        throw std::invalid_argument("build_bi needs a bipartite pattern set");
    ConstraintDigraph g = ConstraintDigraph::for_bigraph(h.p, h.q);
    for (const BiPattern& pat : f.bi) {
        if (pat.order_invariant())
            throw std::invalid_argument("order-invariant pattern must be removed before build: " +
                                        pat.to_string());
        if (pat.u_arity == 3 || pat.v_arity == 3) {
            // Triple on one side plus an unordered witness on the other.
            bool on_u = pat.u_arity == 3;
            int side_n = on_u ? h.p : h.q;
            int other_n = on_u ? h.q : h.p;
            auto adj = [&](int s, int w) { return on_u ? h.adjacent(s, w) : h.adjacent(w, s); };
            auto slot_edge = [&](int slot) { return on_u ? pat.has(slot, 1) : pat.has(1, slot); };
            int offset = on_u ? 0 : h.p;
            for (int x = 0; x < side_n; ++x)
                for (int y = 0; y < side_n; ++y) {
                    if (y == x) continue;
                    for (int z = 0; z < side_n; ++z) {
                        if (z == x || z == y) continue;
                        bool occurs = false;
                        for (int w = 0; w < other_n && !occurs; ++w)
                            occurs = adj(x, w) == slot_edge(1) && adj(y, w) == slot_edge(2) &&
                                     adj(z, w) == slot_edge(3);
                        if (occurs) {
                            g.add_arc(g.pair_id(offset + x, offset + y),
                                      g.pair_id(offset + z, offset + y));
                            g.add_arc(g.pair_id(offset + y, offset + z),
                                      g.pair_id(offset + y, offset + x));
                        }
                    }
                }
        } else {
            // (2,2): U pair (a,b) as slots 1,2 and V pair (c,d) as slots
            // 1',2'. An occurrence a<b, c<d forbids both orders holding at
            // once: (a,b) -> (d,c) and (c,d) -> (b,a).
            for (int a = 0; a < h.p; ++a)
                for (int b = 0; b < h.p; ++b) {
                    if (b == a) continue;
                    for (int c = 0; c < h.q; ++c)
                        for (int d = 0; d < h.q; ++d) {
                            if (d == c) continue;
                            if (h.adjacent(a, c) != pat.has(1, 1)) continue;
                            if (h.adjacent(a, d) != pat.has(1, 2)) continue;
                            if (h.adjacent(b, c) != pat.has(2, 1)) continue;
                            if (h.adjacent(b, d) != pat.has(2, 2)) continue;
                            g.add_arc(g.pair_id(a, b), g.pair_id(h.p + d, h.p + c));
                            g.add_arc(g.pair_id(h.p + c, h.p + d), g.pair_id(b, a));
                        }
                }
        }
    }
    g.finalize();
    return g;
}

/// Strong components of H+ with the condensation and the dual pairing.
struct ComponentDecomposition {
    std::vector<int> comp_of;                 // pair id -> component, -1 for invalid ids
    std::vector<std::vector<int>> members;    // component -> sorted pair ids
    std::vector<int> dual_comp;               // involution over components
    std::vector<std::vector<int>> comp_succ;  // condensation arcs, deduplicated
    std::vector<std::vector<int>> comp_pred;
    std::vector<int> topo;                    // components, sources first

    int component_count() const { return static_cast<int>(members.size()); }
    bool trivial(int c) const { return members[c].size() == 1; }
    bool original_sink(int c) const { return comp_succ[c].empty(); }
};

namespace detail {

// Iterative Tarjan over the valid pair ids, optionally restricted to a
// node mask. Emits components in reverse topological order.
inline void tarjan_scc(const ConstraintDigraph& g, const std::vector<std::uint8_t>* mask,
                       std::vector<int>& comp_of, std::vector<std::vector<int>>& members) {
    int ns = g.id_space();
    comp_of.assign(ns, -1);
    members.clear();
    std::vector<int> index(ns, -1), low(ns, 0);
    std::vector<std::uint8_t> on_stack(ns, 0);
    std::vector<int> stack;
    struct Frame {
        int node;
        std::size_t next;
    };
    std::vector<Frame> call;
    int counter = 0;
    auto active = [&](int id) {
        return g.valid_id(id) && (!mask || (*mask)[id]);
    };
    for (int root = 0; root < ns; ++root) {
        if (!active(root) || index[root] != -1) continue;
        call.push_back({root, 0});
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!call.empty()) {
            Frame& f = call.back();
            auto succ = g.out(f.node);
            bool descended = false;
            while (f.next < succ.size()) {
                int w = succ[f.next++];
                if (!active(w)) continue;
                if (index[w] == -1) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    call.push_back({w, 0});
                    descended = true;
                    break;
                }
                if (on_stack[w]) low[f.node] = std::min(low[f.node], index[w]);
            }
            if (descended) continue;
            int v = f.node;
            call.pop_back();
            if (low[v] == index[v]) {
                std::vector<int> comp;
                while (true) {
                    int w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    comp_of[w] = static_cast<int>(members.size());
                    comp.push_back(w);
                    if (w == v) break;
                }
                std::sort(comp.begin(), comp.end());
                members.push_back(std::move(comp));
            }
            if (!call.empty()) low[call.back().node] = std::min(low[call.back().node], low[v]);
        }
    }
}

}  // namespace detail

inline ComponentDecomposition strong_components(const ConstraintDigraph& g) {
    ComponentDecomposition dc;
    detail::tarjan_scc(g, nullptr, dc.comp_of, dc.members);
    int nc = dc.component_count();
    dc.dual_comp.assign(nc, -1);
    for (int c = 0; c < nc; ++c) {
        int d = dc.comp_of[g.dual(dc.members[c].front())];
        dc.dual_comp[c] = d;
    }
    // Condensation arcs, deduplicated.
    dc.comp_succ.assign(nc, {});
    dc.comp_pred.assign(nc, {});
    std::vector<std::pair<int, int>> carcs;
    for (int c = 0; c < nc; ++c)
        for (int id : dc.members[c])
            for (int to : g.out(id))
                if (dc.comp_of[to] != c) carcs.emplace_back(c, dc.comp_of[to]);
    std::sort(carcs.begin(), carcs.end());
    carcs.erase(std::unique(carcs.begin(), carcs.end()), carcs.end());
    for (const auto& [a, b] : carcs) {
        dc.comp_succ[a].push_back(b);
        dc.comp_pred[b].push_back(a);
    }
    // Tarjan emits components in reverse topological order.
    dc.topo.resize(nc);
    for (int c = 0; c < nc; ++c) dc.topo[c] = nc - 1 - c;
    return dc;
}

/// A cyclic chain of pairs (v0,v1),(v1,v2),...,(vk,v0) over host vertices.
struct Circuit {
    std::vector<int> vertices;  // cyclic; k+1 >= 2 entries

    std::size_t pair_count() const { return vertices.size(); }
    PairNode pair(std::size_t i) const {
        return {vertices[i], vertices[(i + 1) % vertices.size()]};
    }
};

/// Interprets each pair (a,b) as a directed edge a -> b over the host
/// vertices and returns a directed cycle if one exists.
inline std::optional<Circuit> find_circuit(const ConstraintDigraph& g,
                                           const std::vector<int>& pair_ids) {
    int n = g.total_vertices();
    std::vector<std::vector<int>> adj(n);
    for (int id : pair_ids) {
        PairNode p = g.pair_of(id);
        adj[p.first].push_back(p.second);
    }
    std::vector<std::int8_t> color(n, 0);  // 0 white, 1 on path, 2 done
    std::vector<int> path;
    struct Frame {
        int v;
        std::size_t next;
    };
    for (int root = 0; root < n; ++root) {
        if (color[root] != 0) continue;
        std::vector<Frame> st{{root, 0}};
        color[root] = 1;
        path.push_back(root);
        while (!st.empty()) {
            Frame& f = st.back();
            if (f.next < adj[f.v].size()) {
                int w = adj[f.v][f.next++];
                if (color[w] == 1) {
                    // Cycle: slice the current path from w.
                    auto it = std::find(path.begin(), path.end(), w);
                    return Circuit{std::vector<int>(it, path.end())};
                }
                if (color[w] == 0) {
                    color[w] = 1;
                    path.push_back(w);
                    st.push_back({w, 0});
                }
            } else {
                color[f.v] = 2;
                path.pop_back();
                st.pop_back();
            }
        }
    }
    return std::nullopt;
}

/// All nodes reachable from the seed along arcs, including the seed.
inline std::vector<int> outsection(const ConstraintDigraph& g, const std::vector<int>& seed) {
    std::vector<std::uint8_t> seen(g.id_space(), 0);
    std::vector<int> queue = seed, out;
    for (int id : seed) seen[id] = 1;
    while (!queue.empty()) {
        int id = queue.back();
        queue.pop_back();
        out.push_back(id);
        for (int to : g.out(id))
            if (!seen[to]) {
                seen[to] = 1;
                queue.push_back(to);
            }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// All nodes that can reach the seed. The construction emits arcs in dual
/// pairs (a -> b iff dual(b) -> dual(a)), so the insection is the dual
/// image of the outsection of the dual seed.
inline std::vector<int> insection(const ConstraintDigraph& g, const std::vector<int>& seed) {
    std::vector<int> dual_seed;
    dual_seed.reserve(seed.size());
    for (int id : seed) dual_seed.push_back(g.dual(id));
    std::vector<int> out = outsection(g, dual_seed);
    for (int& id : out) id = g.dual(id);
    std::sort(out.begin(), out.end());
    return out;
}

/// Strong components of the sub-digraph induced on undecided nodes that
/// have no arc toward another undecided node outside themselves. `decided`
/// is D together with its dual.
inline std::vector<std::vector<int>> green_components(const ConstraintDigraph& g,
                                                      const std::vector<int>& decided) {
    std::vector<std::uint8_t> mask(g.id_space(), 1);
    for (int id : decided) mask[id] = 0;
    std::vector<int> comp_of;
    std::vector<std::vector<int>> members;
    detail::tarjan_scc(g, &mask, comp_of, members);
    std::vector<std::vector<int>> greens;
    for (std::size_t c = 0; c < members.size(); ++c) {
        bool sink = true;
        for (int id : members[c]) {
            for (int to : g.out(id))
                if (mask[to] && comp_of[to] != static_cast<int>(c)) {
                    sink = false;
                    break;
                }
            if (!sink) break;
        }
        if (sink) greens.push_back(members[c]);
    }
    return greens;
}

}  // namespace fpo

#endif  // FPO_CONSTRAINT_DIGRAPH_HPP
