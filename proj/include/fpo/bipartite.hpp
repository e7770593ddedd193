#ifndef FPO_BIPARTITE_HPP
#define FPO_BIPARTITE_HPP

#include <numeric>
#include <optional>
#include <variant>
#include <vector>

#include "fpo/constraint_digraph.hpp"
#include "fpo/graph.hpp"
#include "fpo/pattern.hpp"
#include "fpo/solver.hpp"
#include "fpo/verdict.hpp"

namespace fpo {

namespace detail {

inline PriorityRule bipartite_rule(const BipartiteGraph& h, const PatternSet& active) {
    bool three_edge = false, one_edge = false;
    for (const BiPattern& p : active.bi) {
        if (p.u_arity == 2 && p.v_arity == 2) {
            if (p.edge_count() == 3) three_edge = true;
            if (p.edge_count() == 1) one_edge = true;
        }
    }
    // Common neighbor / non-neighbor of a same-side pair, by global ids.
    auto common = [&h](int x, int y, bool adjacent_to_both) {
        if (x < h.p) {
            for (int w = 0; w < h.q; ++w)
                if (h.adjacent(x, w) == adjacent_to_both && h.adjacent(y, w) == adjacent_to_both)
                    return true;
        } else {
            for (int w = 0; w < h.p; ++w)
                if (h.adjacent(w, x - h.p) == adjacent_to_both &&
                    h.adjacent(w, y - h.p) == adjacent_to_both)
                    return true;
        }
        return false;
    };
    PriorityRule rule;
    if (three_edge) {
        rule.active = true;
        rule.pair_preferred = [common](int x, int y) { return common(x, y, true); };
    } else if (one_edge) {
        rule.active = true;
        rule.pair_preferred = [common](int x, int y) { return common(x, y, false); };
    }
    return rule;
}

}  // namespace detail

/// Decides whether h admits per-side orderings avoiding every member of f.
inline BiVerdict solve_bord4(const BipartiteGraph& h, const PatternSet& f) {
    if (f.kind != PatternSet::Kind::bipartite)
        throw std::invalid_argument("solve_bord4 needs a bipartite pattern set");

    PatternSet active;
    active.kind = PatternSet::Kind::bipartite;
    for (const BiPattern& p : f.bi) {
        if (p.order_invariant()) {
            if (auto occ = find_order_invariant_occurrence(h, p))
                return InvariantCertificate{p, occ->u_vertices, occ->v_vertices};
        } else if (!p.supported_constraint_shape()) {
            throw std::invalid_argument("unsupported bipartite pattern shape: " + p.to_string());
        } else {
            active.bi.push_back(p);
        }
    }
    active.canonicalize();
    if (active.bi.empty()) {
        BiOrdering identity;
        identity.u_order.resize(h.p);
        identity.v_order.resize(h.q);
        std::iota(identity.u_order.begin(), identity.u_order.end(), 0);
        std::iota(identity.v_order.begin(), identity.v_order.end(), 0);
        return identity;
    }

    ConstraintDigraph g = build_bi(h, active);
    ComponentDecomposition dc = strong_components(g);
    auto result = detail::run_decision_loop(g, dc, detail::bipartite_rule(h, active));
    if (auto* cert = std::get_if<CircuitCertificate>(&result)) return *cert;

    std::vector<PairNode> u_pairs, v_pairs;
    for (int id : std::get<std::vector<int>>(result)) {
        PairNode p = g.pair_of(id);
        if (p.first < h.p)
            u_pairs.push_back(p);
        else
            v_pairs.push_back({p.first - h.p, p.second - h.p});
    }
    BiOrdering out;
    out.u_order = extract_ordering(u_pairs, h.p);
    out.v_order = extract_ordering(v_pairs, h.q);
    return out;
}

/// Same-side pair with both orientations in one strong component; the
/// node universe of the bipartite H+ makes the side restriction automatic.
inline std::optional<PairNode> find_bi_invertible_pair(const ConstraintDigraph& g) {
    return find_invertible_pair(g);
}

}  // namespace fpo

#endif  // FPO_BIPARTITE_HPP
