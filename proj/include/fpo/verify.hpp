#ifndef FPO_VERIFY_HPP
#define FPO_VERIFY_HPP

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "fpo/constraint_digraph.hpp"
#include "fpo/graph.hpp"
#include "fpo/pattern.hpp"
#include "fpo/verdict.hpp"

namespace fpo {

/// A matched forbidden pattern together with the vertex tuple realizing
/// it, listed in ascending position order per side.
struct Violation {
    std::variant<TriPattern, BiPattern> pattern;
    std::vector<int> u_vertices;
    std::vector<int> v_vertices;
};

namespace detail {

inline void require_permutation(const std::vector<int>& order, int n, const char* what) {
    if (static_cast<int>(order.size()) != n)
        throw std::invalid_argument(std::string(what) + ": wrong length");
    std::vector<std::uint8_t> seen(n, 0);
    for (int v : order) {
        if (v < 0 || v >= n || seen[v])
            throw std::invalid_argument(std::string(what) + ": not a permutation");
        seen[v] = 1;
    }
}

}  // namespace detail

/// Scans all position-ascending triples of the ordering against every
/// member of f; returns the first violation found.
inline std::optional<Violation> check_ordering_free(const Graph& h, const PatternSet& f,
                                                    const std::vector<int>& order) {
    if (f.kind != PatternSet::Kind::unipartite)
        throw std::invalid_argument("check_ordering_free needs a unipartite pattern set");
    detail::require_permutation(order, h.n, "ordering");
    bool wanted[8] = {};
    for (const TriPattern& p : f.tri) wanted[p.edges] = true;
    for (int i = 0; i < h.n; ++i)
        for (int j = i + 1; j < h.n; ++j)
            for (int k = j + 1; k < h.n; ++k) {
                int u = order[i], v = order[j], w = order[k];
                std::uint8_t mask = 0;
                if (h.adjacent(u, v)) mask |= TriPattern::E12;
                if (h.adjacent(u, w)) mask |= TriPattern::E13;
                if (h.adjacent(v, w)) mask |= TriPattern::E23;
                if (wanted[mask]) return Violation{TriPattern{mask}, {u, v, w}, {}};
            }
    return std::nullopt;
}

/// Bipartite analogue: scans position-ascending slot assignments per side
/// for every member, whatever its shape.
inline std::optional<Violation> check_bi_ordering_free(const BipartiteGraph& h,
                                                       const PatternSet& f,
                                                       const std::vector<int>& order_u,
                                                       const std::vector<int>& order_v) {
    if (f.kind != PatternSet::Kind::bipartite)
        throw std::invalid_argument("check_bi_ordering_free needs a bipartite pattern set");
    detail::require_permutation(order_u, h.p, "U ordering");
    detail::require_permutation(order_v, h.q, "V ordering");
    std::optional<Violation> found;
    for (const BiPattern& pat : f.bi) {
        detail::for_each_combination(h.p, pat.u_arity, [&](const std::vector<int>& ui) {
            return detail::for_each_combination(h.q, pat.v_arity, [&](const std::vector<int>& vi) {
                for (int i = 1; i <= pat.u_arity; ++i)
                    for (int j = 1; j <= pat.v_arity; ++j)
                        if (h.adjacent(order_u[ui[i - 1]], order_v[vi[j - 1]]) != pat.has(i, j))
                            return false;
                Violation viol{pat, {}, {}};
                for (int i : ui) viol.u_vertices.push_back(order_u[i]);
                for (int j : vi) viol.v_vertices.push_back(order_v[j]);
                found = viol;
                return true;
            });
        });
        if (found) return found;
    }
    return std::nullopt;
}

struct OrdOracleResult {
    bool orderable = false;
    std::vector<int> ordering;  // first lexicographic witness when orderable
};

/// Ground-truth oracle: tries every permutation in lexicographic order.
inline OrdOracleResult brute_force_ord(const Graph& h, const PatternSet& f) {
    if (h.n > 8) throw std::invalid_argument("brute_force_ord limited to n <= 8");
    std::vector<int> perm(h.n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (!check_ordering_free(h, f, perm)) return {true, perm};
    } while (std::next_permutation(perm.begin(), perm.end()));
    return {false, {}};
}

struct BordOracleResult {
    bool orderable = false;
    std::vector<int> order_u, order_v;
};

inline BordOracleResult brute_force_bord(const BipartiteGraph& h, const PatternSet& f) {
    if (h.p > 5 || h.q > 5)
        throw std::invalid_argument("brute_force_bord limited to sides <= 5");
    std::vector<int> pu(h.p), pv(h.q);
    std::iota(pu.begin(), pu.end(), 0);
    do {
        std::iota(pv.begin(), pv.end(), 0);
        do {
            if (!check_bi_ordering_free(h, f, pu, pv)) return {true, pu, pv};
        } while (std::next_permutation(pv.begin(), pv.end()));
    } while (std::next_permutation(pu.begin(), pu.end()));
    return {false, {}, {}};
}

/// Checks a circuit certificate against a freshly computed component
/// decomposition: the pairs must be valid nodes, chain cyclically (this is
/// structural in the vertex-sequence representation), and all lie in the
/// claimed strong component.
inline bool verify_certificate(const ConstraintDigraph& g, const CircuitCertificate& cert) {
    const auto& vs = cert.circuit.vertices;
    if (vs.size() < 2) return false;
    ComponentDecomposition dc = strong_components(g);
    if (cert.component < 0 || cert.component >= dc.component_count()) return false;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        PairNode p = cert.circuit.pair(i);
        if (p.first < 0 || p.first >= g.total_vertices() || p.second < 0 ||
            p.second >= g.total_vertices())
            return false;
        if (p.first == p.second || g.side_of(p.first) != g.side_of(p.second)) return false;
        int id = g.pair_id(p.first, p.second);
        if (!g.valid_id(id) || dc.comp_of[id] != cert.component) return false;
    }
    return true;
}

inline bool verify_invariant_certificate(const Graph& h, const InvariantCertificate& cert) {
    const TriPattern* pat = std::get_if<TriPattern>(&cert.pattern);
    if (!pat || !pat->order_invariant()) return false;
    const auto& vs = cert.u_vertices;
    if (vs.size() != 3 || !cert.v_vertices.empty()) return false;
    for (int v : vs)
        if (v < 0 || v >= h.n) return false;
    if (vs[0] == vs[1] || vs[0] == vs[2] || vs[1] == vs[2]) return false;
    std::uint8_t mask = 0;
    if (h.adjacent(vs[0], vs[1])) mask |= TriPattern::E12;
    if (h.adjacent(vs[0], vs[2])) mask |= TriPattern::E13;
    if (h.adjacent(vs[1], vs[2])) mask |= TriPattern::E23;
    return mask == pat->edges;
}

inline bool verify_invariant_certificate(const BipartiteGraph& h, const InvariantCertificate& cert) {
    const BiPattern* pat = std::get_if<BiPattern>(&cert.pattern);
    if (!pat || !pat->order_invariant()) return false;
    const auto& us = cert.u_vertices;
    const auto& vs = cert.v_vertices;
    if (static_cast<int>(us.size()) != pat->u_arity || static_cast<int>(vs.size()) != pat->v_arity)
        return false;
    auto distinct_in_range = [](const std::vector<int>& xs, int n) {
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (xs[i] < 0 || xs[i] >= n) return false;
            for (std::size_t j = i + 1; j < xs.size(); ++j)
                if (xs[i] == xs[j]) return false;
        }
        return true;
    };
    if (!distinct_in_range(us, h.p) || !distinct_in_range(vs, h.q)) return false;
    for (int i = 1; i <= pat->u_arity; ++i)
        for (int j = 1; j <= pat->v_arity; ++j)
            if (h.adjacent(us[i - 1], vs[j - 1]) != pat->has(i, j)) return false;
    return true;
}

}  // namespace fpo

#endif  // FPO_VERIFY_HPP
