#ifndef FPO_SOLVER_HPP
#define FPO_SOLVER_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <utility>
#include <optional>
#include <tuple>
#include <variant>
#include <vector>

#include "fpo/constraint_digraph.hpp"
#include "fpo/graph.hpp"
#include "fpo/pattern.hpp"
#include "fpo/verdict.hpp"

namespace fpo {

namespace detail {

struct PriorityRule {
    bool active = false;
    std::function<bool(int, int)> pair_preferred;  // global vertex ids, same side
};

/// The shared main loop of the two decision procedures: screen every
/// strong component for a circuit, then grow D by absorbing green
/// components under the given priority rule. Returns the pair ids of D,
/// or the screening-stage certificate.
///
/// Every commit is taken to closure before it counts: arcs of H+ are
/// implications (a pair in D drags its successors into D), duals mirror
/// into Dbar, and the projection of D onto each side stays transitively
/// closed. If closing over the chosen component hits a contradiction,
/// the commit is rolled back and the dual component is closed over
/// instead — this subsumes the circuit test and the outsection
/// absorption, and also catches contradictions that surface on the
/// opposite side of a bipartition, which no same-side circuit test can
/// see.
inline std::variant<std::vector<int>, CircuitCertificate> run_decision_loop(
    const ConstraintDigraph& g, const ComponentDecomposition& dc, const PriorityRule& rule) {
    int nc = dc.component_count();
    for (int c = 0; c < nc; ++c)
        if (auto circ = find_circuit(g, dc.members[c])) return CircuitCertificate{*circ, c};
    for (int c = 0; c < nc; ++c)
        if (dc.dual_comp[c] == c)
            throw InternalError("self-dual component without a detected circuit");

    int n = g.total_vertices();
    int words = (n + 63) / 64;
    // after[x] / before[x]: bitset rows of the transitive closure of D's
    // projection onto host vertices.
    std::vector<std::uint64_t> after(static_cast<std::size_t>(n) * words, 0);
    std::vector<std::uint64_t> before(static_cast<std::size_t>(n) * words, 0);
    auto test_bit = [&](const std::vector<std::uint64_t>& m, int x, int y) {
        return ((m[static_cast<std::size_t>(x) * words + y / 64] >> (y % 64)) & 1u) != 0;
    };
    auto set_bit = [&](std::vector<std::uint64_t>& m, int x, int y) {
        m[static_cast<std::size_t>(x) * words + y / 64] |= std::uint64_t(1) << (y % 64);
    };
    auto clear_bit = [&](std::vector<std::uint64_t>& m, int x, int y) {
        m[static_cast<std::size_t>(x) * words + y / 64] &= ~(std::uint64_t(1) << (y % 64));
    };

    std::vector<std::int8_t> status(nc, 0);  // 0 undecided, 1 in D, 2 in Dbar
    std::vector<int> out_und(nc);
    std::vector<int> greens;
    for (int c = 0; c < nc; ++c) {
        out_und[c] = static_cast<int>(dc.comp_succ[c].size());
        if (out_und[c] == 0) greens.push_back(c);
    }
    int undecided = nc;

    struct Trail {
        std::vector<int> comps;                    // committed to D (duals implied)
        std::vector<std::pair<int, int>> pairs;    // bits set in after/before
    };

    std::vector<int> comp_work;
    std::vector<std::pair<int, int>> pair_work;

    // Sends component c to D and its dual to Dbar; false on contradiction.
    auto assign = [&](int c, Trail& tr) -> bool {
        if (status[c] == 1) return true;
        if (status[c] == 2) return false;
        int d = dc.dual_comp[c];
        if (status[d] != 0) throw InternalError("component status out of sync with its dual");
        status[c] = 1;
        status[d] = 2;
        tr.comps.push_back(c);
        comp_work.push_back(c);
        return true;
    };

    // Inserts (x,y) into the transitively closed projection; every pair
    // the closure forces is queued so its whole component follows.
    auto add_pair = [&](int x, int y, Trail& tr) -> bool {
        if (test_bit(after, x, y)) return true;
        if (test_bit(after, y, x)) return false;  // would close a circuit
        std::vector<int> targets{y};
        for (int w = 0; w < words; ++w) {
            std::uint64_t bits = after[static_cast<std::size_t>(y) * words + w] &
                                 ~after[static_cast<std::size_t>(x) * words + w];
            while (bits) {
                targets.push_back(w * 64 + std::countr_zero(bits));
                bits &= bits - 1;
            }
        }
        std::vector<int> sources{x};
        for (int w = 0; w < words; ++w) {
            std::uint64_t bits = before[static_cast<std::size_t>(x) * words + w];
            while (bits) {
                sources.push_back(w * 64 + std::countr_zero(bits));
                bits &= bits - 1;
            }
        }
        for (int u : sources)
            for (int v : targets) {
                if (test_bit(after, u, v)) continue;
                if (test_bit(after, v, u)) return false;
                set_bit(after, u, v);
                set_bit(before, v, u);
                tr.pairs.emplace_back(u, v);
                pair_work.emplace_back(u, v);
            }
        return true;
    };

    // Closure of a tentative commit of component root into D.
    auto try_commit = [&](int root, Trail& tr) -> bool {
        comp_work.clear();
        pair_work.clear();
        if (!assign(root, tr)) return false;
        while (!comp_work.empty() || !pair_work.empty()) {
            if (!comp_work.empty()) {
                int c = comp_work.back();
                comp_work.pop_back();
                for (int s : dc.comp_succ[c])
                    if (!assign(s, tr)) return false;
                for (int id : dc.members[c]) {
                    PairNode pn = g.pair_of(id);
                    if (!add_pair(pn.first, pn.second, tr)) return false;
                }
            } else {
                auto [x, y] = pair_work.back();
                pair_work.pop_back();
                if (!assign(dc.comp_of[g.pair_id(x, y)], tr)) return false;
            }
        }
        return true;
    };

    auto rollback = [&](Trail& tr) {
        for (auto [x, y] : tr.pairs) {
            clear_bit(after, x, y);
            clear_bit(before, y, x);
        }
        for (int c : tr.comps) {
            status[c] = 0;
            status[dc.dual_comp[c]] = 0;
        }
        tr.comps.clear();
        tr.pairs.clear();
    };

    auto finalize = [&](const Trail& tr) {
        for (int c : tr.comps)
            for (int side : {c, dc.dual_comp[c]}) {
                --undecided;
                for (int p : dc.comp_pred[side])
                    if (--out_und[p] == 0 && status[p] == 0) greens.push_back(p);
            }
    };

    while (undecided > 0) {
        greens.erase(std::remove_if(greens.begin(), greens.end(),
                                    [&](int c) { return status[c] != 0; }),
                     greens.end());
        if (greens.empty()) throw InternalError("no green component among undecided ones");

        // A green component whose dual is also green is isolated in the
        // undecided condensation: nothing constrains its orientation yet
        // and nothing waits on it. Orienting such a pair early can
        // contradict — through transitivity — relations the undecided
        // part will force later, so defer isolated components until only
        // they remain; then the decided projection is a partial order and
        // any orientation consistent with it extends.
        std::vector<int> candidates;
        for (int c : greens)
            if (out_und[dc.dual_comp[c]] > 0) candidates.push_back(c);
        if (candidates.empty()) candidates = greens;

        auto cascade_key = [&](int c) {
            bool preferred = false;
            if (rule.active)
                for (int id : dc.members[c]) {
                    PairNode p = g.pair_of(id);
                    if (rule.pair_preferred(p.first, p.second)) {
                        preferred = true;
                        break;
                    }
                }
            return std::tuple(rule.active && !preferred, !dc.trivial(c), !dc.original_sink(c),
                              dc.members[c].front());
        };
        int best = candidates.front();
        auto best_key = cascade_key(best);
        for (int c : candidates) {
            auto k = cascade_key(c);
            if (k < best_key) {
                best = c;
                best_key = k;
            }
        }
        int chosen = best;

        Trail trail;
        if (!try_commit(chosen, trail)) {
            // The chosen orientation contradicts D; close over the dual
            // component instead (it drags its whole outsection into D).
            rollback(trail);
            if (!try_commit(dc.dual_comp[chosen], trail))
                throw InternalError("neither orientation of a green component extends D");
        }
        finalize(trail);
    }

    std::vector<int> d_pairs;
    for (int c = 0; c < nc; ++c)
        if (status[c] == 1)
            d_pairs.insert(d_pairs.end(), dc.members[c].begin(), dc.members[c].end());
    std::sort(d_pairs.begin(), d_pairs.end());
    return d_pairs;
}

}  // namespace detail

/// The unique linear order consistent with a total transitive pair set on
/// k vertices; any totality or transitivity violation is an internal
/// error.
inline std::vector<int> extract_ordering(const std::vector<PairNode>& decided, int k) {
    if (decided.size() != static_cast<std::size_t>(k) * (k - 1) / 2)
        throw InternalError("decided pair set is not total");
    std::vector<int> outdeg(k, 0);
    for (const PairNode& p : decided) {
        if (p.first < 0 || p.first >= k || p.second < 0 || p.second >= k || p.first == p.second)
            throw InternalError("decided pair out of range");
        ++outdeg[p.first];
    }
    std::vector<int> order(k, -1);
    for (int v = 0; v < k; ++v) {
        int d = outdeg[v];
        if (d < 0 || d >= k || order[k - 1 - d] != -1)
            throw InternalError("decided pair set is not a transitive tournament");
        order[k - 1 - d] = v;
    }
    std::vector<int> pos(k);
    for (int i = 0; i < k; ++i) pos[order[i]] = i;
    for (const PairNode& p : decided)
        if (pos[p.first] >= pos[p.second]) throw InternalError("decided pair set is intransitive");
    return order;
}

namespace detail {

inline PriorityRule unipartite_rule(const Graph& h, const PatternSet& active) {
    bool two_edge = false, one_edge = false;
    for (const TriPattern& p : active.tri) {
        if (p.edge_count() == 2) two_edge = true;
        if (p.edge_count() == 1) one_edge = true;
    }
    PriorityRule rule;
    if (two_edge) {
        rule.active = true;
        rule.pair_preferred = [&h](int x, int y) { return h.adjacent(x, y); };
    } else if (one_edge) {
        rule.active = true;
        rule.pair_preferred = [&h](int x, int y) { return !h.adjacent(x, y); };
    }
    return rule;
}

}  // namespace detail

/// Decides whether h admits an ordering avoiding every member of f.
/// Accepts with an ordering or rejects with a machine-checkable
/// certificate: either an induced occurrence of an order-invariant member
/// or a circuit inside one strong component of H+.
inline Verdict solve_ord3(const Graph& h, const PatternSet& f) {
    if (f.kind != PatternSet::Kind::unipartite)
        throw std::invalid_argument("solve_ord3 needs a unipartite pattern set");

    PatternSet active;
    active.kind = PatternSet::Kind::unipartite;
    for (const TriPattern& p : f.tri) {
        if (p.order_invariant()) {
            if (auto occ = find_order_invariant_occurrence(h, p))
                return InvariantCertificate{p, std::vector<int>(occ->begin(), occ->end()), {}};
        } else {
            active.tri.push_back(p);
        }
    }
    active.canonicalize();
    if (active.tri.empty()) {
        std::vector<int> identity(h.n);
        std::iota(identity.begin(), identity.end(), 0);
        return identity;
    }

    ConstraintDigraph g = build_tri(h, active);
    ComponentDecomposition dc = strong_components(g);
    auto result = detail::run_decision_loop(g, dc, detail::unipartite_rule(h, active));
    if (auto* cert = std::get_if<CircuitCertificate>(&result)) return *cert;

    std::vector<PairNode> decided;
    for (int id : std::get<std::vector<int>>(result)) decided.push_back(g.pair_of(id));
    return extract_ordering(decided, h.n);
}

/// A vertex pair whose two orientations share a strong component (a
/// circuit of length two), if any.
inline std::optional<PairNode> find_invertible_pair(const ConstraintDigraph& g) {
    ComponentDecomposition dc = strong_components(g);
    for (int id = 0; id < g.id_space(); ++id) {
        if (!g.valid_id(id)) continue;
        PairNode p = g.pair_of(id);
        if (p.first < p.second && dc.comp_of[id] == dc.comp_of[g.dual(id)]) return p;
    }
    return std::nullopt;
}

}  // namespace fpo

#endif  // FPO_SOLVER_HPP
