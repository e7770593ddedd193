#ifndef FPO_VERDICT_HPP
#define FPO_VERDICT_HPP

#include <stdexcept>
#include <variant>
#include <vector>

#include "fpo/constraint_digraph.hpp"
#include "fpo/pattern.hpp"

namespace fpo {

/// Signals a violated internal invariant of the decision procedure; the
/// correctness argument guarantees these states are unreachable, so
/// hitting one means an implementation bug, never a property of the input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A circuit whose pairs all lie in one strong component of H+; certifies
/// that no pattern-free ordering exists.
struct CircuitCertificate {
    Circuit circuit;
    int component = -1;
};

/// An induced occurrence of an order-invariant pattern; it occurs under
/// every ordering, so its existence certifies non-orderability.
struct InvariantCertificate {
    std::variant<TriPattern, BiPattern> pattern;
    std::vector<int> u_vertices;  // unipartite occurrences live here entirely
    std::vector<int> v_vertices;
};

using Ordering = std::vector<int>;

struct BiOrdering {
    std::vector<int> u_order;
    std::vector<int> v_order;
};

using Verdict = std::variant<Ordering, CircuitCertificate, InvariantCertificate>;
using BiVerdict = std::variant<BiOrdering, CircuitCertificate, InvariantCertificate>;

inline bool accepted(const Verdict& v) { return std::holds_alternative<Ordering>(v); }
inline bool accepted(const BiVerdict& v) { return std::holds_alternative<BiOrdering>(v); }

}  // namespace fpo

#endif  // FPO_VERDICT_HPP
