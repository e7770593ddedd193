#ifndef FPO_PATTERN_HPP
#define FPO_PATTERN_HPP

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace fpo {

class PatternError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An ordered pattern on three linearly ordered slots 1 < 2 < 3.
/// The edge set is a subset of {12, 13, 23}, stored as a bitmask.
struct TriPattern {
    static constexpr std::uint8_t E12 = 1;
    static constexpr std::uint8_t E13 = 2;
    static constexpr std::uint8_t E23 = 4;
    static constexpr std::uint8_t ALL = E12 | E13 | E23;

    std::uint8_t edges = 0;

    bool has(std::uint8_t e) const { return (edges & e) != 0; }
    int edge_count() const { return std::popcount(edges); }

    // The only 3-slot patterns fixed by every slot permutation are the
    // empty pattern and the triangle.
    bool order_invariant() const { return edges == 0 || edges == ALL; }

    TriPattern complement() const {
        return TriPattern{static_cast<std::uint8_t>(~edges & ALL)};
    }

    // Relabel slot i as 4-i: 12 <-> 23, 13 fixed.
    TriPattern reversed() const {
        std::uint8_t e = 0;
        if (has(E12)) e |= E23;
        if (has(E23)) e |= E12;
        if (has(E13)) e |= E13;
        return TriPattern{e};
    }

    std::string to_string() const {
        if (edges == 0) return "empty";
        std::string out;
        for (auto [mask, name] : {std::pair{E12, "12"}, {E13, "13"}, {E23, "23"}}) {
            if (has(mask)) {
                if (!out.empty()) out += ',';
                out += name;
            }
        }
        return out;
    }

    auto operator<=>(const TriPattern&) const = default;
};

/// A bipartite pattern: u_arity ordered U-slots, v_arity ordered V-slots,
/// edges only between the sides. Slot pair (i, j') is stored at bit
/// (i-1)*4 + (j-1). Arities satisfy u_arity + v_arity <= 4.
///
/// Constraint generation is defined only for the shapes (3,1), (1,3) and
/// (2,2); other shapes are accepted only when order-invariant (they are
/// handled entirely by preprocessing). Use BiPattern::make to validate.
struct BiPattern {
    int u_arity = 0;
    int v_arity = 0;
    std::uint16_t edges = 0;

    static constexpr int bit(int i, int j) { return (i - 1) * 4 + (j - 1); }

    bool has(int i, int j) const { return (edges >> bit(i, j)) & 1; }
    int edge_count() const { return std::popcount(edges); }

    bool supported_constraint_shape() const {
        return (u_arity == 3 && v_arity == 1) || (u_arity == 1 && v_arity == 3) ||
               (u_arity == 2 && v_arity == 2);
    }

    // True iff the edge set is fixed by every side-preserving slot
    // permutation.
    bool order_invariant() const {
        std::array<int, 4> up{}, vp{};
        std::iota(up.begin(), up.begin() + u_arity, 1);
        do {
            std::iota(vp.begin(), vp.begin() + v_arity, 1);
            do {
                for (int i = 1; i <= u_arity; ++i)
                    for (int j = 1; j <= v_arity; ++j)
                        if (has(i, j) != has(up[i - 1], vp[j - 1])) goto next;
                continue;
            next:
                return false;
            } while (std::next_permutation(vp.begin(), vp.begin() + v_arity));
        } while (std::next_permutation(up.begin(), up.begin() + u_arity));
        return true;
    }

    static BiPattern make(int u_arity, int v_arity, std::uint16_t edges) {
        if (u_arity < 0 || v_arity < 0 || u_arity + v_arity > 4)
            throw PatternError("bipartite pattern arities out of range");
        BiPattern p{u_arity, v_arity, edges};
        for (int i = 1; i <= 4; ++i)
            for (int j = 1; j <= 4; ++j)
                if (p.has(i, j) && (i > u_arity || j > v_arity))
                    throw PatternError("bipartite pattern edge label out of arity range");
        if (!p.supported_constraint_shape() && !p.order_invariant())
            throw PatternError("unsupported bipartite pattern shape (" +
                               std::to_string(u_arity) + "," + std::to_string(v_arity) + ")");
        return p;
    }

    BiPattern complement() const {
        std::uint16_t e = 0;
        for (int i = 1; i <= u_arity; ++i)
            for (int j = 1; j <= v_arity; ++j)
                if (!has(i, j)) e |= std::uint16_t(1) << bit(i, j);
        return BiPattern{u_arity, v_arity, e};
    }

    BiPattern reversed() const {
        std::uint16_t e = 0;
        for (int i = 1; i <= u_arity; ++i)
            for (int j = 1; j <= v_arity; ++j)
                if (has(i, j))
                    e |= std::uint16_t(1) << bit(u_arity + 1 - i, v_arity + 1 - j);
        return BiPattern{u_arity, v_arity, e};
    }

    std::string to_string() const {
        std::string out = "U=" + std::to_string(u_arity) + ",V=" + std::to_string(v_arity) + ":";
        std::string es;
        for (int i = 1; i <= u_arity; ++i)
            for (int j = 1; j <= v_arity; ++j)
                if (has(i, j)) {
                    if (!es.empty()) es += ',';
                    es += std::to_string(i) + "-" + std::to_string(j);
                }
        return out + (es.empty() ? "empty" : es);
    }

    auto operator<=>(const BiPattern&) const = default;
};

/// A deduplicated, sorted set of patterns of one kind.
struct PatternSet {
    enum class Kind { unipartite, bipartite };

    Kind kind = Kind::unipartite;
    std::vector<TriPattern> tri;
    std::vector<BiPattern> bi;

    void canonicalize() {
        std::sort(tri.begin(), tri.end());
        tri.erase(std::unique(tri.begin(), tri.end()), tri.end());
        std::sort(bi.begin(), bi.end());
        bi.erase(std::unique(bi.begin(), bi.end()), bi.end());
    }

    std::size_t size() const { return kind == Kind::unipartite ? tri.size() : bi.size(); }
    bool empty() const { return size() == 0; }

    std::string to_string() const {
        std::string out;
        auto join = [&out](const auto& v) {
            for (const auto& p : v) {
                if (!out.empty()) out += ';';
                out += p.to_string();
            }
        };
        if (kind == Kind::unipartite) join(tri); else join(bi);
        return out;
    }

    bool operator==(const PatternSet&) const = default;
};

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

inline std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

inline TriPattern parse_tri_pattern(const std::string& item) {
    std::string t = trim(item);
    if (t == "empty") return TriPattern{0};
    if (t == "triangle") return TriPattern{TriPattern::ALL};
    std::uint8_t edges = 0;
    for (const std::string& raw : split(t, ',')) {
        std::string tok = trim(raw);
        if (tok == "12") edges |= TriPattern::E12;
        else if (tok == "13") edges |= TriPattern::E13;
        else if (tok == "23") edges |= TriPattern::E23;
        else throw PatternError("unknown pattern token '" + tok + "'");
    }
    return TriPattern{edges};
}

inline BiPattern parse_bi_pattern(const std::string& item) {
    std::string t = trim(item);
    std::size_t colon = t.find(':');
    if (colon == std::string::npos)
        throw PatternError("bipartite pattern needs 'U=l,V=l':edges' form, got '" + t + "'");
    std::string head = trim(t.substr(0, colon));
    auto parts = split(head, ',');
    if (parts.size() != 2 || trim(parts[0]).rfind("U=", 0) != 0 || trim(parts[1]).rfind("V=", 0) != 0)
        throw PatternError("malformed bipartite pattern header '" + head + "'");
    int ua, va;
    try {
        ua = std::stoi(trim(parts[0]).substr(2));
        va = std::stoi(trim(parts[1]).substr(2));
    } catch (const std::exception&) {
        throw PatternError("malformed bipartite arity in '" + head + "'");
    }
    std::uint16_t edges = 0;
    std::string body = trim(t.substr(colon + 1));
    if (body != "empty") {
        for (const std::string& raw : split(body, ',')) {
            std::string tok = trim(raw);
            std::size_t dash = tok.find('-');
            if (dash == std::string::npos || dash == 0 || dash + 1 == tok.size())
                throw PatternError("malformed edge token '" + tok + "' (expected 'i-j')");
            int i, j;
            try {
                std::size_t pos1, pos2;
                i = std::stoi(tok.substr(0, dash), &pos1);
                j = std::stoi(tok.substr(dash + 1), &pos2);
                if (pos1 != dash || pos2 != tok.size() - dash - 1)
                    throw PatternError("");
            } catch (const std::exception&) {
                throw PatternError("malformed edge token '" + tok + "' (expected 'i-j')");
            }
            if (i < 1 || i > ua || j < 1 || j > va)
                throw PatternError("edge label '" + tok + "' out of arity range");
            edges |= std::uint16_t(1) << BiPattern::bit(i, j);
        }
    }
    return BiPattern::make(ua, va, edges);
}

}  // namespace detail

/// Parses a ';'-separated pattern set. Unipartite patterns are comma lists
/// over {12,13,23} plus the tokens "empty" and "triangle"; bipartite
/// patterns look like "U=2,V=2:1-2,2-1". The kind is inferred from the
/// first item.
inline PatternSet parse_pattern_set(const std::string& spec) {
    PatternSet out;
    auto items = detail::split(spec, ';');
    if (items.empty() || detail::trim(spec).empty())
        return out;
    bool bipartite = detail::trim(items[0]).find("U=") != std::string::npos;
    out.kind = bipartite ? PatternSet::Kind::bipartite : PatternSet::Kind::unipartite;
    for (const std::string& item : items) {
        if (detail::trim(item).empty())
            throw PatternError("empty pattern item in '" + spec + "'");
        if (bipartite)
            out.bi.push_back(detail::parse_bi_pattern(item));
        else
            out.tri.push_back(detail::parse_tri_pattern(item));
    }
    out.canonicalize();
    return out;
}

inline PatternSet complement_set(const PatternSet& f) {
    PatternSet out;
    out.kind = f.kind;
    for (const auto& p : f.tri) out.tri.push_back(p.complement());
    for (const auto& p : f.bi) out.bi.push_back(p.complement());
    out.canonicalize();
    return out;
}

inline PatternSet reverse_set(const PatternSet& f) {
    PatternSet out;
    out.kind = f.kind;
    for (const auto& p : f.tri) out.tri.push_back(p.reversed());
    for (const auto& p : f.bi) out.bi.push_back(p.reversed());
    out.canonicalize();
    return out;
}

/// The four pattern sets for which non-orderability is always witnessed by
/// an invertible pair: {{13}}, {{12,23}}, {{13},{13,23}},
/// {{13},{12,13},{13,23}}.
inline bool is_nice(const PatternSet& f) {
    if (f.kind != PatternSet::Kind::unipartite) return false;
    using T = TriPattern;
    static const std::vector<std::vector<TriPattern>> nice = {
        {T{T::E13}},
        {T{static_cast<std::uint8_t>(T::E12 | T::E23)}},
        {T{T::E13}, T{static_cast<std::uint8_t>(T::E13 | T::E23)}},
        {T{T::E13}, T{static_cast<std::uint8_t>(T::E12 | T::E13)},
         T{static_cast<std::uint8_t>(T::E13 | T::E23)}},
    };
    for (auto set : nice) {
        std::sort(set.begin(), set.end());
        if (f.tri == set) return true;
    }
    return false;
}

/// Named graph-class catalog. Unipartite classes: chordal, interval,
/// proper-interval, comparability. Bipartite classes: convex-bipartite,
/// bipartite-permutation, co-circular-arc-bigraph.
inline PatternSet preset(const std::string& name) {
    if (name == "chordal") return parse_pattern_set("12,13");
    if (name == "interval") return parse_pattern_set("13;13,23");
    if (name == "proper-interval") return parse_pattern_set("13;12,13;13,23");
    if (name == "comparability") return parse_pattern_set("12,23");
    if (name == "convex-bipartite") return parse_pattern_set("U=3,V=1:1-1,3-1");
    if (name == "bipartite-permutation")
        return parse_pattern_set("U=2,V=2:1-1,1-2,2-1;U=2,V=2:1-2,2-1;U=2,V=2:1-2,2-1,2-2");
    if (name == "co-circular-arc-bigraph")
        return parse_pattern_set("U=2,V=2:1-2,2-1;U=2,V=2:1-2,2-1,2-2");
    throw PatternError("unknown preset '" + name + "'");
}

inline bool preset_is_bipartite(const std::string& name) {
    return name == "convex-bipartite" || name == "bipartite-permutation" ||
           name == "co-circular-arc-bigraph";
}

}  // namespace fpo

#endif  // FPO_PATTERN_HPP
