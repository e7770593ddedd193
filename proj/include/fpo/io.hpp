#ifndef FPO_IO_HPP
#define FPO_IO_HPP

#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "fpo/pattern.hpp"
#include "fpo/verdict.hpp"

namespace fpo {

class CertificateFormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string vertex_name(int v, bool bipartite, int u_count) {
    if (!bipartite) return std::to_string(v);
    return v < u_count ? "u" + std::to_string(v) : "v" + std::to_string(v - u_count);
}

inline std::string circuit_text(const CircuitCertificate& cert, bool bipartite, int u_count) {
    std::ostringstream os;
    os << "CERT circuit:";
    for (std::size_t i = 0; i < cert.circuit.pair_count(); ++i) {
        PairNode p = cert.circuit.pair(i);
        os << " (" << vertex_name(p.first, bipartite, u_count) << ','
           << vertex_name(p.second, bipartite, u_count) << ')';
    }
    os << " in component #" << cert.component;
    return os.str();
}

inline std::string join_ids(const std::vector<int>& ids) {
    std::string out;
    for (int v : ids) {
        if (!out.empty()) out += ',';
        out += std::to_string(v);
    }
    return out;
}

}  // namespace detail

inline std::string to_text(const Verdict& v) {
    if (const auto* order = std::get_if<Ordering>(&v)) {
        std::string out = "ORDER:";
        for (int x : *order) out += ' ' + std::to_string(x);
        return out + "\n";
    }
    if (const auto* cert = std::get_if<CircuitCertificate>(&v))
        return "NO\n" + detail::circuit_text(*cert, false, 0) + "\n";
    const auto& inv = std::get<InvariantCertificate>(v);
    return "NO\nCERT invariant-pattern: " + std::get<TriPattern>(inv.pattern).to_string() +
           " on {" + detail::join_ids(inv.u_vertices) + "}\n";
}

inline std::string to_text(const BiVerdict& v, int u_count) {
    if (const auto* order = std::get_if<BiOrdering>(&v)) {
        std::string out = "ORDER-U:";
        for (int x : order->u_order) out += ' ' + std::to_string(x);
        out += "\nORDER-V:";
        for (int x : order->v_order) out += ' ' + std::to_string(x);
        return out + "\n";
    }
    if (const auto* cert = std::get_if<CircuitCertificate>(&v))
        return "NO\n" + detail::circuit_text(*cert, true, u_count) + "\n";
    const auto& inv = std::get<InvariantCertificate>(v);
    return "NO\nCERT invariant-pattern: " + std::get<BiPattern>(inv.pattern).to_string() +
           " on U{" + detail::join_ids(inv.u_vertices) + "} V{" + detail::join_ids(inv.v_vertices) +
           "}\n";
}

namespace detail {

inline int parse_vertex_name(const std::string& tok, bool bipartite, int u_count) {
    try {
        if (!bipartite) return std::stoi(tok);
        if (tok.size() < 2 || (tok[0] != 'u' && tok[0] != 'v'))
            throw CertificateFormatError("expected side-prefixed vertex, got '" + tok + "'");
        int local = std::stoi(tok.substr(1));
        return tok[0] == 'u' ? local : u_count + local;
    } catch (const std::invalid_argument&) {
        throw CertificateFormatError("bad vertex token '" + tok + "'");
    }
}

inline std::vector<int> parse_id_list(const std::string& body) {
    std::vector<int> out;
    if (trim(body).empty()) return out;
    for (const std::string& tok : split(body, ',')) {
        try {
            out.push_back(std::stoi(trim(tok)));
        } catch (const std::exception&) {
            throw CertificateFormatError("bad vertex id '" + tok + "'");
        }
    }
    return out;
}

}  // namespace detail

/// Parses a certificate back from the serialized verdict format: either a
/// "CERT circuit: ..." or a "CERT invariant-pattern: ..." line; other
/// lines (e.g. the leading "NO") are ignored.
inline std::variant<CircuitCertificate, InvariantCertificate> parse_certificate(
    const std::string& text, bool bipartite, int u_count) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        line = detail::trim(line);
        if (line.rfind("CERT circuit:", 0) == 0) {
            std::string body = line.substr(13);
            std::size_t comp_pos = body.find(" in component #");
            if (comp_pos == std::string::npos)
                throw CertificateFormatError("circuit certificate misses component tag");
            int component;
            try {
                component = std::stoi(body.substr(comp_pos + 15));
            } catch (const std::exception&) {
                throw CertificateFormatError("bad component number");
            }
            std::istringstream ps(body.substr(0, comp_pos));
            std::vector<PairNode> pairs;
            std::string tok;
            while (ps >> tok) {
                if (tok.size() < 5 || tok.front() != '(' || tok.back() != ')')
                    throw CertificateFormatError("bad pair token '" + tok + "'");
                std::string inner = tok.substr(1, tok.size() - 2);
                auto parts = detail::split(inner, ',');
                if (parts.size() != 2)
                    throw CertificateFormatError("bad pair token '" + tok + "'");
                pairs.push_back({detail::parse_vertex_name(parts[0], bipartite, u_count),
                                 detail::parse_vertex_name(parts[1], bipartite, u_count)});
            }
            if (pairs.size() < 2) throw CertificateFormatError("circuit needs at least two pairs");
            Circuit circ;
            for (std::size_t i = 0; i < pairs.size(); ++i) {
                if (pairs[i].second != pairs[(i + 1) % pairs.size()].first)
                    throw CertificateFormatError("circuit pairs do not chain");
                circ.vertices.push_back(pairs[i].first);
            }
            return CircuitCertificate{circ, component};
        }
        if (line.rfind("CERT invariant-pattern:", 0) == 0) {
            std::string body = detail::trim(line.substr(23));
            std::size_t on_pos = body.find(" on ");
            if (on_pos == std::string::npos)
                throw CertificateFormatError("invariant certificate misses vertex set");
            std::string pat_text = detail::trim(body.substr(0, on_pos));
            std::string where = detail::trim(body.substr(on_pos + 4));
            InvariantCertificate cert;
            if (bipartite) {
                std::size_t ub = where.find("U{"), ue = where.find('}', ub);
                std::size_t vb = where.find("V{", ue), ve = where.find('}', vb);
                if (ub == std::string::npos || ue == std::string::npos ||
                    vb == std::string::npos || ve == std::string::npos)
                    throw CertificateFormatError("bad bipartite vertex sets '" + where + "'");
                cert.pattern = detail::parse_bi_pattern(pat_text);
                cert.u_vertices = detail::parse_id_list(where.substr(ub + 2, ue - ub - 2));
                cert.v_vertices = detail::parse_id_list(where.substr(vb + 2, ve - vb - 2));
            } else {
                if (where.size() < 2 || where.front() != '{' || where.back() != '}')
                    throw CertificateFormatError("bad vertex set '" + where + "'");
                cert.pattern = detail::parse_tri_pattern(pat_text);
                cert.u_vertices = detail::parse_id_list(where.substr(1, where.size() - 2));
            }
            return cert;
        }
    }
    throw CertificateFormatError("no CERT line found");
}

}  // namespace fpo

#endif  // FPO_IO_HPP
