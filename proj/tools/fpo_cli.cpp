// Command line front end: solve ordering problems, recognize graph
// classes by preset, check certificates, and run the exhaustive oracle.
//
// Exit codes: 0 orderable / certificate valid, 1 not orderable /
// certificate invalid, 2 usage or parse error, 3 internal invariant
// violation.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "fpo/fpo.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct PatternChoice {
    std::string spec;
    std::string preset_name;

    fpo::PatternSet resolve() const {
        if (spec.empty() == preset_name.empty())
            throw CLI::ValidationError("exactly one of --pattern / --preset is required");
        return spec.empty() ? fpo::preset(preset_name) : fpo::parse_pattern_set(spec);
    }
};

void add_pattern_options(CLI::App* cmd, PatternChoice& choice) {
    auto* p = cmd->add_option("--pattern", choice.spec, "Pattern set specification");
    auto* q = cmd->add_option("--preset", choice.preset_name, "Named class preset");
    p->excludes(q);
}

int run_order(const std::string& graph_path, const PatternChoice& choice) {
    fpo::PatternSet f = choice.resolve();
    if (f.kind != fpo::PatternSet::Kind::unipartite)
        throw CLI::ValidationError("'order' needs a unipartite pattern set; use 'border'");
    fpo::Graph h = fpo::parse_graph(read_file(graph_path));
    fpo::Verdict v = fpo::solve_ord3(h, f);
    std::cout << fpo::to_text(v);
    return fpo::accepted(v) ? 0 : 1;
}

int run_border(const std::string& graph_path, const PatternChoice& choice) {
    fpo::PatternSet f = choice.resolve();
    if (f.kind != fpo::PatternSet::Kind::bipartite)
        throw CLI::ValidationError("'border' needs a bipartite pattern set; use 'order'");
    fpo::BipartiteGraph h = fpo::parse_bigraph(read_file(graph_path));
    fpo::BiVerdict v = fpo::solve_bord4(h, f);
    std::cout << fpo::to_text(v, h.p);
    return fpo::accepted(v) ? 0 : 1;
}

int run_recognize(const std::string& graph_path, const std::string& class_name) {
    fpo::PatternSet f = fpo::preset(class_name);
    bool member;
    if (fpo::preset_is_bipartite(class_name)) {
        fpo::BipartiteGraph h = fpo::parse_bigraph(read_file(graph_path));
        member = fpo::accepted(fpo::solve_bord4(h, f));
    } else {
        fpo::Graph h = fpo::parse_graph(read_file(graph_path));
        member = fpo::accepted(fpo::solve_ord3(h, f));
    }
    std::cout << graph_path << (member ? " is " : " is not ") << class_name << "\n";
    return member ? 0 : 1;
}

int run_certify(const std::string& graph_path, const PatternChoice& choice,
                const std::string& cert_path) {
    fpo::PatternSet f = choice.resolve();
    bool bipartite = f.kind == fpo::PatternSet::Kind::bipartite;
    std::string graph_text = read_file(graph_path);
    std::string cert_text = read_file(cert_path);

    bool valid = false;
    if (bipartite) {
        fpo::BipartiteGraph h = fpo::parse_bigraph(graph_text);
        auto cert = fpo::parse_certificate(cert_text, true, h.p);
        if (auto* inv = std::get_if<fpo::InvariantCertificate>(&cert)) {
            const auto* pat = std::get_if<fpo::BiPattern>(&inv->pattern);
            bool member = pat && std::find(f.bi.begin(), f.bi.end(), *pat) != f.bi.end();
            valid = member && fpo::verify_invariant_certificate(h, *inv);
        } else {
            fpo::PatternSet active;
            active.kind = f.kind;
            for (const auto& p : f.bi)
                if (!p.order_invariant()) active.bi.push_back(p);
            fpo::ConstraintDigraph g = fpo::build_bi(h, active);
            valid = fpo::verify_certificate(g, std::get<fpo::CircuitCertificate>(cert));
        }
    } else {
        fpo::Graph h = fpo::parse_graph(graph_text);
        auto cert = fpo::parse_certificate(cert_text, false, 0);
        if (auto* inv = std::get_if<fpo::InvariantCertificate>(&cert)) {
            const auto* pat = std::get_if<fpo::TriPattern>(&inv->pattern);
            bool member = pat && std::find(f.tri.begin(), f.tri.end(), *pat) != f.tri.end();
            valid = member && fpo::verify_invariant_certificate(h, *inv);
        } else {
            fpo::PatternSet active;
            active.kind = f.kind;
            for (const auto& p : f.tri)
                if (!p.order_invariant()) active.tri.push_back(p);
            fpo::ConstraintDigraph g = fpo::build_tri(h, active);
            valid = fpo::verify_certificate(g, std::get<fpo::CircuitCertificate>(cert));
        }
    }
    std::cout << (valid ? "CERTIFICATE VALID\n" : "CERTIFICATE INVALID\n");
    return valid ? 0 : 1;
}

int run_oracle(const std::string& graph_path, const PatternChoice& choice) {
    fpo::PatternSet f = choice.resolve();
    if (f.kind == fpo::PatternSet::Kind::bipartite) {
        fpo::BipartiteGraph h = fpo::parse_bigraph(read_file(graph_path));
        fpo::BordOracleResult r = fpo::brute_force_bord(h, f);
        if (!r.orderable) {
            std::cout << "NO (exhaustive)\n";
            return 1;
        }
        std::cout << "YES (exhaustive)\n"
                  << fpo::to_text(fpo::BiVerdict(fpo::BiOrdering{r.order_u, r.order_v}), h.p);
        return 0;
    }
    fpo::Graph h = fpo::parse_graph(read_file(graph_path));
    fpo::OrdOracleResult r = fpo::brute_force_ord(h, f);
    if (!r.orderable) {
        std::cout << "NO (exhaustive)\n";
        return 1;
    }
    std::cout << "YES (exhaustive)\n" << fpo::to_text(fpo::Verdict(r.ordering));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Forbidden-pattern vertex ordering toolkit"};
    app.require_subcommand(1);

    std::string graph_path, class_name, cert_path;
    PatternChoice choice;

    auto* order = app.add_subcommand("order", "Decide ORD for a graph and a 3-pattern set");
    order->add_option("graph", graph_path, "Graph file")->required();
    add_pattern_options(order, choice);

    auto* border = app.add_subcommand("border", "Decide BORD for a bigraph and a 4-pattern set");
    border->add_option("graph", graph_path, "Bipartite graph file")->required();
    add_pattern_options(border, choice);

    auto* recognize = app.add_subcommand("recognize", "Test membership in a named graph class");
    recognize->add_option("graph", graph_path, "Graph file")->required();
    recognize->add_option("--class", class_name, "Class preset name")->required();

    auto* certify = app.add_subcommand("certify", "Check a rejection certificate");
    certify->add_option("graph", graph_path, "Graph file")->required();
    add_pattern_options(certify, choice);
    certify->add_option("--cert", cert_path, "Certificate file")->required();

    auto* oracle = app.add_subcommand("oracle", "Exhaustive decision on small instances");
    oracle->add_option("graph", graph_path, "Graph file")->required();
    add_pattern_options(oracle, choice);

    try {
        app.parse(argc, argv);
        if (order->parsed()) return run_order(graph_path, choice);
        if (border->parsed()) return run_border(graph_path, choice);
        if (recognize->parsed()) return run_recognize(graph_path, class_name);
        if (certify->parsed()) return run_certify(graph_path, choice, cert_path);
        if (oracle->parsed()) return run_oracle(graph_path, choice);
        return 2;
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const fpo::InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
