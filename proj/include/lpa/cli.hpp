#ifndef LPA_CLI_HPP
#define LPA_CLI_HPP

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lpa/lpa.hpp"

namespace lpa::cli {

namespace detail {

inline std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    // trim surrounding whitespace, drop empties
    std::vector<std::string> trimmed;
    for (auto& s : out) {
        std::size_t b = s.find_first_not_of(" \t");
        if (b == std::string::npos) continue;
        std::size_t e = s.find_last_not_of(" \t");
        trimmed.push_back(s.substr(b, e - b + 1));
    }
    return trimmed;
}

inline Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open graph file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return Graph::parse(buf.str());
}

inline nlohmann::json json_set(const Graph& g, const VertexSet& s) {
    nlohmann::json a = nlohmann::json::array();
    for (VertexId v : s) a.push_back(g.vertex_name(v));
    return a;
}

template <class K>
nlohmann::json json_element(const Graph& g, const Element<K>& x) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& [m, c] : x.terms())
        a.push_back({{"coeff", c.str()}, {"monomial", to_string(g, m)}});
    return a;
}

template <class K>
nlohmann::json json_certificate(const Graph& g, const MembershipCertificate<K>& cert) {
    nlohmann::json j;
    j["found"] = cert.found;
    j["bound"] = cert.bound;
    j["complete"] = cert.complete;
    if (cert.found) {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& t : cert.terms)
            terms.push_back({{"left", to_string(g, t.left)},
                             {"gen", t.gen},
                             {"right", to_string(g, t.right)},
                             {"coeff", t.coeff.str()}});
        j["terms"] = terms;
    }
    return j;
}

template <class F, class K = typename F::Scalar>
nlohmann::json json_cycle_poly(const F& f, const Graph& g, const CyclePolynomial<K>& cp) {
    nlohmann::json j;
    j["base"] = g.vertex_name(cp.base);
    j["cycle"] = cp.trivial_cycle() ? "" : to_string(g, cp.cycle);
    nlohmann::json coeffs = nlohmann::json::array();
    for (const K& c : cp.coeffs) coeffs.push_back(c.str());
    j["coeffs"] = coeffs;
    j["element"] = to_string(g, cycle_poly_eval(f, g, cp));
    return j;
}

template <class F, class K = typename F::Scalar>
std::string describe_cycle_poly(const F& f, const Graph& g, const CyclePolynomial<K>& cp) {
    std::string s = to_string(g, cycle_poly_eval(f, g, cp));
    s += "   (base " + g.vertex_name(cp.base);
    s += cp.trivial_cycle() ? "; trivial cycle" : "; cycle " + to_string(g, cp.cycle);
    s += "; p = " + cycle_polynomial_poly(f, cp).str() + ")";
    return s;
}

/// Dispatch on the --field flag: "q" or "gf:P".
template <class Fn>
int with_field(const std::string& spec, Fn&& fn) {
    if (spec == "q") return fn(RationalField{});
    if (spec.rfind("gf:", 0) == 0) {
        unsigned long p = std::stoul(spec.substr(3));
        return fn(PrimeField{static_cast<std::uint32_t>(p)});
    }
    throw error("unknown field '" + spec + "' (use q or gf:P)");
}

} // namespace detail

/// Run the command line. Returns the process exit status: 0 on success, 1 on
/// a domain error, 2 on a usage error.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact computations in Leavitt path algebras of finite graphs"};
    app.require_subcommand(1);

    // one invocation = one session: a graph, a field, a bound, a format
    struct Session {
        std::string graph;
        std::string field = "q";
        std::string format = "text";
        std::string set;
        std::string expr;
        std::vector<std::string> exprs;
        std::string gens;
        std::string target;
        std::string vertex;
        std::string path;
        std::size_t bound = 6;
        std::size_t max_len = 6;
        std::size_t cap = 20;
        bool lattice_dot = false;
    } opt;

    auto add_graph = [&](CLI::App* cmd) {
        cmd->add_option("--graph", opt.graph, "graph file (JSON)")->required();
    };
    auto add_field = [&](CLI::App* cmd) {
        cmd->add_option("--field", opt.field, "coefficient field: q or gf:P");
    };
    auto add_format = [&](CLI::App* cmd, const std::string& choices) {
        cmd->add_option("--format", opt.format, "output format: " + choices);
    };

    CLI::App* closure_cmd = app.add_subcommand("closure", "hereditary saturated closure trace");
    add_graph(closure_cmd);
    add_format(closure_cmd, "text|json");
    closure_cmd->add_option("--set", opt.set, "comma-separated vertex list")->required();

    CLI::App* lattice_cmd = app.add_subcommand("lattice", "lattice of hereditary saturated subsets");
    add_graph(lattice_cmd);
    add_format(lattice_cmd, "text|json|dot");
    lattice_cmd->add_option("--cap", opt.cap, "vertex-count cap for the 2^n enumeration");

    CLI::App* noeth_cmd = app.add_subcommand("noetherian", "chain-condition report");
    add_graph(noeth_cmd);
    add_format(noeth_cmd, "text|json");
    noeth_cmd->add_option("--cap", opt.cap, "vertex-count cap for the 2^n enumeration");

    CLI::App* nf_cmd = app.add_subcommand("nf", "normal form of an expression");
    add_graph(nf_cmd);
    add_field(nf_cmd);
    add_format(nf_cmd, "text|json");
    nf_cmd->add_option("--expr", opt.expr, "expression")->required();

    CLI::App* eq_cmd = app.add_subcommand("eq", "compare two expressions");
    add_graph(eq_cmd);
    add_field(eq_cmd);
    eq_cmd->add_option("--expr", opt.exprs, "expression (twice)")->expected(2)->required();

    CLI::App* csp_cmd = app.add_subcommand("csp", "closed simple paths based at a vertex");
    add_graph(csp_cmd);
    csp_cmd->add_option("--vertex", opt.vertex, "base vertex")->required();
    csp_cmd->add_option("--max-len", opt.max_len, "length bound")->required();

    CLI::App* cycles_cmd = app.add_subcommand("cycles", "cycles, once per base vertex");
    add_graph(cycles_cmd);

    CLI::App* fact_cmd = app.add_subcommand("factorize", "closed-path factorization into CSPs");
    add_graph(fact_cmd);
    fact_cmd->add_option("--path", opt.path, "comma-separated edge list")->required();

    CLI::App* canon_cmd = app.add_subcommand("ideal-canon", "canonical p(g) generators of an ideal");
    add_graph(canon_cmd);
    add_field(canon_cmd);
    add_format(canon_cmd, "text|json");
    canon_cmd->add_option("--gens", opt.gens, "semicolon-separated generator expressions")->required();
    canon_cmd->add_option("--bound", opt.bound, "certificate search bound");

    CLI::App* member_cmd = app.add_subcommand("ideal-member", "bounded ideal-membership oracle");
    add_graph(member_cmd);
    add_field(member_cmd);
    add_format(member_cmd, "text|json");
    member_cmd->add_option("--gens", opt.gens, "semicolon-separated generator expressions")->required();
    member_cmd->add_option("--target", opt.target, "target expression")->required();
    member_cmd->add_option("--bound", opt.bound, "certificate search bound");

    CLI::App* trace_cmd = app.add_subcommand("graded-trace", "vertex membership in a graded ideal");
    add_graph(trace_cmd);
    add_field(trace_cmd);
    add_format(trace_cmd, "text|json");
    trace_cmd->add_option("--set", opt.set, "comma-separated vertex list")->required();
    trace_cmd->add_option("--bound", opt.bound, "certificate search bound");

    CLI::App* dot_cmd = app.add_subcommand("export-dot", "DOT export of the graph or the lattice");
    add_graph(dot_cmd);
    dot_cmd->add_flag("--lattice", opt.lattice_dot, "export the Hasse diagram instead");
    dot_cmd->add_option("--cap", opt.cap, "vertex-count cap for the 2^n enumeration");

    std::vector<std::string> argv = args;
    try {
        std::vector<const char*> cargs{"lpa"};
        for (const auto& a : argv) cargs.push_back(a.c_str());
        app.parse(static_cast<int>(cargs.size()), cargs.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 2;
    }

    try {
        Graph g = detail::load_graph_file(opt.graph);

        if (closure_cmd->parsed()) {
            VertexSet x = VertexSet::of_names(g, detail::split(opt.set, ','));
            ClosureTrace trace = closure(g, x);
            if (opt.format == "json") {
                nlohmann::json j;
                j["input"] = detail::json_set(g, x);
                nlohmann::json levels = nlohmann::json::array();
                for (const auto& l : trace.levels) levels.push_back(detail::json_set(g, l));
                j["levels"] = levels;
                j["closure"] = detail::json_set(g, trace.closure());
                out << j.dump(2) << "\n";
            } else {
                out << trace.str(g);
            }
            return 0;
        }

        if (lattice_cmd->parsed()) {
            HSLattice lat = hs_lattice(g, opt.cap);
            if (opt.format == "dot") {
                out << lat.to_dot(g);
            } else if (opt.format == "json") {
                nlohmann::json j;
                nlohmann::json members = nlohmann::json::array();
                for (const auto& m : lat.members) members.push_back(detail::json_set(g, m));
                j["members"] = members;
                nlohmann::json chain = nlohmann::json::array();
                for (const auto& m : lat.longest_chain) chain.push_back(detail::json_set(g, m));
                j["longest_chain"] = chain;
                out << j.dump(2) << "\n";
            } else {
                out << "members (" << lat.members.size() << "):\n";
                for (const auto& m : lat.members) out << "  " << m.str(g) << "\n";
                out << "longest chain (" << lat.longest_chain_length() << "):";
                for (std::size_t i = 0; i < lat.longest_chain.size(); ++i)
                    out << (i ? " ⊂ " : " ") << lat.longest_chain[i].str(g);
                out << "\n";
            }
            return 0;
        }

        if (noeth_cmd->parsed()) {
            NoetherianReport rep = noetherian_report(g, opt.cap);
            if (opt.format == "json") {
                nlohmann::json j;
                j["noetherian"] = rep.noetherian;
                j["lattice_size"] = rep.lattice.members.size();
                nlohmann::json chain = nlohmann::json::array();
                for (const auto& m : rep.lattice.longest_chain)
                    chain.push_back(detail::json_set(g, m));
                j["longest_chain"] = chain;
                out << j.dump(2) << "\n";
            } else {
                out << rep.str(g);
            }
            return 0;
        }

        if (csp_cmd->parsed()) {
            auto paths = csp_enumerate(g, g.vertex(opt.vertex), opt.max_len);
            for (const auto& p : paths) out << to_string(g, p) << "\n";
            return 0;
        }

        if (cycles_cmd->parsed()) {
            for (const Cycle& c : enumerate_cycles(g))
                out << g.vertex_name(c.base()) << ": " << to_string(g, c.path) << "\n";
            return 0;
        }

        if (fact_cmd->parsed()) {
            std::vector<EdgeId> edges;
            for (const auto& name : detail::split(opt.path, ',')) edges.push_back(g.edge(name));
            if (edges.empty()) throw error("factorize: empty path");
            Path mu = Path::make(g, g.edge_src(edges.front()), edges);
            for (const Path& f : cp_factorize(g, mu)) out << to_string(g, f) << "\n";
            return 0;
        }

        if (dot_cmd->parsed()) {
            out << (opt.lattice_dot ? hs_lattice(g, opt.cap).to_dot(g) : g.to_dot());
            return 0;
        }

        // remaining subcommands need a coefficient field
        return detail::with_field(opt.field, [&](auto field) {
            using K = typename decltype(field)::Scalar;

            if (nf_cmd->parsed()) {
                Element<K> x = parse_expr(field, g, opt.expr);
                if (opt.format == "json")
                    out << detail::json_element(g, x).dump(2) << "\n";
                else
                    out << to_string(g, x) << "\n";
                return 0;
            }

            if (eq_cmd->parsed()) {
                Element<K> a = parse_expr(field, g, opt.exprs[0]);
                Element<K> b = parse_expr(field, g, opt.exprs[1]);
                out << (a == b ? "equal" : "not equal") << "\n";
                return 0;
            }

            if (member_cmd->parsed() || canon_cmd->parsed()) {
                std::vector<Element<K>> gens;
                for (const auto& s : detail::split(opt.gens, ';'))
                    gens.push_back(parse_expr(field, g, s));
                IdealPresentation<K> ideal = make_ideal(g, std::move(gens), opt.bound);

                if (member_cmd->parsed()) {
                    Element<K> target = parse_expr(field, g, opt.target);
                    MembershipCertificate<K> cert = membership_bounded(field, ideal, target);
                    if (opt.format == "json")
                        out << detail::json_certificate(g, cert).dump(2) << "\n";
                    else
                        out << cert.str(g) << "\n";
                    return 0;
                }

                CanonResult<K> res = canonical_generators(field, ideal);
                if (opt.format == "json") {
                    nlohmann::json j;
                    nlohmann::json gensj = nlohmann::json::array();
                    for (const auto& cp : res.generators)
                        gensj.push_back(detail::json_cycle_poly(field, g, cp));
                    j["generators"] = gensj;
                    nlohmann::json ic = nlohmann::json::array();
                    for (const auto& c : res.input_certs)
                        ic.push_back(detail::json_certificate(g, c));
                    j["input_certificates"] = ic;
                    nlohmann::json gc = nlohmann::json::array();
                    for (const auto& c : res.generator_certs)
                        gc.push_back(detail::json_certificate(g, c));
                    j["generator_certificates"] = gc;
                    out << j.dump(2) << "\n";
                } else {
                    out << "generators:\n";
                    for (std::size_t i = 0; i < res.generators.size(); ++i)
                        out << "  [" << i << "] "
                            << detail::describe_cycle_poly(field, g, res.generators[i]) << "\n";
                    out << "input certificates (inputs over the output generators):\n";
                    for (std::size_t i = 0; i < res.input_certs.size(); ++i)
                        out << "  input[" << i << "]: " << res.input_certs[i].str(g) << "\n";
                    out << "generator certificates (outputs over the input generators):\n";
                    for (std::size_t i = 0; i < res.generator_certs.size(); ++i)
                        out << "  generator[" << i << "]: " << res.generator_certs[i].str(g)
                            << "\n";
                }
                return 0;
            }

            if (trace_cmd->parsed()) {
                VertexSet x = VertexSet::of_names(g, detail::split(opt.set, ','));
                auto certs = closure_certificates(field, g, x);
                bool hs = is_hereditary(g, x) && is_saturated(g, x);
                if (opt.format == "json") {
                    nlohmann::json j;
                    j["set"] = detail::json_set(g, x);
                    j["hereditary_saturated"] = hs;
                    nlohmann::json cj;
                    for (const auto& [w, cert] : certs)
                        cj[g.vertex_name(w)] = detail::json_certificate(g, cert);
                    j["closure_certificates"] = cj;
                    if (hs) {
                        auto report = graded_vertex_trace(field, g, x, opt.bound);
                        nlohmann::json tj;
                        for (const auto& [v, cert] : report.entries)
                            tj[g.vertex_name(v)] = detail::json_certificate(g, cert);
                        j["trace"] = tj;
                    }
                    out << j.dump(2) << "\n";
                } else {
                    out << "closure certificates over the generators " << x.str(g) << ":\n";
                    for (const auto& [w, cert] : certs)
                        out << "  " << g.vertex_name(w) << ": " << cert.str(g) << "\n";
                    if (hs) {
                        auto report = graded_vertex_trace(field, g, x, opt.bound);
                        out << "vertex trace (bound " << opt.bound << "):\n";
                        for (const auto& [v, cert] : report.entries)
                            out << "  " << g.vertex_name(v) << ": " << cert.str(g) << "\n";
                    } else {
                        out << "(set is not hereditary saturated; no vertex trace)\n";
                    }
                }
                return 0;
            }

            throw error("unhandled subcommand");
        });
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace lpa::cli

#endif
