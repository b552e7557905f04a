#ifndef LPA_IDEALS_HPP
#define LPA_IDEALS_HPP

#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "lpa/closures.hpp"
#include "lpa/element.hpp"
#include "lpa/errors.hpp"
#include "lpa/graph.hpp"
#include "lpa/polynomial.hpp"

namespace lpa {

/// Finite presentation of a two-sided ideal: an ambient graph, nonzero
/// generators in normal form and the default length bound used when searching
/// for membership certificates.
template <class K>
struct IdealPresentation {
    Graph graph;
    std::vector<Element<K>> generators;
    std::size_t bound = 6;
};

template <class K>
IdealPresentation<K> make_ideal(Graph g, std::vector<Element<K>> gens, std::size_t bound = 6) {
    for (const auto& x : gens)
        if (x.is_zero()) throw domain_error("ideal presentation contains a zero generator");
    return IdealPresentation<K>{std::move(g), std::move(gens), bound};
}

template <class K>
IdealPresentation<K> make_ideal(Graph g, std::initializer_list<Element<K>> gens,
                                std::size_t bound = 6) {
    return make_ideal(std::move(g), std::vector<Element<K>>(gens), bound);
}

/// One summand of a membership witness: coeff * left * generator * right.
template <class K>
struct CertificateTerm {
    K coeff;
    Monomial left;
    std::size_t gen;
    Monomial right;
};

/// Witness that a target lies in the span {a x b : |a|+|b| <= bound}, or the
/// verdict that no witness exists at that bound. NotFound is evidence rather
/// than proof of non-membership except when `complete` is set, which happens
/// on acyclic graphs once the bound covers every monomial pair.
template <class K>
struct MembershipCertificate {
    bool found = false;
    std::size_t bound = 0;
    bool complete = false;
    Element<K> target;
    std::vector<CertificateTerm<K>> terms;

    std::string str(const Graph& g) const {
        if (!found) {
            std::string s = "NotFoundAtBound(" + std::to_string(bound) + ")";
            if (complete) s += " [search complete: true non-membership]";
            return s;
        }
        std::string s = "Found (bound " + std::to_string(bound) + ")";
        for (const auto& t : terms)
            s += "\n  (" + to_string(g, t.left) + ", " + std::to_string(t.gen) + ", " +
                 to_string(g, t.right) + ", " + t.coeff.str() + ")";
        return s;
    }
};

template <class F, class K = typename F::Scalar>
Element<K> evaluate_certificate(const F& f, const Graph& g, const std::vector<Element<K>>& gens,
                                const std::vector<CertificateTerm<K>>& terms) {
    Element<K> acc;
    for (const auto& t : terms) {
        Element<K> prod = mul(g, mul(g, Element<K>::of_normal(t.left, t.coeff), gens.at(t.gen)),
                              Element<K>::of_normal(t.right, f.one()));
        acc = acc + prod;
    }
    return acc;
}

namespace detail {

/// Every real path of length <= n, in (source, edge sequence) order.
inline std::vector<Path> all_paths_up_to(const Graph& g, std::size_t n) {
    std::vector<Path> out;
    std::vector<EdgeId> stack;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        out.push_back(Path::trivial(v));
        auto dfs = [&](auto&& self, VertexId cur) -> void {
            if (stack.size() >= n) return;
            for (EdgeId e : g.out_edges(cur)) {
                stack.push_back(e);
                out.push_back(Path::make(g, v, stack));
                self(self, g.edge_dst(e));
                stack.pop_back();
            }
        };
        dfs(dfs, v);
    }
    return out;
}

/// Every normal monomial of total length <= n, sorted.
inline std::vector<Monomial> normal_monomials_up_to(const Graph& g, std::size_t n) {
    auto paths = all_paths_up_to(g, n);
    std::vector<Monomial> out;
    for (const Path& mu : paths) {
        for (const Path& nu : paths) {
            if (mu.range() != nu.range() || mu.length() + nu.length() > n) continue;
            Monomial m{mu, nu};
            if (monomial_is_normal(g, m)) out.push_back(std::move(m));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

template <class K>
using ComboKey = std::tuple<Monomial, std::size_t, Monomial>;

template <class K>
using Combo = std::map<ComboKey<K>, K>;

template <class K>
void combo_axpy(Combo<K>& dst, const Combo<K>& src, const K& k) {
    if (k.is_zero()) return;
    for (const auto& [key, c] : src) {
        auto [it, fresh] = dst.emplace(key, c * k);
        if (!fresh) {
            it->second += c * k;
            if (it->second.is_zero()) dst.erase(it);
        }
    }
}

template <class K>
std::vector<CertificateTerm<K>> combo_to_terms(const Combo<K>& combo) {
    std::vector<CertificateTerm<K>> out;
    out.reserve(combo.size());
    for (const auto& [key, c] : combo)
        out.push_back({c, std::get<0>(key), std::get<1>(key), std::get<2>(key)});
    return out;
}

} // namespace detail

/// Exact linear-algebra oracle for the bounded sandwich span of an ideal
/// presentation: the K-span of {a x b : x generator, a,b normal monomials,
/// |a|+|b| <= bound}. Solutions come back as verified combinations.
template <class F, class K = typename F::Scalar>
class MembershipOracle {
public:
    MembershipOracle(const F& f, const Graph& g, const std::vector<Element<K>>& gens,
                     std::size_t bound)
        : f_(f), g_(g), gens_(gens), bound_(bound) {
        auto monos = detail::normal_monomials_up_to(g, bound);
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            for (const Monomial& a : monos) {
                for (const Monomial& b : monos) {
                    if (a.length() + b.length() > bound) continue;
                    Element<K> col = mul(g, mul(g, Element<K>::of_normal(a, f.one()), gens_[i]),
                                         Element<K>::of_normal(b, f.one()));
                    if (col.is_zero()) continue;
                    detail::Combo<K> combo;
                    combo[{a, i, b}] = f.one();
                    insert(std::move(col), std::move(combo));
                }
            }
        }
        // An empty presentation generates the zero ideal, so NotFound is exact.
        // On an acyclic graph every monomial has length at most twice the
        // longest path, so once the bound covers all sandwich pairs the span
        // is the whole ideal and NotFound is a proof.
        complete_ = gens_.empty() ||
                    (g.is_acyclic() && bound >= 4 * g.longest_path_length());
    }

    MembershipCertificate<K> solve(const Element<K>& target) const {
        MembershipCertificate<K> cert;
        cert.bound = bound_;
        cert.target = target;
        cert.complete = complete_;
        Element<K> r = target;
        detail::Combo<K> combo;
        while (!r.is_zero()) {
            auto lead = r.terms().rbegin();
            auto it = rows_.find(lead->first);
            if (it == rows_.end()) return cert; // not found
            K k = lead->second;
            r = r - it->second.elem.scaled(k);
            detail::combo_axpy(combo, it->second.combo, k);
        }
        cert.found = true;
        cert.complete = true;
        cert.terms = detail::combo_to_terms(combo);
        Element<K> check = evaluate_certificate(f_, g_, gens_, cert.terms);
        if (check != target) throw std::logic_error("membership certificate failed to re-evaluate");
        return cert;
    }

private:
    struct Row {
        Element<K> elem; // pivot coefficient normalized to 1
        detail::Combo<K> combo;
    };

    void insert(Element<K> e, detail::Combo<K> combo) {
        while (!e.is_zero()) {
            auto lead = e.terms().rbegin();
            auto it = rows_.find(lead->first);
            if (it == rows_.end()) {
                K inv = lead->second.inverse();
                Row row;
                row.elem = e.scaled(inv);
                detail::combo_axpy(row.combo, combo, inv);
                rows_.emplace(row.elem.terms().rbegin()->first, std::move(row));
                return;
            }
            K k = lead->second;
            e = e - it->second.elem.scaled(k);
            detail::combo_axpy(combo, it->second.combo, -k);
        }
        // linearly dependent column
    }

    const F& f_;
    const Graph& g_;
    std::vector<Element<K>> gens_;
    std::size_t bound_;
    bool complete_ = false;
    std::map<Monomial, Row> rows_;
};

/// Bounded membership test with certificate extraction.
template <class F, class K = typename F::Scalar>
MembershipCertificate<K> membership_bounded(const F& f, const IdealPresentation<K>& ideal,
                                            const Element<K>& target, std::size_t bound) {
    MembershipOracle<F> oracle(f, ideal.graph, ideal.generators, bound);
    return oracle.solve(target);
}

template <class F, class K = typename F::Scalar>
MembershipCertificate<K> membership_bounded(const F& f, const IdealPresentation<K>& ideal,
                                            const Element<K>& target) {
    return membership_bounded(f, ideal, target, ideal.bound);
}

// ---------------------------------------------------------------------------
// Constructive certificates for hereditary saturated closures.
// ---------------------------------------------------------------------------

namespace detail {

/// Lexicographically least shortest path from src to dst.
inline Path bfs_path(const Graph& g, VertexId src, VertexId dst) {
    std::vector<std::optional<EdgeId>> parent(g.vertex_count());
    std::vector<bool> seen(g.vertex_count(), false);
    std::deque<VertexId> queue{src};
    seen[src] = true;
    while (!queue.empty()) {
        VertexId u = queue.front();
        queue.pop_front();
        if (u == dst) break;
        for (EdgeId e : g.out_edges(u)) {
            VertexId w = g.edge_dst(e);
            if (seen[w]) continue;
            seen[w] = true;
            parent[w] = e;
            queue.push_back(w);
        }
    }
    std::vector<EdgeId> edges;
    VertexId cur = dst;
    while (cur != src) {
        EdgeId e = *parent[cur];
        edges.push_back(e);
        cur = g.edge_src(e);
    }
    std::reverse(edges.begin(), edges.end());
    return Path::make(g, src, edges);
}

} // namespace detail

/// For every vertex w in the closure of X, a constructive membership
/// certificate of w over the vertex generators X, built by replaying the
/// Lambda levels: a reachability step conjugates a generator along a path, a
/// saturation step expands w = sum_e e (r(e)) e* over the known certificates
/// of the ranges. Certificates re-evaluate exactly but are not length-bounded.
template <class F, class K = typename F::Scalar>
std::map<VertexId, MembershipCertificate<K>> closure_certificates(const F& f, const Graph& g,
                                                                  const VertexSet& x) {
    ClosureTrace trace = closure(g, x);
    std::vector<VertexId> gens(x.begin(), x.end());
    std::vector<Element<K>> gen_elems;
    for (VertexId v : gens) gen_elems.push_back(vertex_element(v, f.one()));
    auto gen_index = [&](VertexId v) {
        return static_cast<std::size_t>(
            std::lower_bound(gens.begin(), gens.end(), v) - gens.begin());
    };

    std::map<VertexId, std::vector<CertificateTerm<K>>> combos;
    for (VertexId w : trace.levels[0]) {
        if (x.contains(w)) {
            combos[w] = {{f.one(), Monomial::vertex(w), gen_index(w), Monomial::vertex(w)}};
            continue;
        }
        for (VertexId src : x) {
            if (!g.reaches(src, w)) continue;
            Path p = detail::bfs_path(g, src, w);
            combos[w] = {{f.one(), Monomial::ghost(p), gen_index(src), Monomial::real(p)}};
            break;
        }
    }
    for (std::size_t level = 1; level < trace.levels.size(); ++level) {
        for (VertexId w : trace.levels[level]) {
            if (combos.count(w)) continue;
            std::vector<CertificateTerm<K>> terms;
            for (EdgeId e : g.out_edges(w)) {
                const auto& inner = combos.at(g.edge_dst(e));
                Element<K> left = path_element(Path::of_edge(g, e), f.one());
                Element<K> right_ghost = ghost_path_element(Path::of_edge(g, e), f.one());
                for (const auto& t : inner) {
                    Element<K> a = mul(g, left, Element<K>::of_normal(t.left, f.one()));
                    Element<K> b = mul(g, Element<K>::of_normal(t.right, f.one()), right_ghost);
                    for (const auto& [ma, ca] : a.terms())
                        for (const auto& [mb, cb] : b.terms())
                            terms.push_back({t.coeff * ca * cb, ma, t.gen, mb});
                }
            }
            combos[w] = std::move(terms);
        }
    }

    std::map<VertexId, MembershipCertificate<K>> out;
    for (auto& [w, terms] : combos) {
        MembershipCertificate<K> cert;
        cert.found = true;
        cert.complete = true;
        cert.target = vertex_element(w, f.one());
        std::size_t longest = 0;
        for (const auto& t : terms)
            longest = std::max(longest, t.left.length() + t.right.length());
        cert.bound = longest;
        cert.terms = std::move(terms);
        if (evaluate_certificate(f, g, gen_elems, cert.terms) != cert.target)
            throw std::logic_error("closure certificate failed to re-evaluate");
        out.emplace(w, std::move(cert));
    }
    return out;
}

/// Per-vertex membership trace for the ideal generated by a hereditary
/// saturated set H: members are their own witnesses, vertices outside H are
/// searched at the given bound (and stay unfound: the graded ideal meets the
/// vertices exactly in H).
template <class K>
struct GradedTraceReport {
    VertexSet subset;
    std::size_t bound = 0;
    std::vector<std::pair<VertexId, MembershipCertificate<K>>> entries;

    VertexSet found_set() const {
        std::vector<VertexId> vs;
        for (const auto& [v, cert] : entries)
            if (cert.found) vs.push_back(v);
        return VertexSet(std::move(vs));
    }
};

template <class F, class K = typename F::Scalar>
GradedTraceReport<K> graded_vertex_trace(const F& f, const Graph& g, const VertexSet& h,
                                         std::size_t bound) {
    if (!is_hereditary(g, h) || !is_saturated(g, h))
        throw domain_error("graded_vertex_trace needs a hereditary saturated set");
    std::vector<Element<K>> gens;
    std::vector<VertexId> gen_vertices(h.begin(), h.end());
    for (VertexId v : gen_vertices) gens.push_back(vertex_element(v, f.one()));

    GradedTraceReport<K> report;
    report.subset = h;
    report.bound = bound;
    MembershipOracle<F> oracle(f, g, gens, bound);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (h.contains(v)) {
            std::size_t idx = static_cast<std::size_t>(
                std::lower_bound(gen_vertices.begin(), gen_vertices.end(), v) -
                gen_vertices.begin());
            MembershipCertificate<K> cert;
            cert.found = true;
            cert.complete = true;
            cert.bound = bound;
            cert.target = vertex_element(v, f.one());
            cert.terms = {{f.one(), Monomial::vertex(v), idx, Monomial::vertex(v)}};
            report.entries.emplace_back(v, std::move(cert));
        } else {
            report.entries.emplace_back(v, oracle.solve(vertex_element(v, f.one())));
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Canonical generators of the form p(g) = v + sum lambda_i g^i.
// ---------------------------------------------------------------------------

namespace detail {

template <class F, class K = typename F::Scalar>
void canon_any(const F& f, const Graph& g, const Element<K>& x, std::vector<CyclePolynomial<K>>& out);

/// Closed-path group v + sum lambda_i mu_i (mu_i nonvertex closed paths at v,
/// vertex coefficient already scaled to one).
template <class F, class K = typename F::Scalar>
void canon_closed_group(const F& f, const Graph& g, VertexId v, const Element<K>& x,
                        std::vector<CyclePolynomial<K>>& out) {
    std::vector<std::pair<Path, K>> closed;
    std::size_t maxlen = 0;
    for (const auto& [m, c] : x.terms()) {
        if (m.is_vertex()) continue;
        closed.emplace_back(m.mu, c);
        maxlen = std::max(maxlen, m.mu.length());
    }
    if (closed.empty()) {
        out.push_back(trivial_cycle_polynomial(f, v));
        return;
    }

    auto csps = csp_enumerate(g, v, maxlen + 1);
    if (csps.empty()) throw std::logic_error("closed paths exist but no closed simple path found");

    if (csps.size() == 1) {
        // a single closed simple path within reach: it is a cycle and every
        // closed path in x is one of its powers
        const Path& cyc = csps.front();
        if (!is_cycle(g, cyc)) throw std::logic_error("unique short closed simple path is not a cycle");
        std::vector<K> coeffs;
        for (const auto& [p, c] : closed) {
            auto factors = cp_factorize(g, p);
            for (const Path& fac : factors)
                if (!(fac == cyc)) throw std::logic_error("closed path is not a power of the unique cycle");
            if (coeffs.size() < factors.size()) coeffs.resize(factors.size(), K());
            coeffs[factors.size() - 1] += c;
        }
        out.push_back(CyclePolynomial<K>{v, cyc, std::move(coeffs)});
        return;
    }

    // two distinct closed simple paths: conjugating by a long power of the
    // first and then by the second leaves exactly the vertex, so the group
    // generates the same ideal as v itself
    const Path& g1 = csps[0];
    const Path& g2 = csps[1];
    std::size_t k = maxlen / g1.length() + 1;
    Path g1k = Path::trivial(v);
    for (std::size_t i = 0; i < k; ++i) g1k = g1k.concat(g, g1);
    Element<K> conj = mul(g, mul(g, ghost_path_element(g1k, f.one()), x), path_element(g1k, f.one()));
    Element<K> vtx = mul(g, mul(g, ghost_path_element(g2, f.one()), conj), path_element(g2, f.one()));
    if (vtx != vertex_element(v, f.one()))
        throw std::logic_error("conjugation did not reduce the closed-path group to its vertex");
    out.push_back(trivial_cycle_polynomial(f, v));
}

/// Real element with common source and range: either a closed-path group or a
/// sum of longer paths whose leading edges can be stripped.
template <class F, class K = typename F::Scalar>
void canon_real_group(const F& f, const Graph& g, const Element<K>& part,
                      std::vector<CyclePolynomial<K>>& out) {
    VertexId u = part.terms().begin()->first.source();
    K c = part.coeff(Monomial::vertex(u));
    if (!c.is_zero()) {
        canon_closed_group(f, g, u, part.scaled(c.inverse()), out);
        return;
    }
    std::set<EdgeId> leads;
    for (const auto& [m, coeff] : part.terms()) leads.insert(m.mu.edges().front());
    for (EdgeId e : leads) {
        // e* part is strictly shorter and nonzero; x = sum_e e (e* x) recovers part
        Element<K> y = mul(g, ghost_path_element(Path::of_edge(g, e), f.one()), part);
        canon_real_group(f, g, y, out);
    }
}

template <class K>
CyclePolynomial<K> reciprocal_cycle_polynomial(const CyclePolynomial<K>& cp) {
    if (cp.trivial_cycle()) return cp;
    std::vector<K> c = cp.coeffs;
    while (!c.empty() && c.back().is_zero()) c.pop_back();
    if (c.empty()) return cp;
    std::size_t n = c.size();
    K top_inv = c.back().inverse();
    std::vector<K> q(n, K());
    for (std::size_t i = 1; i < n; ++i) q[i - 1] = c[n - i - 1] * top_inv;
    q[n - 1] = top_inv;
    return CyclePolynomial<K>{cp.base, cp.cycle, std::move(q)};
}

template <class F, class K>
void canon_any(const F& f, const Graph& g, const Element<K>& x,
               std::vector<CyclePolynomial<K>>& out) {
    for (const Element<K>& part : peirce_split(x)) {
        std::size_t ghost_max = 0;
        bool ghost_only = true;
        for (const auto& [m, c] : part.terms()) {
            ghost_max = std::max(ghost_max, m.nu.length());
            if (!m.mu.empty()) ghost_only = false;
        }
        if (ghost_max == 0) {
            canon_real_group(f, g, part, out);
        } else if (ghost_only) {
            // star to the real side, canonicalize, then return through the
            // star: the reciprocal polynomial generates the starred ideal
            std::vector<CyclePolynomial<K>> sub;
            canon_any(f, g, star(part), sub);
            for (const auto& cp : sub) out.push_back(reciprocal_cycle_polynomial(cp));
        } else {
            // right-multiplying by each edge of the common range strictly
            // shortens the longest ghost part; x = sum_j (x e_j) e_j*
            VertexId w = part.terms().begin()->first.range();
            for (EdgeId e : g.out_edges(w)) {
                Element<K> y = mul(g, part, path_element(Path::of_edge(g, e), f.one()));
                if (!y.is_zero()) canon_any(f, g, y, out);
            }
        }
    }
}

template <class K>
void dedupe_polynomials(std::vector<CyclePolynomial<K>>& polys) {
    std::vector<CyclePolynomial<K>> unique;
    for (auto& p : polys) {
        bool seen = false;
        for (const auto& q : unique)
            if (p == q) { seen = true; break; }
        if (!seen) unique.push_back(std::move(p));
    }
    polys = std::move(unique);
}

template <class K>
void sort_polynomials(std::vector<CyclePolynomial<K>>& polys) {
    std::stable_sort(polys.begin(), polys.end(),
                     [](const CyclePolynomial<K>& a, const CyclePolynomial<K>& b) {
                         if (a.base != b.base) return a.base < b.base;
                         return a.cycle < b.cycle;
                     });
}

} // namespace detail

/// Result of a canonicalization: the p(g)-form generators plus bidirectional
/// membership certificates at the requested bound (a certificate reports
/// NotFound when the bound is too small for the witness).
template <class K>
struct CanonResult {
    std::vector<CyclePolynomial<K>> generators;
    std::vector<MembershipCertificate<K>> generator_certs; // generators[i] over the inputs
    std::vector<MembershipCertificate<K>> input_certs;     // inputs[j] over the generators
};

namespace detail {

template <class F, class K = typename F::Scalar>
void attach_certificates(const F& f, const Graph& g, const std::vector<Element<K>>& inputs,
                         CanonResult<K>& result, std::size_t bound) {
    std::vector<Element<K>> out_elems;
    for (const auto& cp : result.generators) out_elems.push_back(cycle_poly_eval(f, g, cp));

    MembershipOracle<F> over_inputs(f, g, inputs, bound);
    for (const auto& e : out_elems) result.generator_certs.push_back(over_inputs.solve(e));

    MembershipOracle<F> over_outputs(f, g, out_elems, bound);
    for (const auto& e : inputs) result.input_certs.push_back(over_outputs.solve(e));
}

} // namespace detail

/// Canonical generators for the two-sided ideal of a single element with only
/// real edges, following the reduction: corner split, leading-edge stripping,
/// then the closed-path dichotomy on closed groups.
template <class F, class K = typename F::Scalar>
CanonResult<K> canonicalize_real(const F& f, const Graph& g, const Element<K>& x,
                                 std::size_t bound = 6) {
    if (x.is_zero()) throw domain_error("canonicalize_real: zero element");
    for (const auto& [m, c] : x.terms())
        if (!m.nu.empty()) throw domain_error("canonicalize_real: element has ghost edges");
    CanonResult<K> result;
    detail::canon_any(f, g, x, result.generators);
    detail::dedupe_polynomials(result.generators);
    detail::sort_polynomials(result.generators);
    detail::attach_certificates(f, g, {x}, result, bound);
    return result;
}

/// gcd of two cycle polynomials over the same cycle, with an exact Bezout
/// witness evaluated in the algebra.
template <class K>
struct GcdMergeResult {
    CyclePolynomial<K> merged;
    FieldPoly<K> p1, p2, q;     // q = gcd(p1, p2), normalized to q(0) = 1
    FieldPoly<K> alpha, beta;   // alpha p1 + beta p2 == q
};

template <class F, class K = typename F::Scalar>
FieldPoly<K> cycle_polynomial_poly(const F& f, const CyclePolynomial<K>& cp) {
    std::vector<K> c;
    c.push_back(f.one());
    for (const K& k : cp.coeffs) c.push_back(k);
    return FieldPoly<K>(std::move(c));
}

/// Evaluate p at a cycle based at v, with x^0 read as the vertex.
template <class K>
Element<K> poly_at_cycle(const Graph& g, VertexId v, const Path& cycle, const FieldPoly<K>& p) {
    if (cycle.empty() && p.degree() > 0)
        throw domain_error("cannot evaluate a nonconstant polynomial at a trivial cycle");
    Element<K> r = vertex_element(v, p.coeff(0));
    Path power = Path::trivial(v);
    for (int i = 1; i <= p.degree(); ++i) {
        power = power.concat(g, cycle);
        K c = p.coeff(static_cast<std::size_t>(i));
        if (!c.is_zero()) r.add_term(Monomial::real(power), c);
    }
    return r;
}

template <class F, class K = typename F::Scalar>
GcdMergeResult<K> gcd_merge(const F& f, const Graph& g, const CyclePolynomial<K>& c1,
                            const CyclePolynomial<K>& c2) {
    if (c1.base != c2.base || !(c1.cycle == c2.cycle))
        throw domain_error("gcd_merge needs a common base vertex and cycle");
    FieldPoly<K> p1 = cycle_polynomial_poly(f, c1);
    FieldPoly<K> p2 = cycle_polynomial_poly(f, c2);
    Bezout<K> bez = extended_gcd(f, p1, p2);
    K q0 = bez.gcd.constant_term();
    if (q0.is_zero())
        throw domain_error("gcd has constant term zero and cannot be normalized to p(0) = 1");
    K inv = q0.inverse();
    FieldPoly<K> q = bez.gcd.scaled(inv);

    CyclePolynomial<K> merged{c1.base, Path::trivial(c1.base), {}};
    if (q.degree() > 0) {
        std::vector<K> coeffs;
        for (int i = 1; i <= q.degree(); ++i)
            coeffs.push_back(q.coeff(static_cast<std::size_t>(i)));
        merged = CyclePolynomial<K>{c1.base, c1.cycle, std::move(coeffs)};
    }
    GcdMergeResult<K> res{std::move(merged), std::move(p1), std::move(p2), std::move(q),
                          bez.alpha.scaled(inv), bez.beta.scaled(inv)};

    // exact check of the Bezout identity inside the algebra
    Element<K> lhs =
        mul(g, poly_at_cycle(g, c1.base, c1.cycle, res.alpha), cycle_poly_eval(f, g, c1)) +
        mul(g, poly_at_cycle(g, c2.base, c2.cycle, res.beta), cycle_poly_eval(f, g, c2));
    if (lhs != cycle_poly_eval(f, g, res.merged))
        throw std::logic_error("Bezout certificate failed to re-evaluate");
    return res;
}

/// Drop generators conjugate to another generator along a connecting path:
/// when u >= v, g = mu nu at u, h = nu mu at v and the polynomials agree,
/// q(h) = mu* p(g) mu holds and q(h) is redundant. Pairs not matching the
/// hypotheses are left untouched; only the verified identity ever drops one.
template <class K>
struct PruneResult {
    std::vector<CyclePolynomial<K>> kept;
    struct Dropped {
        CyclePolynomial<K> poly;
        CyclePolynomial<K> survivor;
        Path connector;
    };
    std::vector<Dropped> dropped;
};

template <class F, class K = typename F::Scalar>
PruneResult<K> prune_dominated(const F& f, const Graph& g, std::vector<CyclePolynomial<K>> gens,
                               std::size_t bound = 6) {
    (void)bound;
    PruneResult<K> res;
    res.kept = std::move(gens);
    bool changed = true;
    while (changed) {
        changed = false;
        // candidates considered from the back so the earlier-listed generator
        // of a mutually dominating pair survives
        for (std::size_t jj = res.kept.size(); jj > 0 && !changed; --jj) {
            std::size_t j = jj - 1;
            for (std::size_t i = 0; i < res.kept.size() && !changed; ++i) {
                if (i == j) continue;
                const CyclePolynomial<K>& p = res.kept[i];
                const CyclePolynomial<K>& q = res.kept[j];
                if (p.trivial_cycle() || q.trivial_cycle()) continue;
                if (p.base == q.base || !g.reaches(p.base, q.base)) continue;
                if (!(p.coeffs == q.coeffs)) continue;
                const auto& edges = p.cycle.edges();
                std::size_t split = edges.size();
                for (std::size_t t = 1; t < edges.size(); ++t)
                    if (g.edge_src(edges[t]) == q.base) { split = t; break; }
                if (split == edges.size()) continue;
                Path mu = Path::make(g, p.base,
                                     std::vector<EdgeId>(edges.begin(),
                                                         edges.begin() + static_cast<long>(split)));
                Path nu = Path::make(g, q.base,
                                     std::vector<EdgeId>(edges.begin() + static_cast<long>(split),
                                                         edges.end()));
                if (!(nu.concat(g, mu) == q.cycle)) continue;
                Element<K> conj = mul(g, mul(g, ghost_path_element(mu, f.one()),
                                             cycle_poly_eval(f, g, p)),
                                      path_element(mu, f.one()));
                if (conj != cycle_poly_eval(f, g, q)) continue;
                res.dropped.push_back({q, p, mu});
                res.kept.erase(res.kept.begin() + static_cast<long>(j));
                changed = true;
            }
        }
    }
    return res;
}

/// Canonical generators for an arbitrary ideal presentation: reduce every
/// generator to p(g) form, merge same-cycle polynomials through the gcd,
/// absorb polynomials into a bare vertex where one is present, prune
/// conjugate-dominated generators, and attach bidirectional certificates.
template <class F, class K = typename F::Scalar>
CanonResult<K> canonical_generators(const F& f, const IdealPresentation<K>& ideal) {
    const Graph& g = ideal.graph;
    for (const auto& x : ideal.generators)
        if (x.is_zero()) throw domain_error("canonical_generators: a zero generator");

    std::vector<CyclePolynomial<K>> polys;
    for (const auto& x : ideal.generators) detail::canon_any(f, g, x, polys);
    detail::dedupe_polynomials(polys);

    // merge polynomials over the same (vertex, cycle) through the gcd
    bool merged = true;
    while (merged) {
        merged = false;
        for (std::size_t i = 0; i < polys.size() && !merged; ++i) {
            for (std::size_t j = i + 1; j < polys.size() && !merged; ++j) {
                if (polys[i].base != polys[j].base || !(polys[i].cycle == polys[j].cycle)) continue;
                CyclePolynomial<K> m = gcd_merge(f, g, polys[i], polys[j]).merged;
                polys.erase(polys.begin() + static_cast<long>(j));
                polys[i] = std::move(m);
                merged = true;
            }
        }
        detail::dedupe_polynomials(polys);
    }

    // a bare vertex absorbs every polynomial based at it
    std::vector<CyclePolynomial<K>> absorbed;
    for (const auto& p : polys) {
        bool drop = false;
        if (!p.trivial_cycle() || !p.coeffs.empty()) {
            for (const auto& q : polys)
                if (&q != &p && q.trivial_cycle() && q.coeffs.empty() && q.base == p.base) {
                    drop = true;
                    break;
                }
        }
        if (!drop) absorbed.push_back(p);
    }

    detail::sort_polynomials(absorbed);
    CanonResult<K> result;
    result.generators = prune_dominated(f, g, std::move(absorbed), ideal.bound).kept;
    detail::attach_certificates(f, g, ideal.generators, result, ideal.bound);
    return result;
}

} // namespace lpa

#endif
