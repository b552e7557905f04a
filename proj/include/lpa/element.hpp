#ifndef LPA_ELEMENT_HPP
#define LPA_ELEMENT_HPP

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "lpa/errors.hpp"
#include "lpa/graph.hpp"

namespace lpa {

/// Basis monomial mu nu* : a pair of real paths with common range. A vertex is
/// the case where both paths are trivial. Normal form additionally requires
/// that mu and nu do not both end in the same edge e with e the special edge
/// of s(e); monomial_element() rewrites such pairs away.
struct Monomial {
    Path mu;
    Path nu;

    static Monomial vertex(VertexId v) { return {Path::trivial(v), Path::trivial(v)}; }
    static Monomial real(const Path& p) { return {p, Path::trivial(p.range())}; }
    static Monomial ghost(const Path& p) { return {Path::trivial(p.range()), p}; }

    bool is_vertex() const { return mu.empty() && nu.empty(); }
    std::size_t length() const { return mu.length() + nu.length(); }
    VertexId source() const { return mu.source(); }
    /// The vertex w with (mu nu*) w == mu nu*, i.e. s(nu).
    VertexId range() const { return nu.source(); }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.mu == b.mu && a.nu == b.nu;
    }
    friend bool operator<(const Monomial& a, const Monomial& b) {
        if (a.mu == b.mu) return a.nu < b.nu;
        return a.mu < b.mu;
    }
};

inline bool monomial_is_normal(const Graph& g, const Monomial& m) {
    if (m.mu.empty() || m.nu.empty()) return true;
    EdgeId e = m.mu.edges().back();
    if (e != m.nu.edges().back()) return true;
    return g.special_edge(g.edge_src(e)) != e;
}

/// Element of L_K(E): a finite K-linear combination of normal monomials, kept
/// canonical (zero coefficients absent). Equality is exact algebra equality.
template <class K>
class Element {
public:
    using TermMap = std::map<Monomial, K>;

    Element() = default;

    /// Single-term element; m must already satisfy the normal-form constraint.
    static Element of_normal(Monomial m, K c) {
        Element e;
        e.add_term(std::move(m), c);
        return e;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    K coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? K() : it->second;
    }

    void add_term(Monomial m, const K& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(std::move(m), c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Element operator+(const Element& o) const {
        Element r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }
    Element operator-(const Element& o) const {
        Element r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
        return r;
    }
    Element operator-() const {
        Element r;
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }
    Element scaled(const K& k) const {
        Element r;
        if (k.is_zero()) return r;
        for (const auto& [m, c] : terms_) r.add_term(m, c * k);
        return r;
    }

    friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

private:
    TermMap terms_;
};

namespace detail {

/// Expand mu nu* into normal monomials, applying the oriented relation-(5)
/// rewrite at the mu/nu junction as long as both end in the special edge of
/// their common source. Signs are recorded as +-1 multiplicities.
inline void renorm_monomial(const Graph& g, const Path& mu, const Path& nu, int sign,
                            std::map<Monomial, int>& out) {
    if (!mu.empty() && !nu.empty()) {
        EdgeId e = mu.edges().back();
        if (e == nu.edges().back() && g.special_edge(g.edge_src(e)) == e) {
            VertexId v = g.edge_src(e);
            Path mu2 = mu.shortened(g);
            Path nu2 = nu.shortened(g);
            renorm_monomial(g, mu2, nu2, sign, out);
            for (EdgeId f : g.out_edges(v)) {
                if (f == e) continue;
                Monomial m{mu2.extended(g, f), nu2.extended(g, f)};
                int& acc = out[m];
                acc -= sign;
                if (acc == 0) out.erase(m);
            }
            return;
        }
    }
    Monomial m{mu, nu};
    int& acc = out[m];
    acc += sign;
    if (acc == 0) out.erase(m);
}

/// Is `prefix` an initial segment of `whole` (as paths from the same vertex)?
inline bool path_prefix(const Path& prefix, const Path& whole) {
    if (prefix.source() != whole.source()) return false;
    if (prefix.length() > whole.length()) return false;
    for (std::size_t i = 0; i < prefix.length(); ++i)
        if (prefix.edges()[i] != whole.edges()[i]) return false;
    return true;
}

inline Path path_suffix(const Graph& g, const Path& whole, std::size_t from) {
    std::vector<EdgeId> es(whole.edges().begin() + static_cast<long>(from), whole.edges().end());
    VertexId base = from == 0 ? whole.source() : g.edge_dst(whole.edges()[from - 1]);
    return Path::make(g, base, std::move(es));
}

/// Product of two normal monomials as a +-1 combination of normal monomials.
/// (mu1 nu1*)(mu2 nu2*) resolves by matching nu1 against mu2 and then fixing
/// the junction of the surviving pair.
inline std::map<Monomial, int> mul_monomials(const Graph& g, const Monomial& a, const Monomial& b) {
    std::map<Monomial, int> out;
    if (a.nu.length() <= b.mu.length()) {
        if (!path_prefix(a.nu, b.mu)) return out;
        Path gamma = path_suffix(g, b.mu, a.nu.length());
        renorm_monomial(g, a.mu.concat(g, gamma), b.nu, 1, out);
    } else {
        if (!path_prefix(b.mu, a.nu)) return out;
        Path gamma = path_suffix(g, a.nu, b.mu.length());
        renorm_monomial(g, a.mu, b.nu.concat(g, gamma), 1, out);
    }
    return out;
}

} // namespace detail

template <class K>
Element<K> vertex_element(VertexId v, K c) {
    return Element<K>::of_normal(Monomial::vertex(v), std::move(c));
}

template <class K>
Element<K> path_element(const Path& p, K c) {
    return Element<K>::of_normal(Monomial::real(p), std::move(c));
}

template <class K>
Element<K> ghost_path_element(const Path& p, K c) {
    return Element<K>::of_normal(Monomial::ghost(p), std::move(c));
}

/// General single-monomial constructor: rewrites the junction if needed.
template <class K>
Element<K> monomial_element(const Graph& g, const Monomial& m, const K& c) {
    if (m.mu.range() != m.nu.range()) throw domain_error("monomial paths must share a range");
    std::map<Monomial, int> parts;
    detail::renorm_monomial(g, m.mu, m.nu, 1, parts);
    Element<K> e;
    for (const auto& [part, sign] : parts) e.add_term(part, sign > 0 ? c : -c);
    return e;
}

template <class K>
Element<K> mul(const Graph& g, const Element<K>& x, const Element<K>& y) {
    Element<K> r;
    for (const auto& [ma, ca] : x.terms()) {
        for (const auto& [mb, cb] : y.terms()) {
            K c = ca * cb;
            for (const auto& [m, sign] : detail::mul_monomials(g, ma, mb))
                r.add_term(m, sign > 0 ? c : -c);
        }
    }
    return r;
}

/// The star involution: K-linear, star(mu nu*) = nu mu*. An anti-automorphism
/// of order two. Normality of monomials is symmetric in mu and nu, so no
/// rewriting is needed.
template <class K>
Element<K> star(const Element<K>& x) {
    Element<K> r;
    for (const auto& [m, c] : x.terms()) r.add_term(Monomial{m.nu, m.mu}, c);
    return r;
}

/// Corner decomposition: group terms by (source, range) vertex pair. Each part
/// equals u * x * w for its pair and the parts sum to x.
template <class K>
std::vector<Element<K>> peirce_split(const Element<K>& x) {
    std::map<std::pair<VertexId, VertexId>, Element<K>> groups;
    for (const auto& [m, c] : x.terms())
        groups[{m.source(), m.range()}].add_term(m, c);
    std::vector<Element<K>> out;
    out.reserve(groups.size());
    for (auto& [key, part] : groups) out.push_back(std::move(part));
    return out;
}

/// Sum of all vertices: the multiplicative identity of L_K(E) for a finite
/// graph.
template <class F, class K = typename F::Scalar>
Element<K> identity_element(const F& f, const Graph& g) {
    Element<K> r;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        r.add_term(Monomial::vertex(v), f.one());
    return r;
}

// ---------------------------------------------------------------------------
// Raw words and the rewriting system.
//
// A raw element is a formal K-combination of words over E^0, E^1 and (E^1)*.
// The rules below orient the defining relations; every strategy of applying
// them terminates in the same canonical Element.
// ---------------------------------------------------------------------------

enum class SymbolKind : unsigned char { vertex, edge, ghost };

struct RawSymbol {
    SymbolKind kind;
    std::uint32_t index;
    friend bool operator==(const RawSymbol&, const RawSymbol&) = default;
};

using RawWord = std::vector<RawSymbol>;

template <class K>
struct RawTerm {
    K coeff;
    RawWord word;
};

template <class K>
using RawElement = std::vector<RawTerm<K>>;

inline RawSymbol raw_vertex(VertexId v) { return {SymbolKind::vertex, v}; }
inline RawSymbol raw_edge(EdgeId e) { return {SymbolKind::edge, e}; }
inline RawSymbol raw_ghost(EdgeId e) { return {SymbolKind::ghost, e}; }

/// Word-level star: reverse and exchange real/ghost.
inline RawWord star_word(RawWord w) {
    std::reverse(w.begin(), w.end());
    for (RawSymbol& s : w) {
        if (s.kind == SymbolKind::edge) s.kind = SymbolKind::ghost;
        else if (s.kind == SymbolKind::ghost) s.kind = SymbolKind::edge;
    }
    return w;
}

enum class RewriteStrategy { leftmost, rightmost, random_order };

namespace detail {

inline bool redex_at(const Graph& g, const RawWord& w, std::size_t i) {
    const RawSymbol &a = w[i], &b = w[i + 1];
    switch (a.kind) {
    case SymbolKind::vertex:
        return true; // vertex next to anything is absorbed or annihilates
    case SymbolKind::edge:
        if (b.kind == SymbolKind::vertex) return true;
        if (b.kind == SymbolKind::edge) return g.edge_dst(a.index) != g.edge_src(b.index);
        // edge then ghost
        if (g.edge_dst(a.index) != g.edge_dst(b.index)) return true;
        return a.index == b.index && g.special_edge(g.edge_src(a.index)) == a.index;
    case SymbolKind::ghost:
        if (b.kind == SymbolKind::ghost) return g.edge_src(a.index) != g.edge_dst(b.index);
        return true; // ghost-vertex and ghost-edge always reduce
    }
    return false;
}

/// Apply the redex at pair position i. Output is the list of (sign, word)
/// replacements; empty means the word rewrote to zero.
inline std::vector<std::pair<int, RawWord>> apply_redex(const Graph& g, const RawWord& w,
                                                        std::size_t i) {
    const RawSymbol &a = w[i], &b = w[i + 1];
    auto splice = [&](std::vector<RawSymbol> mid) {
        RawWord r(w.begin(), w.begin() + static_cast<long>(i));
        r.insert(r.end(), mid.begin(), mid.end());
        r.insert(r.end(), w.begin() + static_cast<long>(i) + 2, w.end());
        return r;
    };
    std::vector<std::pair<int, RawWord>> out;
    auto keep = [&](RawSymbol s) { out.emplace_back(1, splice({s})); };

    if (a.kind == SymbolKind::vertex) {
        VertexId v = a.index;
        if (b.kind == SymbolKind::vertex) {
            if (v == b.index) keep(a);
        } else if (b.kind == SymbolKind::edge) {
            if (g.edge_src(b.index) == v) keep(b);
        } else {
            if (g.edge_dst(b.index) == v) keep(b);
        }
        return out;
    }
    if (a.kind == SymbolKind::ghost) {
        if (b.kind == SymbolKind::vertex) {
            if (g.edge_src(a.index) == b.index) keep(a);
        } else if (b.kind == SymbolKind::edge) {
            if (a.index == b.index) keep(raw_vertex(g.edge_dst(a.index)));
        }
        // ghost-ghost: incomposable, annihilates
        return out;
    }
    // a is an edge
    if (b.kind == SymbolKind::vertex) {
        if (g.edge_dst(a.index) == b.index) keep(a);
        return out;
    }
    if (b.kind == SymbolKind::edge) return out; // incomposable edges annihilate
    // edge then ghost: either range mismatch (zero) or the special pair
    if (g.edge_dst(a.index) != g.edge_dst(b.index)) return out;
    VertexId v = g.edge_src(a.index);
    out.emplace_back(1, splice({raw_vertex(v)}));
    for (EdgeId f : g.out_edges(v)) {
        if (f == a.index) continue;
        out.emplace_back(-1, splice({raw_edge(f), raw_ghost(f)}));
    }
    return out;
}

inline Monomial word_to_monomial(const Graph& g, const RawWord& w) {
    if (w.size() == 1 && w[0].kind == SymbolKind::vertex) return Monomial::vertex(w[0].index);
    std::vector<EdgeId> reals, ghosts;
    for (const RawSymbol& s : w) {
        if (s.kind == SymbolKind::edge) reals.push_back(s.index);
        else ghosts.push_back(s.index);
    }
    std::reverse(ghosts.begin(), ghosts.end());
    Path mu = reals.empty()
                  ? Path::trivial(ghosts.empty() ? w[0].index : g.edge_dst(ghosts.back()))
                  : Path::make(g, g.edge_src(reals.front()), reals);
    Path nu = ghosts.empty()
                  ? Path::trivial(mu.range())
                  : Path::make(g, g.edge_src(ghosts.front()), ghosts);
    return Monomial{mu, nu};
}

} // namespace detail

/// Rewrite a raw element to its canonical normal form. The strategy selects
/// which redex fires first in each word; all strategies agree on the result
/// (this is tested, not assumed).
template <class K>
Element<K> normal_form(const Graph& g, const RawElement<K>& raw,
                       RewriteStrategy strategy = RewriteStrategy::leftmost,
                       std::uint64_t seed = 0) {
    std::mt19937_64 rng(seed);
    Element<K> acc;
    std::vector<RawTerm<K>> work(raw.begin(), raw.end());
    while (!work.empty()) {
        RawTerm<K> t = std::move(work.back());
        work.pop_back();
        if (t.coeff.is_zero() || t.word.empty()) continue;
        for (const RawSymbol& s : t.word) {
            std::size_t limit = s.kind == SymbolKind::vertex ? g.vertex_count() : g.edge_count();
            if (s.index >= limit) throw domain_error("undeclared symbol in raw element");
        }
        std::vector<std::size_t> redexes;
        for (std::size_t i = 0; i + 1 < t.word.size(); ++i)
            if (detail::redex_at(g, t.word, i)) redexes.push_back(i);
        if (redexes.empty()) {
            acc.add_term(detail::word_to_monomial(g, t.word), t.coeff);
            continue;
        }
        std::size_t pos = redexes.front();
        if (strategy == RewriteStrategy::rightmost) pos = redexes.back();
        else if (strategy == RewriteStrategy::random_order)
            pos = redexes[std::uniform_int_distribution<std::size_t>(0, redexes.size() - 1)(rng)];
        for (auto& [sign, word] : detail::apply_redex(g, t.word, pos))
            work.push_back(RawTerm<K>{sign > 0 ? t.coeff : -t.coeff, std::move(word)});
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Cycle polynomials p(g) = v + sum lambda_i g^i.
// ---------------------------------------------------------------------------

/// The canonical ideal-generator shape: a vertex v, a cycle g based at v
/// (trivial cycle g = v allowed) and coefficients lambda_1..lambda_n with the
/// constant term fixed to 1. The trivial cycle carries no coefficients and
/// denotes the vertex itself.
template <class K>
struct CyclePolynomial {
    VertexId base;
    Path cycle;
    std::vector<K> coeffs;

    bool trivial_cycle() const { return cycle.empty(); }
    friend bool operator==(const CyclePolynomial& a, const CyclePolynomial& b) {
        return a.base == b.base && a.cycle == b.cycle && a.coeffs == b.coeffs;
    }
};

template <class F, class K = typename F::Scalar>
CyclePolynomial<K> trivial_cycle_polynomial(const F&, VertexId v) {
    return CyclePolynomial<K>{v, Path::trivial(v), {}};
}

template <class F, class K = typename F::Scalar>
Element<K> cycle_poly_eval(const F& f, const Graph& g, const CyclePolynomial<K>& cp) {
    if (cp.cycle.source() != cp.base || !cp.cycle.closed())
        throw domain_error("cycle is not based at the stated vertex");
    if (cp.trivial_cycle()) {
        if (!cp.coeffs.empty()) throw domain_error("trivial cycle admits no polynomial part");
        return vertex_element(cp.base, f.one());
    }
    if (!is_cycle(g, cp.cycle)) throw domain_error("path is not a cycle");
    Element<K> r = vertex_element(cp.base, f.one());
    Path power = Path::trivial(cp.base);
    for (const K& c : cp.coeffs) {
        power = power.concat(g, cp.cycle);
        if (!c.is_zero()) r.add_term(Monomial::real(power), c);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Rendering. Terms are emitted in monomial order; ghost edges print with a
// trailing '*'. The output parses back through parse_expr.
// ---------------------------------------------------------------------------

inline std::string to_string(const Graph& g, const Path& p) {
    if (p.empty()) return g.vertex_name(p.source());
    std::string s;
    for (std::size_t i = 0; i < p.length(); ++i) {
        if (i) s += ' ';
        s += g.edge_name(p.edges()[i]);
    }
    return s;
}

inline std::string to_string(const Graph& g, const Monomial& m) {
    if (m.is_vertex()) return g.vertex_name(m.source());
    std::string s;
    for (std::size_t i = 0; i < m.mu.length(); ++i) {
        if (!s.empty()) s += ' ';
        s += g.edge_name(m.mu.edges()[i]);
    }
    for (std::size_t i = m.nu.length(); i > 0; --i) {
        if (!s.empty()) s += ' ';
        s += g.edge_name(m.nu.edges()[i - 1]) + "*";
    }
    return s;
}

template <class K>
std::string to_string(const Graph& g, const Element<K>& x) {
    if (x.is_zero()) return "0";
    std::string s;
    for (const auto& [m, c] : x.terms()) {
        std::string cs = c.str();
        bool negative = !cs.empty() && cs[0] == '-';
        if (s.empty())
            s += negative ? "-" : "";
        else
            s += negative ? " - " : " + ";
        if (negative) cs.erase(cs.begin());
        if (cs != "1") s += cs + " ";
        s += to_string(g, m);
    }
    return s;
}

} // namespace lpa

#endif
