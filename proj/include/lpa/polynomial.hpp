#ifndef LPA_POLYNOMIAL_HPP
#define LPA_POLYNOMIAL_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "lpa/errors.hpp"

namespace lpa {

/// Dense univariate polynomial over an exact field K, coefficients stored
/// constant-first with no trailing zeros. The zero polynomial has an empty
/// coefficient vector and degree -1.
template <class K>
class FieldPoly {
public:
    FieldPoly() = default;
    explicit FieldPoly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

    static FieldPoly constant(K k) { return FieldPoly(std::vector<K>{std::move(k)}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<K>& coeffs() const { return c_; }

    K coeff(std::size_t i) const { return i < c_.size() ? c_[i] : K(); }
    K constant_term() const { return coeff(0); }
    K leading() const {
        if (is_zero()) throw domain_error("leading coefficient of zero polynomial");
        return c_.back();
    }

    FieldPoly operator+(const FieldPoly& o) const {
        std::vector<K> r(std::max(c_.size(), o.c_.size()), K());
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
        return FieldPoly(std::move(r));
    }
    FieldPoly operator-() const {
        std::vector<K> r;
        r.reserve(c_.size());
        for (const K& k : c_) r.push_back(-k);
        return FieldPoly(std::move(r));
    }
    FieldPoly operator-(const FieldPoly& o) const { return *this + (-o); }
    FieldPoly operator*(const FieldPoly& o) const {
        if (is_zero() || o.is_zero()) return {};
        std::vector<K> r(c_.size() + o.c_.size() - 1, K());
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                r[i + j] += c_[i] * o.c_[j];
        return FieldPoly(std::move(r));
    }
    FieldPoly scaled(const K& k) const {
        std::vector<K> r;
        r.reserve(c_.size());
        for (const K& c : c_) r.push_back(c * k);
        return FieldPoly(std::move(r));
    }

    friend bool operator==(const FieldPoly& a, const FieldPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const FieldPoly& a, const FieldPoly& b) { return !(a == b); }

    /// Euclidean division: returns (quotient, remainder) with deg r < deg b.
    static std::pair<FieldPoly, FieldPoly> divmod(const FieldPoly& a, const FieldPoly& b) {
        if (b.is_zero()) throw domain_error("polynomial division by zero");
        FieldPoly q, r = a;
        K lead_inv = b.leading().inverse();
        while (!r.is_zero() && r.degree() >= b.degree()) {
            std::size_t shift = static_cast<std::size_t>(r.degree() - b.degree());
            K factor = r.leading() * lead_inv;
            std::vector<K> qc(shift + 1, K());
            qc[shift] = factor;
            FieldPoly term(std::move(qc));
            q = q + term;
            r = r - term * b;
        }
        return {q, r};
    }

    std::string str() const {
        if (is_zero()) return "[0]";
        std::string s = "[";
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i) s += ", ";
            s += c_[i].str();
        }
        return s + "]";
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<K> c_;
};

/// Monic gcd by the Euclidean algorithm.
template <class F, class K = typename F::Scalar>
FieldPoly<K> poly_gcd(const F& f, FieldPoly<K> a, FieldPoly<K> b) {
    while (!b.is_zero()) {
        auto [q, r] = FieldPoly<K>::divmod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    (void)f;
    if (a.is_zero()) return a;
    return a.scaled(a.leading().inverse());
}

template <class K>
struct Bezout {
    FieldPoly<K> gcd;   // monic
    FieldPoly<K> alpha; // alpha*a + beta*b == gcd
    FieldPoly<K> beta;
};

/// Extended Euclidean algorithm; the returned identity holds exactly.
template <class F, class K = typename F::Scalar>
Bezout<K> extended_gcd(const F& f, const FieldPoly<K>& a, const FieldPoly<K>& b) {
    FieldPoly<K> r0 = a, r1 = b;
    FieldPoly<K> s0 = FieldPoly<K>::constant(f.one()), s1;
    FieldPoly<K> t0, t1 = FieldPoly<K>::constant(f.one());
    while (!r1.is_zero()) {
        auto [q, r] = FieldPoly<K>::divmod(r0, r1);
        r0 = std::move(r1); r1 = std::move(r);
        FieldPoly<K> s2 = s0 - q * s1;
        s0 = std::move(s1); s1 = std::move(s2);
        FieldPoly<K> t2 = t0 - q * t1;
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    K inv = r0.leading().inverse();
    return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

} // namespace lpa

#endif
