#ifndef LPA_FIELD_HPP
#define LPA_FIELD_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "lpa/errors.hpp"

namespace lpa {

/// Exact rational number. A thin value wrapper around an arbitrary-precision
/// rational; always stored in lowest terms with positive denominator, so
/// operator== is exact arithmetic equality.
class Rational {
public:
    using rep = boost::multiprecision::cpp_rational;

    Rational() = default;
    Rational(long long n) : v_(n) {}
    Rational(long long num, long long den) {
        if (den == 0) throw domain_error("rational with zero denominator");
        v_ = rep(num, den);
    }
    explicit Rational(rep v) : v_(std::move(v)) {}

    bool is_zero() const { return v_ == 0; }

    Rational operator-() const { return Rational(rep(-v_)); }
    Rational operator+(const Rational& o) const { return Rational(rep(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(rep(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(rep(v_ * o.v_)); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw domain_error("division by zero");
        return Rational(rep(v_ / o.v_));
    }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    Rational inverse() const {
        if (is_zero()) throw domain_error("inverse of zero");
        return Rational(rep(1) / v_);
    }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }

    std::string str() const { return v_.str(); }

private:
    rep v_{};
};

/// Element of a prime field GF(p). The modulus travels with the value; a
/// default-constructed GFp is the modulus-free zero, which combines with any
/// modulus. Mixing two nonzero values with different moduli is an error.
class GFp {
public:
    GFp() = default;
    GFp(std::uint32_t p, std::uint64_t v) : p_(p), v_(v % p) {}

    bool is_zero() const { return v_ == 0; }
    std::uint32_t modulus() const { return p_; }
    std::uint64_t value() const { return v_; }

    GFp operator-() const { return p_ == 0 ? GFp() : GFp(p_, p_ - v_); }
    GFp operator+(const GFp& o) const {
        std::uint32_t p = join(*this, o);
        return p == 0 ? GFp() : GFp(p, v_ + o.v_);
    }
    GFp operator-(const GFp& o) const { return *this + (-o); }
    GFp operator*(const GFp& o) const {
        std::uint32_t p = join(*this, o);
        return p == 0 ? GFp() : GFp(p, v_ * o.v_);
    }
    GFp operator/(const GFp& o) const { return *this * o.inverse(); }
    GFp& operator+=(const GFp& o) { return *this = *this + o; }
    GFp& operator-=(const GFp& o) { return *this = *this - o; }
    GFp& operator*=(const GFp& o) { return *this = *this * o; }

    GFp inverse() const {
        if (is_zero()) throw domain_error("inverse of zero");
        // extended Euclid on (v, p)
        std::int64_t t = 0, nt = 1;
        std::int64_t r = static_cast<std::int64_t>(p_), nr = static_cast<std::int64_t>(v_);
        while (nr != 0) {
            std::int64_t q = r / nr;
            std::int64_t tmp = t - q * nt; t = nt; nt = tmp;
            tmp = r - q * nr; r = nr; nr = tmp;
        }
        if (t < 0) t += static_cast<std::int64_t>(p_);
        return GFp(p_, static_cast<std::uint64_t>(t));
    }

    friend bool operator==(const GFp& a, const GFp& b) {
        return a.v_ == b.v_ && (a.p_ == b.p_ || a.v_ == 0);
    }
    friend bool operator!=(const GFp& a, const GFp& b) { return !(a == b); }

    std::string str() const { return std::to_string(v_); }

private:
    static std::uint32_t join(const GFp& a, const GFp& b) {
        if (a.p_ == 0) return b.p_;
        if (b.p_ == 0 || a.p_ == b.p_) return a.p_;
        throw domain_error("mixed moduli in GF(p) arithmetic");
    }

    std::uint32_t p_ = 0;
    std::uint64_t v_ = 0;
};

/// Field context for exact rationals. Coefficient-creating operations take a
/// field context so the same code paths serve GF(p) with a runtime modulus.
class RationalField {
public:
    using Scalar = Rational;
    Scalar zero() const { return Rational(); }
    Scalar one() const { return Rational(1); }
    Scalar from_long(long long n) const { return Rational(n); }
    std::string name() const { return "Q"; }
};

/// Field context for GF(p), p prime.
class PrimeField {
public:
    using Scalar = GFp;

    explicit PrimeField(std::uint32_t p) : p_(p) {
        if (p < 2 || !is_prime(p)) throw domain_error("GF modulus must be prime: " + std::to_string(p));
        if (p >= (1u << 31)) throw domain_error("GF modulus too large");
    }

    Scalar zero() const { return GFp(); }
    Scalar one() const { return GFp(p_, 1); }
    Scalar from_long(long long n) const {
        long long r = n % static_cast<long long>(p_);
        if (r < 0) r += p_;
        return GFp(p_, static_cast<std::uint64_t>(r));
    }
    std::uint32_t modulus() const { return p_; }
    std::string name() const { return "GF(" + std::to_string(p_) + ")"; }

private:
    static bool is_prime(std::uint32_t n) {
        if (n < 2) return false;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

    std::uint32_t p_;
};

} // namespace lpa

#endif
