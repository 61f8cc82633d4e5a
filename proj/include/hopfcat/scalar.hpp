#ifndef HOPFCAT_SCALAR_HPP
#define HOPFCAT_SCALAR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace hopfcat {

/// Exact rational scalar backed by GMP. Always stored in lowest terms
/// with positive denominator (mpq_class canonicalizes on arithmetic).
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den) : v_(num, den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
    explicit Rational(const std::string& s) : v_(s) { v_.canonicalize(); }

    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(mpq_class(v_ / o.v_));
    }
    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Rational inv() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        return Rational(mpq_class(1 / v_));
    }

    std::string str() const { return v_.get_str(); }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

private:
    mpq_class v_;
};

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Residue in [0, p) for a process-wide prime modulus, configured once
/// before any Fp value is created.
class Fp {
public:
    Fp() : v_(0) {}
    Fp(long n) {
        long m = n % static_cast<long>(modulus());
        if (m < 0) m += static_cast<long>(modulus());
        v_ = static_cast<std::uint64_t>(m);
    }

    static void set_modulus(std::uint64_t p) {
        if (!is_prime_u64(p)) throw std::invalid_argument("Fp: modulus must be prime");
        if (p >= (1ull << 31)) throw std::invalid_argument("Fp: modulus too large");
        modulus_ref() = p;
    }
    static std::uint64_t modulus() {
        if (modulus_ref() == 0) throw std::logic_error("Fp: modulus not configured");
        return modulus_ref();
    }

    Fp operator+(Fp o) const { return from_raw((v_ + o.v_) % modulus()); }
    Fp operator-(Fp o) const { return from_raw((v_ + modulus() - o.v_) % modulus()); }
    Fp operator*(Fp o) const { return from_raw((v_ * o.v_) % modulus()); }
    Fp operator/(Fp o) const { return *this * o.inv(); }
    Fp operator-() const { return from_raw(v_ == 0 ? 0 : modulus() - v_); }
    Fp& operator+=(Fp o) { v_ = (v_ + o.v_) % modulus(); return *this; }
    Fp& operator-=(Fp o) { v_ = (v_ + modulus() - o.v_) % modulus(); return *this; }
    Fp& operator*=(Fp o) { v_ = (v_ * o.v_) % modulus(); return *this; }

    bool operator==(Fp o) const { return v_ == o.v_; }
    bool operator!=(Fp o) const { return v_ != o.v_; }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Fp inv() const {
        if (v_ == 0) throw std::domain_error("Fp: inverse of zero");
        // extended Euclid
        std::int64_t a = static_cast<std::int64_t>(v_), m = static_cast<std::int64_t>(modulus());
        std::int64_t x0 = 0, x1 = 1, b = m;
        while (a > 1) {
            std::int64_t q = a / b;
            std::int64_t t = b; b = a % b; a = t;
            t = x0; x0 = x1 - q * x0; x1 = t;
        }
        if (x1 < 0) x1 += m;
        return from_raw(static_cast<std::uint64_t>(x1));
    }

    std::string str() const { return std::to_string(v_); }
    std::uint64_t raw() const { return v_; }

private:
    static Fp from_raw(std::uint64_t v) { Fp r; r.v_ = v; return r; }
    static std::uint64_t& modulus_ref() { static std::uint64_t p = 0; return p; }
    std::uint64_t v_;
};

} // namespace hopfcat

#endif
