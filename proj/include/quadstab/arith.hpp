#pragma once

// Exact scalar arithmetic: coefficient domains (Z, Q, F_p) and the small
// helpers shared by the linear algebra layer. All arithmetic is exact;
// there is no floating point anywhere in this library.

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace quadstab {

// Thrown when a computation would exceed a configured size cap. The message
// names the offending object (block, complex, ...).
struct ResourceLimitError : std::runtime_error {
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

inline bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

class CoefficientDomain {
public:
    enum class Kind { integers, rationals, prime_field };

    static CoefficientDomain integers() { return CoefficientDomain(Kind::integers, 0); }
    static CoefficientDomain rationals() { return CoefficientDomain(Kind::rationals, 0); }
    static CoefficientDomain prime_field(std::uint64_t p) {
        if (!is_prime(p)) throw std::invalid_argument("prime_field: " + std::to_string(p) + " is not prime");
        return CoefficientDomain(Kind::prime_field, p);
    }

    // Accepts "Z", "Q", "F2", "F3", ... (case-insensitive prefix letters).
    static CoefficientDomain parse(const std::string& s) {
        if (s == "Z" || s == "z") return integers();
        if (s == "Q" || s == "q") return rationals();
        if ((s.size() >= 2) && (s[0] == 'F' || s[0] == 'f'))
            return prime_field(std::stoull(s.substr(1)));
        throw std::invalid_argument("cannot parse coefficient domain '" + s + "'");
    }

    Kind kind() const { return kind_; }
    std::uint64_t characteristic() const { return kind_ == Kind::prime_field ? p_ : 0; }
    bool is_field() const { return kind_ != Kind::integers; }

    std::string name() const {
        switch (kind_) {
            case Kind::integers: return "Z";
            case Kind::rationals: return "Q";
            default: return "F" + std::to_string(p_);
        }
    }

    friend bool operator==(const CoefficientDomain& a, const CoefficientDomain& b) {
        return a.kind_ == b.kind_ && a.p_ == b.p_;
    }

private:
    CoefficientDomain(Kind k, std::uint64_t p) : kind_(k), p_(p) {}
    Kind kind_;
    std::uint64_t p_;
};

// Field trait objects used by the templated elimination routines.

struct RationalField {
    using Elem = mpq_class;
    static Elem zero() { return Elem(0); }
    static Elem one() { return Elem(1); }
    static bool is_zero(const Elem& x) { return sgn(x) == 0; }
    static Elem neg(const Elem& x) { return -x; }
    static Elem add(const Elem& x, const Elem& y) { return x + y; }
    static Elem sub(const Elem& x, const Elem& y) { return x - y; }
    static Elem mul(const Elem& x, const Elem& y) { return x * y; }
    static Elem div(const Elem& x, const Elem& y) { return x / y; }
    static Elem from_rational(const mpq_class& q) { return q; }
    static std::string to_string(const Elem& x) { return x.get_str(); }
};

struct PrimeField {
    using Elem = std::uint64_t;
    std::uint64_t p;

    explicit PrimeField(std::uint64_t p_) : p(p_) {
        if (!is_prime(p_)) throw std::invalid_argument("PrimeField: modulus not prime");
    }
    Elem zero() const { return 0; }
    Elem one() const { return 1 % p; }
    bool is_zero(Elem x) const { return x == 0; }
    Elem neg(Elem x) const { return x == 0 ? 0 : p - x; }
    Elem add(Elem x, Elem y) const {
        Elem s = x + y;
        return s >= p ? s - p : s;
    }
    Elem sub(Elem x, Elem y) const { return add(x, neg(y)); }
    Elem mul(Elem x, Elem y) const {
        return static_cast<Elem>((unsigned __int128)x * y % p);
    }
    Elem inv(Elem x) const {
        if (x == 0) throw std::domain_error("PrimeField: inverse of zero");
        // extended Euclid on (x, p)
        std::int64_t t = 0, newt = 1;
        std::int64_t r = static_cast<std::int64_t>(p), newr = static_cast<std::int64_t>(x);
        while (newr != 0) {
            std::int64_t q = r / newr;
            std::int64_t tmp = t - q * newt;
            t = newt; newt = tmp;
            tmp = r - q * newr;
            r = newr; newr = tmp;
        }
        if (t < 0) t += static_cast<std::int64_t>(p);
        return static_cast<Elem>(t);
    }
    Elem div(Elem x, Elem y) const { return mul(x, inv(y)); }
    Elem from_integer(const mpz_class& z) const {
        mpz_class r = z % static_cast<unsigned long>(p);
        if (r < 0) r += static_cast<unsigned long>(p);
        return r.get_ui();
    }
    Elem from_rational(const mpq_class& q) const {
        Elem num = from_integer(q.get_num());
        Elem den = from_integer(q.get_den());
        return div(num, den);
    }
    std::string to_string(Elem x) const { return std::to_string(x); }
};

} // namespace quadstab
