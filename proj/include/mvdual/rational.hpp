#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mvd {

// Library-wide error categories. parse_error carries a byte offset into the
// offending input; domain_error covers semantic violations (dimension
// mismatch, ill-defined hom, value out of range, ...).
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

using Int = mpz_class;

// Exact rational scalar, always canonical: denominator > 0, gcd(|num|, den) = 1.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors integer literals
    Rat(const Int& n) : v_(n) {}
    Rat(long num, long den) : v_(num, den) {
        if (den == 0) throw domain_error("rational with zero denominator");
        v_.canonicalize();
    }
    Rat(const Int& num, const Int& den) : v_(num, den) {
        if (den == 0) throw domain_error("rational with zero denominator");
        v_.canonicalize();
    }

    // Accepts "p", "-p", "p/q" with arbitrary-precision components.
    static Rat from_string(const std::string& s);

    Int num() const { return v_.get_num(); }
    Int den() const { return v_.get_den(); }

    // "p" when the denominator is 1, else "p/q".
    std::string str() const;

    int sign() const { return sgn(v_); }

    friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ + b.v_)); }
    friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ - b.v_)); }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ * b.v_)); }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (sgn(b.v_) == 0) throw domain_error("rational division by zero");
        return Rat(mpq_class(a.v_ / b.v_));
    }
    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }

    friend bool operator==(const Rat& a, const Rat& b) { return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) == 0; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) { return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) < 0; }
    friend bool operator<=(const Rat& a, const Rat& b) { return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) <= 0; }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator>=(const Rat& a, const Rat& b) { return b <= a; }

    double approx() const { return v_.get_d(); }

private:
    explicit Rat(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

inline Rat abs(const Rat& a) { return a.sign() < 0 ? -a : a; }
inline Rat min(const Rat& a, const Rat& b) { return b < a ? b : a; }
inline Rat max(const Rat& a, const Rat& b) { return a < b ? b : a; }

inline bool in_unit_interval(const Rat& a) { return a.sign() >= 0 && a <= Rat(1); }

// Standard MV operations on [0,1].
inline Rat mv_neg(const Rat& a) { return Rat(1) - a; }
inline Rat mv_oplus(const Rat& a, const Rat& b) { return min(a + b, Rat(1)); }
inline Rat mv_odot(const Rat& a, const Rat& b) { return max(a + b - Rat(1), Rat(0)); }
inline Rat mv_vee(const Rat& a, const Rat& b) { return max(a, b); }
inline Rat mv_wedge(const Rat& a, const Rat& b) { return min(a, b); }

// Coordinate tuples double as points and directions.
using Vec = std::vector<Rat>;
using Point = Vec;

std::string vec_str(const Vec& v);

bool in_unit_cube(const Vec& v);

Rat dot(const Vec& a, const Vec& b);
Vec vsub(const Vec& a, const Vec& b);
Vec vadd(const Vec& a, const Vec& b);
Vec vscale(const Rat& c, const Vec& v);
bool is_zero_vec(const Vec& v);

}  // namespace mvd
