#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace higgsgrass {

/// Arbitrary-precision rational number. Always stored in lowest terms with a
/// positive denominator; zero is 0/1. Immutable value semantics on top of GMP.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {} // implicit, so integer literals work in expressions
    Rat(long num, long den);
    Rat(const mpz_class& num, const mpz_class& den);
    explicit Rat(mpq_class q);

    /// Parses "a" or "a/b" with optional leading sign.
    static Rat from_string(std::string_view text);

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    Rat abs() const { return sign() < 0 ? -*this : *this; }
    Rat reciprocal() const;

    /// Exact square root, or false if the value is not a square of a rational.
    bool square_root(Rat& out) const;

    /// "a" when integral, else "a/b".
    std::string to_string() const;

    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

} // namespace higgsgrass
