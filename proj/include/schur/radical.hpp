#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace schur {

using Integer = mpz_class;
// mpq_class keeps values canonical (lowest terms, positive denominator,
// zero as 0/1) as long as every constructor goes through make_rational.
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);

// Splits a positive integer m into (s, f) with m = s^2 * f and f square-free.
// Uses trial division; intended for integers whose prime factors are small,
// which is the case for every partial-hook product.
std::pair<Integer, Integer> split_square(const Integer& m);

// An exact real number sum_m c_m * sqrt(m) with square-free radicands m >= 1
// and nonzero rational coefficients. The empty sum is zero. Because the
// square roots of distinct square-free integers are linearly independent
// over Q, structural equality is numeric equality.
class Radical {
public:
    using Terms = std::map<Integer, Rational>;

    Radical() = default;
    Radical(long value);  // NOLINT(google-explicit-constructor)
    explicit Radical(const Rational& value);

    // sign * sqrt(num / den) in normal form.
    static Radical from_sqrt(int sign, const Integer& num, const Integer& den);
    // coefficient * sqrt(radicand) for any positive radicand.
    static Radical term(const Rational& coefficient, const Integer& radicand);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // Value when the number is rational (only the radicand 1 is present).
    std::optional<Rational> as_rational() const;
    int sign() const;

    double to_double() const;
    // "-1/2*sqrt(3)", "1/2", "1/2*sqrt(2)+1/3*sqrt(3)", "0".
    std::string to_string() const;
    // Inverse of to_string.
    static Radical parse(const std::string& text);

    Radical& operator+=(const Radical& other);
    Radical& operator-=(const Radical& other);
    Radical& operator*=(const Radical& other);

    friend Radical operator+(Radical a, const Radical& b) { return a += b; }
    friend Radical operator-(Radical a, const Radical& b) { return a -= b; }
    friend Radical operator*(const Radical& a, const Radical& b);
    friend Radical operator-(const Radical& a);
    friend bool operator==(const Radical& a, const Radical& b) { return a.terms_ == b.terms_; }

private:
    void accumulate(const Integer& radicand, const Rational& coefficient);

    Terms terms_;
};

inline std::ostream& operator<<(std::ostream& os, const Radical& r) { return os << r.to_string(); }

inline Radical radical_from_sqrt(int sign, const Integer& num, const Integer& den) {
    return Radical::from_sqrt(sign, num, den);
}
inline Radical add(const Radical& a, const Radical& b) { return a + b; }
inline Radical mul(const Radical& a, const Radical& b) { return a * b; }
inline Radical neg(const Radical& a) { return -a; }
inline Radical square(const Radical& a) { return a * a; }
inline bool is_zero(const Radical& a) { return a.is_zero(); }
inline double to_float(const Radical& a) { return a.to_double(); }

}  // namespace schur
