#include "schur/radical.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace schur {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::pair<Integer, Integer> split_square(const Integer& m) {
    if (m <= 0) {
        throw std::domain_error("split_square requires a positive integer");
    }
    Integer rest = m;
    Integer root = 1;
    Integer free = 1;
    auto strip = [&](const Integer& p) {
        int exponent = 0;
        while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
            rest /= p;
            ++exponent;
        }
        for (int e = 0; e + 1 < exponent; e += 2) {
            root *= p;
        }
        if (exponent % 2 == 1) {
            free *= p;
        }
    };
    strip(2);
    for (Integer p = 3; p * p <= rest; p += 2) {
        strip(p);
    }
    if (rest > 1) {
        if (mpz_perfect_square_p(rest.get_mpz_t())) {
            Integer r;
            mpz_sqrt(r.get_mpz_t(), rest.get_mpz_t());
            root *= r;
        } else {
            free *= rest;
        }
    }
    return {root, free};
}

Radical::Radical(long value) : Radical(Rational(value)) {}

Radical::Radical(const Rational& value) {
    if (value != 0) {
        terms_.emplace(Integer(1), value);
    }
}

Radical Radical::from_sqrt(int sign, const Integer& num, const Integer& den) {
    if (den <= 0) {
        throw std::domain_error("from_sqrt requires a positive denominator");
    }
    if (num < 0) {
        throw std::domain_error("from_sqrt requires a nonnegative numerator");
    }
    if (sign == 0 || num == 0) {
        return {};
    }
    // sqrt(num/den) = sqrt(num*den) / den, then pull the square part out.
    Rational reduced = make_rational(num, den);
    const Integer& p = reduced.get_num();
    const Integer& q = reduced.get_den();
    auto [root_p, free_p] = split_square(p);
    auto [root_q, free_q] = split_square(q);
    // sqrt(p/q) = (root_p/root_q) * sqrt(free_p/free_q)
    //           = (root_p/(root_q*free_q)) * sqrt(free_p*free_q);
    // free_p and free_q are coprime, so their product is square-free.
    Radical out;
    Rational coefficient = make_rational(root_p, root_q * free_q);
    if (sign < 0) {
        coefficient = -coefficient;
    }
    out.terms_.emplace(free_p * free_q, coefficient);
    return out;
}

Radical Radical::term(const Rational& coefficient, const Integer& radicand) {
    if (radicand <= 0) {
        throw std::domain_error("radicand must be positive");
    }
    Radical out;
    if (coefficient == 0) {
        return out;
    }
    auto [root, free] = split_square(radicand);
    Rational c = coefficient * Rational(root);
    c.canonicalize();
    out.terms_.emplace(free, c);
    return out;
}

std::optional<Rational> Radical::as_rational() const {
    if (terms_.empty()) {
        return Rational(0);
    }
    if (terms_.size() == 1 && terms_.begin()->first == 1) {
        return terms_.begin()->second;
    }
    return std::nullopt;
}

int Radical::sign() const {
    if (terms_.empty()) {
        return 0;
    }
    if (terms_.size() == 1) {
        return sgn(terms_.begin()->second);
    }
    // FIXME: multi-term sign falls back to double evaluation; exact
    // comparison needs repeated squaring of the positive/negative parts.
    double v = to_double();
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

double Radical::to_double() const {
    double sum = 0.0;
    for (const auto& [m, c] : terms_) {
        sum += c.get_d() * std::sqrt(m.get_d());
    }
    return sum;
}

std::string Radical::to_string() const {
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::string coeff = c.get_str();
        if (!first) {
            if (coeff.front() == '-') {
                out += '-';
                coeff.erase(0, 1);
            } else {
                out += '+';
            }
        }
        out += coeff;
        if (m != 1) {
            out += "*sqrt(" + m.get_str() + ")";
        }
        first = false;
    }
    return out;
}

namespace {

class TermParser {
public:
    explicit TermParser(const std::string& text) : text_(text) {}

    Radical parse() {
        Radical out;
        skip_space();
        if (at_end()) {
            fail();
        }
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = get() == '-' ? -1 : 1;
                skip_space();
            } else if (!first) {
                fail();
            }
            Integer num = integer();
            Integer den = 1;
            if (!at_end() && peek() == '/') {
                get();
                den = integer();
                if (den == 0) {
                    fail();
                }
            }
            Integer radicand = 1;
            skip_space();
            if (!at_end() && peek() == '*') {
                get();
                expect("sqrt(");
                radicand = integer();
                expect(")");
                if (radicand <= 0) {
                    fail();
                }
            }
            out += Radical::term(make_rational(sign * num, den), radicand);
            skip_space();
            first = false;
        }
        return out;
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    char get() { return text_[pos_++]; }
    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
            ++pos_;
        }
    }
    void expect(const std::string& token) {
        if (text_.compare(pos_, token.size(), token) != 0) {
            fail();
        }
        pos_ += token.size();
    }
    Integer integer() {
        size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            ++pos_;
        }
        if (start == pos_) {
            fail();
        }
        return Integer(text_.substr(start, pos_ - start));
    }
    [[noreturn]] void fail() const {
        throw std::invalid_argument("malformed amplitude: '" + text_ + "'");
    }

    const std::string& text_;
    size_t pos_ = 0;
};

}  // namespace

Radical Radical::parse(const std::string& text) {
    return TermParser(text).parse();
}

void Radical::accumulate(const Integer& radicand, const Rational& coefficient) {
    auto [it, inserted] = terms_.try_emplace(radicand, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

Radical& Radical::operator+=(const Radical& other) {
    for (const auto& [m, c] : other.terms_) {
        accumulate(m, c);
    }
    return *this;
}

Radical& Radical::operator-=(const Radical& other) {
    for (const auto& [m, c] : other.terms_) {
        accumulate(m, -c);
    }
    return *this;
}

Radical& Radical::operator*=(const Radical& other) {
    *this = *this * other;
    return *this;
}

Radical operator*(const Radical& a, const Radical& b) {
    Radical out;
    for (const auto& [m1, c1] : a.terms_) {
        for (const auto& [m2, c2] : b.terms_) {
            // m1 = g*u, m2 = g*v with u, v coprime and square-free, so
            // sqrt(m1*m2) = g*sqrt(u*v) with u*v square-free.
            Integer g;
            mpz_gcd(g.get_mpz_t(), m1.get_mpz_t(), m2.get_mpz_t());
            Integer radicand = (m1 / g) * (m2 / g);
            Rational c = c1 * c2 * Rational(g);
            c.canonicalize();
            out.accumulate(radicand, c);
        }
    }
    return out;
}

Radical operator-(const Radical& a) {
    Radical out = a;
    for (auto& [m, c] : out.terms_) {
        c = -c;
    }
    return out;
}

}  // namespace schur
