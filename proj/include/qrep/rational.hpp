#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace qrep {

/// Exact arbitrary-precision fraction, always kept in lowest terms with a
/// positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}                  // NOLINT(implicit)
    Rational(int value) : value_(static_cast<long>(value)) {} // NOLINT(implicit)

    /// p/q reduced. Throws ConstructionError when q == 0.
    Rational(long p, long q);
    Rational(const mpz_class& p, const mpz_class& q);

    static Rational from_mpq(mpq_class value);

    /// Accepts "p/q" or "p" (optionally signed, surrounding blanks ignored).
    static Rational parse(std::string_view text);

    [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
    [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }
    [[nodiscard]] const mpq_class& mpq() const { return value_; }

    [[nodiscard]] int sign() const { return sgn(value_); }
    [[nodiscard]] bool is_zero() const { return sign() == 0; }
    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }

    /// Always "p/q", q > 0.
    [[nodiscard]] std::string str() const;
    /// Approximate value, for diagnostics only.
    [[nodiscard]] double to_double() const { return value_.get_d(); }

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a);

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

    mpq_class value_;
};

Rational rat(long p, long q);
Rational abs(const Rational& r);
/// base^exp for exp >= 0.
Rational pow(const Rational& base, unsigned long exp);
const Rational& min(const Rational& a, const Rational& b);
const Rational& max(const Rational& a, const Rational& b);

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace qrep
