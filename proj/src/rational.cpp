#include "qrep/rational.hpp"

#include "qrep/errors.hpp"

#include <cctype>
#include <ostream>

namespace qrep {

namespace {

bool is_integer_literal(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        s.remove_prefix(1);
    }
    if (s.empty()) {
        return false;
    }
    for (char ch : s) {
        if (std::isdigit(static_cast<unsigned char>(ch)) == 0) {
            return false;
        }
    }
    return true;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())) != 0) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())) != 0) {
        s.remove_suffix(1);
    }
    return s;
}

mpz_class parse_integer(std::string_view s)
{
    if (!is_integer_literal(s)) {
        throw ConstructionError("malformed integer '" + std::string(s) + "'");
    }
    if (s.front() == '+') {
        s.remove_prefix(1);
    }
    return mpz_class(std::string(s), 10);
}

} // namespace

Rational::Rational(long p, long q)
{
    if (q == 0) {
        throw ConstructionError("rational with zero denominator");
    }
    value_ = mpq_class(p, q);
    value_.canonicalize();
}

Rational::Rational(const mpz_class& p, const mpz_class& q)
{
    if (q == 0) {
        throw ConstructionError("rational with zero denominator");
    }
    value_ = mpq_class(p, q);
    value_.canonicalize();
}

Rational Rational::from_mpq(mpq_class value)
{
    return Rational(std::move(value));
}

Rational Rational::parse(std::string_view text)
{
    const std::string_view s = trim(text);
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(s), mpz_class(1));
    }
    const mpz_class num = parse_integer(trim(s.substr(0, slash)));
    const std::string_view den_text = trim(s.substr(slash + 1));
    if (!den_text.empty() && den_text.front() == '-') {
        // "p/-q" is tolerated the same way rat(p, -q) is.
        return Rational(-num, parse_integer(den_text.substr(1)));
    }
    return Rational(num, parse_integer(den_text));
}

std::string Rational::str() const
{
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o)
{
    value_ += o.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o)
{
    value_ -= o.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o)
{
    value_ *= o.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero()) {
        throw DomainError("division by zero");
    }
    value_ /= o.value_;
    return *this;
}

Rational operator-(const Rational& a)
{
    return Rational(mpq_class(-a.value_));
}

Rational rat(long p, long q)
{
    return Rational(p, q);
}

Rational abs(const Rational& r)
{
    return r.sign() < 0 ? -r : r;
}

Rational pow(const Rational& base, unsigned long exp)
{
    mpz_class num;
    mpz_class den;
    mpz_pow_ui(num.get_mpz_t(), base.mpq().get_num_mpz_t(), exp);
    mpz_pow_ui(den.get_mpz_t(), base.mpq().get_den_mpz_t(), exp);
    return Rational(num, den);
}

const Rational& min(const Rational& a, const Rational& b)
{
    return b < a ? b : a;
}

const Rational& max(const Rational& a, const Rational& b)
{
    return a < b ? b : a;
}

std::ostream& operator<<(std::ostream& os, const Rational& r)
{
    return os << r.str();
}

} // namespace qrep
