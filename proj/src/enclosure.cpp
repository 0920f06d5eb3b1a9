#include "qrep/enclosure.hpp"

#include "qrep/errors.hpp"

#include <algorithm>
#include <array>
#include <ostream>

namespace qrep {

Enclosure::Enclosure(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi))
{
    if (hi_ < lo_) {
        throw ConstructionError("enclosure with lo > hi: [" + lo_.str() + ", " + hi_.str() + "]");
    }
}

Enclosure Enclosure::hull(const Rational& a, const Rational& b)
{
    return a <= b ? Enclosure(a, b) : Enclosure(b, a);
}

std::optional<int> Enclosure::certain_sign() const
{
    if (lo_.sign() > 0) {
        return 1;
    }
    if (hi_.sign() < 0) {
        return -1;
    }
    if (lo_.is_zero() && hi_.is_zero()) {
        return 0;
    }
    return std::nullopt;
}

Enclosure operator+(const Enclosure& a, const Enclosure& b)
{
    return {a.lo_ + b.lo_, a.hi_ + b.hi_};
}

Enclosure operator-(const Enclosure& a, const Enclosure& b)
{
    return {a.lo_ - b.hi_, a.hi_ - b.lo_};
}

Enclosure operator-(const Enclosure& a)
{
    return {-a.hi_, -a.lo_};
}

Enclosure operator*(const Enclosure& a, const Enclosure& b)
{
    if (a.is_point() && b.is_point()) {
        return Enclosure(a.lo_ * b.lo_);
    }
    const std::array<Rational, 4> p{a.lo_ * b.lo_, a.lo_ * b.hi_, a.hi_ * b.lo_, a.hi_ * b.hi_};
    const auto [mn, mx] = std::minmax_element(p.begin(), p.end());
    return {*mn, *mx};
}

Enclosure operator/(const Enclosure& a, const Enclosure& b)
{
    if (b.contains_zero()) {
        throw DomainError("enclosure division by an interval containing zero");
    }
    return a * Enclosure(Rational(1) / b.hi_, Rational(1) / b.lo_);
}

Enclosure scale(const Enclosure& a, const Rational& k)
{
    if (k.sign() >= 0) {
        return {a.lo() * k, a.hi() * k};
    }
    return {a.hi() * k, a.lo() * k};
}

Enclosure hull(const Enclosure& a, const Enclosure& b)
{
    return {min(a.lo(), b.lo()), max(a.hi(), b.hi())};
}

Enclosure max(const Enclosure& a, const Rational& floor)
{
    return {max(a.lo(), floor), max(a.hi(), floor)};
}

Enclosure min(const Enclosure& a, const Enclosure& b)
{
    return {min(a.lo(), b.lo()), min(a.hi(), b.hi())};
}

Enclosure max(const Enclosure& a, const Enclosure& b)
{
    return {max(a.lo(), b.lo()), max(a.hi(), b.hi())};
}

std::optional<Enclosure> intersection(const Enclosure& a, const Enclosure& b)
{
    if (!a.intersects(b)) {
        return std::nullopt;
    }
    return Enclosure(max(a.lo(), b.lo()), min(a.hi(), b.hi()));
}

std::ostream& operator<<(std::ostream& os, const Enclosure& e)
{
    return os << '[' << e.lo() << ", " << e.hi() << ']';
}

} // namespace qrep
