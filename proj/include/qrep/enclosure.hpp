#pragma once

#include "qrep/rational.hpp"

#include <iosfwd>
#include <optional>

namespace qrep {

/// Closed rational interval [lo, hi]. All operations are exact on the
/// endpoints, so results contain every pointwise image of the operands.
class Enclosure {
public:
    Enclosure() = default;
    Enclosure(Rational point) : lo_(point), hi_(std::move(point)) {} // NOLINT(implicit)
    /// Throws ConstructionError when lo > hi.
    Enclosure(Rational lo, Rational hi);

    static Enclosure hull(const Rational& a, const Rational& b);

    [[nodiscard]] const Rational& lo() const { return lo_; }
    [[nodiscard]] const Rational& hi() const { return hi_; }
    [[nodiscard]] Rational width() const { return hi_ - lo_; }
    [[nodiscard]] bool is_point() const { return lo_ == hi_; }

    [[nodiscard]] bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
    [[nodiscard]] bool contains(const Enclosure& other) const { return lo_ <= other.lo_ && other.hi_ <= hi_; }
    [[nodiscard]] bool intersects(const Enclosure& other) const { return lo_ <= other.hi_ && other.lo_ <= hi_; }
    [[nodiscard]] bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }

    /// +1 / -1 when the whole interval is strictly positive / negative,
    /// 0 when it is exactly {0}, nullopt when the sign cannot be decided.
    [[nodiscard]] std::optional<int> certain_sign() const;

    friend Enclosure operator+(const Enclosure& a, const Enclosure& b);
    friend Enclosure operator-(const Enclosure& a, const Enclosure& b);
    friend Enclosure operator*(const Enclosure& a, const Enclosure& b);
    /// Throws DomainError if b contains zero.
    friend Enclosure operator/(const Enclosure& a, const Enclosure& b);
    friend Enclosure operator-(const Enclosure& a);

    friend bool operator==(const Enclosure&, const Enclosure&) = default;

private:
    Rational lo_;
    Rational hi_;
};

Enclosure scale(const Enclosure& a, const Rational& k);
Enclosure hull(const Enclosure& a, const Enclosure& b);
/// Clamp both endpoints from below.
Enclosure max(const Enclosure& a, const Rational& floor);
Enclosure min(const Enclosure& a, const Enclosure& b);
Enclosure max(const Enclosure& a, const Enclosure& b);
std::optional<Enclosure> intersection(const Enclosure& a, const Enclosure& b);

std::ostream& operator<<(std::ostream& os, const Enclosure& e);

} // namespace qrep
