#include "qrep/cylinder.hpp"

#include "qrep/errors.hpp"

namespace qrep {

namespace {

Enclosure tail_spread(const TailBounds& t)
{
    return t.max - t.min;
}

CylinderBounds child_bounds(const Rational& prefix, const Rational& weight, int sign, const Column& col,
                            Digit c, const TailBounds& after)
{
    const Rational a = sign < 0 ? -col.a(c) : col.a(c);
    const Rational wq = weight * col.q(c);
    const Rational base = prefix + weight * a;
    return {Enclosure(base) + scale(after.min, wq), Enclosure(base) + scale(after.max, wq)};
}

} // namespace

CylinderBounds cylinder_bounds(const QSystem& sys, std::span<const Digit> base, Position depth)
{
    const Rational prefix = eval_prefix(sys, base);
    const Rational weight = prefix_weight(sys, base);
    const TailBounds t = tail_bounds(sys, base.size(), depth);
    return {Enclosure(prefix) + scale(t.min, weight), Enclosure(prefix) + scale(t.max, weight)};
}

Enclosure cylinder_length(const QSystem& sys, std::span<const Digit> base, Position depth)
{
    const Rational weight = prefix_weight(sys, base);
    return scale(tail_spread(tail_bounds(sys, base.size(), depth)), weight);
}

Enclosure metric_ratio(const QSystem& sys, std::span<const Digit> base, Digit c, Position depth)
{
    check_word(sys, base);
    const Position n = base.size();
    const Column next = sys.column(n + 1);
    if (!next.valid_digit(c)) {
        throw DomainError("digit " + std::to_string(c) + " outside alphabet at position " + std::to_string(n + 1));
    }
    if (depth <= n + 1) {
        throw ParameterError("metric ratio needs depth > rank + 1");
    }
    const Enclosure parent = tail_spread(tail_bounds(sys, n, depth));
    const Enclosure child = tail_spread(tail_bounds(sys, n + 1, depth));
    if (parent.lo().sign() <= 0) {
        throw InternalError("parent cylinder length not certified positive at depth " + std::to_string(depth));
    }
    return scale(child, next.q(c)) / parent;
}

PlacementReport placement(const QSystem& sys, std::span<const Digit> base, Digit c, Position depth)
{
    check_word(sys, base);
    const Position n = base.size() + 1;
    const Column col = sys.column(n);
    if (!col.valid_digit(c) || !col.valid_digit(c + 1)) {
        throw DomainError("digits " + std::to_string(c) + " and " + std::to_string(c + 1)
                          + " are not both in the alphabet of column " + std::to_string(n));
    }
    const Rational prefix = eval_prefix(sys, base);
    const Rational weight = prefix_weight(sys, base);
    const TailBounds after = tail_bounds(sys, n, depth);
    const int sign = sys.term_sign(n);
    const Rational qc = col.q(c);
    const Rational qn = col.q(c + 1);

    PlacementReport r;
    r.position = n;
    r.digit = c;
    r.orientation = sign < 0 ? Orientation::right_to_left : Orientation::left_to_right;
    r.omega1 = after.max;
    r.omega2 = -after.min;

    const Rational signed_qc = sign < 0 ? -qc : qc;
    const Enclosure k1 = Enclosure(-signed_qc) + scale(r.omega1, qc) + scale(r.omega2, qn);
    const Enclosure k2 = Enclosure(signed_qc) + scale(r.omega1, qn) + scale(r.omega2, qc);
    r.kappa1 = scale(k1, weight);
    r.kappa2 = scale(k2, weight);
    r.nu1 = -r.kappa1;
    r.nu2 = -r.kappa2;
    r.normalized_kappa = r.orientation == Orientation::left_to_right ? k1 : k2;

    r.lower = child_bounds(prefix, weight, sign, col, c, after);
    r.upper = child_bounds(prefix, weight, sign, col, c + 1, after);

    const Enclosure len_lower = r.lower.sup - r.lower.inf;
    const Enclosure len_upper = r.upper.sup - r.upper.inf;
    const Enclosure common = max(min(r.lower.sup, r.upper.sup) - max(r.lower.inf, r.upper.inf), Rational(0));
    const Enclosure union_length = max(len_lower + len_upper - common, Rational(0));
    const Enclosure gap = max(-r.deciding_kappa(), Rational(0));

    const auto s = r.deciding_kappa().certain_sign();
    if (!s) {
        r.overlap = OverlapClass::undecided;
        r.measure = hull(union_length, gap);
    } else if (*s > 0) {
        r.overlap = OverlapClass::interval;
        r.measure = union_length;
    } else if (*s < 0) {
        r.overlap = OverlapClass::empty;
        r.measure = gap;
    } else {
        r.overlap = OverlapClass::one_point;
        r.measure = Enclosure(Rational(0));
    }
    return r;
}

std::string to_string(Orientation o)
{
    return o == Orientation::left_to_right ? "left-to-right" : "right-to-left";
}

std::string to_string(OverlapClass c)
{
    switch (c) {
    case OverlapClass::empty:
        return "empty";
    case OverlapClass::one_point:
        return "one-point";
    case OverlapClass::interval:
        return "interval";
    case OverlapClass::undecided:
        return "undecided";
    }
    return "undecided";
}

} // namespace qrep
