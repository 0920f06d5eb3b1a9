#include "qrep/expansion.hpp"

#include "qrep/errors.hpp"

#include <optional>

namespace qrep {

namespace {

constexpr Digit scan_limit = Digit{1} << 16;

Rational signed_value(int sign, const Rational& v)
{
    return sign < 0 ? -v : v;
}

// Upper bound of digit scans over infinite alphabets. Reaching it means the
// column decays too slowly to locate an extremum.
[[noreturn]] void scan_exhausted(const Column& col)
{
    throw InternalError("digit scan exceeded " + std::to_string(scan_limit) + " digits in column "
                        + col.describe());
}

// min_i (s a_i + q_i T) for T in [-1, 0].
Rational step_min(const Column& col, int sign, const Rational& t)
{
    if (col.shape() == Column::Shape::uniform) {
        const Digit i = sign > 0 ? 0 : *col.max_digit();
        return signed_value(sign, col.a(i)) + col.q(i) * t;
    }
    if (col.is_finite()) {
        const Digit m = *col.max_digit();
        Rational best = signed_value(sign, col.a(0)) + col.q(0) * t;
        for (Digit i = 1; i <= m; ++i) {
            Rational v = signed_value(sign, col.a(i)) + col.q(i) * t;
            if (v < best) {
                best = std::move(v);
            }
        }
        return best;
    }
    if (sign < 0) {
        // -a_i + q_i T decreases in i for T in [-1, 0]; the infimum is the limit.
        return Rational(-1);
    }
    // a_j + q_j T >= a_j + (1 - a_j) T, which grows with j; stop once that
    // lower bound reaches the best value seen.
    Rational best = col.q(0) * t;
    for (Digit i = 1; i < scan_limit; ++i) {
        const Rational a = col.a(i);
        if (a + (Rational(1) - a) * t >= best) {
            return best;
        }
        Rational v = a + col.q(i) * t;
        if (v < best) {
            best = std::move(v);
        }
    }
    scan_exhausted(col);
}

// max_i (s a_i + q_i T) for T in [0, 1].
Rational step_max(const Column& col, int sign, const Rational& t)
{
    if (col.shape() == Column::Shape::uniform) {
        const Digit i = sign > 0 ? *col.max_digit() : 0;
        return signed_value(sign, col.a(i)) + col.q(i) * t;
    }
    if (col.is_finite()) {
        const Digit m = *col.max_digit();
        Rational best = signed_value(sign, col.a(0)) + col.q(0) * t;
        for (Digit i = 1; i <= m; ++i) {
            Rational v = signed_value(sign, col.a(i)) + col.q(i) * t;
            if (best < v) {
                best = std::move(v);
            }
        }
        return best;
    }
    if (sign > 0) {
        return Rational(1);
    }
    Rational best = col.q(0) * t;
    for (Digit i = 1; i < scan_limit; ++i) {
        const Rational a = col.a(i);
        if (-a + (Rational(1) - a) * t <= best) {
            return best;
        }
        Rational v = -a + col.q(i) * t;
        if (best < v) {
            best = std::move(v);
        }
    }
    scan_exhausted(col);
}

Enclosure step(const Column& col, int sign, const Enclosure& t, bool minimize)
{
    // Both extremal maps are non-decreasing in T, so endpoints map to endpoints.
    if (minimize) {
        return {step_min(col, sign, t.lo()), step_min(col, sign, t.hi())};
    }
    return {step_max(col, sign, t.lo()), step_max(col, sign, t.hi())};
}

// Exact inf (minimize) or sup of the tail starting at `start`, for a
// system whose columns and signs repeat with `period` from `start` on and
// whose columns in one period are all finite. Policy iteration over the
// digit chosen at each phase of the period.
Rational periodic_extreme(const QSystem& sys, Position start, std::uint64_t period, bool minimize)
{
    std::vector<Column> cols;
    std::vector<int> signs;
    std::vector<Digit> policy;
    cols.reserve(period);
    for (std::uint64_t k = 0; k < period; ++k) {
        cols.push_back(sys.column(start + k));
        signs.push_back(sys.term_sign(start + k));
        const bool take_last = (signs.back() < 0) == minimize;
        policy.push_back(take_last ? *cols.back().max_digit() : 0);
    }

    std::vector<Rational> value(period + 1);
    auto better = [minimize](const Rational& cand, const Rational& cur) {
        return minimize ? cand < cur : cur < cand;
    };

    for (;;) {
        Rational offset(0);
        Rational slope(1);
        for (std::uint64_t k = 0; k < period; ++k) {
            offset += slope * signed_value(signs[k], cols[k].a(policy[k]));
            slope *= cols[k].q(policy[k]);
        }
        if (slope == Rational(1)) {
            // Only single-digit columns in the period: every term is zero.
            value[period] = Rational(0);
        } else {
            value[period] = offset / (Rational(1) - slope);
        }
        for (std::uint64_t k = period; k-- > 0;) {
            value[k] = signed_value(signs[k], cols[k].a(policy[k])) + cols[k].q(policy[k]) * value[k + 1];
        }

        bool changed = false;
        for (std::uint64_t k = 0; k < period; ++k) {
            const Digit m = *cols[k].max_digit();
            Rational current = signed_value(signs[k], cols[k].a(policy[k])) + cols[k].q(policy[k]) * value[k + 1];
            for (Digit i = 0; i <= m; ++i) {
                Rational v = signed_value(signs[k], cols[k].a(i)) + cols[k].q(i) * value[k + 1];
                if (better(v, current)) {
                    current = std::move(v);
                    policy[k] = i;
                    changed = true;
                }
            }
        }
        if (!changed) {
            return value[0];
        }
    }
}

struct Boundary {
    Position position; // first position not covered by the backward recursion
    TailBounds tails;  // tails starting at `position`
};

std::optional<Boundary> exact_periodic_boundary(const QSystem& sys, Position first)
{
    const auto per = sys.periodicity();
    if (!per) {
        return std::nullopt;
    }
    const Position start = std::max<Position>(first, per->start);
    for (std::uint64_t k = 0; k < per->period; ++k) {
        if (!sys.column(start + k).is_finite()) {
            return std::nullopt;
        }
    }
    return Boundary{start,
                    {Enclosure(periodic_extreme(sys, start, per->period, true)),
                     Enclosure(periodic_extreme(sys, start, per->period, false))}};
}

Boundary truncation_boundary(const QSystem& sys, Position depth, TailClosure closure)
{
    if (closure == TailClosure::automatic) {
        // A constant sign pattern past the depth pins the tail extremes:
        // all-positive tails range over [0, 1], all-negative over [-1, 0].
        if (const auto all_negative = sys.nb().constant_beyond(depth)) {
            if (*all_negative) {
                return {depth + 1, {Enclosure(Rational(-1)), Enclosure(Rational(0))}};
            }
            return {depth + 1, {Enclosure(Rational(0)), Enclosure(Rational(1))}};
        }
    }
    return {depth + 1, {Enclosure(Rational(-1), Rational(0)), Enclosure(Rational(0), Rational(1))}};
}

} // namespace

void check_word(const QSystem& sys, std::span<const Digit> word)
{
    for (std::size_t k = 0; k < word.size(); ++k) {
        const Column col = sys.column(k + 1);
        if (!col.valid_digit(word[k])) {
            throw DomainError("digit " + std::to_string(word[k]) + " at position " + std::to_string(k + 1)
                              + " outside alphabet of column " + col.describe());
        }
    }
}

Rational eval_prefix(const QSystem& sys, std::span<const Digit> word)
{
    check_word(sys, word);
    Rational sum(0);
    Rational weight(1);
    for (std::size_t k = 0; k < word.size(); ++k) {
        const Position n = k + 1;
        const Column col = sys.column(n);
        sum += signed_value(sys.term_sign(n), col.a(word[k]) * weight);
        weight *= col.q(word[k]);
    }
    return sum;
}

Rational prefix_weight(const QSystem& sys, std::span<const Digit> word)
{
    check_word(sys, word);
    Rational weight(1);
    for (std::size_t k = 0; k < word.size(); ++k) {
        weight *= sys.column(k + 1).q(word[k]);
    }
    return weight;
}

Rational eval_signed_product(const QSystem& sys, std::span<const Digit> word)
{
    check_word(sys, word);
    Rational sum(0);
    Rational signed_weight(1);
    for (std::size_t k = 0; k < word.size(); ++k) {
        const Position n = k + 1;
        const Column col = sys.column(n);
        const int sign = sys.column_sign(n);
        Rational below(0);
        for (Digit i = 0; i < word[k]; ++i) {
            below += signed_value(sign, col.q(i));
        }
        sum += below * signed_weight;
        signed_weight *= signed_value(sign, col.q(word[k]));
    }
    return sum;
}

TailBounds tail_bounds(const QSystem& sys, Position n, Position depth, TailClosure closure)
{
    if (depth <= n) {
        throw ParameterError("truncation depth " + std::to_string(depth) + " must exceed position "
                             + std::to_string(n));
    }
    const Position first = n + 1;
    std::optional<Boundary> boundary;
    if (closure == TailClosure::automatic) {
        boundary = exact_periodic_boundary(sys, first);
    }
    if (!boundary) {
        boundary = truncation_boundary(sys, depth, closure);
    }
    TailBounds tails = boundary->tails;
    for (Position t = boundary->position; t-- > first;) {
        const Column col = sys.column(t);
        const int sign = sys.term_sign(t);
        tails.min = step(col, sign, tails.min, true);
        tails.max = step(col, sign, tails.max, false);
    }
    return tails;
}

TailBounds extremal_tail_bounds(const QSystem& sys, Position n, Position depth)
{
    if (depth <= n) {
        throw ParameterError("truncation depth " + std::to_string(depth) + " must exceed position "
                             + std::to_string(n));
    }
    Rational low_sum(0);
    Rational high_sum(0);
    Rational low_weight(1);
    Rational high_weight(1);
    for (Position t = n + 1; t <= depth; ++t) {
        const ExtremalPair lo = extremal_low(sys, t);
        const ExtremalPair hi = extremal_high(sys, t);
        if (sys.in_nb(t)) {
            low_sum -= lo.a * low_weight;
        } else {
            high_sum += hi.a * high_weight;
        }
        low_weight *= lo.q;
        high_weight *= hi.q;
    }
    return {{low_sum - low_weight, low_sum}, {high_sum, high_sum + high_weight}};
}

ValueRange value_range(const QSystem& sys, Position depth)
{
    if (depth == 0) {
        throw ParameterError("truncation depth must be >= 1");
    }
    const TailBounds t = tail_bounds(sys, 0, depth);
    return {t.min, t.max};
}

Enclosure eval_enclosure(const QSystem& sys, std::span<const Digit> word, Position depth)
{
    const Rational prefix = eval_prefix(sys, word);
    const Rational weight = prefix_weight(sys, word);
    const TailBounds t = tail_bounds(sys, word.size(), depth);
    return {prefix + weight * t.min.lo(), prefix + weight * t.max.hi()};
}

} // namespace qrep
