#include "qrep/encoder.hpp"

#include "qrep/errors.hpp"

namespace qrep {

namespace {

constexpr Digit encode_scan_limit = Digit{1} << 16;

PairStatus compare(const Enclosure& left, const Enclosure& right)
{
    if (left.hi() <= right.lo()) {
        return PairStatus::holds;
    }
    if (right.hi() < left.lo()) {
        return PairStatus::fails;
    }
    return PairStatus::undecided;
}

} // namespace

TheoremVerdict theorem_check(const QSystem& sys, Position rank, Position depth, Digit infinite_pairs)
{
    if (rank == 0) {
        throw ParameterError("theorem check needs rank >= 1");
    }
    if (depth <= rank) {
        throw ParameterError("theorem check needs depth > rank");
    }
    TheoremVerdict verdict;
    bool undecided = false;
    for (Position n = 1; n <= rank; ++n) {
        const Column col = sys.column(n);
        const TailBounds after = tail_bounds(sys, n, depth);
        const Enclosure omega1 = after.max;
        const Enclosure omega2 = -after.min;
        const bool negative = sys.in_nb(n);
        const Enclosure& inner = negative ? omega2 : omega1;
        const Enclosure& outer = negative ? omega1 : omega2;
        const Digit pairs = col.max_digit() ? *col.max_digit() : infinite_pairs;
        for (Digit i = 0; i < pairs; ++i) {
            PairCheck check;
            check.n = n;
            check.i = i;
            check.left = scale(Enclosure(Rational(1)) - inner, col.q(i));
            check.right = scale(outer, col.q(i + 1));
            check.status = compare(check.left, check.right);
            if (check.status == PairStatus::fails && !verdict.failure) {
                verdict.failure = std::make_pair(n, i);
            }
            undecided = undecided || check.status == PairStatus::undecided;
            verdict.checks.push_back(std::move(check));
        }
    }
    if (verdict.failure) {
        verdict.overall = TheoremVerdict::Overall::fails_at;
    } else if (undecided) {
        verdict.overall = TheoremVerdict::Overall::undecided;
    } else {
        verdict.overall = TheoremVerdict::Overall::holds_to_depth;
    }
    return verdict;
}

Rational default_tolerance()
{
    return Rational(mpz_class(1), mpz_class(1) << 30);
}

EncodeResult encode(const QSystem& sys, const Rational& x, const Rational& tolerance, std::size_t max_len,
                    Position depth)
{
    if (tolerance.sign() <= 0) {
        throw ParameterError("tolerance must be positive");
    }
    if (depth == 0) {
        throw ParameterError("tail depth must be >= 1");
    }
    const Enclosure range = value_range(sys, depth).hull();
    if (!range.contains(x)) {
        throw RangeError("x = " + x.str() + " outside the value range " + range.lo().str() + " .. "
                         + range.hi().str());
    }

    EncodeResult result;
    Rational prefix(0);
    Rational weight(1);
    TailBounds tails = tail_bounds(sys, 0, depth);

    for (;;) {
        const Position k = result.digits.size();
        const Enclosure value(prefix + weight * tails.min.lo(), prefix + weight * tails.max.hi());
        result.residual = Enclosure(x) - value;
        if (result.residual.width() <= tolerance) {
            result.status = EncodeResult::Status::converged;
            return result;
        }
        if (k >= max_len) {
            result.status = EncodeResult::Status::max_depth_reached;
            return result;
        }

        const Position p = k + 1;
        const Column col = sys.column(p);
        const int sign = sys.term_sign(p);
        TailBounds next = tail_bounds(sys, p, p + depth);
        const Rational& t_lo = next.min.lo();
        const Rational& t_hi = next.max.hi();

        std::optional<Digit> chosen;
        const std::optional<Digit> last = col.max_digit();
        for (Digit c = 0; !last || c <= *last; ++c) {
            if (!last && c >= encode_scan_limit) {
                break;
            }
            const Rational a = col.a(c);
            const Rational q = col.q(c);
            const Rational base = prefix + weight * (sign < 0 ? -a : a);
            if (base + weight * q * t_lo <= x && x <= base + weight * q * t_hi) {
                chosen = c;
                break;
            }
            if (!last) {
                // Bounds valid for every digit j >= c of an infinite column,
                // from q_j <= 1 - a_j and the monotonicity of a_j.
                const Rational rest = Rational(1) - a;
                if (sign > 0 && prefix + weight * (a + rest * t_lo) > x) {
                    break;
                }
                if (sign < 0 && prefix + weight * (-a + rest * t_hi) < x) {
                    break;
                }
            }
        }
        if (!chosen) {
            result.status = EncodeResult::Status::gap;
            result.gap_position = p;
            return result;
        }
        const Rational a = col.a(*chosen);
        prefix += weight * (sign < 0 ? -a : a);
        weight *= col.q(*chosen);
        result.digits.push_back(*chosen);
        tails = std::move(next);
    }
}

bool roundtrip_verify(const QSystem& sys, const Rational& x, const EncodeResult& result, Position depth)
{
    return eval_enclosure(sys, result.digits, depth).contains(x);
}

std::string to_string(PairStatus s)
{
    switch (s) {
    case PairStatus::holds:
        return "holds";
    case PairStatus::fails:
        return "fails";
    case PairStatus::undecided:
        return "undecided";
    }
    return "undecided";
}

std::string to_string(TheoremVerdict::Overall o)
{
    switch (o) {
    case TheoremVerdict::Overall::holds_to_depth:
        return "holds-to-depth";
    case TheoremVerdict::Overall::fails_at:
        return "fails-at";
    case TheoremVerdict::Overall::undecided:
        return "undecided";
    }
    return "undecided";
}

std::string to_string(EncodeResult::Status s)
{
    switch (s) {
    case EncodeResult::Status::converged:
        return "converged";
    case EncodeResult::Status::max_depth_reached:
        return "max-depth-reached";
    case EncodeResult::Status::gap:
        return "gap";
    }
    return "gap";
}

} // namespace qrep
