#pragma once

#include "qrep/enclosure.hpp"
#include "qrep/system.hpp"

#include <span>
#include <vector>

namespace qrep {

/// Finite digit prefix c_1 ... c_n; digit k belongs to column k.
using DigitWord = std::vector<Digit>;

inline constexpr Position default_depth = 40;

/// Throws DomainError naming the first digit outside its column alphabet.
void check_word(const QSystem& sys, std::span<const Digit> word);

/// Partial sum of the series: sum_k (-1)^{rho_k} a_{i_k,k} prod_{j<k} q_{i_j,j}.
Rational eval_prefix(const QSystem& sys, std::span<const Digit> word);

/// prod_{j<=n} q_{i_j,j}; 1 for the empty word.
Rational prefix_weight(const QSystem& sys, std::span<const Digit> word);

/// The same partial sum evaluated from the signed matrix: signed column
/// entries summed below each digit, times the product of signed entries of
/// the digits before it. Equals eval_prefix exactly.
Rational eval_signed_product(const QSystem& sys, std::span<const Digit> word);

/// Extremes of the tail sum that starts at position n + 1:
///   T = sum_{t > n} (-1)^{rho_t} a_{i_t,t} prod_{n < r < t} q_{i_r,r}
/// over all digit continuations. `min` encloses inf T (always in [-1, 0])
/// and `max` encloses sup T (always in [0, 1]).
struct TailBounds {
    Enclosure min;
    Enclosure max;
};

enum class TailClosure {
    /// Exact tails where the system allows it (eventually periodic finite
    /// columns, or a sign pattern that is constant past the depth);
    /// otherwise the certified truncation below.
    automatic,
    /// Always truncate at the depth and bound the remainder by [-1, 0] and
    /// [0, 1]. Widths are at most prod_{n < r <= D} sup_i q_{i,r}.
    truncated,
};

/// Requires depth > n. The extremes are computed by the exact recursion
///   inf T_t = min_i ((-1)^{rho_t} a_{i,t} + q_{i,t} inf T_{t+1})
/// (and the same with max), which reduces to the extremal-digit closed form
/// whenever the extremal digits are optimal at every position.
TailBounds tail_bounds(const QSystem& sys, Position n, Position depth,
                       TailClosure closure = TailClosure::automatic);

/// Closed form that always takes the extremal digit pair at each position:
///   min = -sum_{t > n, t in N_B} a_{m_t,t} prod q~_{m_r,r}
///   max =  sum_{t > n, t not in N_B} a_{m_t,t} prod q~_{0,r}
/// truncated at depth with the remainder bounded by the product of the
/// retained q's. Coincides with tail_bounds for the classical systems.
TailBounds extremal_tail_bounds(const QSystem& sys, Position n, Position depth);

/// [a', a''] as enclosures of the infimum and supremum of all values.
struct ValueRange {
    Enclosure lo;
    Enclosure hi;

    [[nodiscard]] Enclosure hull() const { return {lo.lo(), hi.hi()}; }
};

ValueRange value_range(const QSystem& sys, Position depth = default_depth);

/// Enclosure of every value reachable by continuing the word, i.e. the
/// outer hull of the cylinder with this base. Requires depth > word length.
Enclosure eval_enclosure(const QSystem& sys, std::span<const Digit> word,
                         Position depth = default_depth);

} // namespace qrep
