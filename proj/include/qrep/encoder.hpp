#pragma once

#include "qrep/cylinder.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qrep {

enum class PairStatus { holds, fails, undecided };

/// One inequality of the representation condition system, for column n and
/// the adjacent digits (i, i + 1):
///   n in N_B:     q_{i,n} (1 - omega2) <= q_{i+1,n} omega1
///   n not in N_B: q_{i,n} (1 - omega1) <= q_{i+1,n} omega2
struct PairCheck {
    Position n = 0;
    Digit i = 0;
    PairStatus status = PairStatus::undecided;
    Enclosure left;
    Enclosure right;
};

struct TheoremVerdict {
    enum class Overall { holds_to_depth, fails_at, undecided };

    std::vector<PairCheck> checks;
    Overall overall = Overall::undecided;
    /// First failing (n, i), smallest n then smallest i.
    std::optional<std::pair<Position, Digit>> failure;
};

inline constexpr Digit default_infinite_pairs = 16;

/// Checks every adjacent pair of columns 1..rank (the first
/// `infinite_pairs` pairs of an infinite column). Requires depth > rank.
TheoremVerdict theorem_check(const QSystem& sys, Position rank, Position depth = default_depth,
                             Digit infinite_pairs = default_infinite_pairs);

struct EncodeResult {
    enum class Status { converged, max_depth_reached, gap };

    DigitWord digits;
    /// x minus the value enclosure of the current word.
    Enclosure residual;
    Status status = Status::max_depth_reached;
    /// Position at which no cylinder enclosure contained x.
    std::optional<Position> gap_position;
};

/// 2^-30.
Rational default_tolerance();

/// Greedy cylinder subdivision: at each position take the smallest digit
/// whose cylinder enclosure contains x; stop when the word's enclosure is
/// no wider than `tolerance`. Tails for a word of length k are truncated at
/// position k + depth. Throws RangeError when x lies outside the value
/// range and ParameterError for a non-positive tolerance.
EncodeResult encode(const QSystem& sys, const Rational& x, const Rational& tolerance,
                    std::size_t max_len = 64, Position depth = default_depth);

/// True iff eval_enclosure(result.digits, depth) contains x.
bool roundtrip_verify(const QSystem& sys, const Rational& x, const EncodeResult& result,
                      Position depth = default_depth);

std::string to_string(PairStatus s);
std::string to_string(TheoremVerdict::Overall o);
std::string to_string(EncodeResult::Status s);

} // namespace qrep
