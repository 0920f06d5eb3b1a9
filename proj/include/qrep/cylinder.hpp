#pragma once

#include "qrep/expansion.hpp"

#include <string>

namespace qrep {

/// Enclosures of the infimum and supremum of a cylinder (the set of values
/// whose digit word starts with a fixed base).
struct CylinderBounds {
    Enclosure inf;
    Enclosure sup;

    [[nodiscard]] Enclosure hull() const { return {inf.lo(), sup.hi()}; }
};

/// Requires depth > base length. The empty base yields the value range.
CylinderBounds cylinder_bounds(const QSystem& sys, std::span<const Digit> base,
                               Position depth = default_depth);

/// Encloses sup - inf of the cylinder.
Enclosure cylinder_length(const QSystem& sys, std::span<const Digit> base,
                          Position depth = default_depth);

/// Encloses |cylinder(base . c)| / |cylinder(base)| through the length ratio
///   q_{c,n+1} (sup T_{n+2} - inf T_{n+2}) / (sup T_{n+1} - inf T_{n+1}),
/// n = base length, without evaluating either cylinder.
Enclosure metric_ratio(const QSystem& sys, std::span<const Digit> base, Digit c,
                       Position depth = default_depth);

enum class Orientation { left_to_right, right_to_left };
enum class OverlapClass { empty, one_point, interval, undecided };

/// Mutual placement of the sibling cylinders with bases (base, c) and
/// (base, c + 1) at position n = base length + 1.
struct PlacementReport {
    Position position = 0;
    Digit digit = 0;
    Orientation orientation = Orientation::left_to_right;
    OverlapClass overlap = OverlapClass::undecided;

    Enclosure kappa1; // sup D_c - inf D_{c+1}
    Enclosure kappa2; // sup D_{c+1} - inf D_c
    Enclosure nu1;    // -kappa1
    Enclosure nu2;    // -kappa2
    Enclosure omega1; // sup of the tail after n, in [0, 1]
    Enclosure omega2; // -inf of the tail after n, in [0, 1]

    /// kappa1 / prod q_{c_j,j} when n is outside N_B, kappa2 / prod otherwise;
    /// always within [-q_{c,n}, q_{c+1,n}].
    Enclosure normalized_kappa;
    /// Overlap length W when the cylinders overlap, gap length when they are
    /// disjoint, 0 when they touch, and the hull of both readings when the
    /// sign of kappa cannot be decided at this depth.
    Enclosure measure;

    CylinderBounds lower; // cylinder with digit c
    CylinderBounds upper; // cylinder with digit c + 1

    /// The kappa whose sign decides the overlap class.
    [[nodiscard]] const Enclosure& deciding_kappa() const
    {
        return orientation == Orientation::left_to_right ? kappa1 : kappa2;
    }
};

/// Requires c and c + 1 to be valid digits at position base length + 1
/// (DomainError otherwise) and depth > base length + 1.
PlacementReport placement(const QSystem& sys, std::span<const Digit> base, Digit c,
                          Position depth = default_depth);

std::string to_string(Orientation o);
std::string to_string(OverlapClass c);

} // namespace qrep
