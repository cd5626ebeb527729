#pragma once

#include <complex>
#include <vector>

#include "hardylab/maps.hpp"

namespace hardylab::cayley {

using Complex = std::complex<double>;

// Conformal exchange between the unit disc and the upper half-plane:
// to_halfplane(w) = i(1+w)/(1-w), to_disc(z) = (z-i)/(z+i). They swap the
// distinguished boundary points 1 and infinity.
Complex to_halfplane(Complex w);  // DomainError outside the open disc
Complex to_disc(Complex z);      // DomainError outside the open half-plane

Complex to_halfplane_deriv(Complex w);  // 2i/(1-w)^2
Complex to_disc_deriv(Complex z);       // 2i/(z+i)^2

// Approach regions for the two distinguished boundary points: around
// infinity, |Re z| < opening * Im z; around 1 in the disc,
// |w - 1| < opening * (1 - |w|).
enum class SectorKind { HalfPlaneAtInfinity, DiscAtOne };

struct Sector {
  SectorKind kind;
  double opening;
};

Sector sector_at_infinity(double opening);  // opening > 0
Sector sector_at_one(double opening);       // opening > 1

bool sector_contains(const Sector& s, Complex z);

enum class Target { InfinityInHalfPlane, OneInDisc };

// n points marching toward the target inside the standard approach region
// (the vertical ray for infinity, its Cayley image for 1), strictly ordered
// by decreasing distance to the target. Radii run geometrically from 10 to
// 1e6.
std::vector<Complex> nt_path(Target target, double opening, int n);

// Ray of constant slope Re z / Im z = slope with the same radii schedule;
// used as the second ray of the two-ray angular-derivative check.
std::vector<Complex> nt_ray(double slope, int n);

// Transport of a half-plane self-map to the disc (or back). The conjugated
// map carries a closed-form derivative whenever the source does.
maps::AnalyticMap conjugate_map(const maps::AnalyticMap& m);

}  // namespace hardylab::cayley
