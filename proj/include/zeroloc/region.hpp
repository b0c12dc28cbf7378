#pragma once

#include <complex>
#include <variant>
#include <vector>

namespace zeroloc {

struct Disk {
    double radius = 0.0;
    bool closed = true;
};

struct Annulus {
    double inner = 0.0;
    double outer = 0.0;
    bool inner_closed = true;
    bool outer_closed = true;
};

class Region;

struct UnionRegion {
    std::vector<Region> members;
};

/// Origin-centered radial region: a disk, an annulus, or a finite union of
/// regions. Membership tests widen every boundary outward by a caller
/// tolerance so numerical roots sitting on a boundary never spuriously
/// escape; the open/closed flags are kept for exact reporting.
class Region {
  public:
    Region(Disk d);
    Region(Annulus a);
    Region(UnionRegion u);

    static Region disk(double radius, bool closed = true);
    static Region annulus(double inner, double outer, bool inner_closed = true,
                          bool outer_closed = true);
    static Region union_of(std::vector<Region> members);

    const std::variant<Disk, Annulus, UnionRegion>& value() const { return v_; }

    bool contains(std::complex<double> z, double tol = 1e-9) const;

    /// Largest radius reachable inside the region (max outer bound).
    double outer_radius() const;

    /// Intersection with the origin-centered disk of the given radius;
    /// clamps outer bounds, recursing into union members.
    Region clipped_to_disk(double radius, bool closed) const;

  private:
    std::variant<Disk, Annulus, UnionRegion> v_;
};

inline bool region_contains(const Region& r, std::complex<double> z, double tol = 1e-9) {
    return r.contains(z, tol);
}

}  // namespace zeroloc
