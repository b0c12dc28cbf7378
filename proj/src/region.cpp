#include "zeroloc/region.hpp"

#include <algorithm>
#include <stdexcept>

namespace zeroloc {

namespace {

void validate(const Disk& d) {
    if (!(d.radius >= 0.0)) throw std::invalid_argument("Disk: radius must be >= 0");
}

void validate(const Annulus& a) {
    if (!(a.inner >= 0.0)) throw std::invalid_argument("Annulus: inner must be >= 0");
    if (!(a.inner <= a.outer)) throw std::invalid_argument("Annulus: inner must be <= outer");
}

}  // namespace

Region::Region(Disk d) : v_(d) { validate(d); }

Region::Region(Annulus a) : v_(a) { validate(a); }

Region::Region(UnionRegion u) : v_(std::move(u)) {
    if (std::get<UnionRegion>(v_).members.empty())
        throw std::invalid_argument("UnionRegion: must have at least one member");
}

Region Region::disk(double radius, bool closed) { return Region{Disk{radius, closed}}; }

Region Region::annulus(double inner, double outer, bool inner_closed, bool outer_closed) {
    return Region{Annulus{inner, outer, inner_closed, outer_closed}};
}

Region Region::union_of(std::vector<Region> members) {
    return Region{UnionRegion{std::move(members)}};
}

bool Region::contains(std::complex<double> z, double tol) const {
    const double m = std::abs(z);
    return std::visit(
        [&](const auto& r) -> bool {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, Disk>) {
                return m <= r.radius + tol;
            } else if constexpr (std::is_same_v<T, Annulus>) {
                return m >= r.inner - tol && m <= r.outer + tol;
            } else {
                return std::any_of(r.members.begin(), r.members.end(),
                                   [&](const Region& sub) { return sub.contains(z, tol); });
            }
        },
        v_);
}

double Region::outer_radius() const {
    return std::visit(
        [](const auto& r) -> double {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, Disk>) {
                return r.radius;
            } else if constexpr (std::is_same_v<T, Annulus>) {
                return r.outer;
            } else {
                double m = 0.0;
                for (const Region& sub : r.members) m = std::max(m, sub.outer_radius());
                return m;
            }
        },
        v_);
}

Region Region::clipped_to_disk(double radius, bool closed) const {
    return std::visit(
        [&](const auto& r) -> Region {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, Disk>) {
                if (r.radius < radius) return Region{r};
                if (r.radius == radius) return Region{Disk{radius, r.closed && closed}};
                return Region{Disk{radius, closed}};
            } else if constexpr (std::is_same_v<T, Annulus>) {
                Annulus out = r;
                if (out.outer > radius) {
                    out.outer = radius;
                    out.outer_closed = closed;
                } else if (out.outer == radius) {
                    out.outer_closed = out.outer_closed && closed;
                }
                if (out.inner > out.outer) out.inner = out.outer;  // collapsed to a circle
                return Region{out};
            } else {
                std::vector<Region> clipped;
                clipped.reserve(r.members.size());
                for (const Region& sub : r.members)
                    clipped.push_back(sub.clipped_to_disk(radius, closed));
                return Region::union_of(std::move(clipped));
            }
        },
        v_);
}

}  // namespace zeroloc
