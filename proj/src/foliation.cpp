#include "surfper/foliation.hpp"

#include <numeric>

namespace surfper::foliation {

bool euler_poincare_check(const SingularityData& d) {
    if (d.genus < 0 || d.boundary < 0) return false;
    if ((long long)d.boundary_prongs.size() != d.boundary) return false;
    long long lhs = 0;
    for (const InteriorOrbit& o : d.interior) {
        if (o.period < 1 || o.prongs < 1) return false;
        lhs += o.period * (2 - o.prongs);
    }
    for (long long p : d.boundary_prongs) {
        if (p < 1) return false;
        lhs -= p;
    }
    return lhs == 2 * (2 - 2 * d.genus - d.boundary);
}

bool pa_feasibility(const SingularityData& d) {
    if (d.genus == 0 && d.boundary <= 3) return false;
    if (d.boundary == 0 && d.genus != 1) {
        bool singular = false;
        for (const InteriorOrbit& o : d.interior) singular |= o.prongs >= 3;
        if (!singular) return false;
    }
    return euler_poincare_check(d);
}

std::vector<long long> pa_index(const FixedPointTypeTag& t) {
    if (t.prongs < 1 || t.rotation < 0 || t.rotation >= t.prongs)
        throw ConstraintError("pa_index: need 0 <= k < p");
    const bool even = t.prongs % 2 == 0;
    if (t.location == Location::interior) {
        if (t.sign > 0) return {t.rotation == 0 ? 1 - t.prongs : 1};
        if (even && t.rotation == 0) return {-1};
        if (even && t.rotation == 1) return {1};
        if (!even && t.rotation == 0) return {0};
        throw ConstraintError("pa_index: unrealizable sign/rotation pair");
    }
    if (t.sign > 0) return {t.rotation == 0 ? -t.prongs : 0};
    if (even && t.rotation == 0) return {0, 0};
    if (even && t.rotation == 1) return {1, 1};
    if (!even && t.rotation == 0) return {1, 0};
    throw ConstraintError("pa_index: unrealizable sign/rotation pair");
}

bool index_sum_matches(const std::vector<FixedPointTypeTag>& tags, const Int& L) {
    Int s = 0;
    for (const FixedPointTypeTag& t : tags)
        for (long long v : pa_index(t)) s += v;
    return s == L;
}

}  // namespace surfper::foliation
