#ifndef SURFPER_FOLIATION_HPP
#define SURFPER_FOLIATION_HPP

#include <vector>

#include "surfper/common.hpp"

// Combinatorial checks on singularity data of measured foliations: prong
// bookkeeping against the Euler characteristic and the fixed-point index of
// each local type.

namespace surfper::foliation {

struct InteriorOrbit {
    long long period = 1;  // number of points in the orbit
    long long prongs = 2;  // >= 3 singular, 2 for a regular marked point
};

struct SingularityData {
    long long genus = 0;
    long long boundary = 0;
    std::vector<InteriorOrbit> interior;
    std::vector<long long> boundary_prongs;  // one entry per boundary component
};

enum class Location { interior, boundary };

struct FixedPointTypeTag {
    long long prongs = 2;    // p
    long long rotation = 0;  // k, 0 <= k < p
    int sign = +1;           // +1 preserves the prongs' transverse pairing
    Location location = Location::interior;
};

// sum over interior orbits of period*(2 - prongs), minus the boundary prong
// counts, must equal twice the Euler characteristic 2-2g-b.
bool euler_poincare_check(const SingularityData& d);

// Rejects genus-0 data with at most 3 boundary components and closed
// surfaces of genus != 1 without a singular (>= 3 prongs) orbit; otherwise
// defers to the prong count check.
bool pa_feasibility(const SingularityData& d);

// Fixed point index by local type; boundary components may carry two fixed
// points, so the result is an unordered multiset of one or two indices.
std::vector<long long> pa_index(const FixedPointTypeTag& tag);

// Optional cross-check: the indices of a complete fixed point list add up to
// the Lefschetz number.
bool index_sum_matches(const std::vector<FixedPointTypeTag>& tags, const Int& L);

}  // namespace surfper::foliation

#endif
