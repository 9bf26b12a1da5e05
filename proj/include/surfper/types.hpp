#ifndef SURFPER_TYPES_HPP
#define SURFPER_TYPES_HPP

#include <string>
#include <vector>

#include "surfper/common.hpp"

// Finite-order homeomorphism types <n; B; p_1,...,p_R> of closed genus-g
// surfaces: n is the order, B counts families of invariant circles (reversing
// maps only), and the p_i are the periods of the exceptional orbits (every
// other point has period exactly n).

namespace surfper::types {

struct FiniteOrderType {
    Orientation orientation = Orientation::preserving;
    long long order = 1;                 // n, also written sigma
    long long curve_families = 0;        // B
    std::vector<long long> orbit_periods;  // sorted, each 1 <= p_i < n

    bool operator==(const FiniteOrderType& o) const {
        return orientation == o.orientation && order == o.order &&
               curve_families == o.curve_families && orbit_periods == o.orbit_periods;
    }
    std::string display() const;
};

FiniteOrderType make_type(Orientation o, long long n, std::vector<long long> periods,
                          long long curve_families = 0);

// Structural checks only (existence lives in the groups module): each p_i a
// proper divisor of n, preserving => B = 0, reversing => n even, and the
// quotient rank T = 2 - B - R + (2g-2+sum p_i)/n a non-negative integer.
std::vector<std::string> validate_type(const FiniteOrderType& t, long long g);

// Lefschetz numbers of iterates via fixed-point counting: when f^i = Id the
// value is the Euler characteristic 2-2g; otherwise preserving iterates
// contribute the cardinality of Fix(f^i) = sum of p_j over p_j | i, reversing
// odd iterates contribute 0 (their fixed sets are index-zero circles), and
// reversing even iterates count like preserving ones.
IntVec lefschetz_of_type(const FiniteOrderType& t, long long g, std::size_t horizon);

// Minimum period of the bounded map obtained by deleting the s smallest
// orbits: the smallest surviving orbit period, or n when none survives.
long long cifra_min_period(const FiniteOrderType& t, std::size_t s);

struct CatalogEntry {
    FiniteOrderType type;
    long long genus = 0;
    bool has_invariant_annulus = false;
    int dim_fix_half = 0;  // dim Fix(f^{sigma/2}), reversing only; 1 = unknown/curves
    std::string source;    // construction family identifier
};

// Constructible types used by the lower-bound engine, with construction
// metadata.  Every entry passes the groups-module existence checker.
std::vector<CatalogEntry> catalog(long long g, Orientation o);

}  // namespace surfper::types

#endif
