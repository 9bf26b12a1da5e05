#ifndef SURFPER_BOUNDS_HPP
#define SURFPER_BOUNDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "surfper/common.hpp"
#include "surfper/types.hpp"

// Boundary-orbit composition machinery: a bounded map is modelled by the
// finite-order map it restricts to plus a choice of how many cycles of
// boundary circles have each period.  Comparing the resulting profile with
// the exact-period counts of candidate period-one maps yields upper bounds
// (alpha/gamma) and lower bounds (beta) on the minimum period.

namespace surfper::bounds {

struct Composition {
    // counts[j-1] = k_j, the number of cycles of boundary circles of period j
    std::vector<long long> counts;

    long long total() const;                    // sum j*k_j
    std::vector<long long> profile() const;     // x_j = j*k_j
};

// All compositions of b with parts of size at most n, deterministic order.
std::vector<Composition> compositions(long long b, long long n);

struct BoundValue {
    enum class Kind { finite, infinite, horizon_exceeded };
    Kind kind = Kind::finite;
    long long value = 0;  // meaningful for finite; horizon for horizon_exceeded

    static BoundValue fin(long long v) { return {Kind::finite, v}; }
    static BoundValue inf() { return {Kind::infinite, 0}; }
    static BoundValue horizon(long long h) { return {Kind::horizon_exceeded, h}; }
    bool is_finite() const { return kind == Kind::finite; }
    bool operator==(const BoundValue&) const = default;
};

struct BoundReport {
    BoundValue value;
    struct Item {
        std::string rule;
        long long value = 0;
        bool finite = true;
    };
    std::vector<Item> provenance;
    std::optional<Composition> witness_composition;
    std::optional<types::FiniteOrderType> witness_type;
};

// First index i in [1,H] with x_i != y_i (profiles zero-padded to H);
// infinite when no mismatch occurs within the horizon.
BoundValue alpha(const std::vector<long long>& x, const IntVec& y, std::size_t horizon);

// min({i : x_i < y_i} union {x_i - y_i : x_i > y_i}), infinite if x = y.
// x zero-padded to the length of y; the index itself is contributed on the
// low side, the difference on the high side.
BoundValue beta(const std::vector<long long>& x, const IntVec& y);

// max over compositions of b (parts <= b) of alpha against the
// exact-period-count sequence l, padded to the horizon.
BoundValue gamma_upper(const IntVec& l, long long b, std::size_t horizon);

// Horizon used for gamma computations: max(b, 4g+4, twice the largest
// catalog order), overridable via SURFPER_HORIZON.
std::size_t default_horizon(long long g, long long b, Orientation o);

// Minimum over the applicable closed-form upper bounds, each recorded.
BoundReport static_upper(long long g, long long b, Orientation o);

// Lower bound from one constructible type and one boundary composition over
// parts <= order.  Preserving maps cap at the order; reversing maps cap at
// the order when an invariant annulus is available or the half-iterate fixed
// set is finite, and at half the order otherwise.  Composition slots j with
// no exact-period-j orbits must be empty (lifted at j=1 by the annulus).
BoundReport construction_lower(const types::CatalogEntry& entry, long long b,
                               const Composition& k);

// Best lower bound over the whole catalog and all admissible compositions,
// with the realizing type and composition as witness.
BoundReport best_lower_bound(long long g, long long b, Orientation o);

}  // namespace surfper::bounds

#endif
