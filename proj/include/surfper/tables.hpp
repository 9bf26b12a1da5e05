#ifndef SURFPER_TABLES_HPP
#define SURFPER_TABLES_HPP

#include <utility>
#include <vector>

#include "surfper/common.hpp"

// Embedded ground-truth data: genus-2 minimum periods per boundary count,
// the piecewise lower-bound rows for general genus, the gamma tables for the
// genus-2 admissible classes, and the admissible second-iterate values.
// Fixtures are verified against recomputation by the test suite and the
// `verify` subcommand; a mismatch is an error, never silently resolved.

namespace surfper::tables {

// Exact minimum period over all homeomorphisms of the bounded genus-2
// surface, b >= 1 (constant from b = 22 on).
long long ttaabb(long long b, Orientation o);

// Piecewise lower-bound formulas, resolved by maximum over overlapping rows.
long long singular_row(long long g, long long b);            // preserving, g >= 2
long long universo_row(long long g, long long b);            // reversing, g >= 2 even

struct SeriesFixture {
    long long L1 = 0, L2 = 0;   // class label
    long long b_first = 5;
    std::vector<long long> values;  // gamma upper bounds for b = b_first, ...
};
const std::vector<SeriesFixture>& f2_fixture();   // preserving classes
const std::vector<SeriesFixture>& f2r_fixture();  // reversing classes

struct VikingsRow {
    long long gamma1 = 0;
    std::vector<long long> admissible;  // gamma2 values surviving the filter
};
const std::vector<VikingsRow>& vikings_fixture();

// Per-row closed forms for (gamma3, gamma4) as functions of gamma2.
std::pair<Rat, Rat> vikings_row_gamma34(long long gamma1, const Rat& gamma2);

// gamma2 in [0,10] for which gamma3 and gamma4 are non-negative integers.
std::vector<long long> vikings_admissible(long long gamma1);

}  // namespace surfper::tables

#endif
