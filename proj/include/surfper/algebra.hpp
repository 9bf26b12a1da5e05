#ifndef SURFPER_ALGEBRA_HPP
#define SURFPER_ALGEBRA_HPP

#include <cstddef>
#include <utility>

#include "surfper/common.hpp"

// Exact linear-algebra-free machinery relating Lefschetz numbers of iterates,
// power sums of the induced action on first homology, and elementary symmetric
// functions of its eigenvalues (Newton's identities), together with the
// symplectic/anti-symplectic symmetry of characteristic polynomial
// coefficients and Moebius inversion of Lefschetz sequences.

namespace surfper::algebra {

// Newton's identities, forward direction.  Given s_1..s_k (signed elementary
// symmetric functions of a degree-k characteristic polynomial, constant terms
// of higher index treated as 0), produce p_1..p_n.
IntVec power_sums_from_elementary(const IntVec& s, std::size_t n);

// Newton's identities, inverse direction.  s_k must come out integral; a
// fractional value is a hard error (it certifies that no integral homology
// action has these power sums) carrying the offending index.
IntVec elementary_from_power_sums(const IntVec& p);

enum class SymmetryKind { proper, improper };

// Coefficient symmetry of the characteristic polynomial of the action on
// H_1(closed genus-g surface): proper (orientation-preserving) maps satisfy
// s_h = s_{2g-h} with s_{2g} = 1; improper maps satisfy
// s_h = (-1)^{g+h} s_{2g-h} with s_{2g} = (-1)^g.  Input is s_1..s_g.
IntVec symplectic_extend(const IntVec& s_half, std::size_t g, SymmetryKind kind);

// Lefschetz number <-> power sum of the homology action, closed genus-g
// surface: L = 2 - p when f^i preserves orientation, L = -p when it reverses.
// On a bounded surface L = 1 - p for either orientation.
enum class SurfaceContext { closed, bounded };
Int lefschetz_from_power_sum(const Int& p, long long i, Orientation o, SurfaceContext c);
Int power_sum_from_lefschetz(const Int& L, long long i, Orientation o, SurfaceContext c);

struct ExtendResult {
    IntVec lefschetz;  // L_1..L_n
    IntVec s;          // the full s_1..s_2g used for the recursion
    bool truncated = false;  // input prefix was longer than g
};

// The first g Lefschetz numbers of a closed genus-g map determine the rest:
// convert to power sums, solve for s_1..s_g, extend by coefficient symmetry,
// run the Newton recursion forward, convert back.
ExtendResult extend_lefschetz(const IntVec& l_prefix, std::size_t g, Orientation o,
                              std::size_t n);

int mobius(long long n);

// Moebius inversion: l_i = sum over d | i of mu(d) * L_{i/d} (the number of
// points of least period exactly i, counted with index, when L is a Lefschetz
// sequence).
IntVec l_values(const IntVec& lefschetz);

// Genus-2 closed forms: given (gamma1, gamma2) = (l_1, l_2) of an
// orientation-preserving finite-order map, the integrality and symmetry
// constraints force (l_3, l_4):
//   gamma3 = (-12 + 4 g1 + 3 g1^2 - g1^3 + 6 g2 - 3 g1 g2) / 2
//   gamma4 = (-24 + 26 g1 + 3 g1^2 - 6 g1^3 + g1^4 + 10 g2 - 10 g1 g2
//             + 2 g1^2 g2 - g2^2) / 2
// Returned exactly as rationals; a half-integral result marks the input pair
// as inadmissible.
std::pair<Rat, Rat> g2_gamma34(const Rat& g1, const Rat& g2);

}  // namespace surfper::algebra

#endif
