#ifndef SURFPER_GROUPS_HPP
#define SURFPER_GROUPS_HPP

#include <optional>
#include <string>
#include <vector>

#include "surfper/common.hpp"
#include "surfper/types.hpp"

// Signature calculus for planar discontinuous groups and existence deciders
// for order-preserving epimorphisms onto Z_n whose kernel is an orientable
// surface group — equivalently, existence of finite-order maps of given type.

namespace surfper::groups {

struct Signature {
    int sign = +1;  // +1 orientable, -1 non-orientable
    long long T = 0;  // twice the genus when orientable, crosscap count otherwise
    std::vector<long long> periods;  // m_1 <= ... <= m_R, each >= 2
    // B boundary cycles, each listing its corner periods m_{i,j} (usually empty)
    std::vector<std::vector<long long>> boundary;

    long long R() const { return (long long)periods.size(); }
    long long B() const { return (long long)boundary.size(); }
    bool orientable() const { return sign > 0 && boundary.empty(); }
    std::string display() const;
};

// mu = 2 - T - B - sum(1 - 1/m_i) - 1/2 sum sum (1 - 1/m_{i,j});
// behaves like an orbifold Euler characteristic (zero in the Euclidean cases,
// negative in the hyperbolic ones).
Rat mu_signature(const Signature& s);

// mu(subgroup) = [G : H] * mu(G)
Rat riemann_hurwitz(const Rat& mu_g, long long index);

// Type <n;B;p_1..p_R> on genus g <-> signature (theta, T, [n/p_i], B); the
// genus of the covering surface is 1 + (n(T+B+R-2) - sum n/m_i)/2.
Signature type_signature_bridge(const types::FiniteOrderType& t, long long g);
long long genus_of(const Signature& s, long long n);

// Orientable surface-kernel criterion (Fuchsian case): lcm stability under
// omission, M | n (= n when T = 0), R != 1 (>= 3 when T = 0), and even
// multiplicity of the maximal 2-power among the m_i.
bool harvey(const Signature& s, long long n);

// The five Euclidean orientable cases admitting a surface-group kernel.
bool paratoro_euclidean(const Signature& s, long long n);

// gcd(G,n) = gcd(n, n/m_1,...,n/m_R) and p(G,n) = 1/2 sum n/m_i; each n/m_i
// divides n, so including n only matters for an empty period list (gcd n, p 0).
long long gcd_G_n(const Signature& s, long long n);
Rat p_G_n(const Signature& s, long long n);

// Non-orientable analogue with orientable kernel: n even; m_i | n; gcd(G,n)
// even; (B >= 1 or p(G,n) = T+1 mod 2) => n/2 odd; T+B = 1 => gcd(G,n) = 2.
bool gb_exists(const Signature& s, long long n);

struct EpimorphismWitness {
    long long n = 0;
    std::vector<long long> sigma;  // images of the elliptic generators
    std::vector<long long> tau;    // handle/crosscap generators
    std::vector<long long> pi;     // boundary connectors
    std::vector<long long> rho;    // one reflection per boundary cycle
};

// Check relations mod n, surjectivity, exact orders of torsion generators,
// and (for non-orientable signatures) the parity condition that makes the
// kernel orientable: n even and a generator maps to an odd residue exactly
// when it reverses orientation.
bool verify_witness(const Signature& s, const EpimorphismWitness& w,
                    bool kernel_orientable_required);

// Constructive witness for gb-positive cases: the closed-form generator
// assignments, with a bounded fallback search when the closed form needs a
// different balancing residue.
EpimorphismWitness epimorphism_witness(const Signature& s, long long n);

// Exhaustive search over residue assignments (target abelian, so a
// homomorphism is just residues satisfying the linearized relations).
// Budget: R <= 6, n <= 60, T+B <= 4.
bool brute_force_epi_oracle(const Signature& s, long long n,
                            bool kernel_orientable_required);

// Existence of a finite-order map of a given type on a closed genus-g
// surface, decided arithmetically.
bool exists_fo_preserving(long long g, long long n, const std::vector<long long>& periods);
bool exists_fo_reversing(long long g, long long n, long long curve_families,
                         const std::vector<long long>& periods);

// Preserving 3-orbit types of order 2g-2+p1+p2+p3: pairwise coprime periods,
// each dividing the order.
bool triangle_exists(long long g, long long p1, long long p2, long long p3);
// Reversing 1- and 2-orbit types of order 2g-2+sum p.
bool arpa_exists(long long g, const std::vector<long long>& periods);

}  // namespace surfper::groups

#endif
