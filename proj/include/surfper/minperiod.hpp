#ifndef SURFPER_MINPERIOD_HPP
#define SURFPER_MINPERIOD_HPP

#include <optional>
#include <string>
#include <vector>

#include "surfper/bounds.hpp"
#include "surfper/common.hpp"
#include "surfper/types.hpp"

// Top-level queries: the minimum period of the hardest homeomorphism of a
// genus-g surface with b boundary components, exactly where an equality
// criterion applies and as a lower/upper interval elsewhere.

namespace surfper::minperiod {

struct MinPeriodResult {
    enum class Status { exact, infinite, interval };
    Status status = Status::exact;
    long long value = 0;            // exact
    long long lower = 0, upper = 0; // interval
    struct Prov {
        std::string rule;
        long long value = 0;
        bool finite = true;
        std::string note;
    };
    std::vector<Prov> provenance;

    static MinPeriodResult exact(long long v, std::vector<Prov> p);
    static MinPeriodResult infinite(std::vector<Prov> p);
    static MinPeriodResult interval(long long lo, long long hi, std::vector<Prov> p);
};

enum class MapClass { homeomorphisms, finite_order };

// Closed surface of genus g.
MinPeriodResult m_closed(long long g, Orientation o, MapClass c);

// Equality criteria for bounded surfaces, genus >= 2.
// Preserving, value b+2 at g=2: b in {2,3,4} or a pairwise-coprime divisor
// triple of 2g+b-2 sums to b.
bool theorem_B(long long g, long long b);
// Reversing, value b+2 at g=2: b in {2,4}, or g even with a gcd-2 divisor
// pair of 2g+b-2 summing to b, or g odd with b even dividing 2g-2.
bool theorem_C(long long g, long long b);
// Preserving, value 2g+b-2.
bool theorem_D(long long g, long long b);
// Reversing: odd b gives upper bound b (exact once b <= 2g-2); the equality
// clauses give value 2g+b-2.
struct TheoremE {
    std::optional<long long> odd_upper;
    bool odd_exact = false;  // odd b and b <= 2g-2: value is exactly b
    bool equality = false;   // value is exactly 2g+b-2
};
TheoremE theorem_E(long long g, long long b);

// Exact values for genus 0, 1 and 2 with b >= 1 boundary components.
MinPeriodResult m_low_genus(long long g, long long b, Orientation o);

// The admissible first-two-Lefschetz-numbers classes at genus 2, each with a
// representative extended Lefschetz sequence of the requested length and,
// when one exists, a realizing finite-order type.
struct L2Class {
    long long L1 = 0, L2 = 0;
    Orientation orientation = Orientation::preserving;
    std::optional<types::FiniteOrderType> representative;
    IntVec lefschetz(std::size_t horizon) const;
};
std::vector<L2Class> admissible_l2_classes(Orientation o);

// Combined query; b = 0 means the closed surface.
MinPeriodResult min_period(long long g, long long b, Orientation o);

}  // namespace surfper::minperiod

#endif
