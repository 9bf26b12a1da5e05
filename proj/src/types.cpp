#include "surfper/types.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "surfper/groups.hpp"

namespace surfper::types {

std::string FiniteOrderType::display() const {
    std::ostringstream os;
    os << '(' << order << ';';
    if (curve_families > 0) os << curve_families << ';';
    if (orbit_periods.empty()) {
        os << '-';
    } else {
        for (std::size_t i = 0; i < orbit_periods.size(); ++i)
            os << (i ? "," : "") << orbit_periods[i];
    }
    os << ')';
    return os.str();
}

FiniteOrderType make_type(Orientation o, long long n, std::vector<long long> periods,
                          long long curve_families) {
    FiniteOrderType t;
    t.orientation = o;
    t.order = n;
    t.curve_families = curve_families;
    std::sort(periods.begin(), periods.end());
    t.orbit_periods = std::move(periods);
    return t;
}

std::vector<std::string> validate_type(const FiniteOrderType& t, long long g) {
    std::vector<std::string> v;
    const long long n = t.order;
    if (n < 1) v.push_back("order must be positive");
    if (t.curve_families < 0) v.push_back("negative curve-family count");
    if (!std::is_sorted(t.orbit_periods.begin(), t.orbit_periods.end()))
        v.push_back("orbit periods not sorted");
    long long sum = 0;
    for (long long p : t.orbit_periods) {
        if (p < 1 || p >= n) v.push_back("orbit period outside [1, order)");
        else if (n % p != 0) v.push_back("orbit period does not divide order");
        sum += p;
    }
    if (t.orientation == Orientation::preserving && t.curve_families != 0)
        v.push_back("preserving map with invariant-curve families");
    if (t.orientation == Orientation::reversing && n % 2 != 0)
        v.push_back("reversing map with odd order");
    if (n >= 1) {
        const long long num = 2 * g - 2 + sum;
        if (num % n != 0) {
            v.push_back("order does not divide 2g-2+sum of periods");
        } else {
            const long long T = num / n - (long long)t.orbit_periods.size() -
                                t.curve_families + 2;
            if (T < 0) v.push_back("negative quotient rank");
        }
    }
    return v;
}

IntVec lefschetz_of_type(const FiniteOrderType& t, long long g, std::size_t horizon) {
    IntVec L(horizon);
    for (std::size_t idx = 0; idx < horizon; ++idx) {
        const long long i = (long long)idx + 1;
        if (i % t.order == 0) {
            L[idx] = 2 - 2 * Int(g);
        } else if (iterate_reverses(t.orientation, i)) {
            // Fixed sets of odd reversing iterates are invariant circles of
            // index zero.
            L[idx] = 0;
        } else {
            Int fix = 0;
            for (long long p : t.orbit_periods)
                if (i % p == 0) fix += p;
            L[idx] = fix;
        }
    }
    return L;
}

long long cifra_min_period(const FiniteOrderType& t, std::size_t s) {
    if (s > t.orbit_periods.size())
        throw ConstraintError("cannot delete more orbits than the type has");
    if (s < t.orbit_periods.size()) return t.orbit_periods[s];
    return t.order;
}

namespace {

void push_entry(std::vector<CatalogEntry>& out, const FiniteOrderType& t,
                long long g, bool annulus, int dim_fix_half, const char* source) {
    for (const CatalogEntry& e : out)
        if (e.type == t) return;
    CatalogEntry e;
    e.type = t;
    e.genus = g;
    e.has_invariant_annulus = annulus;
    e.dim_fix_half = dim_fix_half;
    e.source = source;
    out.push_back(std::move(e));
}

}  // namespace

std::vector<CatalogEntry> catalog(long long g, Orientation o) {
    if (g < 1) throw ConstraintError("catalog requires genus >= 1");
    std::vector<CatalogEntry> out;

    if (o == Orientation::preserving) {
        if (g == 1) {
            push_entry(out, make_type(o, 2, {1, 1, 1, 1}), g, false, 0, "torus");
            push_entry(out, make_type(o, 3, {1, 1, 1}), g, false, 0, "torus");
            push_entry(out, make_type(o, 4, {1, 1, 2}), g, false, 0, "torus");
            push_entry(out, make_type(o, 6, {1, 2, 3}), g, false, 0, "torus");
            for (long long n = 1; n <= 6; ++n)
                push_entry(out, make_type(o, n, {}), g, false, 0, "torus-free");
            return out;
        }
        // Three-orbit types of order 2g-2+p1+p2+p3.
        const long long cap = 2 * g + 4;
        for (long long p1 = 1; p1 <= cap; ++p1)
            for (long long p2 = p1; p1 + p2 <= cap; ++p2)
                for (long long p3 = p2; p1 + p2 + p3 <= cap; ++p3)
                    if (groups::triangle_exists(g, p1, p2, p3))
                        push_entry(out, make_type(o, 2 * g - 2 + p1 + p2 + p3,
                                                  {p1, p2, p3}),
                                   g, false, 0, "three-orbit");
        if (g == 2)
            push_entry(out, make_type(o, 6, {2, 2, 3, 3}), g, false, 0, "four-orbit");
        return out;
    }

    if (g < 2) return out;
    // Annulus-carrying families (the half-iterate fixed set is finite, so the
    // full order is available as a cap).
    if (g % 2 == 0) {
        push_entry(out, make_type(o, 2 * g - 2, {}), g, true, 0, "rosa");
        push_entry(out, make_type(o, 4 * g, {2, 2 * g}), g, true, 0,
                   "intimos-dones");
        push_entry(out, make_type(o, 4 * g + 4, {4, 2 * g + 2}), g, true, 0,
                   "8g+4");
    } else if (g >= 3) {
        push_entry(out, make_type(o, 4 * g - 4, {2 * g - 2}), g, true, 0, "8g");
    }
    // One- and two-orbit families without an annulus certificate; the
    // half-iterate fixed set may contain curves, so only half the order is
    // claimed as a cap.
    if (g % 2 == 1) {
        for (long long p = 2; p <= 2 * g - 2; p += 2)
            if ((2 * g - 2) % p == 0 && groups::arpa_exists(g, {p}))
                push_entry(out, make_type(o, 2 * g - 2 + p, {p}), g, false, 1,
                           "one-orbit");
    } else {
        const long long cap = 2 * g + 8;
        for (long long p1 = 2; p1 <= cap; p1 += 2)
            for (long long p2 = p1; p1 + p2 <= cap; p2 += 2)
                if (std::gcd(p1, p2) == 2 &&
                    groups::arpa_exists(g, {p1, p2}))
                    push_entry(out, make_type(o, 2 * g - 2 + p1 + p2, {p1, p2}),
                               g, false, 1, "two-orbit");
    }
    return out;
}

}  // namespace surfper::types
