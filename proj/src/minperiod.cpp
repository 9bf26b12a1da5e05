#include "surfper/minperiod.hpp"

#include <algorithm>
#include <numeric>

#include "surfper/algebra.hpp"
#include "surfper/tables.hpp"

namespace surfper::minperiod {

MinPeriodResult MinPeriodResult::exact(long long v, std::vector<Prov> p) {
    MinPeriodResult r;
    r.status = Status::exact;
    r.value = r.lower = r.upper = v;
    r.provenance = std::move(p);
    return r;
}

MinPeriodResult MinPeriodResult::infinite(std::vector<Prov> p) {
    MinPeriodResult r;
    r.status = Status::infinite;
    r.provenance = std::move(p);
    return r;
}

MinPeriodResult MinPeriodResult::interval(long long lo, long long hi,
                                          std::vector<Prov> p) {
    MinPeriodResult r;
    r.status = Status::interval;
    r.lower = lo;
    r.upper = hi;
    r.provenance = std::move(p);
    return r;
}

MinPeriodResult m_closed(long long g, Orientation o, MapClass c) {
    if (g < 0) throw ConstraintError("m_closed: g >= 0");
    using R = MinPeriodResult;
    if (g == 1) return R::infinite({{"torus-closed", 0, false, ""}});
    if (g == 0)
        return R::exact(o == Orientation::preserving ? 1 : 2,
                        {{"sphere-closed", o == Orientation::preserving ? 1 : 2}});
    if (o == Orientation::preserving) {
        if (c == MapClass::finite_order)
            return g == 2 ? R::exact(2, {{"closed-finite-order", 2}})
                          : R::exact(g - 1, {{"closed-finite-order", g - 1}});
        return R::exact(2 * g - 2, {{"closed-preserving", 2 * g - 2}});
    }
    const long long v = g == 2 ? 4 : 2 * g - 2;
    return R::exact(v, {{c == MapClass::finite_order ? "closed-finite-order"
                                                     : "closed-reversing",
                         v}});
}

namespace {

bool coprime_triple_sum(long long g, long long b) {
    const long long n = 2 * g + b - 2;
    if (n < 3) return false;
    for (long long p1 = 1; 3 * p1 <= b; ++p1) {
        if (n % p1 != 0) continue;
        for (long long p2 = p1; p1 + 2 * p2 <= b; ++p2) {
            if (n % p2 != 0 || std::gcd(p1, p2) != 1) continue;
            const long long p3 = b - p1 - p2;
            if (n % p3 == 0 && std::gcd(p1, p3) == 1 && std::gcd(p2, p3) == 1)
                return true;
        }
    }
    return false;
}

bool gcd2_pair_sum(long long g, long long b) {
    const long long n = 2 * g + b - 2;
    if (n < 2) return false;
    for (long long p1 = 2; 2 * p1 <= b; ++p1) {
        const long long p2 = b - p1;
        if (n % p1 == 0 && n % p2 == 0 && std::gcd(p1, p2) == 2) return true;
    }
    return false;
}

}  // namespace

bool theorem_B(long long g, long long b) {
    if (g < 2 || b < 1) throw ConstraintError("theorem_B: g >= 2, b >= 1");
    return b == 2 || b == 3 || b == 4 || coprime_triple_sum(g, b);
}

bool theorem_C(long long g, long long b) {
    if (g < 2 || b < 1) throw ConstraintError("theorem_C: g >= 2, b >= 1");
    if (b == 2 || b == 4) return true;
    if (g % 2 == 0) return gcd2_pair_sum(g, b);
    return b % 2 == 0 && (2 * g - 2) % b == 0;
}

bool theorem_D(long long g, long long b) {
    if (g < 2 || b < 1) throw ConstraintError("theorem_D: g >= 2, b >= 1");
    if (b <= 4 || b == g + 2 || b == 2 * g + 2 || b == 2 * g + 4) return true;
    if (b > 2 && (2 * g) % (b - 2) == 0) return true;
    if (b > 3 && (2 * g + 1) % (b - 3) == 0) return true;
    return coprime_triple_sum(g, b);
}

TheoremE theorem_E(long long g, long long b) {
    if (g < 2 || b < 1) throw ConstraintError("theorem_E: g >= 2, b >= 1");
    TheoremE e;
    if (b % 2 == 1) {
        e.odd_upper = b;
        e.odd_exact = b <= 2 * g - 2;
    }
    const bool even_b = b % 2 == 0;
    if (b == 2 || b == 4) e.equality = true;
    else if (g % 2 == 1) {
        if (even_b && (2 * g - 2) % b == 0) e.equality = true;
        if (b == g - 1 || b == 2 * g - 2) e.equality = true;
    } else {
        if (gcd2_pair_sum(g, b)) e.equality = true;
        if (even_b && b > 2 && (2 * g) % (b - 2) == 0) e.equality = true;
        if (even_b && b > 4 && (2 * g + 2) % (b - 4) == 0) e.equality = true;
        if (b == g + 2 || b == 2 * g + 2 || b == 2 * g + 6) e.equality = true;
    }
    return e;
}

MinPeriodResult m_low_genus(long long g, long long b, Orientation o) {
    if (b < 1) throw ConstraintError("m_low_genus: b >= 1");
    using R = MinPeriodResult;
    if (g == 0) {
        if (b == 2) return R::infinite({{"annulus", 0, false, ""}});
        if (b == 1) return R::exact(1, {{"disk", 1}});
        if (o == Orientation::reversing && b == 3)
            return R::exact(2, {{"sphere-bounded", 2}});
        return R::exact(b - 2, {{"sphere-bounded", b - 2}});
    }
    if (g == 1) {
        if (o == Orientation::preserving)
            return b == 1 ? R::exact(2, {{"torus-bounded", 2}})
                          : R::exact(b, {{"torus-bounded", b}});
        return R::exact(
            b, {{"torus-bounded", b, true,
                 "rotation-plus-reflection realizes b; the b-2 closed form is "
                 "inconsistent with that example and with the order-cap lower "
                 "bound"}});
    }
    if (g == 2) {
        const long long v = tables::ttaabb(b, o);
        return R::exact(v, {{"genus2-table", v}});
    }
    throw ConstraintError("m_low_genus: g in {0,1,2}");
}

IntVec L2Class::lefschetz(std::size_t horizon) const {
    if (representative)
        return types::lefschetz_of_type(*representative, 2, horizon);
    return algebra::extend_lefschetz({Int(L1), Int(L2)}, 2, orientation, horizon)
        .lefschetz;
}

std::vector<L2Class> admissible_l2_classes(Orientation o) {
    using types::make_type;
    std::vector<L2Class> out;
    if (o == Orientation::preserving) {
        out.push_back({0, 4, o, make_type(o, 6, {2, 2, 3, 3})});
        out.push_back({0, 6, o, std::nullopt});
        out.push_back({1, 3, o, make_type(o, 10, {1, 2, 5})});
        out.push_back({2, 2, o, make_type(o, 8, {1, 1, 4})});
        out.push_back({2, 4, o, make_type(o, 6, {1, 1, 2})});
        out.push_back({3, 3, o, make_type(o, 5, {1, 1, 1})});
    } else {
        out.push_back({0, 0, o, make_type(o, 12, {4, 6})});
        out.push_back({0, 2, o, make_type(o, 8, {2, 4})});
        out.push_back({0, 4, o, std::nullopt});
    }
    return out;
}

MinPeriodResult min_period(long long g, long long b, Orientation o) {
    if (g < 0 || b < 0) throw ConstraintError("min_period: g, b >= 0");
    using R = MinPeriodResult;
    if (b == 0) return m_closed(g, o, MapClass::homeomorphisms);
    if (g <= 2) return m_low_genus(g, b, o);

    std::vector<R::Prov> prov;
    if (o == Orientation::preserving) {
        if (theorem_D(g, b))
            return R::exact(2 * g + b - 2, {{"preserving-equality", 2 * g + b - 2}});
        if (b >= 6 * g + 6)
            return R::exact(4 * g + 2, {{"preserving-order-cap", 4 * g + 2}});
    } else {
        const TheoremE e = theorem_E(g, b);
        if (e.equality)
            return R::exact(2 * g + b - 2, {{"reversing-equality", 2 * g + b - 2}});
        if (e.odd_exact) return R::exact(b, {{"odd-boundary-exact", b}});
        const long long sign = g % 2 == 0 ? 1 : -1;
        if (b >= 6 * g + 2 + sign * 8)
            return R::exact(4 * g + sign * 4,
                            {{"reversing-order-cap", 4 * g + sign * 4}});
    }
    const bounds::BoundReport lo = bounds::best_lower_bound(g, b, o);
    const bounds::BoundReport hi = bounds::static_upper(g, b, o);
    for (const auto& it : lo.provenance)
        prov.push_back({"lower:" + it.rule, it.value, it.finite, ""});
    for (const auto& it : hi.provenance)
        prov.push_back({"upper:" + it.rule, it.value, it.finite, ""});
    return R::interval(lo.value.value, hi.value.value, std::move(prov));
}

}  // namespace surfper::minperiod
