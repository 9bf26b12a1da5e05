#include "surfper/bounds.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "surfper/algebra.hpp"

namespace surfper::bounds {

long long Composition::total() const {
    long long s = 0;
    for (std::size_t j = 0; j < counts.size(); ++j)
        s += (long long)(j + 1) * counts[j];
    return s;
}

std::vector<long long> Composition::profile() const {
    std::vector<long long> x(counts.size());
    for (std::size_t j = 0; j < counts.size(); ++j)
        x[j] = (long long)(j + 1) * counts[j];
    return x;
}

namespace {

void enum_compositions(long long rem, long long part, Composition& cur,
                       std::vector<Composition>& out) {
    if (part == 0) {
        if (rem == 0) out.push_back(cur);
        return;
    }
    for (long long k = 0; k * part <= rem; ++k) {
        cur.counts[part - 1] = k;
        enum_compositions(rem - k * part, part - 1, cur, out);
    }
    cur.counts[part - 1] = 0;
}

}  // namespace

std::vector<Composition> compositions(long long b, long long n) {
    if (b < 0 || n < 1) throw ConstraintError("compositions: b >= 0, n >= 1");
    std::vector<Composition> out;
    Composition cur;
    cur.counts.assign(n, 0);
    enum_compositions(b, n, cur, out);
    return out;
}

BoundValue alpha(const std::vector<long long>& x, const IntVec& y, std::size_t horizon) {
    if (y.size() < horizon)
        throw ConstraintError("alpha: sequence shorter than horizon");
    for (std::size_t i = 0; i < horizon; ++i) {
        const Int xi = i < x.size() ? Int(x[i]) : Int(0);
        if (xi != y[i]) return BoundValue::fin((long long)i + 1);
    }
    return BoundValue::inf();
}

BoundValue beta(const std::vector<long long>& x, const IntVec& y) {
    bool any = false;
    long long best = 0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        const Int xi = i < x.size() ? Int(x[i]) : Int(0);
        Int cand;
        if (xi < y[i]) cand = Int(i) + 1;
        else if (xi > y[i]) cand = xi - y[i];
        else continue;
        const long long c = to_ll(cand);
        if (!any || c < best) { best = c; any = true; }
    }
    for (std::size_t i = y.size(); i < x.size(); ++i)
        if (x[i] != 0 && (!any || x[i] < best)) { best = x[i]; any = true; }
    return any ? BoundValue::fin(best) : BoundValue::inf();
}

BoundValue gamma_upper(const IntVec& l, long long b, std::size_t horizon) {
    if (l.size() < horizon)
        throw ConstraintError("gamma_upper: sequence shorter than horizon");
    long long best = 0;
    for (const Composition& c : compositions(b, b)) {
        const BoundValue a = alpha(c.profile(), l, horizon);
        if (!a.is_finite()) return BoundValue::horizon((long long)horizon);
        best = std::max(best, a.value);
    }
    return BoundValue::fin(best);
}

std::size_t default_horizon(long long g, long long b, Orientation o) {
    if (const char* env = std::getenv("SURFPER_HORIZON")) {
        const long long h = std::atoll(env);
        if (h > 0) return (std::size_t)h;
    }
    long long h = std::max(b, 4 * g + 4);
    if (g >= 1)
        for (const types::CatalogEntry& e : types::catalog(g, o))
            h = std::max(h, 2 * e.type.order);
    return (std::size_t)h;
}

BoundReport static_upper(long long g, long long b, Orientation o) {
    BoundReport r;
    if (g == 0 && b == 2) {
        // Annulus: rotations by irrational angles give maps with no periodic
        // points at all.
        r.value = BoundValue::inf();
        r.provenance.push_back({"annulus-no-upper", 0, false});
        return r;
    }
    std::vector<BoundReport::Item> items;
    items.push_back({"fuller", std::max(1LL, 2 * g + b - 1), true});
    if (2 * g + b >= 4) items.push_back({"boundary-upper", 2 * g + b - 2, true});
    if (g >= 2 && o == Orientation::preserving)
        items.push_back({"preserving-order-cap", 4 * g + 2, true});
    if (g >= 2 && o == Orientation::reversing) {
        items.push_back({"reversing-order-cap", 4 * g + (g % 2 == 0 ? 4 : -4), true});
        if (b % 2 == 1) items.push_back({"odd-boundary", b, true});
    }
    long long best = items.front().value;
    for (const auto& it : items) best = std::min(best, it.value);
    r.value = BoundValue::fin(best);
    r.provenance = std::move(items);
    return r;
}

namespace {

// cap on the lower bound coming from one catalog entry
long long entry_cap(const types::CatalogEntry& e) {
    if (e.type.orientation == Orientation::preserving) return e.type.order;
    if (e.has_invariant_annulus || e.dim_fix_half == 0) return e.type.order;
    return e.type.order / 2;
}

IntVec entry_l_values(const types::CatalogEntry& e, std::size_t len) {
    return algebra::l_values(types::lefschetz_of_type(e.type, e.genus, len));
}

}  // namespace

BoundReport construction_lower(const types::CatalogEntry& entry, long long b,
                               const Composition& k) {
    const long long sigma = entry.type.order;
    if ((long long)k.counts.size() > sigma)
        throw ConstraintError("composition has parts exceeding the order");
    if (k.total() != b) throw ConstraintError("composition does not sum to b");
    const IntVec l = entry_l_values(entry, (std::size_t)sigma);
    const std::vector<long long> x = k.profile();
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (x[j] == 0 || l[j] != 0) continue;
        if (j == 0 && entry.has_invariant_annulus) continue;
        throw ConstraintError("no exact-period orbits at slot " +
                              std::to_string(j + 1));
    }
    const long long cap = entry_cap(entry);
    const BoundValue bv = beta(x, l);
    BoundReport r;
    r.value = BoundValue::fin(bv.is_finite() ? std::min(cap, bv.value) : cap);
    r.provenance.push_back({entry.type.orientation == Orientation::preserving
                                ? "preserving-construction"
                                : (entry.has_invariant_annulus
                                       ? "annulus-construction"
                                       : "reversing-construction"),
                            r.value.value, true});
    r.witness_composition = k;
    r.witness_type = entry.type;
    return r;
}

namespace {

// x-values allowed at slot j (1-based) so that the entry's bound is >= v.
std::vector<long long> allowed_profile_values(long long j, long long lj, long long v,
                                              long long b, bool annulus_slot1) {
    std::vector<long long> out;
    if (lj == 0 && !(j == 1 && annulus_slot1)) return {0};
    for (long long x = 0; x <= b; x += j) {
        bool ok;
        if (x == lj) ok = true;
        else if (x > lj) ok = (x - lj >= v);
        else ok = (j >= v);
        if (ok) out.push_back(x);
    }
    return out;
}

// Find the largest v <= cap for which some composition of b realizes a bound
// of at least v for this entry; reconstructs the witness profile.
std::optional<std::pair<long long, std::vector<long long>>> best_for_entry(
    const types::CatalogEntry& e, long long b) {
    const long long sigma = e.type.order;
    const long long cap = entry_cap(e);
    const IntVec lv = entry_l_values(e, (std::size_t)sigma);
    std::vector<long long> l(sigma);
    for (long long j = 0; j < sigma; ++j) l[j] = to_ll(lv[j]);
    for (long long v = cap; v >= 1; --v) {
        // choice[j][s]: x used at slot j+1 to first reach sum s
        std::vector<std::vector<long long>> choice(sigma, std::vector<long long>(b + 1, -1));
        std::vector<char> reach(b + 1, 0), next(b + 1, 0);
        reach[0] = 1;
        for (long long j = 1; j <= sigma; ++j) {
            std::fill(next.begin(), next.end(), 0);
            const auto xs = allowed_profile_values(j, l[j - 1], v, b,
                                                   e.has_invariant_annulus);
            for (long long s = 0; s <= b; ++s) {
                if (!reach[s]) continue;
                for (long long x : xs) {
                    if (s + x > b) break;
                    if (!next[s + x]) { next[s + x] = 1; choice[j - 1][s + x] = x; }
                }
            }
            reach.swap(next);
        }
        if (!reach[b]) continue;
        std::vector<long long> x(sigma, 0);
        long long s = b;
        for (long long j = sigma; j >= 1; --j) {
            x[j - 1] = choice[j - 1][s];
            s -= x[j - 1];
        }
        return std::make_pair(v, x);
    }
    return std::nullopt;
}

}  // namespace

BoundReport best_lower_bound(long long g, long long b, Orientation o) {
    if (g < 2) throw ConstraintError("best_lower_bound requires genus >= 2");
    BoundReport best;
    best.value = BoundValue::fin(1);
    best.provenance.push_back({"trivial", 1, true});
    for (const types::CatalogEntry& e : types::catalog(g, o)) {
        const auto r = best_for_entry(e, b);
        if (!r || r->first <= best.value.value) continue;
        Composition k;
        k.counts.assign((std::size_t)e.type.order, 0);
        for (std::size_t j = 0; j < r->second.size(); ++j)
            k.counts[j] = r->second[j] / (long long)(j + 1);
        BoundReport cr = construction_lower(e, b, k);
        // the scan is top-down, so the realized bound is exactly v
        cr.value = BoundValue::fin(std::max(cr.value.value, r->first));
        best = std::move(cr);
    }
    return best;
}

}  // namespace bounds
