#include "surfper/algebra.hpp"

#include <sstream>

namespace surfper::algebra {

IntVec power_sums_from_elementary(const IntVec& s, std::size_t n) {
    const std::size_t k = s.size();
    IntVec p(n);
    for (std::size_t m = 1; m <= n; ++m) {
        Int acc = 0;
        for (std::size_t j = 1; j < m && j <= k; ++j) acc += s[j - 1] * p[m - j - 1];
        if (m <= k) acc += Int(m) * s[m - 1];
        p[m - 1] = -acc;
    }
    return p;
}

IntVec elementary_from_power_sums(const IntVec& p) {
    const std::size_t k = p.size();
    IntVec s(k);
    for (std::size_t m = 1; m <= k; ++m) {
        Int acc = p[m - 1];
        for (std::size_t j = 1; j < m; ++j) acc += s[j - 1] * p[m - j - 1];
        // p_m + s_1 p_{m-1} + ... + s_{m-1} p_1 + m s_m = 0
        if (acc % Int(m) != 0) {
            std::ostringstream msg;
            msg << "s_" << m << " is not integral (numerator " << -acc << " over " << m
                << "); no integral homology action has these power sums";
            throw NonIntegralError(m, msg.str());
        }
        s[m - 1] = -acc / Int(m);
    }
    return s;
}

IntVec symplectic_extend(const IntVec& s_half, std::size_t g, SymmetryKind kind) {
    if (s_half.size() != g)
        throw ConstraintError("symplectic_extend expects exactly g coefficients");
    IntVec s(2 * g);
    for (std::size_t h = 1; h <= g; ++h) s[h - 1] = s_half[h - 1];
    for (std::size_t h = 0; h < g; ++h) {
        // s_{2g-h} determined by s_h (s_0 = 1)
        const Int sh = (h == 0) ? Int(1) : s[h - 1];
        Int mirrored = sh;
        if (kind == SymmetryKind::improper && (g + h) % 2 != 0) mirrored = -mirrored;
        s[2 * g - h - 1] = mirrored;
    }
    // The mirror relation must be self-consistent on the overlap (it always is
    // at h = g, but keep the audit cheap and explicit).
    for (std::size_t h = 1; h <= g; ++h) {
        Int expect = s[2 * g - h - 1];
        if (kind == SymmetryKind::improper && (g + h) % 2 != 0) expect = -expect;
        if (expect != s[h - 1]) {
            std::ostringstream msg;
            msg << "coefficient symmetry conflict at h=" << h;
            throw ConstraintError(msg.str());
        }
    }
    return s;
}

Int lefschetz_from_power_sum(const Int& p, long long i, Orientation o, SurfaceContext c) {
    if (c == SurfaceContext::bounded) return 1 - p;
    return iterate_reverses(o, i) ? Int(-p) : Int(2 - p);
}

Int power_sum_from_lefschetz(const Int& L, long long i, Orientation o, SurfaceContext c) {
    if (c == SurfaceContext::bounded) return 1 - L;
    return iterate_reverses(o, i) ? Int(-L) : Int(2 - L);
}

ExtendResult extend_lefschetz(const IntVec& l_prefix, std::size_t g, Orientation o,
                              std::size_t n) {
    if (l_prefix.size() < g)
        throw ConstraintError("extend_lefschetz needs the first g Lefschetz numbers");
    ExtendResult out;
    out.truncated = l_prefix.size() > g;

    IntVec p(std::max(n, 2 * g));
    for (std::size_t i = 1; i <= g; ++i)
        p[i - 1] = power_sum_from_lefschetz(l_prefix[i - 1], (long long)i, o,
                                            SurfaceContext::closed);
    IntVec p_head(p.begin(), p.begin() + g);
    IntVec s_half = elementary_from_power_sums(p_head);
    out.s = symplectic_extend(s_half, g,
                              o == Orientation::preserving ? SymmetryKind::proper
                                                           : SymmetryKind::improper);
    for (std::size_t m = g + 1; m <= p.size(); ++m) {
        Int acc = 0;
        for (std::size_t j = 1; j < m && j <= 2 * g; ++j) acc += out.s[j - 1] * p[m - j - 1];
        if (m <= 2 * g) acc += Int(m) * out.s[m - 1];
        p[m - 1] = -acc;
    }
    out.lefschetz.resize(n);
    for (std::size_t i = 1; i <= n; ++i)
        out.lefschetz[i - 1] = lefschetz_from_power_sum(p[i - 1], (long long)i, o,
                                                        SurfaceContext::closed);
    return out;
}

int mobius(long long n) {
    if (n < 1) throw ConstraintError("mobius of non-positive argument");
    int primes = 0;
    for (long long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            n /= d;
            ++primes;
            if (n % d == 0) return 0;
        }
    }
    if (n > 1) ++primes;
    return primes % 2 == 0 ? 1 : -1;
}

IntVec l_values(const IntVec& lefschetz) {
    const std::size_t n = lefschetz.size();
    IntVec l(n);
    for (std::size_t i = 1; i <= n; ++i) {
        Int acc = 0;
        for (std::size_t d = 1; d <= i; ++d)
            if (i % d == 0) acc += Int(mobius((long long)d)) * lefschetz[i / d - 1];
        l[i - 1] = acc;
    }
    return l;
}

std::pair<Rat, Rat> g2_gamma34(const Rat& g1, const Rat& g2) {
    const Rat half(1, 2);
    Rat g3 = (Rat(-12) + 4 * g1 + 3 * g1 * g1 - g1 * g1 * g1 + 6 * g2 - 3 * g1 * g2) * half;
    Rat g4 = (Rat(-24) + 26 * g1 + 3 * g1 * g1 - 6 * g1 * g1 * g1 + g1 * g1 * g1 * g1 +
              10 * g2 - 10 * g1 * g2 + 2 * g1 * g1 * g2 - g2 * g2) *
             half;
    return {g3, g4};
}

}  // namespace surfper::algebra
