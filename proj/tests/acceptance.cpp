// End-to-end acceptance gate: one pass/fail line per criterion, nonzero exit
// on any failure.  Each criterion is independent; an exception fails only the
// criterion that raised it.

#include <algorithm>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "surfper/algebra.hpp"
#include "surfper/bounds.hpp"
#include "surfper/foliation.hpp"
#include "surfper/groups.hpp"
#include "surfper/minperiod.hpp"
#include "surfper/tables.hpp"
#include "surfper/types.hpp"

using namespace surfper;

namespace {

int g_failures = 0;
std::string g_note;  // set by a criterion body to annotate its result line

void criterion(int n, const std::string& label, const std::function<bool()>& body) {
    bool ok = false;
    std::string err;
    g_note.clear();
    try {
        ok = body();
    } catch (const std::exception& e) {
        err = std::string(" (exception: ") + e.what() + ")";
    }
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << label
              << (ok ? "" : err) << (g_note.empty() ? "" : " -- " + g_note) << "\n";
    if (!ok) ++g_failures;
}

bounds::BoundValue gamma_of(const minperiod::L2Class& c, long long b) {
    const std::size_t H = bounds::default_horizon(2, b, c.orientation);
    return bounds::gamma_upper(algebra::l_values(c.lefschetz(H)), b, H);
}

bool series_match(Orientation o, const std::vector<tables::SeriesFixture>& fix) {
    for (const auto& fx : fix) {
        const minperiod::L2Class* cls = nullptr;
        static std::vector<minperiod::L2Class> classes;
        classes = minperiod::admissible_l2_classes(o);
        for (const auto& c : classes)
            if (c.L1 == fx.L1 && c.L2 == fx.L2) cls = &c;
        if (!cls) return false;
        for (std::size_t i = 0; i < fx.values.size(); ++i) {
            const auto v = gamma_of(*cls, fx.b_first + (long long)i);
            if (!v.is_finite() || v.value != fx.values[i]) return false;
        }
    }
    return true;
}

// Independent restatement of the piecewise lower-bound rows, compared against
// the library's max-over-rows resolution.
long long singular_expected(long long g, long long b) {
    long long best = 1;
    auto row = [&](long long lo, long long hi, long long v) {
        if (lo <= b && b <= hi) best = std::max(best, v);
    };
    const long long INF = 1LL << 40;
    row(1, 2 * g + 2, b - 2);
    row(2 * g + 3, 2 * g + 3, 2 * g);
    row(2 * g + 4, 3 * g + 3, 2 * g + 1);
    row(3 * g + 3, 4 * g + 2, b - g - 2);
    row(4 * g + 2, 5 * g + 3, 3 * g);
    row(5 * g + 2, 6 * g + 2, b - 2 * g - 2);
    row(6 * g + 2, 6 * g + 4, 4 * g);
    row(6 * g + 5, 6 * g + 5, 4 * g + 1);
    row(6 * g + 6, INF, 4 * g + 2);
    return best;
}

long long universo_expected(long long g, long long b) {
    long long best = 1;
    auto row = [&](long long lo, long long hi, long long v) {
        if (lo <= b && b <= hi) best = std::max(best, v);
    };
    const long long INF = 1LL << 40;
    row(2 * g, 2 * g + 2, b - 2);
    row(2 * g + 2, 2 * g + 4, 2 * g);
    row(2 * g + 4, 2 * g + 6, b - 4);
    row(2 * g + 6, 4 * g + 4, 2 * g + 2);
    row(4 * g + 4, 6 * g + 2, b - 2 * g - 2);
    row(6 * g + 2, 6 * g + 6, 4 * g);
    row(6 * g + 6, 6 * g + 10, b - 2 * g - 6);
    row(6 * g + 10, INF, 4 * g + 4);
    return best;
}

}  // namespace

int main() {
    criterion(1, "second-iterate prefix (0,6) extends to (0,6,12,6,-20)", [] {
        const auto r = algebra::extend_lefschetz({Int(0), Int(6)}, 2,
                                                 Orientation::preserving, 5);
        return r.lefschetz == IntVec{Int(0), Int(6), Int(12), Int(6), Int(-20)};
    });

    criterion(2, "genus-2 closed forms for (l3,l4) and admissible l2 sets", [] {
        for (long long g1 = 0; g1 <= 3; ++g1)
            for (long long g2 = -10; g2 <= 10; ++g2) {
                const auto lib = algebra::g2_gamma34(Rat(g1), Rat(g2));
                const auto row = tables::vikings_row_gamma34(g1, Rat(g2));
                if (lib != row) return false;
            }
        const std::vector<std::vector<long long>> expected = {
            {4, 6}, {2}, {0, 2}, {0}};
        for (long long g1 = 0; g1 <= 3; ++g1)
            if (tables::vikings_admissible(g1) != expected[(std::size_t)g1])
                return false;
        return true;
    });

    criterion(3, "preserving gamma table reproduced for all six classes", [] {
        return series_match(Orientation::preserving, tables::f2_fixture());
    });

    criterion(4, "reversing gamma table reproduced for all three classes", [] {
        return series_match(Orientation::reversing, tables::f2r_fixture());
    });

    criterion(5, "genus-2 period table and lower-bound equalities", [] {
        for (long long b = 1; b <= 22; ++b)
            for (Orientation o : {Orientation::preserving, Orientation::reversing}) {
                const auto r = minperiod::m_low_genus(2, b, o);
                if (r.status != minperiod::MinPeriodResult::Status::exact ||
                    r.value != tables::ttaabb(b, o))
                    return false;
            }
        for (long long b = 5; b <= 22; ++b) {
            if (b != 6 && b != 8) {
                const auto lo = bounds::best_lower_bound(2, b, Orientation::preserving);
                if (lo.value !=
                    bounds::BoundValue::fin(tables::ttaabb(b, Orientation::preserving)))
                    return false;
            }
            if (b >= 7 && b != 10) {
                const auto lo = bounds::best_lower_bound(2, b, Orientation::reversing);
                if (lo.value !=
                    bounds::BoundValue::fin(tables::ttaabb(b, Orientation::reversing)))
                    return false;
            }
        }
        return true;
    });

    criterion(6, "piecewise lower-bound rows for genus 2..10", [] {
        for (long long g = 2; g <= 10; ++g) {
            for (long long b = 1; b <= 6 * g + 14; ++b)
                if (tables::singular_row(g, b) != singular_expected(g, b)) return false;
            if (g % 2 == 0)
                for (long long b = 2 * g; b <= 6 * g + 14; ++b)
                    if (tables::universo_row(g, b) != universo_expected(g, b))
                        return false;
        }
        // genus 2: the rows meet the exact table wherever the lower bound does
        for (long long b = 5; b <= 22; ++b) {
            if (b != 6 && b != 8 &&
                tables::singular_row(2, b) != tables::ttaabb(b, Orientation::preserving))
                return false;
            if (b >= 7 && b != 10 &&
                tables::universo_row(2, b) != tables::ttaabb(b, Orientation::reversing))
                return false;
        }
        return true;
    });

    criterion(7, "b+2 equality criteria match the genus-2 table", [] {
        for (long long b = 2; b <= 22; ++b) {
            if (minperiod::theorem_B(2, b) !=
                (tables::ttaabb(b, Orientation::preserving) == b + 2))
                return false;
            if (b % 2 == 0 &&
                minperiod::theorem_C(2, b) !=
                    (tables::ttaabb(b, Orientation::reversing) == b + 2))
                return false;
        }
        return true;
    });

    criterion(8, "existence criteria agree with the exhaustive oracle", [] {
        // all period multisets with R <= 4, entries in [2,12]
        std::vector<std::vector<long long>> multisets = {{}};
        std::function<void(std::vector<long long>&, long long)> gen =
            [&](std::vector<long long>& cur, long long lo) {
                if (cur.size() == 4) return;
                for (long long m = lo; m <= 12; ++m) {
                    cur.push_back(m);
                    multisets.push_back(cur);
                    gen(cur, m);
                    cur.pop_back();
                }
            };
        std::vector<long long> cur;
        gen(cur, 2);

        long long cases = 0;
        for (const auto& per : multisets) {
            for (long long n = 2; n <= 24; ++n) {
                bool divides = true;
                for (long long m : per) divides &= n % m == 0;
                // closed orientable signatures: Fuchsian / Euclidean criterion
                for (long long T : {0LL, 2LL}) {
                    groups::Signature s;
                    s.sign = +1;
                    s.T = T;
                    s.periods = per;
                    const Rat mu = groups::mu_signature(s);
                    if (mu > 0) continue;  // spherical: outside both criteria
                    const bool predicted = mu == 0
                                               ? groups::paratoro_euclidean(s, n)
                                               : groups::harvey(s, n);
                    if (predicted != groups::brute_force_epi_oracle(s, n, true))
                        return false;
                    ++cases;
                }
                // non-orientable signatures, with and without boundary cycles
                for (long long T = 1; T <= 3; ++T)
                    for (long long B = 0; T + B <= 3; ++B) {
                        groups::Signature s;
                        s.sign = -1;
                        s.T = T;
                        s.periods = per;
                        s.boundary.assign((std::size_t)B, {});
                        const bool predicted = groups::gb_exists(s, n);
                        if (predicted != groups::brute_force_epi_oracle(s, n, true))
                            return false;
                        ++cases;
                        if (predicted) {
                            const auto w = groups::epimorphism_witness(s, n);
                            if (!groups::verify_witness(s, w, true)) return false;
                        }
                    }
                (void)divides;
            }
        }
        return cases > 5000;
    });

    criterion(9, "Newton identities, forced values, and least-period divisibility", [] {
        std::mt19937 rng(20240817);
        std::uniform_int_distribution<long long> len(1, 12), coef(-5, 5);
        for (int t = 0; t < 200; ++t) {
            IntVec s((std::size_t)len(rng));
            for (auto& v : s) v = coef(rng);
            const IntVec p = algebra::power_sums_from_elementary(s, s.size());
            if (algebra::elementary_from_power_sums(p) != s) return false;
        }
        // all-ones Lefschetz prefix: the required value -g at position g+1
        // holds only at g = 2.  For g >= 3 the palindromic symmetry ties
        // s_{g+1} to s_{g-1} = 0, forcing the value 1 instead, and the claim
        // is genuinely false: an order-5 rotation of the genus-2 surface
        // extended by the identity over extra handles has L(f^i) = 1 for
        // every i not divisible by 5 (homology action: identity block plus
        // the degree-4 cyclotomic block (x^4+x^3+x^2+x+1)).  Reported as a
        // failure rather than hard-coding the unreachable value.
        bool all_ones_ok = true;
        for (std::size_t g = 2; g <= 10; ++g) {
            const IntVec prefix(g, Int(1));
            const auto r =
                algebra::extend_lefschetz(prefix, g, Orientation::preserving, g + 1);
            if (r.lefschetz.back() != -Int(g)) all_ones_ok = false;
        }
        if (!all_ones_ok)
            g_note =
                "all-ones prefix extends to -g only at g=2; for g>=3 the "
                "coefficient symmetry forces the value 1 (witness: identity-"
                "plus-cyclotomic homology action), so this sub-check cannot "
                "hold as stated";
        // no preserving map has every L_i >= 4 up to 2g (determinant leaves 1)
        std::uniform_int_distribution<long long> big(4, 9), bigger(5, 10);
        for (std::size_t g = 2; g <= 8; ++g)
            for (int t = 0; t < 40; ++t) {
                IntVec p(2 * g);
                for (auto& v : p) v = 2 - big(rng);
                try {
                    const IntVec s = algebra::elementary_from_power_sums(p);
                    if (s.back() == 1) return false;
                } catch (const NonIntegralError&) {
                }
            }
        // no reversing map has L odd = 0 and every even L > 4
        for (std::size_t g = 2; g <= 8; ++g)
            for (int t = 0; t < 40; ++t) {
                IntVec p(2 * g, Int(0));
                for (std::size_t i = 1; i < p.size(); i += 2) p[i] = 2 - bigger(rng);
                const Int det = g % 2 == 0 ? 1 : -1;
                try {
                    const IntVec s = algebra::elementary_from_power_sums(p);
                    if (s.back() == det) return false;
                } catch (const NonIntegralError&) {
                }
            }
        // least-period counts of catalog types are divisible by the iterate
        for (long long g = 1; g <= 8; ++g)
            for (Orientation o : {Orientation::preserving, Orientation::reversing})
                for (const auto& e : types::catalog(g, o)) {
                    const long long sig = e.type.order;
                    const IntVec l = algebra::l_values(
                        types::lefschetz_of_type(e.type, g, (std::size_t)sig));
                    for (long long i = 1; i < sig; ++i)
                        if (l[(std::size_t)i - 1] % i != 0) return false;
                }
        return all_ones_ok;
    });

    criterion(10, "exact regimes for large boundary counts and odd-b equality", [] {
        using minperiod::min_period;
        using Status = minperiod::MinPeriodResult::Status;
        for (long long g = 2; g <= 6; ++g) {
            for (long long b = 6 * g + 6; b <= 6 * g + 30; ++b) {
                const auto r = min_period(g, b, Orientation::preserving);
                if (r.status != Status::exact || r.value != 4 * g + 2) return false;
            }
            const long long sign = g % 2 == 0 ? 1 : -1;
            for (long long b = 6 * g + 2 + sign * 8; b <= 6 * g + 40; ++b) {
                const auto r = min_period(g, b, Orientation::reversing);
                if (r.status != Status::exact || r.value != 4 * g + sign * 4)
                    return false;
            }
            for (long long b = 1; b <= 2 * g - 2; b += 2) {
                if (g == 2) break;  // handled by the embedded table
                const auto r = min_period(g, b, Orientation::reversing);
                if (r.status != Status::exact || r.value != b) return false;
            }
        }
        for (long long g = 0; g <= 6; ++g)
            for (long long b = 0; b <= 60; ++b) {
                const auto r = min_period(g, b, Orientation::preserving);
                const auto q = min_period(g, b, Orientation::reversing);
                for (const auto& x : {r, q}) {
                    if (x.status == Status::infinite) continue;
                    if (x.lower > x.upper) return false;
                }
            }
        return true;
    });

    criterion(11, "foliation prong bookkeeping and feasibility filters", [] {
        using namespace foliation;
        for (long long b = 0; b <= 3; ++b) {
            SingularityData d;
            d.genus = 0;
            d.boundary = b;
            d.boundary_prongs.assign((std::size_t)b, 1);
            if (pa_feasibility(d)) return false;
        }
        SingularityData marked;
        marked.genus = 3;
        marked.interior = {{8, 2}};
        if (pa_feasibility(marked)) return false;

        SingularityData even;  // genus 2, one 6-pronged fixed point
        even.genus = 2;
        even.interior = {{1, 6}};
        if (!euler_poincare_check(even) || !pa_feasibility(even)) return false;
        SingularityData split;  // genus 3, mixed orbit sizes
        split.genus = 3;
        split.interior = {{2, 4}, {4, 3}};
        if (!euler_poincare_check(split) || !pa_feasibility(split)) return false;
        SingularityData ring;  // genus 0, four 1-pronged boundary components
        ring.genus = 0;
        ring.boundary = 4;
        ring.boundary_prongs = {1, 1, 1, 1};
        if (!euler_poincare_check(ring) || !pa_feasibility(ring)) return false;
        SingularityData torus;
        torus.genus = 1;
        if (!euler_poincare_check(torus) || !pa_feasibility(torus)) return false;
        return true;
    });

    std::cout << (g_failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED")
              << " (" << g_failures << " failing criteria)\n";
    return g_failures == 0 ? 0 : 1;
}
