#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "surfper/groups.hpp"
#include "surfper/types.hpp"

using namespace surfper;
using types::make_type;

TEST_CASE("type validation") {
    CHECK(types::validate_type(make_type(Orientation::preserving, 10, {1, 2, 5}), 2)
              .empty());
    CHECK(types::validate_type(make_type(Orientation::preserving, 6, {2, 2, 3, 3}), 2)
              .empty());
    // period not dividing the order
    CHECK(!types::validate_type(make_type(Orientation::preserving, 10, {1, 3, 5}), 2)
               .empty());
    // (4;1,1,2) at genus 2: quotient rank is not an integer
    CHECK(!types::validate_type(make_type(Orientation::preserving, 4, {1, 1, 2}), 2)
               .empty());
    // reversing types need even order
    CHECK(!types::validate_type(make_type(Orientation::reversing, 5, {1}), 2).empty());
}

TEST_CASE("lefschetz numbers of a finite-order type") {
    const auto t = make_type(Orientation::preserving, 10, {1, 2, 5});
    const IntVec L = types::lefschetz_of_type(t, 2, 10);
    const long long expect[] = {1, 3, 1, 3, 6, 3, 1, 3, 1, -2};
    for (std::size_t i = 0; i < 10; ++i) CHECK(L[i] == expect[i]);

    const auto r = make_type(Orientation::reversing, 12, {4, 6});
    const IntVec Lr = types::lefschetz_of_type(r, 2, 12);
    const long long er[] = {0, 0, 0, 4, 0, 6, 0, 4, 0, 0, 0, -2};
    for (std::size_t i = 0; i < 12; ++i) CHECK(Lr[i] == er[i]);
}

TEST_CASE("minimum period after deleting the smallest orbits") {
    const auto t = make_type(Orientation::preserving, 10, {1, 2, 5});
    CHECK(types::cifra_min_period(t, 0) == 1);
    CHECK(types::cifra_min_period(t, 1) == 2);
    CHECK(types::cifra_min_period(t, 2) == 5);
    CHECK(types::cifra_min_period(t, 3) == 10);
    CHECK_THROWS_AS((void)types::cifra_min_period(t, 4), ConstraintError);
}

TEST_CASE("signature calculus") {
    groups::Signature s;
    s.sign = +1;
    s.T = 0;
    s.periods = {5, 5, 5};
    CHECK(groups::mu_signature(s) == Rat(-2, 5));
    CHECK(groups::riemann_hurwitz(Rat(-2, 5), 5) == Rat(-2));
    CHECK(groups::genus_of(s, 5) == 2);

    // torus quotient: orientable genus 1, no periods
    groups::Signature torus;
    torus.sign = +1;
    torus.T = 2;
    CHECK(groups::mu_signature(torus) == 0);
}

TEST_CASE("bridge from types to signatures") {
    const auto t = make_type(Orientation::preserving, 10, {1, 2, 5});
    const auto s = groups::type_signature_bridge(t, 2);
    CHECK(s.sign == +1);
    std::vector<long long> m = s.periods;  // n/p_i
    std::sort(m.begin(), m.end());
    CHECK(m == std::vector<long long>{2, 5, 10});
    CHECK(groups::genus_of(s, 10) == 2);
}

TEST_CASE("orientable surface-kernel criterion") {
    groups::Signature s;
    s.sign = +1;
    s.T = 0;
    s.periods = {5, 5, 5};
    CHECK(groups::harvey(s, 5));
    s.periods = {2, 5, 10};
    CHECK(groups::harvey(s, 10));
    s.periods = {2, 2, 10};  // omission drops the lcm
    CHECK(!groups::harvey(s, 10));
    s.periods = {3, 3, 3, 3};
    CHECK(!groups::harvey(s, 9));  // M = 3 != n with T = 0
    // even multiplicity of the top 2-power
    s.periods = {2, 4, 4, 8};
    CHECK(!groups::harvey(s, 8));
}

TEST_CASE("euclidean orientable cases") {
    auto sig = [](long long T, std::vector<long long> m) {
        groups::Signature s;
        s.sign = +1;
        s.T = T;
        s.periods = std::move(m);
        return s;
    };
    CHECK(groups::paratoro_euclidean(sig(0, {2, 2, 2, 2}), 2));
    CHECK(groups::paratoro_euclidean(sig(0, {3, 3, 3}), 3));
    CHECK(groups::paratoro_euclidean(sig(0, {2, 4, 4}), 4));
    CHECK(groups::paratoro_euclidean(sig(0, {2, 3, 6}), 6));
    CHECK(groups::paratoro_euclidean(sig(2, {}), 7));
    CHECK(!groups::paratoro_euclidean(sig(0, {2, 2, 2, 2}), 4));
    CHECK(!groups::paratoro_euclidean(sig(0, {3, 3, 3}), 6));
}

TEST_CASE("non-orientable criterion and witnesses on a sample") {
    for (long long n = 2; n <= 24; n += 2)
        for (long long T = 1; T <= 3; ++T)
            for (long long m1 = 2; m1 <= 8; ++m1) {
                groups::Signature s;
                s.sign = -1;
                s.T = T;
                s.periods = {m1, m1};
                if (groups::mu_signature(s) >= 0) continue;
                if (!groups::gb_exists(s, n)) continue;
                const auto w = groups::epimorphism_witness(s, n);
                CHECK(groups::verify_witness(s, w, true));
            }
}

TEST_CASE("catalog at genus 2") {
    using T = types::FiniteOrderType;
    const auto pres = types::catalog(2, Orientation::preserving);
    auto has = [](const std::vector<types::CatalogEntry>& v, const T& t) {
        return std::any_of(v.begin(), v.end(),
                           [&](const types::CatalogEntry& e) { return e.type == t; });
    };
    CHECK(has(pres, make_type(Orientation::preserving, 5, {1, 1, 1})));
    CHECK(has(pres, make_type(Orientation::preserving, 6, {1, 1, 2})));
    CHECK(has(pres, make_type(Orientation::preserving, 8, {1, 1, 4})));
    CHECK(has(pres, make_type(Orientation::preserving, 10, {1, 2, 5})));
    CHECK(has(pres, make_type(Orientation::preserving, 6, {2, 2, 3, 3})));

    const auto rev = types::catalog(2, Orientation::reversing);
    CHECK(has(rev, make_type(Orientation::reversing, 2, {})));
    CHECK(has(rev, make_type(Orientation::reversing, 8, {2, 4})));
    CHECK(has(rev, make_type(Orientation::reversing, 12, {4, 6})));
}

TEST_CASE("every catalog entry passes the existence decider") {
    for (long long g = 1; g <= 8; ++g)
        for (Orientation o : {Orientation::preserving, Orientation::reversing}) {
            for (const auto& e : types::catalog(g, o)) {
                CHECK(types::validate_type(e.type, g).empty());
                if (o == Orientation::preserving)
                    CHECK(groups::exists_fo_preserving(g, e.type.order,
                                                       e.type.orbit_periods));
                else
                    CHECK(groups::exists_fo_reversing(g, e.type.order,
                                                      e.type.curve_families,
                                                      e.type.orbit_periods));
            }
        }
}

TEST_CASE("existence deciders on known cases") {
    CHECK(groups::exists_fo_preserving(2, 6, {2, 2, 3, 3}));
    CHECK(groups::exists_fo_preserving(2, 10, {1, 2, 5}));
    CHECK(!groups::exists_fo_preserving(2, 4, {1, 1, 2}));  // rank not integral
    CHECK(groups::exists_fo_preserving(1, 6, {1, 2, 3}));
    CHECK(groups::exists_fo_preserving(0, 7, {1, 1}));
    CHECK(groups::exists_fo_reversing(2, 12, 0, {4, 6}));
    CHECK(groups::exists_fo_reversing(2, 2, 0, {}));
    CHECK(!groups::exists_fo_reversing(2, 5, 0, {1}));  // odd order
    CHECK(groups::triangle_exists(2, 1, 2, 5));
    CHECK(!groups::triangle_exists(2, 1, 3, 5));
    CHECK(groups::arpa_exists(3, {4}));
    CHECK(groups::arpa_exists(2, {2, 4}));
    CHECK(!groups::arpa_exists(2, {2, 6}));  // each must divide 2g-2+sum
}
