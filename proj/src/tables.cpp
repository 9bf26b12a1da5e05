#include "surfper/tables.hpp"

#include <algorithm>

#include "surfper/algebra.hpp"

namespace surfper::tables {

namespace {

const long long kTtaabbPreserving[] = {3, 4, 5,  6, 3, 8, 4, 10, 5,  6, 6,
                                       6, 7, 8,  8, 8, 9, 10, 10, 10, 10};
const long long kTtaabbReversing[] = {1, 4, 3, 6, 4, 8, 4, 4,  5, 12, 6,
                                      6, 7, 8, 8, 8, 8, 8, 9, 10, 11};

}  // namespace

long long ttaabb(long long b, Orientation o) {
    if (b < 1) throw ConstraintError("ttaabb: b >= 1");
    if (o == Orientation::preserving)
        return b <= 21 ? kTtaabbPreserving[b - 1] : 10;
    return b <= 21 ? kTtaabbReversing[b - 1] : 12;
}

long long singular_row(long long g, long long b) {
    if (g < 2 || b < 1) throw ConstraintError("singular_row: g >= 2, b >= 1");
    long long best = 1;
    auto row = [&](bool applies, long long v) {
        if (applies) best = std::max(best, v);
    };
    row(b <= 2 * g + 2, b - 2);
    row(b == 2 * g + 3, 2 * g);
    row(2 * g + 4 <= b && b <= 3 * g + 3, 2 * g + 1);
    row(3 * g + 3 <= b && b <= 4 * g + 2, b - g - 2);
    row(4 * g + 2 <= b && b <= 5 * g + 3, 3 * g);
    row(5 * g + 2 <= b && b <= 6 * g + 2, b - 2 * g - 2);
    row(6 * g + 2 <= b && b <= 6 * g + 4, 4 * g);
    row(b == 6 * g + 5, 4 * g + 1);
    row(b >= 6 * g + 6, 4 * g + 2);
    return best;
}

long long universo_row(long long g, long long b) {
    if (g < 2 || g % 2 != 0) throw ConstraintError("universo_row: even g >= 2");
    if (b < 2 * g) throw ConstraintError("universo_row: b >= 2g");
    long long best = 1;
    auto row = [&](bool applies, long long v) {
        if (applies) best = std::max(best, v);
    };
    row(b <= 2 * g + 2, b - 2);
    row(2 * g + 2 <= b && b <= 2 * g + 4, 2 * g);
    row(2 * g + 4 <= b && b <= 2 * g + 6, b - 4);
    row(2 * g + 6 <= b && b <= 4 * g + 4, 2 * g + 2);
    row(4 * g + 4 <= b && b <= 6 * g + 2, b - 2 * g - 2);
    row(6 * g + 2 <= b && b <= 6 * g + 6, 4 * g);
    row(6 * g + 6 <= b && b <= 6 * g + 10, b - 2 * g - 6);
    row(b >= 6 * g + 10, 4 * g + 4);
    return best;
}

const std::vector<SeriesFixture>& f2_fixture() {
    static const std::vector<SeriesFixture> t = {
        {0, 4, 5, {2, 2, 3, 3, 3, 6, 3, 3, 3, 4, 5, 6}},
        {0, 6, 5, {2, 3, 2, 2, 3, 3, 3, 3, 3, 3, 3, 3, 3, 5}},
        {1, 3, 5, {2, 3, 4, 10, 5, 5, 5, 5, 5, 6, 7, 8, 9, 10}},
        {2, 2, 5, {3, 8, 4, 4, 4, 4, 5, 6, 7, 8}},
        {2, 4, 5, {2, 2, 3, 4, 5, 6}},
        {3, 3, 5, {2, 3, 4, 5}},
    };
    return t;
}

const std::vector<SeriesFixture>& f2r_fixture() {
    static const std::vector<SeriesFixture> t = {
        {0, 0, 5, {4, 4, 4, 4, 5, 12, 6, 6, 6, 6, 6, 6, 7, 8, 9, 10, 11, 12}},
        {0, 2, 5, {3, 8, 4, 4, 4, 4, 5, 6, 7, 8, 8}},
        {0, 4, 5, {2, 2, 3, 4, 5, 6, 6}},
    };
    return t;
}

const std::vector<VikingsRow>& vikings_fixture() {
    static const std::vector<VikingsRow> t = {
        {0, {4, 6}},
        {1, {2}},
        {2, {0, 2}},
        {3, {0}},
    };
    return t;
}

std::pair<Rat, Rat> vikings_row_gamma34(long long gamma1, const Rat& g2) {
    switch (gamma1) {
        case 0:
            return {3 * (g2 - 2), (-24 + 10 * g2 - g2 * g2) / 2};
        case 1:
            return {3 * (g2 - 2) / 2, g2 * (2 - g2) / 2};
        case 2:
            return {Rat(0), (8 - 2 * g2 - g2 * g2) / 2};
        case 3:
            return {-3 * g2 / 2, -g2 * (g2 + 2) / 2};
        default:
            throw ConstraintError("vikings row: gamma1 in {0,1,2,3}");
    }
}

std::vector<long long> vikings_admissible(long long gamma1) {
    std::vector<long long> out;
    for (long long g2 = 0; g2 <= 10; ++g2) {
        const auto [g3, g4] = algebra::g2_gamma34(Rat(gamma1), Rat(g2));
        if (g3 >= 0 && g4 >= 0 && boost::multiprecision::denominator(g3) == 1 &&
            boost::multiprecision::denominator(g4) == 1)
            out.push_back(g2);
    }
    return out;
}

}  // namespace surfper::tables
