#include <doctest.h>

#include "qflag/geometry.hpp"

#include <json.hpp>

using namespace qflag;

namespace {

RationalTensor mono(int i, std::vector<int> idx, const Rational& c) {
    RationalTensor v({i});
    auto [e, s] = signed_basis(std::move(idx));
    v.add({e}, c * s);
    return v;
}

}  // namespace

TEST_CASE("pluecker image of a rank-1 cell") {
    Orthocell c = make_cell(2, {PositiveRoot(1, 2)}, Permutation::identity(2));
    CellPoint p{c, {{Rational(3), Rational(5)}}};
    RationalTensor img = pluecker(p, 1);
    CHECK(img == mono(1, {1}, 3) + mono(1, {2}, 5));
    // malformed points are rejected
    CHECK_THROWS(pluecker(CellPoint{c, {}}, 1));
    CHECK_THROWS(pluecker(CellPoint{c, {{Rational(0), Rational(0)}}}, 1));
}

TEST_CASE("non-effective directions do not enter the pluecker image") {
    Orthocell c = make_cell(3, {PositiveRoot(1, 2)}, Permutation::identity(3));
    CellPoint p{c, {{Rational(7), Rational(9)}}};
    // at level 2 the root fixes {1,2}: the image is the single base tensor
    CHECK(pluecker(p, 2) == mono(2, {1, 2}, 1));
    // at level 1 it contributes both terms
    CHECK(pluecker(p, 1) == mono(1, {1}, 7) + mono(1, {2}, 9));
}

TEST_CASE("pluecker scales projectively per coordinate pair") {
    Orthocell c = make_cell(4, {PositiveRoot(1, 2), PositiveRoot(3, 4)},
                            Permutation::identity(4));
    CellPoint p{c, {{Rational(2), Rational(-3)}, {Rational(1), Rational(4)}}};
    CellPoint ps = p;
    ps.coords[0].first *= 5;
    ps.coords[0].second *= 5;
    // only root (1,2) is 1-effective on the identity, so scaling its
    // coordinate pair scales the level-1 image and nothing else
    CHECK(pluecker(ps, 1) == pluecker(p, 1) * Rational(5));
    CHECK(pluecker(ps, 2) == pluecker(p, 2));
    CHECK(pluecker(ps, 3) == pluecker(p, 3));
    ps.coords[1].first *= -2;
    ps.coords[1].second *= -2;
    CHECK(pluecker(ps, 3) == pluecker(p, 3) * Rational(-2));
}

TEST_CASE("sigma scales only effective coordinates") {
    Orthocell c = make_cell(3, {PositiveRoot(1, 2)}, Permutation::identity(3));
    CellPoint p{c, {{Rational(7), Rational(9)}}};
    CellPoint s1 = sigma(p, 1, Rational(5));
    CHECK(s1.coords[0] == std::pair(Rational(7), Rational(45)));
    CellPoint s2 = sigma(p, 2, Rational(5));
    CHECK(s2.coords[0] == p.coords[0]);
    CHECK_THROWS(sigma(p, 1, Rational(0)));
    CHECK_THROWS(sigma(p, 1, Rational(1)));
    CHECK_THROWS(sigma(p, 1, Rational(-1)));
}

TEST_CASE("segre pair is the outer product with the shifted second factor") {
    Orthocell c = make_cell(3, {PositiveRoot(1, 2)}, Permutation({1, 3, 2}));
    CellPoint p{c, {{Rational(2), Rational(3)}}};
    const Rational q0(5);
    RationalTensor a = pluecker(p, 1);
    RationalTensor b = pluecker(sigma(p, 1, q0), 2);
    RationalTensor s = segre_pair(p, 1, 2, q0);
    RationalTensor expect({1, 2});
    for (const auto& [ka, ca] : a.terms)
        for (const auto& [kb, cb] : b.terms) expect.add({ka[0], kb[0]}, ca * cb);
    CHECK(s == expect);
}

TEST_CASE("sampled segre images land in the e-span") {
    for (auto [n, i, j] : {std::tuple{2, 1, 1}, {3, 1, 2}, {3, 2, 1}, {3, 2, 2}}) {
        CheckReport rep = check_spanned(n, i, j, 3, 7, Rational(2));
        CHECK(rep.ok());
        if (!rep.ok())
            for (const auto& f : rep.failures) MESSAGE(f);
    }
    CHECK_THROWS(check_spanned(2, 1, 1, 0, 7, Rational(2)));
}

TEST_CASE("sampling is reproducible for a fixed seed") {
    CheckReport a = check_spanned(3, 1, 1, 2, 123, Rational(3));
    CheckReport b = check_spanned(3, 1, 1, 2, 123, Rational(3));
    CHECK(a.ok());
    CHECK(a.checks == b.checks);
}

TEST_CASE("component ratio multiset over the rank-1 cells of S_3") {
    auto got = component_ratios(Rational(5));
    std::map<std::pair<Rational, Rational>, int> want{
        {{Rational(1), Rational(5)}, 3},
        {{Rational(5), Rational(1)}, 3},
        {{Rational(5), Rational(5)}, 2},
    };
    CHECK(got == want);
}

TEST_CASE("pairings glue consistently across subcells") {
    for (const auto& c : enumerate_monogressive(3))
        for (int i = 1; i <= 2; ++i) {
            CheckReport rep = gluing_check(c, i);
            CHECK(rep.ok());
        }
}

TEST_CASE("cell point json round trip") {
    Orthocell c = make_cell(3, {PositiveRoot(1, 2)}, Permutation({1, 3, 2}));
    CellPoint p{c, {{Rational(-2, 3), Rational(7)}}};
    nlohmann::json j = p;
    CellPoint back = j.get<CellPoint>();
    CHECK(back.cell == p.cell);
    CHECK(back.coords == p.coords);
}
