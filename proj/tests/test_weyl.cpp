#include <doctest.h>

#include "qflag/weyl.hpp"

#include <algorithm>
#include <json.hpp>

using namespace qflag;

namespace {

std::vector<Permutation> all_perms(int n) {
    std::vector<int> e(n);
    for (int k = 0; k < n; ++k) e[k] = k + 1;
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(e));
    } while (std::next_permutation(e.begin(), e.end()));
    return out;
}

std::vector<PositiveRoot> all_roots(int n) {
    std::vector<PositiveRoot> out;
    for (int a = 1; a < n; ++a)
        for (int b = a + 1; b <= n; ++b) out.emplace_back(a, b);
    return out;
}

}  // namespace

TEST_CASE("permutation basics and validation") {
    Permutation w({2, 4, 1, 3});
    CHECK(w.n() == 4);
    CHECK(w(1) == 2);
    CHECK(w(4) == 3);
    CHECK(w.length() == 3);  // inversions: (2,1),(4,1),(4,3)
    CHECK(Permutation::identity(4).length() == 0);
    CHECK(w.weight_set(2) == std::set<int>{2, 4});
    CHECK_THROWS(Permutation({1, 1, 2}));
    CHECK_THROWS(Permutation({0, 1, 2}));
    CHECK_THROWS(Permutation({1, 2, 4}));
}

TEST_CASE("positive root validation and pairing table") {
    CHECK(PositiveRoot(1, 2).is_simple());
    CHECK(!PositiveRoot(1, 3).is_simple());
    CHECK_THROWS(PositiveRoot(3, 2));
    CHECK_THROWS(PositiveRoot(2, 2));
    // root_pairing by support overlap
    CHECK(root_pairing(PositiveRoot(1, 3), PositiveRoot(1, 3)) == 2);
    CHECK(root_pairing(PositiveRoot(1, 2), PositiveRoot(2, 3)) == -1);
    CHECK(root_pairing(PositiveRoot(1, 3), PositiveRoot(2, 4)) == 0);
    CHECK(root_pairing(PositiveRoot(1, 2), PositiveRoot(1, 3)) == 1);
    CHECK(root_pairing(PositiveRoot(1, 2), PositiveRoot(3, 4)) == 0);
    CHECK(root_pairing(PositiveRoot(1, 4), PositiveRoot(2, 3)) == 0);
    CHECK(root_pairing(PositiveRoot(1, 3), PositiveRoot(3, 4)) == -1);
    // symmetry over all pairs at n = 5
    for (const auto& x : all_roots(5))
        for (const auto& y : all_roots(5))
            CHECK(root_pairing(x, y) == root_pairing(y, x));
}

TEST_CASE("left multiplication swaps values") {
    Permutation w({2, 4, 1, 3});
    Permutation sw = left_multiply(PositiveRoot(1, 4), w);
    CHECK(sw.entries == std::vector<int>{2, 1, 4, 3});
    // involution
    CHECK(left_multiply(PositiveRoot(1, 4), sw) == w);
}

TEST_CASE("bruhat cover criterion matches length") {
    // the array criterion agrees with l(s_a w) == l(w) + 1, exhaustively
    for (int n = 2; n <= 5; ++n)
        for (const auto& w : all_perms(n))
            for (const auto& r : all_roots(n)) {
                bool by_length = left_multiply(r, w).length() == w.length() + 1;
                CHECK(bruhat_covers(w, r) == by_length);
            }
}

TEST_CASE("weight pairing values and invariance") {
    Permutation w({3, 1, 2});
    // S = {3}: alpha = (2,3) has b = 3 in S, a = 2 not
    CHECK(pairing(w, 1, PositiveRoot(2, 3)) == -1);
    CHECK(pairing(w, 1, PositiveRoot(1, 3)) == -1);
    CHECK(pairing(w, 1, PositiveRoot(1, 2)) == 0);
    CHECK(pairing(w, 2, PositiveRoot(1, 2)) == 1);
    // pairing is 0 exactly when the reflection fixes the weight set
    for (const auto& v : all_perms(4))
        for (int i = 1; i <= 3; ++i)
            for (const auto& r : all_roots(4)) {
                bool fixes = reflect_weight(r, v, i) == v.weight_set(i);
                CHECK((pairing(v, i, r) == 0) == fixes);
            }
}

TEST_CASE("reflect_weight overloads agree") {
    Permutation w({2, 4, 1, 3});
    for (int i = 1; i <= 3; ++i)
        for (const auto& r : all_roots(4))
            CHECK(reflect_weight(r, w, i) == reflect_weight(r, w.weight_set(i)));
    CHECK(reflect_weight(PositiveRoot(2, 4), std::set<int>{2, 3}) ==
          std::set<int>{3, 4});
}

TEST_CASE("weyl json round trips") {
    Permutation w({3, 1, 4, 2});
    nlohmann::json jw = w;
    CHECK(jw.get<Permutation>() == w);
    PositiveRoot r(2, 5);
    nlohmann::json jr = r;
    CHECK(jr.get<PositiveRoot>() == r);
}
