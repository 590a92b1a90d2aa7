#include <doctest.h>

#include "qflag/laurent.hpp"
#include "qflag/linalg.hpp"

#include <json.hpp>

using namespace qflag;

TEST_CASE("laurent arithmetic basics") {
    Laurent a = Laurent::q(2) + Laurent(1);           // q^2 + 1
    Laurent b = Laurent::q(1) - Laurent::q(-1);       // q - q^-1
    CHECK(a.str() == "1 + q^2");
    CHECK(a * b == Laurent::q(3) - Laurent::q(-1));
    CHECK((a - a).is_zero());
    CHECK(Laurent(0).is_zero());
    CHECK(a.min_exp() == 0);
    CHECK(a.max_exp() == 2);
    CHECK(a.coeff(2) == 1);
    CHECK(a.coeff(5) == 0);
}

TEST_CASE("laurent multiplication agrees with evaluation") {
    // eval is a ring homomorphism at several sample points
    Laurent a = Laurent::q(3, 2) + Laurent::q(-1, Rational(1, 3)) - Laurent(5);
    Laurent b = Laurent::q(2) - Laurent::q(-2) + Laurent(7);
    for (const Rational& q0 : {Rational(2), Rational(-3), Rational(1, 2), Rational(5, 7)}) {
        CHECK((a * b).eval(q0) == a.eval(q0) * b.eval(q0));
        CHECK((a + b).eval(q0) == a.eval(q0) + b.eval(q0));
        CHECK((a - b).eval(q0) == a.eval(q0) - b.eval(q0));
    }
    CHECK_THROWS(a.eval(0));
}

TEST_CASE("laurent exact division round-trips") {
    Laurent a = Laurent::q(2) + Laurent(1);
    Laurent b = Laurent::q(-1, 3) - Laurent::q(4, Rational(2, 5));
    Laurent p = a * b;
    CHECK(p.exact_div(a) == b);
    CHECK(p.exact_div(b) == a);
    // q^2+1 does not divide q^2+q
    CHECK(!(Laurent::q(2) + Laurent::q(1)).try_div(a).has_value());
    CHECK_THROWS((Laurent(1)).exact_div(Laurent(0)));
    // zero divided by anything nonzero is zero
    CHECK(Laurent(0).exact_div(b).is_zero());
}

TEST_CASE("laurent_gcd is monic with min_exp 0") {
    Laurent a = (Laurent::q(1) - Laurent(1)) * (Laurent::q(1) + Laurent(1)) * Laurent::q(-3, 7);
    Laurent b = (Laurent::q(1) - Laurent(1)) * Laurent::q(5, Rational(1, 2));
    Laurent g = laurent_gcd(a, b);
    CHECK(g == Laurent::q(1) - Laurent(1));
    CHECK(laurent_gcd(Laurent(0), Laurent(0)).is_zero());
    CHECK(laurent_gcd(a, Laurent(0)) == laurent_gcd(a, a));
}

TEST_CASE("laurent json round trip") {
    Laurent a = Laurent::q(-2, Rational(3, 4)) + Laurent(1) - Laurent::q(5);
    nlohmann::json j = a;
    CHECK(j.at("0").get<std::string>() == "1");
    Laurent back = j.get<Laurent>();
    CHECK(back == a);
}

TEST_CASE("laurent fraction field") {
    LaurentFrac x(Laurent::q(2) - Laurent(1), Laurent::q(1) - Laurent(1));
    // (q^2-1)/(q-1) = q+1 after reduction
    CHECK(x.is_laurent());
    CHECK(x.as_laurent() == Laurent::q(1) + Laurent(1));
    LaurentFrac y = LaurentFrac(Laurent(1)) / LaurentFrac(Laurent::q(2) + Laurent(1));
    CHECK(!y.is_laurent());
    CHECK_THROWS(y.as_laurent());
    CHECK(y * LaurentFrac(Laurent::q(2) + Laurent(1)) == LaurentFrac(1));
    CHECK((x - x).is_zero());
    CHECK(x + y == y + x);
    CHECK_THROWS(x / LaurentFrac(0));
}

TEST_CASE("span_rank over the laurent ring") {
    Laurent q = Laurent::q(1), one(1);
    // rows: (1, q), (q, q^2) dependent; adding (0,1) makes rank 2
    std::vector<std::vector<Laurent>> rows = {{one, q}, {q, q * q}};
    CHECK(span_rank(rows) == 1);
    rows.push_back({Laurent(0), one});
    CHECK(span_rank(rows) == 2);
    CHECK(span_rank({}) == 0);
}

TEST_CASE("span solver express and contains") {
    using F = LaurentFrac;
    F q(Laurent::q(1));
    std::vector<std::vector<F>> cols = {{F(1), q, F(0)}, {F(0), F(1), q}};
    SpanSolver<F> solver(cols);
    CHECK(solver.rank() == 2);
    CHECK(solver.independent());
    // v = 2*c0 + q*c1
    std::vector<F> v = {F(2), F(2) * q + q, q * q};
    auto coeffs = solver.express(v);
    REQUIRE(coeffs.has_value());
    CHECK((*coeffs)[0] == F(2));
    CHECK((*coeffs)[1] == q);
    CHECK(solver.contains(v));
    CHECK(!solver.contains({F(1), F(0), F(0)}));
    CHECK(!solver.express(std::vector<F>{F(1), F(0), F(0)}).has_value());
}

TEST_CASE("span solver flags dependent columns") {
    using F = LaurentFrac;
    std::vector<std::vector<F>> cols = {{F(1), F(2)}, {F(2), F(4)}, {F(0), F(1)}};
    SpanSolver<F> solver(cols);
    CHECK(solver.rank() == 2);
    CHECK(!solver.independent());
    REQUIRE(solver.dependent_columns().size() == 1);
    CHECK(solver.dependent_columns()[0] == 1);
    CHECK_THROWS(solver.express(std::vector<F>{F(0), F(0)}));
}

TEST_CASE("nullspace basis") {
    using F = LaurentFrac;
    F q(Laurent::q(1));
    // single row (1, q): kernel spanned by (-q, 1)
    auto ker = nullspace<F>({{F(1), q}}, 2);
    REQUIRE(ker.size() == 1);
    CHECK(ker[0][0] == F(0) - q);
    CHECK(ker[0][1] == F(1));
    // full-rank square matrix: trivial kernel
    CHECK(nullspace<F>({{F(1), F(0)}, {F(0), F(1)}}, 2).empty());
    // zero matrix: full kernel
    CHECK(nullspace<F>({{F(0), F(0)}}, 2).size() == 2);
}

TEST_CASE("rational parsing") {
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-7") == -7);
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("abc"));
}
