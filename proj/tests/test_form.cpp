#include <doctest.h>

#include "form_parse.hpp"
#include "testutil.hpp"

using namespace cremona;

namespace {
const Form X = Form::variable(Var::X);
const Form Y = Form::variable(Var::Y);
const Form Z = Form::variable(Var::Z);
} // namespace

TEST_CASE("ring operations on forms") {
    CHECK(X * (Y * Z) == parse_form("xyz"));
    CHECK((X * X + scale(X * X, -1)).is_zero());
    CHECK((X * X + scale(X * X, -1)).degree() == 2);

    const Form q = X * Z + Y * Y;
    CHECK(q * q == parse_form("x^2z^2 + 2xy^2z + y^4"));

    CHECK_THROWS_AS(X + Y * Z, Error); // degree mismatch
    CHECK((Form(2) + Y * Z) == Y * Z); // zero operand is exempt
}

TEST_CASE("form parsing") {
    CHECK(parse_form("-7(6x+11y)^2(-3y+2z)") ==
          scale((scale(X, 6) + scale(Y, 11)) * (scale(X, 6) + scale(Y, 11)) *
                    (scale(Y, -3) + scale(Z, 2)),
                -7));
    CHECK(parse_form("0").is_zero());
    CHECK_THROWS_AS(parse_form("x + y^2"), Error); // not homogeneous
    CHECK_THROWS_AS(parse_form("x + "), Error);
}

TEST_CASE("evaluation") {
    const Form q = X * Z + Y * Y;
    CHECK(evaluate(q, ProjPoint(0, 0, 1)) == 0);
    CHECK(evaluate(X, ProjPoint(1, 2, 3)) == 1);
    CHECK(evaluate(X + Y + Z, ProjPoint(1, 1, 1)) == 3);
}

TEST_CASE("partial derivatives") {
    CHECK(partial(X * X * Y, Var::X) == parse_form("2xy"));
    CHECK(partial(Y * Z, Var::X).is_zero());
    CHECK(partial(parse_form("x^3 + y^2z"), Var::Z) == parse_form("y^2"));
    CHECK_THROWS_AS(partial(Form::constant(1), Var::X), Error);
}

TEST_CASE("Jacobian determinant") {
    CHECK(jacobian_det(Y * Z, X * Z, X * Y) == parse_form("2xyz"));
    CHECK(jacobian_det(X, Y, Z) == Form::constant(1));
    // x * identity is still dominant
    CHECK(jacobian_det(X * X, X * Y, X * Z) == parse_form("2x^3"));
    // functionally dependent components
    CHECK(jacobian_det(X * X, X * Y, Y * Y).is_zero());
}

TEST_CASE("gcd of forms") {
    CHECK(gcd(X * X * Y, X * Y * Y) == X * Y);

    // pairwise coprime cofactors
    const Form q1 = parse_form("y^2 + xz");
    const Form q2 = parse_form("z^2 + xy");
    const Form q3 = parse_form("x^2 + yz");
    CHECK(gcd3(X * q1, X * q2, X * q3) == X);

    // sigma composed with itself
    const Form h = gcd3(parse_form("x^2yz"), parse_form("xy^2z"), parse_form("xyz^2"));
    CHECK(h == parse_form("xyz"));

    CHECK_THROWS_AS(gcd(Form(2), Form(2)), Error);
}

TEST_CASE("gcd divides and quotients are coprime") {
    testutil::Rng rng(20240811);
    for (int trial = 0; trial < 15; ++trial) {
        const Form common = rng.nonzero_form(static_cast<int>(rng.int_in(0, 2)));
        const Form f = rng.nonzero_form(static_cast<int>(rng.int_in(1, 3))) * common;
        const Form g = rng.nonzero_form(static_cast<int>(rng.int_in(1, 3))) * common;
        const Form h = gcd(f, g);
        CHECK(h.degree() >= common.degree());
        const Form qf = divexact(f, h);
        const Form qg = divexact(g, h);
        CHECK(qf * h == f);
        CHECK(qg * h == g);
        CHECK(gcd(qf, qg).is_constant());
    }
}

TEST_CASE("multiplicity at a point") {
    CHECK(multiplicity_at(X, ProjPoint(0, 1, 0)) == 1);
    const Form q = X * Z + Y * Y;
    CHECK(multiplicity_at(q * q, ProjPoint(0, 0, 1)) == 2);
    CHECK(multiplicity_at(X + Y, ProjPoint(0, 0, 1)) == 1);
    CHECK(multiplicity_at(X, ProjPoint(1, 0, 0)) == 0);
    CHECK(multiplicity_at(q, ProjPoint(1, 2, 3)) == 0);
}

TEST_CASE("linear substitution") {
    Mat3 swap_xy;
    swap_xy.at(0, 1) = 1;
    swap_xy.at(1, 0) = 1;
    swap_xy.at(2, 2) = 1;
    CHECK(linear_substitute(X, swap_xy) == Y);
    CHECK(linear_substitute(Y * Z, Mat3::identity()) == Y * Z);
    CHECK_THROWS_AS(linear_substitute(X, Mat3()), Error);
}

TEST_CASE("multiplicity is invariant under linear changes of coordinates") {
    testutil::Rng rng(987654321);
    for (int trial = 0; trial < 20; ++trial) {
        const ProjPoint p = rng.point();
        Form f = rng.nonzero_form(static_cast<int>(rng.int_in(1, 4)));
        // sometimes force a base point of higher multiplicity
        if (trial % 3 == 0) {
            const Form l = scale(X, p[1]) - scale(Y, p[0]); // vanishes at p
            f = f * l * l;
        }
        const Mat3 M = rng.invertible_matrix();
        const ProjPoint q = M.inverse().apply(p);
        CHECK(multiplicity_at(f, p) == multiplicity_at(linear_substitute(f, M), q));
    }
}

TEST_CASE("ring axioms on random forms") {
    testutil::Rng rng(424242);
    for (int trial = 0; trial < 15; ++trial) {
        const int d = static_cast<int>(rng.int_in(0, 3));
        const Form a = rng.form(d);
        const Form b = rng.form(d);
        const Form c = rng.form(static_cast<int>(rng.int_in(0, 3)));
        CHECK(a + b == b + a);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("Jacobian chain rule under linear substitution") {
    testutil::Rng rng(13579);
    for (int trial = 0; trial < 8; ++trial) {
        const int d = static_cast<int>(rng.int_in(1, 3));
        const Form f1 = rng.form(d), f2 = rng.form(d), f3 = rng.form(d);
        const Mat3 M = rng.invertible_matrix();
        const Form lhs = jacobian_det(linear_substitute(f1, M), linear_substitute(f2, M),
                                      linear_substitute(f3, M));
        const Form j = jacobian_det(f1, f2, f3);
        const Form rhs = j.is_zero() ? j : scale(linear_substitute(j, M), M.det());
        if (lhs.is_zero() || rhs.is_zero()) {
            CHECK(lhs.is_zero() == rhs.is_zero());
        } else {
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("canonical text rendering") {
    const Form f = scale(X * X, 3) - Y * Z + scale(Z * Z, make_rational(1, 2));
    CHECK(f.to_string() == "3*x^2 - y*z + 1/2*z^2");
    CHECK(Form(4).to_string() == "0");
}
