#include <doctest.h>

#include "fixtures.hpp"
#include "matrix.hpp"

using namespace cremona;

TEST_CASE("fixture inventory") {
    REQUIRE(fixtures().size() == 10);
    CHECK(find_fixture("bir4_t1") != nullptr);
    CHECK(find_fixture("no_such_map") == nullptr);
}

TEST_CASE("every fixture is pure with a nonzero Jacobian") {
    for (const FixtureMap& f : fixtures()) {
        CAPTURE(f.name);
        CHECK(jacobian_nonzero(f.map));
        CHECK(f.map.pure());
    }
}

TEST_CASE("fixture degrees match their homaloidal types") {
    for (const FixtureMap& f : fixtures()) {
        CAPTURE(f.name);
        if (f.htype) CHECK(f.map.degree() == f.htype->degree());
    }
}

TEST_CASE("stated base-point multiplicities are exact") {
    for (const FixtureMap& f : fixtures()) {
        for (const auto& e : f.proper_points.entries()) {
            CAPTURE(f.name);
            CAPTURE(e.point.to_string());
            CHECK(net_multiplicity_at(f.map, e.point) == e.multiplicity);
        }
    }
}

TEST_CASE("named multiplicity witnesses") {
    const FixtureMap* t0 = find_fixture("bir4_t0");
    REQUIRE(t0 != nullptr);
    CHECK(net_multiplicity_at(t0->map, ProjPoint(0, 0, 1)) == 3);

    const FixtureMap* s0 = find_fixture("bir6_family2_t0");
    REQUIRE(s0 != nullptr);
    CHECK(net_multiplicity_at(s0->map, ProjPoint(0, 0, 1)) == 5);
}

TEST_CASE("a fixture with only plane base points satisfies the point counts") {
    const FixtureMap* t1 = find_fixture("bir4_t1");
    REQUIRE(t1 != nullptr);
    REQUIRE(t1->all_base_points_proper);
    const long long d = t1->map.degree();
    CHECK(t1->proper_points.sum_of_squares() == d * d - 1);
    CHECK(t1->proper_points.sum() == 3 * (d - 1));
}

TEST_CASE("printed quartic inverses verify") {
    const FixtureMap* a = find_fixture("bir4_t1");
    const FixtureMap* ai = find_fixture("bir4_t1_inv");
    REQUIRE(a != nullptr);
    REQUIRE(ai != nullptr);
    CHECK(verify_inverse_pair(a->map, ai->map));

    const FixtureMap* b = find_fixture("bir4_t0");
    const FixtureMap* bi = find_fixture("bir4_t0_inv");
    REQUIRE(b != nullptr);
    REQUIRE(bi != nullptr);
    CHECK(verify_inverse_pair(b->map, bi->map));

    CHECK(!verify_inverse_pair(a->map, bi->map));
}

TEST_CASE("factorization rejects nets with infinitely near base points") {
    const FixtureMap* t0 = find_fixture("bir4_t0");
    REQUIRE(t0 != nullptr);
    try {
        factor_quadratics(t0->map, t0->proper_points);
        FAIL("expected rejection");
    } catch (const Error& e) {
        CHECK(e.code() == Err::InfinitelyNearUnsupported);
    }
}

TEST_CASE("the all-proper quartic fixture factors and inverts") {
    const FixtureMap* t1 = find_fixture("bir4_t1");
    REQUIRE(t1 != nullptr);
    const Factorization fact = factor_quadratics(t1->map, t1->proper_points);
    CHECK(projectively_equal(recompose(fact), t1->map));

    const CremonaMap inv = inverse(t1->map, t1->proper_points);
    CHECK(verify_inverse_pair(t1->map, inv));

    // and it agrees with the printed inverse up to scale
    const FixtureMap* ti = find_fixture("bir4_t1_inv");
    REQUIRE(ti != nullptr);
    CHECK(projectively_equal(inv, ti->map));
}

TEST_CASE("interpolation at the stated base points recovers the quartic net") {
    const FixtureMap* t1 = find_fixture("bir4_t1");
    REQUIRE(t1 != nullptr);
    const std::vector<Form> basis = interpolate(4, t1->proper_points);
    REQUIRE(basis.size() == 3);

    // the printed components lie in the span of the computed basis
    const auto monos = monomials_of_degree(4);
    Matrix span(0, monos.size());
    auto row_of = [&](const Form& f) {
        std::vector<Rational> row;
        for (const Monomial& m : monos) row.push_back(f.coeff(m));
        return row;
    };
    for (const Form& f : basis) span.append_row(row_of(f));
    for (size_t i = 0; i < 3; ++i) span.append_row(row_of(t1->map.component(i)));
    CHECK(span.rref().size() == 3);
}

TEST_CASE("derived inverse fixtures verify both ways") {
    for (const FixtureMap& f : fixtures()) {
        if (!f.inverse_derived) continue;
        const FixtureMap* inv = find_fixture(f.inverse_name);
        REQUIRE_MESSAGE(inv != nullptr, f.inverse_name);
        CAPTURE(f.name);
        CHECK(verify_inverse_pair(f.map, inv->map));
    }
}
