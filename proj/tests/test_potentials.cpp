#include "novipot/potentials.hpp"

#include <doctest.h>

using namespace novipot;

namespace {

const Lattice L(12);

LaurentPoly P(std::string_view text, std::vector<std::string> vars = {}) { return parse_laurent(text, L, vars); }

Rational q(long n, long d = 1) {
    Rational r(n, d);
    r.canonicalize();
    return r;
}

}  // namespace

TEST_SUITE("potentials") {

TEST_CASE("clifford") {
    CHECK(clifford(L, 2) == P("z1 + z2 + T*z1^-1 + T*z2^-1"));
    CHECK(clifford(L, 1, {2}, q(1, 4)) == P("z1 + T*E{2*T^{1/4}}*z1^-1"));
    const auto half = NovikovElement::monomial(L, 1, q(1, 2));
    const auto v = clifford(L, 3).evaluate({{"z1", half}, {"z2", half}, {"z3", half}});
    CHECK(congruent(v, NovikovElement::monomial(L, 6, q(1, 2))));
}

TEST_CASE("theta") {
    CHECK(theta(L, 2) == P("u + T*u^-1*(2 + w1 + w1^-1)", {"u", "w1"}));
    CHECK(theta(L, 3) == P("u + T*u^-1*(3 + w1 + w1^-1 + w2 + w2^-1 + w1*w2^-1 + w2*w1^-1)",
                           {"u", "w1", "w2"}));
    for (int n = 2; n <= 8; ++n) {
        const auto p = theta(L, n);
        CHECK(p.variables() == theta_variables(n));
        CHECK(maslov_two_count(p) == 1 + n * n);
        Monomial u(n, 0);
        u[0] = 1;
        CHECK(p.coefficient(u) == NovikovElement::constant(L, 1));
        Monomial t_over_u(n, 0);
        t_over_u[0] = -1;
        CHECK(p.coefficient(t_over_u) == NovikovElement::monomial(L, n, 1));
    }
    CHECK_THROWS_AS(theta(L, 1), DomainError);
}

TEST_CASE("theta with bulk") {
    for (int n = 2; n <= 8; ++n) {
        CHECK(theta_bulk(L, n, std::vector<int>(n, 0), q(1, 4)) == theta(L, n));
    }
    CHECK(theta_bulk(L, 2, {1, -2}, q(1, 3)) ==
          P("u + T*u^-1*(1 + w1)*(1 + E{T^{1/3}}*w1^-1)*E{-2*T^{1/3}}", {"u", "w1"}));
    // coefficient of T/(u w1) is e^{(k1 + k4) T^rho}
    const auto p = theta_bulk(L, 4, {1, 0, 0, 0}, q(1, 4));
    CHECK(congruent(p.coefficient({-1, -1, 0, 0}),
                    NovikovElement::monomial(L, 1, 1) * exp(NovikovElement::monomial(L, 1, q(1, 4)))));
    CHECK(congruent(p.coefficient({-1, 0, -1, 0}), NovikovElement::monomial(L, 1, 1)));
}

TEST_CASE("blowup") {
    CHECK(blowup(L, q(1, 2)) == P("u + T*u^-1*(2 + w + w^-1) + T^{1/2}*(w + w^-1)"));
    const auto b = blowup_bulk(L, q(1, 3), q(1, 4));
    CHECK(congruent(b.coefficient({-1, 1}), NovikovElement::monomial(L, 1, 1) * exp(NovikovElement::monomial(L, 1, q(1, 4)))));
    CHECK(b.coefficient({0, 1}).valuation() == Valuation(q(2, 3)));
    CHECK(b.coefficient({0, -1}) == NovikovElement::monomial(L, 1, q(2, 3)));
    for (const auto& e : {q(1, 4), q(1, 3), q(3, 4)}) {
        CHECK(blowup(L, e).coefficient({0, 1}).valuation() == Valuation(1 - e));
    }
}

TEST_CASE("wall crossing to the theta chart") {
    for (int n = 2; n <= 5; ++n) {
        const auto image = clifford(L, n).substitute(wall_crossing_theta(L, n));
        CHECK(image == RationalExpr(theta(L, n)));
        CHECK_FALSE(image == RationalExpr(theta(L, n) + LaurentPoly::variable(L, "u", theta_variables(n))));
    }
}

TEST_CASE("wall crossing for the blowup") {
    for (const auto& e : {q(1, 4), q(1, 2), q(2, 3)}) {
        const auto toric = toric_blowup(L, e);
        CHECK(toric == P("u1 + u2 + T*u1^-1 + T*u2^-1", {"u1", "u2"}) +
                           LaurentPoly::term(L, {"u1", "u2"}, {1, -1}, NovikovElement::monomial(L, 1, 1 - e)) +
                           LaurentPoly::term(L, {"u1", "u2"}, {-1, 1}, NovikovElement::monomial(L, 1, 1 - e)));
        CHECK(toric.substitute(wall_crossing_blowup(L)) == RationalExpr(blowup(L, e)));
    }
}

TEST_CASE("product potentials") {
    // 2n + sum (k_i - 1)^2
    const auto p = product_potential(L, {{2, q(3, 4)}, {2, q(2, 3)}}, 0);
    CHECK(maslov_two_count(p) == 10);
    const auto r = product_potential(L, {{3, q(3, 4)}}, 2);
    CHECK(maslov_two_count(r) == 2 * 5 + 4);
    CHECK(r.variables().size() == 5);
    CHECK(maslov_two_count(equator(L, "x")) == 2);
}

TEST_CASE("spec json") {
    PotentialSpec spec;
    spec.family = Family::theta_bulk;
    spec.n = 4;
    spec.s = q(2, 3);
    spec.rho = q(1, 6);
    spec.bulk = {1, 0, 0, 0};
    const auto j = spec.to_json();
    CHECK(j.dump() == R"({"bulk":[1,0,0,0],"eps":[1,2],"family":"theta_bulk","n":4,"rho":[1,6],"s":[2,3]})");
    CHECK(PotentialSpec::from_json(j) == spec);
    CHECK(spec.lattice().denominator() == 6);

    auto blow = PotentialSpec::from_json(R"({"family":"blowup_bulk","eps":[1,4],"rho":[1,6]})"_json);
    CHECK(blow.n == 2);
    CHECK(build(blow, blow.lattice()) == blowup_bulk(blow.lattice(), q(1, 4), q(1, 6)));

    auto custom = PotentialSpec::from_json(R"({"family":"custom","n":2,"expr":"x + T*x^-1 + y + T*y^-1"})"_json);
    CHECK(build(custom, L) == clifford(L, 2).renamed({{"z1", "x"}, {"z2", "y"}}));

    CHECK_THROWS_AS(PotentialSpec::from_json(R"({"family":"theta","n":1})"_json), DomainError);
    CHECK_THROWS_AS(PotentialSpec::from_json(R"({"family":"torus"})"_json), DomainError);
    CHECK_THROWS_AS(PotentialSpec::from_json(R"({"family":"theta","s":[1,1]})"_json), DomainError);
    CHECK_THROWS_AS(PotentialSpec::from_json(R"({"family":"blowup","eps":[0,1]})"_json), DomainError);
    CHECK_THROWS_AS(PotentialSpec::from_json(R"({"family":"theta","n":3,"bulk":[1]})"_json), DomainError);
}

}  // TEST_SUITE
