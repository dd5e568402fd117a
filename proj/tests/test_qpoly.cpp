#include <doctest.h>

#include <pcls/qpoly.hpp>

using namespace pcls;

TEST_CASE("binomial basis evaluates as falling factorials") {
    QPoly c2 = QPoly::binomial(2);
    CHECK(c2.eval(0) == 0);
    CHECK(c2.eval(1) == 0);
    CHECK(c2.eval(4) == 6);
    // C(-2,2) = (-2)(-3)/2
    CHECK(c2.eval(-2) == 3);
    CHECK(c2.eval(Rational(1, 2)) == Rational(-1, 8));
}

TEST_CASE("shifted and scaled binomials") {
    QPoly s = QPoly::shifted_binomial(1, 2); // C(q-1,2)
    CHECK(s.eval(3) == 1);
    CHECK(s.eval(1) == 0);
    CHECK(s.eval(0) == 1); // C(-1,2) = 1

    QPoly a = QPoly::scaled_binomial(2, 2); // C(2q,2)
    CHECK(a.eval(1) == 1);
    CHECK(a.eval(2) == 6);
    CHECK(a.eval(-1) == 3);

    QPoly n = QPoly::scaled_binomial(-1, 2); // C(-q,2)
    CHECK(n.eval(2) == 3);
}

TEST_CASE("basis conversion round trips") {
    QPoly p = QPoly::from_binomial_coeffs({Rational(0), Rational(0), Rational(2), Rational(3)});
    std::vector<Rational> mono = p.monomial_coeffs();
    // q^3/2 - q^2/2
    REQUIRE(mono.size() == 4);
    CHECK(mono[0] == 0);
    CHECK(mono[1] == 0);
    CHECK(mono[2] == Rational(-1, 2));
    CHECK(mono[3] == Rational(1, 2));
    CHECK(QPoly::from_monomial(mono) == p);

    // random-ish dense polynomial survives both directions
    std::vector<Rational> coeffs{Rational(7), Rational(-3, 2), Rational(0), Rational(5, 3)};
    QPoly r = QPoly::from_monomial(coeffs);
    CHECK(r.monomial_coeffs() == coeffs);
    CHECK(QPoly::from_binomial_coeffs(r.binomial_coeffs()) == r);
}

TEST_CASE("q-coefficient from binomial basis") {
    // sum_k (-1)^(k-1) b_k / k
    QPoly p = QPoly::from_binomial_coeffs({Rational(0), Rational(0), Rational(2), Rational(3)});
    CHECK(p.coeff_of_q() == 0);
    CHECK(p.coeff_of_q() == p.monomial_coeffs()[1]);

    QPoly lin = QPoly::from_monomial({Rational(4), Rational(-7, 3)});
    CHECK(lin.coeff_of_q() == Rational(-7, 3));
}

TEST_CASE("arithmetic in mixed bases") {
    QPoly q1 = QPoly::from_monomial({Rational(0), Rational(1)});
    QPoly q2 = q1 * q1;
    CHECK(q2 == QPoly::from_monomial({Rational(0), Rational(0), Rational(1)}));
    CHECK((q2 - q1).eval(5) == 20);
    CHECK((q2 + (-q1)).eval(5) == 20);
    CHECK((q1 * Rational(3)).eval(2) == 6);
    CHECK(QPoly().is_zero());
    CHECK((q1 - q1).is_zero());
    CHECK(QPoly::constant(5).degree() == 0);
    CHECK(q2.degree() == 2);
}

TEST_CASE("printing") {
    QPoly p = QPoly::from_binomial_coeffs({Rational(0), Rational(0), Rational(2), Rational(3)});
    CHECK(p.str_binomial() == "2*C(q,2) + 3*C(q,3)");
    CHECK(p.str_monomial() == "q^3/2 - q^2/2");
    CHECK(QPoly().str_binomial() == "0");
    CHECK(QPoly::constant(Rational(-1, 2)).str_monomial() == "-1/2");
}
