#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pscert/bivar.hpp"
#include "pscert/certgen.hpp"
#include "pscert/gaussian.hpp"
#include "pscert/herm.hpp"
#include "pscert/quadhom.hpp"
#include "pscert/rational.hpp"

using namespace pscert;

TEST_CASE("rational square root brackets are outward and tight") {
    for (long n : {2L, 3L, 5L, 7L, 1000L}) {
        Rational v(n);
        Rational u = sqrt_upper(v), l = sqrt_lower(v);
        CHECK(u * u >= v);
        CHECK(l * l <= v);
        CHECK(u - l <= u / 64);  // both within ~1/256 relative
    }
    CHECK(sqrt_upper(Rational(25)) == 5);
    CHECK(sqrt_lower(Rational(25)) == 5);
    CHECK(sqrt_upper(Rational(0)) == 0);
    CHECK(sqrt_upper(Rational(1, 4)) >= Rational(1, 2));
    CHECK(sqrt_lower(Rational(1, 4)) <= Rational(1, 2));
}

TEST_CASE("parse_rational rejects garbage") {
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK_THROWS_AS(parse_rational("x"), ParseError);
}

TEST_CASE("bivariate arithmetic and evaluation") {
    BivarPoly p = (BivarPoly::x1() + BivarPoly::x2()).pow(2);
    CHECK(p.coeff(2, 0) == 1);
    CHECK(p.coeff(1, 1) == 2);
    CHECK(p.coeff(0, 2) == 1);
    CHECK(p.degree() == 2);
    CHECK(p.eval(Rational(1, 2), Rational(1, 3)) == Rational(25, 36));

    BivarPoly q = p - p;
    CHECK(q.is_zero());
    CHECK(q.degree() == -1);

    // affine composition oracle: x1 -> 1 + 2t
    BivarPoly lin = BivarPoly::x1();
    BivarPoly comp = lin.compose_affine(1, 2, 0, 1);
    CHECK(comp.eval(Rational(1), Rational(0)) == 3);
    CHECK(comp.eval(Rational(-1), Rational(0)) == -1);
}

TEST_CASE("bivariate text format round-trips") {
    BivarPoly p = parse_bivar("3 + -1 * x1^2 + 1/2 * x1^1 x2^3");
    CHECK(p.coeff(0, 0) == 3);
    CHECK(p.coeff(2, 0) == -1);
    CHECK(p.coeff(1, 3) == Rational(1, 2));
    CHECK(parse_bivar(to_string(p)) == p);
    CHECK(parse_bivar("0").is_zero());
    CHECK(to_string(BivarPoly()) == "0");
    CHECK_THROWS_AS(parse_bivar("1 2 * x1^1"), ParseError);
}

TEST_CASE("factorial-weighted norm oracle") {
    // 3 - x1 x2: weights 3 * 1 and 1 * (1!1!/2!) = 1/2
    BivarPoly p = parse_bivar("3 + -1 * x1^1 x2^1");
    CHECK(poly_norm(p) == 3);
    CHECK(poly_norm(parse_bivar("1 * x1^1 x2^1")) == Rational(1, 2));
    CHECK(lipschitz_const(p) > 0);
}

TEST_CASE("gaussian rationals") {
    GaussRat a(Rational(3), Rational(4));
    CHECK(abs_upper(a) == 5);  // exact for a perfect square modulus
    CHECK(a.conj() == GaussRat(Rational(3), Rational(-4)));
    CHECK((a * a.conj()) == GaussRat(Rational(25)));
    CHECK(abs_upper(GaussRat(Rational(-2))) == 2);
    CHECK(abs_upper(GaussRat(Rational(0), Rational(-3))) == 3);
    GaussRat i(Rational(0), Rational(1));
    CHECK((i * i) == GaussRat(Rational(-1)));
}

TEST_CASE("hermitian polynomials: conjugation and real-valuedness") {
    HermPoly p = parse_herm("(0,1) * z + (0,-1) * zb");  // i(z - zb) = -2 x2, real-valued
    CHECK(p.is_real_valued());
    CHECK(herm_to_real(p) == parse_bivar("-2 * x2^1"));

    HermPoly z = HermPoly::z();
    CHECK(!z.is_real_valued());
    CHECK_THROWS_AS(herm_to_real(z), NotRealValued);
    CHECK(z.conj() == HermPoly::zbar());

    HermPoly m = modulus_squared(parse_herm("1 * z + (0,2)"));
    CHECK(m.is_real_valued());
    // |z + 2i|^2 = zzb - 2i z + 2i zb + 4
    CHECK(m.coeff(1, 1) == GaussRat(Rational(1)));
    CHECK(m.coeff(1, 0) == GaussRat(Rational(0), Rational(-2)));
    CHECK(m.coeff(0, 0) == GaussRat(Rational(4)));
}

TEST_CASE("herm/real conversions are mutually inverse") {
    BivarPoly q = parse_bivar("2 + -1 * x1^2 + 3/7 * x1^1 x2^2 + 5 * x2^4");
    CHECK(herm_to_real(real_to_herm(q)) == q);
    HermPoly p = parse_herm("1 * z^2 zb^1 + 1 * z^1 zb^2 + 4 * z^1 zb^1 + -2");
    CHECK(real_to_herm(herm_to_real(p)) == p);
}

TEST_CASE("hermitian evaluation and coefficient sums") {
    HermPoly p = parse_herm("1 * z^2 + -3 * z^1 zb^1");
    GaussRat v = p.eval(GaussRat(Rational(1, 2), Rational(1, 2)));
    // z = (1+i)/2: z^2 = i/2, |z|^2 = 1/2 -> i/2 - 3/2
    CHECK(v == GaussRat(Rational(-3, 2), Rational(1, 2)));
    CHECK(p.coeff_sum_bound() == 4);
    CHECK(parse_herm(to_string(p)) == p);
}

TEST_CASE("homogeneous 4-variable polynomials") {
    QuadHomPoly s = QuadHomPoly::sum_of_vars();
    CHECK(s.degree() == 1);
    CHECK(s.pow(3).term_count() == 20);  // C(3+3,3) monomials
    CHECK(s.pow(3).is_homogeneous());
    CHECK(!s.pow(2).has_negative_coeff());

    QuadHomPoly f = QuadHomPoly::var(0) - QuadHomPoly::var(1);
    CHECK((f * f).has_negative_coeff());
    CHECK((f * s) == f.mul_by_var_sum({true, true, true, true}));
    std::array<bool, 4> sup = f.support_vars();
    CHECK(sup[0]);
    CHECK(sup[1]);
    CHECK(!sup[2]);

    CHECK(f.eval({Rational(1), Rational(1, 3), Rational(0), Rational(0)}) == Rational(2, 3));
}

TEST_CASE("quarter-substitution identities for all four variables") {
    // 8 * gamma = (1 +- x_i)^2 + x_other^2 + g0 with gamma in
    // {(1+x1)/4, (1-x1)/4, (1+x2)/4, (1-x2)/4}
    BivarPoly one(Rational(1));
    BivarPoly g0 = detail::disk_constraint();
    BivarPoly x1 = BivarPoly::x1(), x2 = BivarPoly::x2();
    std::array<BivarPoly, 4> gamma{Rational(1, 4) * (one + x1), Rational(1, 4) * (one - x1),
                                   Rational(1, 4) * (one + x2), Rational(1, 4) * (one - x2)};
    std::array<BivarPoly, 4> sq{one + x1, one - x1, one + x2, one - x2};
    std::array<BivarPoly, 4> other{x2, x2, x1, x1};
    for (int i = 0; i < 4; ++i) {
        BivarPoly lhs = Rational(8) * gamma[static_cast<size_t>(i)];
        BivarPoly rhs = sq[static_cast<size_t>(i)] * sq[static_cast<size_t>(i)] +
                        other[static_cast<size_t>(i)] * other[static_cast<size_t>(i)] + g0;
        CHECK(lhs == rhs);
    }
    // the four gammas sum to 1 and substitute the lift exactly
    CHECK((gamma[0] + gamma[1] + gamma[2] + gamma[3]) == one);
}

TEST_CASE("correction kernel vanishes under the substitution") {
    for (long dh : {2L, 3L, 5L, 8L}) {
        QuadHomPoly k = detail::correction_kernel(dh);
        CHECK(k.degree() == dh);
        CHECK(gamma_image(k).is_zero());
    }
    // and the substitution inverts the lift
    BivarPoly p = parse_bivar("3 + -1 * x1^2 + 1 * x1^1 x2^1");
    CHECK(gamma_image(square_lift(p)) == p);
}
