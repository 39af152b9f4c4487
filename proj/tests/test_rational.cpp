#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eulerode/error.hpp"
#include "eulerode/poly.hpp"
#include "support/testkit.hpp"

using namespace eulerode;

TEST_CASE("rational canonical form") {
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational(6, -4).denominator() == 2);
  CHECK(Rational(0, -7).to_string() == "0");
  CHECK(Rational(10, 5).to_string() == "2");
  CHECK(Rational(-1, 3).to_string() == "-1/3");
  CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("rational parse") {
  CHECK(Rational::parse("3") == 3);
  CHECK(Rational::parse("-2/6") == Rational(-1, 3));
  CHECK(Rational::parse("+5/1") == 5);
  CHECK(Rational::parse("1.25") == Rational(5, 4));
  CHECK(Rational::parse("-0.5") == Rational(-1, 2));
  CHECK(Rational::parse("123456789012345678901234567890").to_string() == "123456789012345678901234567890");
  for (const char* bad : {"", "1/0", "abc", "1/", "/2", "1.2.3", "--1", "1e5"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(Rational::parse(bad), Error);
  }
}

TEST_CASE("rational field axioms on random samples") {
  testkit::Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const Rational a = rng.rational(50, 30), b = rng.rational(50, 30), c = rng.rational(50, 30);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a - a == 0);
    if (!a.is_zero()) CHECK(a * a.inverse() == 1);
  }
  CHECK_THROWS_AS(Rational(0).inverse(), Error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
}

TEST_CASE("rational ordering") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(-7, 3).abs() == Rational(7, 3));
  CHECK(Rational(-7, 3).sign() == -1);
}

TEST_CASE("gaussian rationals") {
  const GaussianRational z(Rational(2), Rational(3));
  CHECK(z * z.conjugate() == GaussianRational(Rational(13)));
  CHECK((z * z.conjugate()).im.is_zero());
  CHECK(z.norm() == 13);
  CHECK(z / z == GaussianRational(Rational(1)));
  const GaussianRational w(Rational(1, 2), Rational(-5, 3));
  CHECK((z / w) * w == z);
  CHECK_THROWS_AS(z / GaussianRational(), Error);
}

TEST_CASE("poly derivative") {
  CHECK(poly_derivative(Poly{13, -4, 1}) == Poly{-4, 2});
  CHECK(poly_derivative(Poly{7}).is_zero());
  testkit::Rng rng(5);
  for (int i = 0; i < 20; ++i) {
    const Poly p = rng.poly(5);
    const Poly d = poly_derivative(p);
    CHECK(d.degree() == 4);
    for (std::size_t j = 1; j <= 5; ++j) CHECK(d[j - 1] == Rational(static_cast<long>(j)) * p[j]);
  }
}

TEST_CASE("poly evaluation at gaussian points") {
  const Poly phi{13, -4, 1};
  CHECK(poly_eval_complex(phi, {2, 3}).is_zero());
  CHECK(poly_eval_complex(phi, {2, -3}).is_zero());
  CHECK(poly_eval_complex(Poly{1}, {Rational(5), Rational(-7)}) == GaussianRational(Rational(1)));

  // 1 - k - k^2 at 1 + i by explicit powers: (1+i)^2 = 2i.
  const GaussianRational z(1, 1);
  const GaussianRational z2 = z * z;
  CHECK(z2 == GaussianRational(Rational(0), Rational(2)));
  CHECK(poly_eval_complex(Poly{1, -1, -1}, z) == GaussianRational(Rational(1)) - z - z2);
  CHECK(poly_eval_complex(Poly{1, -1, -1}, z) == GaussianRational(Rational(0), Rational(-3)));

  testkit::Rng rng(9);
  for (int i = 0; i < 20; ++i) {
    const Poly p = rng.poly(4);
    const Rational x = rng.rational();
    CHECK(poly_eval_complex(p, GaussianRational(x)) == GaussianRational(p.eval(x)));
  }
}

TEST_CASE("poly division and gcd") {
  CHECK(poly_gcd(Poly{-1, 0, 1}, Poly{-1, 1}) == Poly{-1, 1});
  CHECK(poly_gcd(Poly{}, Poly{4, 2}) == Poly{2, 1});
  CHECK(poly_gcd(Poly{3}, Poly{4, 2}) == Poly{1});
  CHECK_THROWS_AS(poly_gcd(Poly{}, Poly{}), Error);
  CHECK_THROWS_AS((Poly{1, 1}.divmod(Poly{})), Error);

  const Poly a{3600, 3600, 14400};
  const Poly b{3600, -7200, 7200, 14400, 14400};
  CHECK(poly_gcd(a, b) == Poly{1});

  testkit::Rng rng(21);
  for (int i = 0; i < 30; ++i) {
    const Poly p = rng.poly(static_cast<int>(rng.integer(1, 3)));
    const Poly q = rng.poly(static_cast<int>(rng.integer(1, 3)));
    const Poly r = rng.poly(static_cast<int>(rng.integer(1, 2)));
    const Poly g0 = poly_gcd(p, q);
    const Poly g = poly_gcd(p * r, q * r);
    CHECK(g.leading() == 1);
    CHECK((p * r).divmod(g).second.is_zero());
    CHECK((q * r).divmod(g).second.is_zero());
    CHECK(g == (g0 * r).monic());

    const auto [quot, rem] = (p * r + q).divmod(r);
    CHECK(quot * r + rem == p * r + q);
    CHECK(rem.degree() < r.degree());
  }
}

TEST_CASE("poly rendering") {
  CHECK(Poly{1, 1, 4}.to_string() == "4*t^2 + t + 1");
  CHECK(Poly{1, -2, 2, 4, 4}.to_string() == "4*t^4 + 4*t^3 + 2*t^2 - 2*t + 1");
  CHECK(Poly{}.to_string() == "0");
  CHECK(Poly{0, Rational(-1, 2)}.to_string() == "-(1/2)*t");
  CHECK(Poly{-4, 2}.to_string("D") == "2*D - 4");
}

TEST_CASE("rational function normalization") {
  const auto r = ratfun_normalize(Poly{2, 2}, Poly{2});
  CHECK(r.numerator() == Poly{1, 1});
  CHECK(r.denominator() == Poly{1});

  const auto worked_fraction = ratfun_normalize(Poly{3600, 3600, 14400}, Poly{3600, -7200, 7200, 14400, 14400});
  CHECK(worked_fraction.to_string() == "(4*t^2 + t + 1)/(4*t^4 + 4*t^3 + 2*t^2 - 2*t + 1)");

  CHECK_THROWS_AS(ratfun_normalize(Poly{1}, Poly{}), Error);
  try {
    ratfun_normalize(Poly{1}, Poly{0, 1});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotDefinedAtZero);
  }
  // A common factor t cancels before the check.
  CHECK(ratfun_normalize(Poly{0, 3}, Poly{0, 1, 1}).denominator() == Poly{1, 1});

  testkit::Rng rng(33);
  for (int i = 0; i < 30; ++i) {
    const Poly f = rng.den_poly(1);
    const Poly num = rng.poly(2) * f;
    const Poly den = rng.den_poly(3) * f;
    const auto nr = ratfun_normalize(num, den);
    CHECK(nr.denominator()[0] == 1);
    CHECK(poly_gcd(nr.numerator().is_zero() ? Poly{1} : nr.numerator(), nr.denominator()) == Poly{1});
    for (int k = 0; k < 5; ++k) {
      const Rational x = rng.rational(7, 5);
      if (den.eval(x).is_zero()) continue;
      CHECK(nr.eval(x) == num.eval(x) / den.eval(x));
    }
  }
}

TEST_CASE("rational function evaluation at a pole") {
  const auto r = ratfun_normalize(Poly{1}, Poly{1, -1});
  try {
    r.eval(1);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EulerSumUndefined);
  }
}
