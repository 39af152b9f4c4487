#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eulerode/error.hpp"
#include "eulerode/pade.hpp"
#include "eulerode/series.hpp"
#include "support/testkit.hpp"

using namespace eulerode;

namespace {

std::vector<Rational> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

const std::vector<Rational> worked_series = ints({1, 3, 8, 6, -20, -96, -208, -168, 544});

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::Internal;
}

}  // namespace

TEST_CASE("request validation") {
  CHECK_THROWS_AS(PadeRequest(ints({1, 2, 3}), 2, 1), Error);
  CHECK_NOTHROW(PadeRequest(ints({1, 2, 3, 4}), 2, 1));
  const PadeRequest r(ints({5, 6}), 1, 0);
  CHECK(r.coeff(-1) == 0);
  CHECK(r.coeff(1) == 6);
}

TEST_CASE("worked example fraction") {
  const auto f = pade_solve(PadeRequest(worked_series, 3, 4));
  CHECK(f.to_string() == "(4*t^2 + t + 1)/(4*t^4 + 4*t^3 + 2*t^2 - 2*t + 1)");
  CHECK(f.numerator().degree() == 2);

  // Eight terms are needed for [3/4]; the eighth is regenerated from f2 itself.
  const auto truth = ratfun_normalize(Poly{-2, 3, 2}, Poly{1, -2, 2, 4, 4});
  const auto s8 = maclaurin_coeffs(truth, 7).coefficients;
  CHECK(std::vector<Rational>(s8.begin(), s8.begin() + 7) == ints({-2, -1, 4, 18, 40, 32, -104}));
  const auto f2 = pade_solve(PadeRequest(s8, 3, 4));
  CHECK(f2.to_string() == "(2*t^2 + 3*t - 2)/(4*t^4 + 4*t^3 + 2*t^2 - 2*t + 1)");
}

TEST_CASE("second component from seven coefficients") {
  const auto f2 = pade_solve(PadeRequest(ints({-2, -1, 4, 18, 40, 32, -104}), 2, 4));
  CHECK(f2.to_string() == "(2*t^2 + 3*t - 2)/(4*t^4 + 4*t^3 + 2*t^2 - 2*t + 1)");
}

TEST_CASE("polynomial with M = 0") {
  const auto f = pade_solve(PadeRequest(ints({3, 0, -1, 2}), 3, 0));
  CHECK(f.numerator() == Poly{3, 0, -1, 2});
  CHECK(f.denominator() == Poly{1});
}

TEST_CASE("overestimated bounds recover the same fraction") {
  const auto truth = ratfun_normalize(Poly{1, 1, 4}, Poly{1, -2, 2, 4, 4});
  const auto s = maclaurin_coeffs(truth, 12).coefficients;
  for (std::size_t L = 2; L <= 5; ++L)
    for (std::size_t M = 4; L + M <= 12; ++M) {
      CAPTURE(L);
      CAPTURE(M);
      const auto r = pade_approximant(PadeRequest(s, L, M));
      CHECK(r.fraction == truth);
      CHECK(r.matches_series);
    }

  testkit::Rng rng(201);
  for (int i = 0; i < 30; ++i) {
    const auto f = ratfun_normalize(rng.poly(2), rng.den_poly(3));
    const auto s9 = maclaurin_coeffs(f, 9).coefficients;
    CHECK(pade_solve(PadeRequest(s9, 2, 3)) == f);
    CHECK(pade_solve(PadeRequest(s9, 4, 5)) == f);
    CHECK(pade_solve(PadeRequest(s9, 3, 5)) == f);
    CHECK(pade_solve(PadeRequest(s9, 5, 3)) == f);
  }
}

TEST_CASE("expansion of the fraction matches the input prefix") {
  testkit::Rng rng(202);
  for (int i = 0; i < 40; ++i) {
    std::vector<Rational> s;
    for (int j = 0; j < 8; ++j) s.push_back(rng.rational(6, 3));
    if (s[0].is_zero()) s[0] = 1;
    const std::size_t L = static_cast<std::size_t>(rng.integer(0, 4));
    const std::size_t M = 7 - L;
    const auto r = pade_approximant(PadeRequest(s, L, M));
    const auto e = maclaurin_coeffs(r.fraction, 7).coefficients;
    CHECK(r.fraction.numerator().degree() <= static_cast<int>(L));
    CHECK(r.fraction.denominator().degree() <= static_cast<int>(M));
    if (r.matches_series) CHECK(e == s);
    else CHECK(e != s);
  }
}

TEST_CASE("singular Toeplitz systems") {
  // 1 + t^2 + t^4 + ... = 1/(1 - t^2): the [1/1] system is singular but consistent.
  const auto f = pade_approximant(PadeRequest(ints({1, 0, 1}), 1, 1));
  CHECK(f.fraction.numerator() == Poly{1});
  CHECK(f.fraction.denominator() == Poly{1});
  CHECK_FALSE(f.matches_series);

  // c = 1, 0, 0, 1: [1/1] inconsistent; falls back to [0/0].
  const auto g = pade_approximant(PadeRequest(ints({1, 0, 0, 1}), 1, 2));
  CHECK(g.fraction.denominator().degree() <= 2);
  CHECK(g.L_used <= 1);

  // Zero series.
  const auto z = pade_approximant(PadeRequest(ints({0, 0, 0}), 1, 1));
  CHECK(z.fraction.numerator().is_zero());
  CHECK(z.matches_series);
}

TEST_CASE("degenerate ladder ends in an error") {
  CHECK(code_of([] { pade_approximant(PadeRequest(ints({0, 1, 0}), 0, 2)); }) == ErrorCode::PadeDegenerate);
}

TEST_CASE("determinant formula on the worked example") {
  const PadeRequest req(worked_series, 3, 4);
  const auto [num, den] = pade_determinants(req);
  // The expansion of both 5x5 determinants, before any reduction.
  CHECK(num == Poly{3600, 3600, 14400});
  CHECK(den == Poly{3600, -7200, 7200, 14400, 14400});
  CHECK(pade_determinant_oracle(req) == pade_solve(req));
}

TEST_CASE("determinant formula small cases") {
  CHECK(pade_determinant_oracle(PadeRequest(ints({7}), 0, 0)) == ratfun_normalize(Poly{7}, Poly{1}));
  CHECK(pade_determinant_oracle(PadeRequest(ints({1, 2, 4}), 0, 1)) == ratfun_normalize(Poly{1}, Poly{1, -2}));
  CHECK(pade_determinant_oracle(PadeRequest(ints({1, 1, 1}), 1, 1)) == ratfun_normalize(Poly{1}, Poly{1, -1}));
  CHECK(code_of([] { pade_determinant_oracle(PadeRequest(ints({0, 0, 0}), 1, 1)); }) ==
        ErrorCode::OracleDegenerate);
  CHECK(code_of([] { pade_determinants(PadeRequest(std::vector<Rational>(12, 1), 6, 5)); }) ==
        ErrorCode::InvalidArgument);
}

TEST_CASE("determinant formula equals the linear solve on random instances") {
  testkit::Rng rng(203);
  int compared = 0;
  while (compared < 40) {
    const int m = static_cast<int>(rng.integer(0, 4));
    const int l = static_cast<int>(rng.integer(0, 8 - m));
    const auto f = ratfun_normalize(rng.poly(l), rng.den_poly(m));
    const PadeRequest req(maclaurin_coeffs(f, static_cast<std::size_t>(l + m)).coefficients, l, m);
    RationalFunction oracle;
    try {
      oracle = pade_determinant_oracle(req);
    } catch (const Error& e) {
      REQUIRE(e.code() == ErrorCode::OracleDegenerate);
      continue;
    }
    CHECK(oracle == pade_solve(req));
    CHECK(oracle == f);
    ++compared;
  }
}
