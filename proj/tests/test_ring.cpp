#include <doctest.h>

#include "support.hpp"

using namespace lk_test;

TEST_CASE("integers promote past 64 bits and back") {
  const Integer big = Integer(std::int64_t{1} << 62) * Integer(8);
  CHECK_FALSE(big.is_small());
  CHECK(big.to_string() == "36893488147419103232");
  CHECK(Integer::divexact(big, Integer(8)) == Integer(std::int64_t{1} << 62));
  CHECK(Integer::gcd(Integer(12), Integer(-18)) == Integer(6));
  CHECK(Integer::parse("-170141183460469231731687303715884105728").to_string() ==
        "-170141183460469231731687303715884105728");
}

TEST_CASE("rationals stay reduced") {
  CHECK(Rational::parse("6/-4") == Rational(Integer(-3), Integer(2)));
  CHECK((Rational(1) / Rational(3) + Rational(1) / Rational(6)).to_string() == "1/2");
  CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionError);
}

TEST_CASE("gaussian rationals") {
  const GaussianRational one_i(Rational(1), Rational(1));
  CHECK(one_i * one_i == GaussianRational(Rational(0), Rational(2)));
  CHECK((one_i * one_i.inverse()).is_one());
  CHECK(GaussianRational::parse("1/2-3/2i") == GaussianRational(Rational(Integer(1), Integer(2)),
                                                                 Rational(Integer(-3), Integer(2))));
}

TEST_CASE("laurent products") {
  CHECK((rpoly("t") * rpoly("t^-1")).is_one());
  CHECK(rpoly("1 + t") * rpoly("1 - t") == rpoly("1 - t^2"));
  CHECK(poly<GF2>("x + 1", kX) * poly<GF2>("x + 1", kX) == poly<GF2>("x^2 + 1", kX));
  CHECK_THROWS_AS(rpoly("t") * rpoly("q", kQ), VariableSetError);
}

TEST_CASE("render and parse are inverse") {
  std::mt19937_64 rng(11);
  for (int n = 0; n < 200; ++n) {
    const auto p = random_poly<GaussianRational>(rng, kT, 4);
    CHECK(gpoly(render(p)) == p);
    const auto r = random_poly<Rational>(rng, kQ, 4);
    CHECK(rpoly(render(r), kQ) == r);
  }
  CHECK(render(rpoly("15/2*t^2 + 3*t^4 + 3")) == "3*t^4 + 15/2*t^2 + 3");
}

TEST_CASE("polynomial grammar rejects malformed text") {
  CHECK_THROWS_AS(rpoly("2t"), ParseError);
  CHECK_THROWS_AS(rpoly("t^"), ParseError);
  CHECK_THROWS_AS(rpoly("t +"), ParseError);
  CHECK_THROWS_AS(rpoly("q"), ParseError);
  try {
    rpoly("t + $");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.column() == 5);
  }
}

TEST_CASE("gcd") {
  CHECK(laurent_gcd<Rational>({rpoly("t^2 - 1"), rpoly("t - 1")}) == rpoly("t - 1"));
  const auto p = rpoly("3*t^2 + 6");
  CHECK(canonicalize(laurent_gcd<Rational>({p, LaurentPoly<Rational>(kT)})) == canonicalize(p));
  // 2t²+2 = 2(t²+1) and 4t+4 = 4(t+1) share content 2 and no common factor
  // of positive degree; over the field the content disappears.
  const auto g = laurent_gcd<GaussianRational>({gpoly("2*t^2 + 2"), gpoly("4*t + 4")},
                                               UnitMode::gaussian_integer_content);
  CHECK(canonicalize(g, UnitMode::gaussian_integer_content) ==
        canonicalize(gpoly("2"), UnitMode::gaussian_integer_content));
  // with a shared linear factor the content and the factor both survive
  const auto h = laurent_gcd<GaussianRational>({gpoly("2*t^2 - 2"), gpoly("4*t + 4")},
                                               UnitMode::gaussian_integer_content);
  CHECK(canonicalize(h, UnitMode::gaussian_integer_content) ==
        canonicalize(gpoly("2*t + 2"), UnitMode::gaussian_integer_content));
  CHECK_THROWS_AS(laurent_gcd<Rational>({poly<Rational>("t*q + 1", Variables{Var::t, Var::q}),
                                         poly<Rational>("t + q", Variables{Var::t, Var::q})}),
                  UnsupportedGcdError);
}

TEST_CASE("gcd divides its inputs and is maximal on random products") {
  std::mt19937_64 rng(5);
  for (int n = 0; n < 50; ++n) {
    const auto common = random_poly<Rational>(rng, kT, 2);
    if (common.is_zero()) continue;
    const auto a = common * random_poly<Rational>(rng, kT, 3);
    const auto b = common * random_poly<Rational>(rng, kT, 3);
    if (a.is_zero() || b.is_zero()) continue;
    const auto g = laurent_gcd<Rational>({a, b});
    CHECK(laurent_divides(g, a));
    CHECK(laurent_divides(g, b));
    CHECK(laurent_divides(common, g));
  }
}

TEST_CASE("divisibility") {
  CHECK(laurent_divides(rpoly("t + 1"), rpoly("t^2 - 1")));
  CHECK_FALSE(laurent_divides(rpoly("t + 2"), rpoly("t^2 - 1")));
  CHECK(laurent_divides(rpoly("2 + t^-2"), rpoly("2 + t^-2") * rpoly("1 + 2*t^-2")));
  CHECK(laurent_divides(LaurentPoly<Rational>(kT), LaurentPoly<Rational>(kT)));
  CHECK_FALSE(laurent_divides(LaurentPoly<Rational>(kT), rpoly("t")));
  CHECK_FALSE(laurent_divides(gpoly("2"), gpoly("t + 1"), UnitMode::gaussian_integer_content));
}

TEST_CASE("canonical forms") {
  CHECK(canonicalize(rpoly("2 + t^-2")).to_string() == "t^2 + 1/2");
  CHECK(canonicalize(rpoly("2*q^-1 - 1", kQ)) == canonicalize(rpoly("2 - q", kQ)));
  const auto a = canonicalize(gpoly("6*t^4 + 15*t^2 + 6"), UnitMode::gaussian_integer_content);
  const auto b = canonicalize(gpoly("3*t^4 + 15/2*t^2 + 3"), UnitMode::gaussian_integer_content);
  CHECK(canonicalize(gpoly("6*t^4 + 15*t^2 + 6")) == canonicalize(gpoly("3*t^4 + 15/2*t^2 + 3")));
  CHECK(a.primitive == b.primitive);
  CHECK(a.content == b.content * GaussianRational(2));
  CHECK(canonicalize(LaurentPoly<Rational>(kT)).is_zero());
}

TEST_CASE("canonicalize ignores random unit multiples") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> shift(-5, 5);
  std::uniform_int_distribution<int> pick(0, 3);
  const std::array<GaussianRational, 4> units{GaussianRational(1), GaussianRational(-1), GaussianRational::i(),
                                              -GaussianRational::i()};
  for (int n = 0; n < 100; ++n) {
    const auto p = random_poly<GaussianRational>(rng, kT, 3);
    const auto u = LaurentPoly<GaussianRational>::variable(kT, Var::t, shift(rng)).scaled(units[pick(rng)]);
    CHECK(canonicalize(p * u, UnitMode::gaussian_integer_content) ==
          canonicalize(p, UnitMode::gaussian_integer_content));
    const auto f = LaurentPoly<GaussianRational>::variable(kT, Var::t, shift(rng))
                       .scaled(GaussianRational(Rational(Integer(shift(rng) * 2 + 11), Integer(7)), Rational(1)));
    CHECK(canonicalize(p * f) == canonicalize(p));
    const auto o = canonicalize(p * u, UnitMode::gaussian_integer_content);
    CHECK(o.original() == p * u);
  }
}

TEST_CASE("quaternion products") {
  const auto i = Quaternion::i(kT);
  const auto j = Quaternion::j(kT);
  const auto k = Quaternion::k(kT);
  CHECK(i * j == k);
  CHECK(j * i == -k);
  const auto tj = j.scaled(rpoly("-t"));
  const auto tinvj = j.scaled(rpoly("t^-1"));
  CHECK(tj * tinvj == Quaternion::one(kT));
  const auto one_i = Quaternion::one(kT) + i;
  CHECK(one_i * one_i == i.scaled(rpoly("2")));
}

TEST_CASE("standard representation") {
  CHECK(quat_to_matrix(Quaternion::one(kT)).is_identity());
  const auto jm = quat_to_matrix(Quaternion::j(kT));
  CHECK(jm(0, 1) == gpoly("1"));
  CHECK(jm(1, 0) == gpoly("-1"));
  CHECK(jm(0, 0).is_zero());
  const auto tk = quat_to_matrix(Quaternion::k(kT).scaled(rpoly("t")));
  const auto it = gpoly("t").scaled(GaussianRational::i());
  CHECK(tk(0, 1) == it);
  CHECK(tk(1, 0) == it);
  CHECK(tk(0, 0).is_zero());
}

TEST_CASE("the representation is multiplicative and additive on random pairs") {
  std::mt19937_64 rng(3);
  for (int n = 0; n < 100; ++n) {
    auto q = [&] {
      return Quaternion(random_poly<Rational>(rng, kT, 2), random_poly<Rational>(rng, kT, 2),
                        random_poly<Rational>(rng, kT, 2), random_poly<Rational>(rng, kT, 2));
    };
    const auto a = q();
    const auto b = q();
    CHECK(quat_to_matrix(a * b) == quat_to_matrix(a) * quat_to_matrix(b));
    CHECK(quat_to_matrix(a + b) == quat_to_matrix(a) + quat_to_matrix(b));
    CHECK(determinant(quat_to_matrix(a)) == to_gaussian(a.norm()));
  }
}
