#include "hecke/ring.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace hecke;

TEST_CASE("laurent ring axioms on random elements") {
  std::mt19937_64 rng(42);
  auto rand_poly = [&rng]() {
    Laurent p;
    int nt = static_cast<int>(rng() % 5);
    for (int i = 0; i < nt; ++i) {
      Exps e{static_cast<int>(rng() % 7) - 3, static_cast<int>(rng() % 5) - 2};
      trim_exps(e);
      p.add_term(e, Rat(static_cast<long>(rng() % 11) - 5));
    }
    return p;
  };
  for (int trial = 0; trial < 50; ++trial) {
    Laurent a = rand_poly(), b = rand_poly(), c = rand_poly();
    REQUIRE(a + b == b + a);
    REQUIRE(a * b == b * a);
    REQUIRE((a + b) * c == a * c + b * c);
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a - a == Laurent::zero());
    REQUIRE(a * Laurent::one() == a);
  }
}

TEST_CASE("monomials are units") {
  Laurent m = Laurent::monomial(0, -3, Rat(2, 5));
  REQUIRE(m * m.inverse() == Laurent::one());
  Laurent q = Laurent::var(0);
  REQUIRE(q.pow(-2) * q.pow(2) == Laurent::one());
  REQUIRE_THROWS((Laurent::var(0) + Laurent::one()).inverse());
}

TEST_CASE("exact division") {
  Laurent q = Laurent::var(0);
  Laurent one = Laurent::one();
  // (1 - q^4) / (1 - q^2) = 1 + q^2
  Laurent num = one - q.pow(4);
  Laurent den = one - q.pow(2);
  REQUIRE(div_exact(num, den) == one + q.pow(2));
  // Laurent shifts divide
  REQUIRE(div_exact(q.pow(-1) - q, one - q.pow(2)) == q.pow(-1));
  // inexact division reports failure
  REQUIRE(!try_div_exact(one + q, one + q.pow(2)).has_value());

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    Laurent a, b;
    for (int i = 0; i < 3; ++i) {
      Exps e{static_cast<int>(rng() % 7) - 3, static_cast<int>(rng() % 5) - 2};
      trim_exps(e);
      a.add_term(e, Rat(static_cast<long>(rng() % 9) - 4));
      Exps e2{static_cast<int>(rng() % 5) - 2, static_cast<int>(rng() % 3) - 1};
      trim_exps(e2);
      b.add_term(e2, Rat(static_cast<long>(rng() % 9) - 4));
    }
    if (b.is_zero()) continue;
    REQUIRE(div_exact(a * b, b) == a);
  }
}

TEST_CASE("fraction equality by cross multiplication") {
  Laurent q = Laurent::var(0);
  LaurentFrac a(Laurent::one() - q.pow(4), Laurent::one() - q.pow(2));
  LaurentFrac b(Laurent::one() + q.pow(2));
  REQUIRE(a == b);
  REQUIRE(a.as_laurent() == Laurent::one() + q.pow(2));
  LaurentFrac c = a / b;
  REQUIRE(c == LaurentFrac(Laurent::one()));
}

TEST_CASE("substitution and evaluation") {
  Laurent q = Laurent::var(0), x = Laurent::var(1);
  Laurent p = q.pow(-2) * x + Laurent::constant(Rat(3)) * q;
  REQUIRE(p.eval({Rat(1, 2), Rat(5)}) == Rat(4) * Rat(5) + Rat(3, 2));
  Laurent half = p.substitute({Rat(1, 2), std::nullopt});
  REQUIRE(half == Rat(4) * x + Laurent::constant(Rat(3, 2)));
}

TEST_CASE("rendering") {
  Laurent q = Laurent::var(0);
  Laurent p = q.pow(-1) + q;
  REQUIRE(p.to_string({"q"}) == "q^-1 + q");
  REQUIRE(Laurent::zero().to_string() == "0");
  REQUIRE(parse_rat("2/3") == Rat(2, 3));
  REQUIRE(parse_rat("-5") == Rat(-5));
  REQUIRE_THROWS(parse_rat("1/0"));
}
