#include "hecke/params.hpp"
#include "hecke/random.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace hecke;

TEST_CASE("q of group elements") {
  auto a2 = build_root_system("A2");
  auto p = MultiplicityParams::make_formal(a2);
  Laurent q = Laurent::var(0);

  REQUIRE(q_of_element(a2, a2.aff_identity(), p) == Laurent::one());
  for (int g = 1; g <= 2; ++g)
    REQUIRE(q_of_element(a2, a2.gen_element(g), p) == q);
  // q_{t_{omega_1}} = q^{l(t_{omega_1})} = q^2
  REQUIRE(q_of_element(a2, a2.aff_translation(Weight{1, 0}), p) == q.pow(2));
  for (const auto& u : a2.omega_group())
    REQUIRE(q_of_element(a2, u.u, p) == Laurent::one());
}

TEST_CASE("q is length multiplicative") {
  for (const char* ty : {"A2", "B2", "G2", "B3"}) {
    auto rs = build_root_system(ty);
    auto p = MultiplicityParams::make_formal(rs);
    RandomSource rnd(7);
    int hits = 0;
    for (int i = 0; i < 200 && hits < 40; ++i) {
      AffineElt a{rnd.uniform(0, rs.w0.size() - 1), rnd.weight(rs.rank, 2)};
      AffineElt b{rnd.uniform(0, rs.w0.size() - 1), rnd.weight(rs.rank, 2)};
      AffineElt ab = rs.aff_mult(a, b);
      if (rs.aff_length(ab) != rs.aff_length(a) + rs.aff_length(b)) continue;
      ++hits;
      REQUIRE(q_of_element(rs, ab, p) ==
              q_of_element(rs, a, p) * q_of_element(rs, b, p));
    }
    REQUIRE(hits >= 10);
  }
}

TEST_CASE("q_w as product over the inversion set") {
  for (const char* ty : {"B2", "G2", "A3"}) {
    auto rs = build_root_system(ty);
    auto p = MultiplicityParams::make_formal(rs);
    for (int w = 0; w < rs.w0.size(); ++w) {
      Laurent expect = Laurent::one();
      for (int a : rs.inversions(w)) expect *= p.q(rs.positive[a].cls);
      REQUIRE(q_of_finite(rs, w, p) == expect);
    }
  }
}

TEST_CASE("e_q") {
  auto a1 = build_root_system("A1");
  auto p = MultiplicityParams::make_formal(a1);
  Laurent q = Laurent::var(0);
  REQUIRE(e_q(a1, Weight{0}, p) == Laurent::one());
  REQUIRE(e_q(a1, Weight{1}, p) == q);
  REQUIRE(e_q(a1, Weight{2}, p) == q.pow(2));       // alpha_1
  REQUIRE(e_q(a1, Weight{-2}, p) == q.pow(-2));     // s_1 alpha_1

  for (const char* ty : {"A2", "B2", "G2", "C3"}) {
    auto rs = build_root_system(ty);
    auto pp = MultiplicityParams::make_formal(rs);
    RandomSource rnd(9);
    for (int i = 0; i < 20; ++i) {
      Weight lam = rnd.weight(rs.rank, 3), mu = rnd.weight(rs.rank, 3);
      REQUIRE(e_q(rs, add_w(lam, mu), pp) == e_q(rs, lam, pp) * e_q(rs, mu, pp));
      // evaluation formula q_{t_lambda} = e_q(lambda_+)
      REQUIRE(q_of_element(rs, rs.aff_translation(lam), pp) ==
              e_q(rs, rs.dominant(lam), pp));
      // e_q(w^{-1} mu) = e_q(mu) prod_{alpha in R(w)} q_alpha^{2<w^{-1}mu, alpha^vee>}
      int w = rnd.uniform(0, rs.w0.size() - 1);
      Weight wmu = rs.act(rs.w0.inv[w], mu);
      Laurent rhs = e_q(rs, mu, pp);
      for (int a : rs.inversions(w))
        rhs *= pp.qpow(rs.positive[a].cls, 2 * rs.pair_coroot(wmu, a));
      REQUIRE(e_q(rs, wmu, pp) == rhs);
    }
  }
}

TEST_CASE("poincare series") {
  auto a1 = build_root_system("A1");
  auto p1 = MultiplicityParams::make_formal(a1);
  Laurent q = Laurent::var(0);
  REQUIRE(poincare_w0(a1, p1) == Laurent::one() + q.pow(2));

  auto a2 = build_root_system("A2");
  auto p2 = MultiplicityParams::make_formal(a2);
  REQUIRE(poincare_w0(a2, p2) ==
          Laurent::one() + Rat(2) * q.pow(2) + Rat(2) * q.pow(4) + q.pow(6));

  // strictly dominant weight: trivial stabilizer, empty product
  REQUIRE(poincare_stabilizer_product(a2, Weight{1, 2}, p2) == Laurent::one());

  // product formula vs brute force over the stabilizer
  for (const char* ty : {"A1", "A2", "A3", "B2", "B3", "C3", "G2"}) {
    auto rs = build_root_system(ty);
    auto p = MultiplicityParams::make_formal(rs);
    std::set<Weight> doms;
    RandomSource rnd(21);
    doms.insert(Weight(rs.rank, 0));
    for (int i = 0; i < 12; ++i) doms.insert(rnd.dominant_weight(rs.rank, 3));
    for (const auto& lam : doms) {
      Laurent brute = poincare_sum(rs, rs.stabilizer(lam), p);
      REQUIRE(poincare_stabilizer_product(rs, lam, p) == brute);
    }
  }
}

TEST_CASE("numeric parameter mode") {
  auto b2 = build_root_system("B2");
  auto pf = MultiplicityParams::make_formal(b2);
  auto pn = MultiplicityParams::make_numeric2(b2, Rat(1, 2), Rat(2, 3));
  RandomSource rnd(3);
  for (int i = 0; i < 10; ++i) {
    Weight lam = rnd.weight(2, 3);
    Laurent formal = e_q(b2, lam, pf);
    REQUIRE(formal.eval({Rat(1, 2), Rat(2, 3)}) ==
            e_q(b2, lam, pn).constant_value());
  }
}
