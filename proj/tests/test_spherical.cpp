#include "hecke/spherical.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace hecke;

TEST_CASE("macdonald polynomials: small closed forms") {
  auto a1 = build_root_system("A1");
  auto p1 = MultiplicityParams::make_formal(a1);
  Laurent q = Laurent::var(0);

  // P_0 = W_0(q^2) e^0
  REQUIRE(macdonald_P(a1, p1, Weight{0}) ==
          poincare_w0(a1, p1) * GroupAlg::unit(1));
  // minuscule: P_{omega_1} = m_{omega_1}
  REQUIRE(macdonald_P(a1, p1, Weight{1}) == orbit_sum(a1, Weight{1}));
  // quasi-minuscule: P_{alpha_1} = m_{alpha_1} + (1 - q^2)
  REQUIRE(macdonald_P(a1, p1, Weight{2}) ==
          orbit_sum(a1, Weight{2}) +
              (Laurent::one() - q.pow(2)) * GroupAlg::unit(1));

  // In this normalization P_lambda carries the stabilizer Poincare factor
  // and its support is the orbit of lambda* = -w_o lambda:
  //   P_omega = W_{0,omega}(q^2) m_{omega*}  for minuscule omega.
  for (const char* ty : {"A2", "B2", "C2", "G2"}) {
    auto rs = build_root_system(ty);
    auto p = MultiplicityParams::make_formal(rs);
    REQUIRE(macdonald_P(rs, p, Weight(rs.rank, 0)) ==
            poincare_w0(rs, p) * GroupAlg::unit(rs.rank));
    for (const auto& omega : rs.minuscule_weights())
      REQUIRE(macdonald_P(rs, p, omega) ==
              poincare_stabilizer_product(rs, omega, p) *
                  orbit_sum(rs, rs.star(omega)));
  }
}

TEST_CASE("macdonald polynomials: symmetrizer route and invariance") {
  for (const char* ty : {"A1", "A2", "B2"}) {
    auto rs = build_root_system(ty);
    auto p = MultiplicityParams::make_formal(rs);
    RandomSource rnd(3);
    for (int t = 0; t < 4; ++t) {
      Weight lam = rnd.dominant_weight(rs.rank, 2);
      GroupAlg P = macdonald_P(rs, p, lam);
      REQUIRE(P == macdonald_P_symmetrizer(rs, p, lam));
      for (int w = 0; w < rs.w0.size(); ++w)
        REQUIRE(ga_weyl_act(rs, rs.aff_finite(w), P) == P);
    }
  }
}

TEST_CASE("integral symmetrized wave matches P evaluation") {
  // phi_x(lambda) = P_lambda(x), including non-dominant lambda
  for (const char* ty : {"A1", "A2", "B2"}) {
    auto rs = build_root_system(ty);
    auto p = MultiplicityParams::make_formal(rs);
    RandomSource rnd(7);
    auto x = random_spectral_point(rs, rnd);
    LatticeFn phi = integral_symmetrized_wave(rs, p, x);
    for (int t = 0; t < 6; ++t) {
      Weight lam = rnd.weight(rs.rank, 2);
      REQUIRE(phi(lam) == macdonald_P(rs, p, lam).eval_torus(x));
    }
  }
}

TEST_CASE("spherical function: closed formula equals intertwiner route") {
  for (const char* ty : {"A1", "A2", "B2"}) {
    auto rs = build_root_system(ty);
    auto p = MultiplicityParams::make_formal(rs);
    auto results = verify_spherical_consistency(rs, p, 11, 2, 2);
    for (const auto& r : results) {
      INFO(ty << " " << r.id << " " << r.detail);
      REQUIRE(r.pass);
    }
  }
}

TEST_CASE("spherical value at the origin is the Poincare series") {
  for (const char* ty : {"A1", "A2", "B2", "G2"}) {
    auto rs = build_root_system(ty);
    auto p = MultiplicityParams::make_formal(rs);
    RandomSource rnd(13);
    for (int t = 0; t < 3; ++t) {
      SphericalEvaluator ev(rs, p, random_spectral_point(rs, rnd));
      REQUIRE(ev.value(Weight(rs.rank, 0)) == poincare_w0(rs, p));
    }
  }
}

TEST_CASE("spherical evaluator is orbit invariant and rejects degenerate x") {
  auto b2 = build_root_system("B2");
  auto p = MultiplicityParams::make_formal(b2);
  RandomSource rnd(17);
  SphericalEvaluator ev(b2, p, random_spectral_point(b2, rnd));
  for (int t = 0; t < 10; ++t) {
    Weight lam = rnd.weight(2, 3);
    int w = rnd.uniform(0, b2.w0.size() - 1);
    REQUIRE(ev.value(lam) == ev.value(b2.act(w, lam)));
  }
  REQUIRE_THROWS_WITH(
      SphericalEvaluator(b2, p, {Rat(1), Rat(1)}),
      Catch::Matchers::ContainsSubstring("resample"));
}

TEST_CASE("eigenvalues of central elements") {
  auto a1 = build_root_system("A1");
  REQUIRE(eigenvalue(orbit_sum(a1, Weight{1}), {Rat(5, 3)}) ==
          Laurent::constant(Rat(5, 3) + Rat(3, 5)));
  REQUIRE(eigenvalue(GroupAlg::unit(1), {Rat(7)}) == Laurent::one());
  // at x = 1 the eigenvalue of m_lambda counts the orbit
  auto b2 = build_root_system("B2");
  REQUIRE(eigenvalue(orbit_sum(b2, Weight{1, 1}), {Rat(1), Rat(1)}) ==
          Laurent::constant(Rat(8)));
}

TEST_CASE("diagonalization of the center on spherical functions") {
  auto a1 = build_root_system("A1");
  auto p1 = MultiplicityParams::make_formal(a1);
  std::vector<Weight> lams1;
  for (int k = 0; k <= 4; ++k) lams1.push_back(Weight{k});
  auto r1 = verify_diagonalization(a1, p1, lams1, 19, 3, 2);
  for (const auto& r : r1) {
    INFO(r.id << " " << r.detail);
    REQUIRE(r.pass);
  }

  for (const char* ty : {"A2", "B2"}) {
    auto rs = build_root_system(ty);
    auto p = MultiplicityParams::make_formal(rs);
    std::vector<Weight> lams{{1, 0}, {0, 1}, {1, 1}};
    auto rr = verify_diagonalization(rs, p, lams, 23, 2, 1);
    for (const auto& r : rr) {
      INFO(ty << " " << r.id << " " << r.detail);
      REQUIRE(r.pass);
    }
  }
}

TEST_CASE("hilbert space weights") {
  auto a1 = build_root_system("A1");
  auto p = MultiplicityParams::make_numeric(a1, Rat(1, 2));
  // Delta_0 = 1 / W_0(q^2)
  Rat w0q2 = poincare_w0(a1, p).constant_value();
  REQUIRE(Delta_weight_orbit(a1, p, Weight{0}) == Rat(1) / w0q2);
  // A_1, k >= 1: Delta = q^{-2k}
  for (int k = 1; k <= 4; ++k) {
    Rat expect = rat_pow(Rat(1, 2), -2 * k);
    REQUIRE(Delta_weight_stabilizer(a1, p, Weight{k}) == expect);
    REQUIRE(Delta_weight_product(a1, p, Weight{k}) == expect);
    REQUIRE(Delta_weight_orbit(a1, p, Weight{k}) == expect);
  }
  REQUIRE_THROWS(Delta_weight_orbit(a1, p, Weight{-1}));
  auto pf = MultiplicityParams::make_formal(a1);
  REQUIRE_THROWS(delta_weight(a1, pf, Weight{0}));

  for (const char* ty : {"A2", "B2", "G2"}) {
    auto rs = build_root_system(ty);
    auto pn = MultiplicityParams::make_numeric(rs, Rat(2, 3));
    auto r = verify_Delta_routes(rs, pn, 3);
    INFO(r.detail);
    REQUIRE(r.pass);
  }
}

TEST_CASE("unitarity of the difference representation") {
  for (const char* ty : {"A1", "A2", "B2"}) {
    auto rs = build_root_system(ty);
    for (const Rat& q : {Rat(1, 2), Rat(2, 3)}) {
      auto p = MultiplicityParams::make_numeric(rs, q);
      auto results = verify_unitarity(rs, p, 29, 3, 3);
      for (const auto& r : results) {
        INFO(ty << " " << r.id << " " << r.detail);
        REQUIRE(r.pass);
      }
    }
  }
}

TEST_CASE("central adjointness against Delta") {
  for (const char* ty : {"A1", "A2"}) {
    auto rs = build_root_system(ty);
    auto p = MultiplicityParams::make_numeric(rs, Rat(1, 2));
    std::vector<Weight> lams;
    Weight w1(rs.rank, 0);
    w1[0] = 1;
    lams.push_back(w1);
    auto results = verify_central_adjointness(rs, p, 31, 3, 2, lams);
    for (const auto& r : results) {
      INFO(ty << " " << r.id << " " << r.detail);
      REQUIRE(r.pass);
    }
  }
  // lambda* = -w_o lambda: in A_2, omega_1* = omega_2
  auto a2 = build_root_system("A2");
  REQUIRE(a2.star(Weight{1, 0}) == Weight{0, 1});
}
