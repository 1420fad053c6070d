#include "hecke/rootsystem.hpp"
#include "hecke/random.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace hecke;

namespace {

// separating-hyperplane count between the open alcove A and wA, by brute force
long separating_count(const RootSystem& rs, const AffineElt& w) {
  int n = rs.rank;
  // interior point of A with exact rational coordinates
  long m = 0;
  for (const auto& r : rs.positive) {
    long h = 0;
    for (int j = 0; j < n; ++j) h += r.cc[j];
    m = std::max(m, h);
  }
  std::vector<Rat> xa(n, Rat(1, m + 1));
  // w(x) = v(x + t)
  std::vector<Rat> xw(n);
  for (int j = 0; j < n; ++j) xw[j] = xa[j] + w.t[j];
  const auto& mat = rs.w0.mats[w.v];
  std::vector<Rat> xb(n, Rat(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) xb[i] += Rat(mat[i * n + j]) * xw[j];
  long count = 0;
  for (const auto& r : rs.positive) {
    Rat pa(0), pb(0);
    for (int j = 0; j < n; ++j) {
      pa += Rat(r.cc[j]) * xa[j];
      pb += Rat(r.cc[j]) * xb[j];
    }
    Rat lo = std::min(pa, pb), hi = std::max(pa, pb);
    // integers k with lo < k < hi
    Int lo_floor = numerator(lo) / denominator(lo);
    if (lo < 0 && lo_floor * denominator(lo) != numerator(lo)) lo_floor -= 1;
    for (Int k = lo_floor; Rat(k) < hi; ++k)
      if (Rat(k) > lo) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("catalog basics") {
  auto a1 = build_root_system("A1");
  REQUIRE(a1.positive.size() == 1);
  REQUIRE(a1.positive[a1.alpha0[0]].fw == Weight{2});  // alpha_0 = alpha_1
  REQUIRE(a1.pair_coroot(Weight{1}, a1.simple[0]) == 1);

  auto a2 = build_root_system("A2");
  REQUIRE(a2.positive.size() == 3);
  REQUIRE(a2.positive[a2.alpha0[0]].rc == std::vector<int>{1, 1});
  REQUIRE(a2.braid_order(1, 2) == 3);
  REQUIRE(a2.num_classes == 1);

  auto g2 = build_root_system("G2");
  REQUIRE(g2.positive.size() == 6);
  REQUIRE(g2.braid_order(1, 2) == 6);
  REQUIRE(g2.num_classes == 2);

  auto b3 = build_root_system("B3");
  REQUIRE(b3.positive.size() == 9);
  REQUIRE(b3.w0.size() == 48);

  auto f4 = build_root_system("F4");
  REQUIRE(f4.positive.size() == 24);
  REQUIRE(f4.w0.size() == 1152);

  auto xx = build_root_system("A1xA1");
  REQUIRE(xx.positive.size() == 2);
  REQUIRE(xx.num_components == 2);
  REQUIRE(xx.braid_order(1, 2) == 2);

  REQUIRE_THROWS(build_root_system("E8"));
  REQUIRE_THROWS(build_root_system("B1"));
}

TEST_CASE("fundamental weight duality and root closure") {
  for (const char* ty : {"A1", "A2", "A3", "B2", "B3", "C2", "C3", "D4", "G2", "F4"}) {
    auto rs = build_root_system(ty);
    for (int j = 0; j < rs.rank; ++j) {
      Weight w(rs.rank, 0);
      w[j] = 1;
      for (int i = 0; i < rs.rank; ++i)
        REQUIRE(rs.pair_coroot(w, rs.simple[i]) == (i == j ? 1 : 0));
    }
    // every positive root has nonnegative integer simple-root coordinates
    for (const auto& r : rs.positive)
      for (int c : r.rc) REQUIRE(c >= 0);
    // quasi-minuscule pairing profile: 0 <= <alpha0, alpha^vee> <= 2, one 2
    if (rs.num_components == 1) {
      Weight qm = rs.quasi_minuscule_weight();
      int twos = 0;
      for (std::size_t a = 0; a < rs.positive.size(); ++a) {
        int p = rs.pair_coroot(qm, static_cast<int>(a));
        REQUIRE(p >= 0);
        REQUIRE(p <= 2);
        if (p == 2) ++twos;
      }
      REQUIRE(twos == 1);
    }
  }
}

TEST_CASE("weyl action") {
  auto a2 = build_root_system("A2");
  // s_1 omega_1 = omega_1 - alpha_1
  Weight w1{1, 0};
  int s1 = a2.w0.left[0][0];
  REQUIRE(a2.act(s1, w1) == sub_w(w1, a2.alpha_fw(0)));
  // translations
  AffineElt t = a2.aff_translation(Weight{2, -1});
  REQUIRE(a2.act(t, Weight{0, 1}) == Weight{2, 0});
  // affine reflection: s_{alpha_0,1} x = s_{alpha_0} x + alpha_0
  AffineElt s0 = a2.gen_element(0);
  Weight x{2, -1};
  Weight expect = add_w(a2.reflect(x, a2.alpha0[0], 0), a2.positive[a2.alpha0[0]].fw);
  REQUIRE(a2.act(s0, x) == expect);
  REQUIRE(a2.act(s0, x) == a2.gen_reflect(0, x));

  // group action law on random pairs
  RandomSource rnd(3);
  for (int i = 0; i < 30; ++i) {
    AffineElt a{rnd.uniform(0, a2.w0.size() - 1), rnd.weight(2, 3)};
    AffineElt b{rnd.uniform(0, a2.w0.size() - 1), rnd.weight(2, 3)};
    Weight x2 = rnd.weight(2, 4);
    REQUIRE(a2.act(a2.aff_mult(a, b), x2) == a2.act(a, a2.act(b, x2)));
    REQUIRE(a2.act(a2.aff_mult(a, a2.aff_inverse(a)), x2) == x2);
  }
}

TEST_CASE("length formula against separating hyperplanes") {
  for (const char* ty : {"A1", "A2", "B2", "G2"}) {
    auto rs = build_root_system(ty);
    RandomSource rnd(11);
    for (int i = 0; i < 25; ++i) {
      AffineElt w{rnd.uniform(0, rs.w0.size() - 1), rnd.weight(rs.rank, 2)};
      REQUIRE(rs.aff_length(w) == separating_count(rs, w));
    }
    REQUIRE(rs.aff_length(rs.aff_identity()) == 0);
  }
  auto a1 = build_root_system("A1");
  REQUIRE(a1.aff_length(a1.aff_translation(Weight{1})) == 1);
}

TEST_CASE("length additivity properties") {
  for (const char* ty : {"A2", "B2", "B3"}) {
    auto rs = build_root_system(ty);
    RandomSource rnd(5);
    // l(w w') = l(w) + l(w') tested when it holds along reduced words
    for (int i = 0; i < 20; ++i) {
      AffineElt w = rs.aff_identity();
      long l = 0;
      for (int k = 0; k < 6; ++k) {
        int g = rnd.uniform(0, rs.num_gens() - 1);
        AffineElt w2 = rs.aff_mult(w, rs.gen_element(g));
        long l2 = rs.aff_length(w2);
        REQUIRE(std::abs(l2 - l) == 1);
        w = w2;
        l = l2;
      }
    }
    // dominant translations
    for (int i = 0; i < 10; ++i) {
      Weight lam = rnd.dominant_weight(rs.rank, 3);
      Weight mu = rnd.dominant_weight(rs.rank, 3);
      int v = rnd.uniform(0, rs.w0.size() - 1);
      REQUIRE(rs.aff_length({v, lam}) ==
              rs.w0.len[v] + rs.aff_length(rs.aff_translation(lam)));
      REQUIRE(rs.aff_length(rs.aff_translation(add_w(lam, mu))) ==
              rs.aff_length(rs.aff_translation(lam)) +
                  rs.aff_length(rs.aff_translation(mu)));
      // l(t_{v mu}) = l(t_mu)
      Weight vmu = rs.act(v, mu);
      REQUIRE(rs.aff_length(rs.aff_translation(vmu)) ==
              rs.aff_length(rs.aff_translation(mu)));
      // l(t_lambda) = <lambda, 2 rho^vee> for dominant lambda
      REQUIRE(rs.aff_length(rs.aff_translation(lam)) == rs.pair_two_rho_cov(lam));
    }
  }
}

TEST_CASE("dominant representatives") {
  auto a2 = build_root_system("A2");
  // dominant input: identity
  auto [lp, w] = a2.dominant_rep(Weight{2, 1});
  REQUIRE(lp == Weight{2, 1});
  REQUIRE(w == 0);
  // -omega_1 -> omega_2 with length 2
  auto [lp2, w2] = a2.dominant_rep(Weight{-1, 0});
  REQUIRE(lp2 == Weight{0, 1});
  REQUIRE(a2.w0.len[w2] == 2);

  // w_lambda is the unique shortest element with w lambda dominant (BFS oracle),
  // and R(w_lambda) = { alpha > 0 : <lambda, alpha^vee> < 0 }
  for (const char* ty : {"A2", "B2", "G2", "C3"}) {
    auto rs = build_root_system(ty);
    RandomSource rnd(17);
    for (int i = 0; i < 25; ++i) {
      Weight lam = rnd.weight(rs.rank, 3);
      auto [lplus, wl] = rs.dominant_rep(lam);
      REQUIRE(rs.act(wl, lam) == lplus);
      REQUIRE(rs.is_dominant(lplus));
      int best = -1;
      for (int x = 0; x < rs.w0.size(); ++x)
        if (rs.is_dominant(rs.act(x, lam)) &&
            (best < 0 || rs.w0.len[x] < rs.w0.len[best]))
          best = x;
      REQUIRE(rs.w0.len[wl] == rs.w0.len[best]);
      REQUIRE(wl == best);  // uniqueness of the shortest
      std::vector<int> expect;
      for (std::size_t a = 0; a < rs.positive.size(); ++a)
        if (rs.pair_coroot(lam, static_cast<int>(a)) < 0)
          expect.push_back(static_cast<int>(a));
      REQUIRE(rs.inversions(wl) == expect);
    }
  }
}

TEST_CASE("omega group") {
  auto a2 = build_root_system("A2");
  REQUIRE(a2.omega_group().size() == 3);
  auto g2 = build_root_system("G2");
  REQUIRE(g2.omega_group().size() == 1);
  auto b2 = build_root_system("B2");
  REQUIRE(b2.omega_group().size() == 2);
  auto xx = build_root_system("A1xA1");
  REQUIRE(xx.omega_group().size() == 4);
  auto a3 = build_root_system("A3");
  REQUIRE(a3.omega_group().size() == 4);

  for (const char* ty : {"A2", "A3", "B2", "B3", "C3", "G2", "A1xA1"}) {
    auto rs = build_root_system(ty);
    for (const auto& oe : rs.omega_group()) {
      REQUIRE(rs.aff_length(oe.u) == 0);
      // u = t_omega v_omega^{-1}
      AffineElt rebuilt = rs.aff_mult(
          rs.aff_translation(oe.omega),
          rs.aff_finite(rs.w0.inv[oe.v_omega]));
      REQUIRE(rebuilt == oe.u);
      // l(t_omega) = l(u) + l(v_omega)
      REQUIRE(rs.aff_length(rs.aff_translation(oe.omega)) ==
              rs.w0.len[oe.v_omega]);
      // elements of Omega permute the walls: u s_g u^{-1} is another generator
      for (int g = 0; g < rs.num_gens(); ++g) {
        AffineElt c = rs.aff_mult(rs.aff_mult(oe.u, rs.gen_element(g)),
                                  rs.aff_inverse(oe.u));
        bool found = false;
        for (int h = 0; h < rs.num_gens(); ++h)
          if (c == rs.gen_element(h)) found = true;
        REQUIRE(found);
      }
    }
  }
}

TEST_CASE("u_lambda is the shortest coset representative") {
  for (const char* ty : {"A2", "B2", "G2"}) {
    auto rs = build_root_system(ty);
    RandomSource rnd(23);
    for (int i = 0; i < 15; ++i) {
      Weight lam = rnd.weight(rs.rank, 3);
      AffineElt u = rs.u_element(lam);
      long lu = rs.aff_length(u);
      // u_lambda in t_lambda W_0 and shortest there
      for (int v = 0; v < rs.w0.size(); ++v) {
        AffineElt cand = rs.aff_mult(rs.aff_translation(lam), rs.aff_finite(v));
        REQUIRE(rs.aff_length(cand) >= lu);
      }
      int vl = rs.v_element(lam);
      REQUIRE(rs.aff_length(rs.aff_translation(lam)) == lu + rs.w0.len[vl]);
    }
  }
}

TEST_CASE("dominance order") {
  auto a2 = build_root_system("A2");
  REQUIRE(a2.dominance_leq(Weight{1, 1}, Weight{1, 1}));
  REQUIRE(a2.dominance_leq(Weight{0, 0}, Weight{1, 1}));
  REQUIRE(!a2.dominance_leq(Weight{1, 0}, Weight{0, 1}));
  REQUIRE(!a2.dominance_leq(Weight{0, 1}, Weight{1, 0}));
  // within an orbit the order follows Bruhat on w_mu: the dominant member is
  // the minimum, the antidominant member the maximum
  REQUIRE(a2.dominance_lt(Weight{1, 1}, Weight{-1, -1}));
  REQUIRE(a2.dominance_lt(Weight{0, 1}, Weight{-1, 0}));
  for (const char* ty : {"A2", "B2"}) {
    auto rs = build_root_system(ty);
    RandomSource rnd(31);
    for (int i = 0; i < 10; ++i) {
      Weight lam = rnd.dominant_weight(rs.rank, 2);
      for (const auto& mu : rs.orbit(lam)) {
        REQUIRE(rs.dominance_leq(lam, mu));
        REQUIRE(rs.dominance_leq(mu, rs.act(rs.w0.longest(), lam)));
      }
    }
  }
}

TEST_CASE("facet representatives") {
  auto a2 = build_root_system("A2");
  auto reps = a2.facet_representatives();
  REQUIRE(reps.size() == 13);
  auto a1 = build_root_system("A1");
  auto reps1 = a1.facet_representatives();
  REQUIRE(reps1 == std::vector<Weight>{{-1}, {0}, {1}});
  auto b2 = build_root_system("B2");
  std::set<Weight> expect;
  for (const Weight& lam : std::vector<Weight>{{0, 0}, {1, 0}, {0, 1}, {1, 1}})
    for (const auto& mu : b2.orbit(lam)) expect.insert(mu);
  auto reps2 = b2.facet_representatives();
  REQUIRE(std::set<Weight>(reps2.begin(), reps2.end()) == expect);
}

TEST_CASE("theta") {
  auto a1 = build_root_system("A1");
  REQUIRE(a1.theta(Weight{2}) == 0);   // dominant
  REQUIRE(a1.theta(Weight{-1}) == 0);  // <2 omega_1, rho^vee> - 1 = 0
  auto a2 = build_root_system("A2");
  RandomSource rnd(13);
  for (int i = 0; i < 10; ++i) {
    Weight lam = rnd.dominant_weight(2, 3);
    REQUIRE(a2.theta(lam) == 0);
  }
}

TEST_CASE("star involution") {
  auto a2 = build_root_system("A2");
  REQUIRE(a2.star(Weight{1, 0}) == Weight{0, 1});
  auto b2 = build_root_system("B2");
  REQUIRE(b2.star(Weight{1, 2}) == Weight{1, 2});
}
