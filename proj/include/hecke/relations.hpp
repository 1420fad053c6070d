#pragma once

// Relation-verification engine: quadratic, braid, Omega and Bernstein cross
// relations in both representations, duality with the Demazure-Lusztig
// action, centrality, and the rank-two braid value table.
//
// Braid relations between finite generators are checked on a symbolic
// generic function at one weight per facet of the Coxeter complex, which
// makes each check a polynomial identity covering all lattice functions at
// once.  Pairs involving an affine wall are spot-checked on random functions
// (exact evaluation, arbitrary window).

#include "hecke/ops.hpp"

namespace hecke {

inline std::string two_sides(const Weight& lam, const Laurent& l,
                             const Laurent& r,
                             const std::vector<std::string>& names) {
  return "at " + weight_to_string(lam) + ": lhs = " + l.to_string(names) +
         ", rhs = " + r.to_string(names);
}

// evaluation window: facet representatives fattened by a ball
inline std::vector<Weight> eval_window(const RootSystem& rs, int radius) {
  std::set<Weight> pts;
  for (const auto& w : rs.facet_representatives()) pts.insert(w);
  std::vector<Weight> ball;
  std::function<void(Weight&, int, int)> rec = [&](Weight& w, int i, int rem) {
    if (i == rs.rank) {
      ball.push_back(w);
      return;
    }
    for (int x = -rem; x <= rem; ++x) {
      w[i] = x;
      rec(w, i + 1, rem - std::abs(x));
    }
  };
  Weight w(rs.rank, 0);
  rec(w, 0, radius);
  for (auto& b : ball) pts.insert(b);
  return {pts.begin(), pts.end()};
}

// quadratic relation (T - q)(T + q^{-1}) = 0 for one generator
inline CheckResult check_quadratic(const RootSystem& rs,
                                   const MultiplicityParams& p, Rep rep, int g,
                                   LatticeFn f,
                                   const std::vector<Weight>& window) {
  auto gi = rs.gen_info(g);
  std::string id = std::string("quadratic.") +
                   (rep == Rep::Difference ? "diff." : "int.") +
                   std::to_string(g);
  Word w2{Tok::t(g), Tok::t(g)};
  LatticeFn tt = apply_word(rs, p, rep, w2, f);
  LatticeFn t1 = apply_word(rs, p, rep, {Tok::t(g)}, f);
  Laurent d = p.q(gi.cls) - p.q_inv(gi.cls);
  for (const auto& lam : window) {
    Laurent lhs = tt(lam);
    Laurent rhs = d * t1(lam) + f(lam);
    if (lhs != rhs)
      return CheckResult::fail(id, "(T-q)(T+1/q) = 0",
                               two_sides(lam, lhs, rhs, p.names(rs)));
  }
  return CheckResult::ok(id, "(T-q)(T+1/q) = 0");
}

inline Word braid_word(int g, int h, int m) {
  Word w;
  for (int i = 0; i < m; ++i) w.push_back(Tok::t(i % 2 == 0 ? g : h));
  return w;
}

// braid relation on a symbolic generic function at all facet representatives;
// valid for finite generators (facet argument), exhaustive by construction
inline CheckResult check_braid_symbolic(const RootSystem& rs,
                                        const MultiplicityParams& p, int g,
                                        int h) {
  int m = rs.braid_order(g, h);
  std::string id = "braid.diff." + std::to_string(g) + "." + std::to_string(h);
  if (m == 0) return CheckResult::ok(id, "braid relation (skipped, m infinite)");
  SymbolicFn sym(p.symbol_base());
  LatticeFn f = sym.fn();
  LatticeFn lhs = apply_word(rs, p, Rep::Difference, braid_word(g, h, m), f);
  LatticeFn rhs = apply_word(rs, p, Rep::Difference, braid_word(h, g, m), f);
  for (const auto& lam : rs.facet_representatives()) {
    Laurent l = lhs(lam), r = rhs(lam);
    if (l != r)
      return CheckResult::fail(id, "braid relation (symbolic)",
                               two_sides(lam, l, r, p.names(rs)));
  }
  return CheckResult::ok(id, "braid relation (symbolic)");
}

// braid relation on random functions, any pair of generators
inline CheckResult check_braid_random(const RootSystem& rs,
                                      const MultiplicityParams& p, Rep rep,
                                      int g, int h, LatticeFn f,
                                      const std::vector<Weight>& window) {
  int m = rs.braid_order(g, h);
  std::string id = std::string("braid.") +
                   (rep == Rep::Difference ? "diff." : "int.") +
                   std::to_string(g) + "." + std::to_string(h);
  if (m == 0) return CheckResult::ok(id, "braid relation (skipped, m infinite)");
  LatticeFn lhs = apply_word(rs, p, rep, braid_word(g, h, m), f);
  LatticeFn rhs = apply_word(rs, p, rep, braid_word(h, g, m), f);
  for (const auto& lam : window) {
    Laurent l = lhs(lam), r = rhs(lam);
    if (l != r)
      return CheckResult::fail(id, "braid relation",
                               two_sides(lam, l, r, p.names(rs)));
  }
  return CheckResult::ok(id, "braid relation");
}

// u T_g u^{-1} = T_h as operators, where u V_g = V_h
inline CheckResult check_omega_conjugation(const RootSystem& rs,
                                           const MultiplicityParams& p, Rep rep,
                                           int omega_idx, LatticeFn f,
                                           const std::vector<Weight>& window) {
  const auto& u = rs.omega_group()[omega_idx];
  std::string id = std::string("omega.") +
                   (rep == Rep::Difference ? "diff." : "int.") +
                   std::to_string(omega_idx);
  for (int g = 0; g < rs.num_gens(); ++g) {
    // find h with u s_g u^{-1} = s_h
    AffineElt c = rs.aff_mult(rs.aff_mult(u.u, rs.gen_element(g)),
                              rs.aff_inverse(u.u));
    int h = -1;
    for (int cand = 0; cand < rs.num_gens(); ++cand)
      if (c == rs.gen_element(cand)) h = cand;
    if (h < 0)
      return CheckResult::fail(id, "Omega permutes the walls",
                               "generator " + std::to_string(g));
    Word lw{Tok::u(omega_idx), Tok::t(g)};
    Word rw{Tok::t(h), Tok::u(omega_idx)};
    LatticeFn lhs = apply_word(rs, p, rep, lw, f);
    LatticeFn rhs = apply_word(rs, p, rep, rw, f);
    for (const auto& lam : window) {
      Laurent l = lhs(lam), r = rhs(lam);
      if (l != r)
        return CheckResult::fail(id, "T_u T_g = T_h T_u",
                                 two_sides(lam, l, r, p.names(rs)));
    }
  }
  return CheckResult::ok(id, "T_u T_g = T_h T_u");
}

// Bernstein cross relations in the integral representation:
// I_j t_lambda = t_lambda I_j                        if <lambda,a_j> = 0
// I_j t_lambda = t_{s_j lambda} I_j + (q_j-1/q_j) t_lambda  if <lambda,a_j> = 1
inline CheckResult check_cross_integral(const RootSystem& rs,
                                        const MultiplicityParams& p,
                                        LatticeFn f,
                                        const std::vector<Weight>& window) {
  std::string id = "cross.int";
  for (int j = 1; j <= rs.rank; ++j) {
    auto gi = rs.gen_info(j);
    Laurent d = p.q(gi.cls) - p.q_inv(gi.cls);
    for (const auto& lam : window) {
      int c = rs.pair_coroot(lam, gi.root_idx);
      if (c != 0 && c != 1) continue;
      LatticeFn lhs = op_i(rs, p, j, translate(lam, f));
      LatticeFn rhs =
          c == 0 ? translate(lam, op_i(rs, p, j, f))
                 : fn_add(translate(rs.reflect(lam, gi.root_idx, 0),
                                    op_i(rs, p, j, f)),
                          fn_scale(d, translate(lam, f)));
      for (const auto& mu : window) {
        Laurent l = lhs(mu), r = rhs(mu);
        if (l != r)
          return CheckResult::fail(
              id, "I_j t_lambda cross relation",
              "lambda = " + weight_to_string(lam) + ", " +
                  two_sides(mu, l, r, p.names(rs)));
      }
    }
  }
  return CheckResult::ok(id, "I_j t_lambda cross relations");
}

// Bernstein relation in the polynomial representation:
// DL_j(e^lam p) - e^{s_j lam} DL_j(p) = (q_j - q_j^{-1}) * stringquot(lam) * p
inline CheckResult check_cross_polynomial(const RootSystem& rs,
                                          const MultiplicityParams& p,
                                          RandomSource& rnd, int trials) {
  std::string id = "cross.poly";
  for (int t = 0; t < trials; ++t) {
    Weight lam = rnd.weight(rs.rank, 3);
    Weight mu = rnd.weight(rs.rank, 3);
    GroupAlg pe = GroupAlg::basis(mu);
    for (int j = 1; j <= rs.rank; ++j) {
      auto gi = rs.gen_info(j);
      Laurent d = p.q(gi.cls) - p.q_inv(gi.cls);
      GroupAlg lhs =
          op_dl(rs, p, j, GroupAlg::basis(lam) * pe) -
          GroupAlg::basis(rs.reflect(lam, gi.root_idx, 0)) * op_dl(rs, p, j, pe);
      GroupAlg rhs = d * (string_quotient(rs, lam, j) * pe);
      if (lhs != rhs)
        return CheckResult::fail(id, "DL cross relation",
                                 "lambda = " + weight_to_string(lam) +
                                     ", mu = " + weight_to_string(mu));
    }
  }
  return CheckResult::ok(id, "DL cross relations");
}

// duality (I(h) f, p) = (f, DL(h*) p) for words h in T_j and Y^mu
inline CheckResult check_duality(const RootSystem& rs,
                                 const MultiplicityParams& p, RandomSource& rnd,
                                 int trials) {
  std::string id = "duality";
  for (int t = 0; t < trials; ++t) {
    LatticeFn f = LatticeFn::from_map(rnd.sparse_function(rs, 3, 4));
    Weight mu = rnd.weight(rs.rank, 2);
    GroupAlg pe = GroupAlg::basis(mu, Laurent::constant(rnd.nonzero_rat()));
    // random word in finite generators and one Y
    std::vector<int> letters;
    int len = rnd.uniform(1, 3);
    for (int i = 0; i < len; ++i) letters.push_back(rnd.uniform(1, rs.rank));
    Weight ylam = rnd.weight(rs.rank, 2);
    // h = T_{j_1} ... T_{j_len} Y^ylam ; h* = Y^ylam T_{j_len} ... T_{j_1}
    LatticeFn hf = translate(ylam, f);
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
      hf = op_i(rs, p, *it, hf);
    GroupAlg hp = pe;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
      hp = op_dl(rs, p, *it, hp);
    hp = GroupAlg::basis(ylam) * hp;
    Laurent lhs = pairing(hf, pe);
    Laurent rhs = pairing(f, hp);
    if (lhs != rhs)
      return CheckResult::fail(id, "(I(h)f, p) = (f, DL(h*)p)",
                               "trial " + std::to_string(t));
  }
  return CheckResult::ok(id, "(I(h)f, p) = (f, DL(h*)p)");
}

// central elements commute with all generators and with each other
inline CheckResult check_centrality(const RootSystem& rs,
                                    const MultiplicityParams& p, Rep rep,
                                    RandomSource& rnd, int radius,
                                    const std::vector<Weight>& window) {
  std::string id = std::string("center.") +
                   (rep == Rep::Difference ? "diff" : "int");
  LatticeFn f = LatticeFn::from_map(rnd.sparse_function(rs, radius, 4));
  std::vector<Weight> lams;
  lams.push_back(Weight(rs.rank, 0));
  Weight w1(rs.rank, 0);
  w1[0] = 1;
  lams.push_back(w1);
  if (rs.rank > 1) {
    Weight w2(rs.rank, 0);
    w2[rs.rank - 1] = 1;
    lams.push_back(w2);
  }
  for (const auto& lam : lams) {
    LatticeFn mf = op_central_m(rs, p, rep, lam, f);
    for (int g = 0; g < rs.num_gens(); ++g) {
      LatticeFn lhs = apply_word(rs, p, rep, {Tok::t(g)}, mf);
      LatticeFn rhs = op_central_m(rs, p, rep, lam,
                                   apply_word(rs, p, rep, {Tok::t(g)}, f));
      for (const auto& x : window) {
        Laurent l = lhs(x), r = rhs(x);
        if (l != r)
          return CheckResult::fail(
              id, "m_lambda(Y) is central",
              "lambda = " + weight_to_string(lam) + ", generator " +
                  std::to_string(g) + ", " + two_sides(x, l, r, p.names(rs)));
      }
    }
    // pairwise commutation of two central elements
    for (const auto& lam2 : lams) {
      LatticeFn ab = op_central_m(rs, p, rep, lam2, mf);
      LatticeFn ba =
          op_central_m(rs, p, rep, lam, op_central_m(rs, p, rep, lam2, f));
      for (const auto& x : window) {
        Laurent l = ab(x), r = ba(x);
        if (l != r)
          return CheckResult::fail(id, "central elements commute",
                                   two_sides(x, l, r, p.names(rs)));
      }
    }
  }
  return CheckResult::ok(id, "centrality");
}

// Y^lambda via two dominant decompositions agrees (difference representation)
inline CheckResult check_y_well_defined(const RootSystem& rs,
                                        const MultiplicityParams& p,
                                        RandomSource& rnd,
                                        const std::vector<Weight>& window) {
  std::string id = "y.well-defined";
  LatticeFn f = LatticeFn::from_map(rnd.sparse_function(rs, 2, 3));
  Weight lam = rnd.weight(rs.rank, 2);
  Weight shift = rnd.dominant_weight(rs.rank, 2);
  // lam = mu - nu = (mu + shift) - (nu + shift)
  Weight mu(rs.rank, 0), nu(rs.rank, 0);
  for (int i = 0; i < rs.rank; ++i) {
    mu[i] = std::max(lam[i], 0) + shift[i];
    nu[i] = std::max(-lam[i], 0) + shift[i];
  }
  Word w1 = y_word_difference(rs, lam);
  Word w2 = word_of_affine(rs, rs.aff_translation(mu));
  Word w2b = word_inverse(word_of_affine(rs, rs.aff_translation(nu)));
  w2.insert(w2.end(), w2b.begin(), w2b.end());
  LatticeFn lhs = apply_word(rs, p, Rep::Difference, w1, f);
  LatticeFn rhs = apply_word(rs, p, Rep::Difference, w2, f);
  for (const auto& x : window) {
    Laurent l = lhs(x), r = rhs(x);
    if (l != r)
      return CheckResult::fail(id, "Y^lambda decomposition-independent",
                               two_sides(x, l, r, p.names(rs)));
  }
  return CheckResult::ok(id, "Y^lambda decomposition-independent");
}

// full relation suite for one representation
inline std::vector<CheckResult> verify_relations(const RootSystem& rs,
                                                 const MultiplicityParams& p,
                                                 Rep rep, std::uint64_t seed,
                                                 int radius, int trials) {
  RandomSource rnd(seed);
  std::vector<CheckResult> out;
  auto window = eval_window(rs, 2);
  auto facets = rs.facet_representatives();

  for (int t = 0; t < trials; ++t) {
    LatticeFn f = LatticeFn::from_map(rnd.sparse_function(rs, radius, 5));
    for (int g = 0; g < rs.num_gens(); ++g)
      out.push_back(check_quadratic(rs, p, rep, g, f, facets));
  }

  for (int g = 0; g < rs.num_gens(); ++g)
    for (int h = g + 1; h < rs.num_gens(); ++h) {
      bool finite_pair = g >= 1 && g <= rs.rank && h >= 1 && h <= rs.rank;
      if (rep == Rep::Difference && finite_pair) {
        out.push_back(check_braid_symbolic(rs, p, g, h));
      } else {
        LatticeFn f = LatticeFn::from_map(rnd.sparse_function(rs, radius, 4));
        out.push_back(check_braid_random(rs, p, rep, g, h, f, window));
      }
    }

  {
    LatticeFn f = LatticeFn::from_map(rnd.sparse_function(rs, radius, 4));
    for (std::size_t ui = 0; ui < rs.omega_group().size(); ++ui)
      out.push_back(
          check_omega_conjugation(rs, p, rep, static_cast<int>(ui), f, window));
  }

  if (rep == Rep::Integral) {
    LatticeFn f = LatticeFn::from_map(rnd.sparse_function(rs, radius, 4));
    out.push_back(check_cross_integral(rs, p, f, window));
    out.push_back(check_cross_polynomial(rs, p, rnd, trials));
    out.push_back(check_duality(rs, p, rnd, trials));
  }
  if (rep == Rep::Difference)
    out.push_back(check_y_well_defined(rs, p, rnd, window));
  out.push_back(check_centrality(rs, p, rep, rnd, radius, window));
  return out;
}

// ---------------------------------------------------------------------------
// reduced braid identity for rank two and its value table

struct BraidTableRow {
  Weight lam;
  Laurent lhs, rhs;
};

// both sides of the reduced rank-two braid identity
//   q^2 X_1 + q X_1 X_1 + X_1 X_2 X_1  =  (1 <-> 2),   X_i = chi_i (s_i - 1),
// applied to a symbolic generic f and evaluated at the facet representatives
inline std::vector<BraidTableRow> braid_table_rank2(const RootSystem& rs,
                                                    const MultiplicityParams& p,
                                                    const SymbolicFn& sym) {
  if (rs.rank != 2) throw std::runtime_error("braid_table_rank2: rank 2 only");
  LatticeFn f = sym.fn();
  auto side = [&](int a, int b) {
    auto gi = rs.gen_info(a);
    Laurent q = p.q(gi.cls);
    LatticeFn xa = op_chi_refl(rs, p, a, f);
    LatticeFn xaa = op_chi_refl(rs, p, a, xa);
    LatticeFn xbxa = op_chi_refl(rs, p, b, xa);
    LatticeFn xabxa = op_chi_refl(rs, p, a, xbxa);
    return fn_add(fn_scale(q.pow(2), xa), fn_add(fn_scale(q, xaa), xabxa));
  };
  LatticeFn lhs = side(1, 2), rhs = side(2, 1);
  std::vector<BraidTableRow> rows;
  for (const auto& lam : rs.facet_representatives())
    rows.push_back({lam, lhs(lam), rhs(lam)});
  return rows;
}

}  // namespace hecke
