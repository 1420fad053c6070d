#pragma once

// The intertwining operator between the integral-reflection and
// difference-reflection representations, its triangular inverse on
// dominance-saturated regions, and the operator identities behind the
// affine intertwining relations.

#include "hecke/ops.hpp"
#include "hecke/relations.hpp"

namespace hecke {

// (J f)(lambda) = q_{t_lambda} q_{w_lambda} (I(T_{w_lambda^{-1}}^{-1}) f)(lambda_+)
inline LatticeFn intertwiner(const RootSystem& rs, const MultiplicityParams& p,
                             LatticeFn f) {
  const RootSystem* r = &rs;
  MultiplicityParams pp = p;
  // one composed operator per finite Weyl element, shared across the orbit
  auto chains = std::make_shared<std::map<int, LatticeFn>>();
  return LatticeFn::make([r, pp, f, chains](const Weight& lam) {
    auto [lplus, wl] = r->dominant_rep(lam);
    auto it = chains->find(wl);
    if (it == chains->end())
      it = chains->emplace(wl, op_i_finite_inv(*r, pp, r->w0.inv[wl], f)).first;
    Laurent coeff = q_of_element(*r, r->aff_translation(lam), pp) *
                    q_of_finite(*r, wl, pp);
    return coeff * it->second(lplus);
  });
}

// P(lambda_max) = { mu : mu_+ <= lambda_max }, the saturated hull of the orbit
inline std::vector<Weight> saturated_region(const RootSystem& rs,
                                            const Weight& lam_max) {
  if (!rs.is_dominant(lam_max))
    throw std::runtime_error("saturated_region: lambda_max not dominant");
  std::set<Weight> doms;
  std::set<Weight> seen;
  std::queue<std::pair<Weight, int>> bfs;
  int budget = rs.pair_two_rho_cov(lam_max) / 2;
  bfs.push({lam_max, 0});
  seen.insert(lam_max);
  while (!bfs.empty()) {
    auto [w, steps] = bfs.front();
    bfs.pop();
    if (rs.is_dominant(w)) doms.insert(w);
    if (steps >= budget) continue;
    for (int j = 0; j < rs.rank; ++j) {
      Weight w2 = sub_w(w, rs.alpha_fw(j));
      if (seen.insert(w2).second) bfs.push({w2, steps + 1});
    }
  }
  std::set<Weight> region;
  for (const auto& d : doms)
    for (const auto& mu : rs.orbit(d)) region.insert(mu);
  return {region.begin(), region.end()};
}

// linear extension of the extended dominance order
inline std::vector<Weight> dominance_sorted(const RootSystem& rs,
                                            std::vector<Weight> pts) {
  std::stable_sort(pts.begin(), pts.end(),
                   [&rs](const Weight& a, const Weight& b) {
                     auto [ap, wa] = rs.dominant_rep(a);
                     auto [bp, wb] = rs.dominant_rep(b);
                     int ha = rs.pair_two_rho_cov(ap);
                     int hb = rs.pair_two_rho_cov(bp);
                     if (ha != hb) return ha < hb;
                     return rs.w0.len[wa] < rs.w0.len[wb];
                   });
  return pts;
}

// solves (J f) = g on a saturated region by the triangularity of J
inline FinFn intertwiner_inverse(const RootSystem& rs,
                                 const MultiplicityParams& p, LatticeFn g,
                                 const std::vector<Weight>& region) {
  auto known = std::make_shared<FinFn>();
  LatticeFn partial = LatticeFn::make([known](const Weight& w) {
    auto it = known->find(w);
    return it == known->end() ? Laurent::zero() : it->second;
  });
  for (const auto& lam : dominance_sorted(rs, region)) {
    auto [lplus, wl] = rs.dominant_rep(lam);
    // fresh chain each step: `known` grows, memo nodes must not go stale
    LatticeFn chain = op_i_finite_inv(rs, p, rs.w0.inv[wl], partial);
    Laurent h = chain(lplus);
    Laurent qt = q_of_element(rs, rs.aff_translation(lam), p);
    Laurent val = qt.inverse() * g(lam) - q_of_finite(rs, wl, p) * h;
    if (!val.is_zero()) (*known)[lam] = val;
    partial = LatticeFn::make([known](const Weight& w) {
      auto it = known->find(w);
      return it == known->end() ? Laurent::zero() : it->second;
    });
  }
  return *known;
}

// ---------------------------------------------------------------------------
// verification

// T_g J = J I_g for every generator (affine walls and Omega included)
inline std::vector<CheckResult> verify_intertwining(
    const RootSystem& rs, const MultiplicityParams& p, std::uint64_t seed,
    int radius, int trials) {
  RandomSource rnd(seed);
  std::vector<CheckResult> out;
  auto window = eval_window(rs, radius);
  for (int t = 0; t < trials; ++t) {
    LatticeFn f = LatticeFn::from_map(rnd.sparse_function(rs, radius, 4));
    LatticeFn jf = intertwiner(rs, p, f);
    for (int g = 0; g < rs.num_gens(); ++g) {
      LatticeFn lhs = apply_token(rs, p, Rep::Difference, Tok::t(g), jf);
      LatticeFn rhs =
          intertwiner(rs, p, apply_token(rs, p, Rep::Integral, Tok::t(g), f));
      std::string id = "intertwine.gen" + std::to_string(g) + ".t" +
                       std::to_string(t);
      bool ok = true;
      for (const auto& lam : window) {
        Laurent l = lhs(lam), r = rhs(lam);
        if (l != r) {
          out.push_back(CheckResult::fail(id, "T_g J = J I_g",
                                          two_sides(lam, l, r, p.names(rs))));
          ok = false;
          break;
        }
      }
      if (ok) out.push_back(CheckResult::ok(id, "T_g J = J I_g"));
    }
    for (std::size_t ui = 0; ui < rs.omega_group().size(); ++ui) {
      LatticeFn lhs =
          apply_token(rs, p, Rep::Difference, Tok::u(static_cast<int>(ui)), jf);
      LatticeFn rhs = intertwiner(
          rs, p,
          apply_token(rs, p, Rep::Integral, Tok::u(static_cast<int>(ui)), f));
      std::string id = "intertwine.u" + std::to_string(ui) + ".t" +
                       std::to_string(t);
      bool ok = true;
      for (const auto& lam : window) {
        Laurent l = lhs(lam), r = rhs(lam);
        if (l != r) {
          out.push_back(CheckResult::fail(id, "u J = J I_u",
                                          two_sides(lam, l, r, p.names(rs))));
          ok = false;
          break;
        }
      }
      if (ok) out.push_back(CheckResult::ok(id, "u J = J I_u"));
    }
  }
  return out;
}

// round trips J^{-1} J = id and J J^{-1} = id on saturated regions
inline std::vector<CheckResult> verify_intertwiner_bijectivity(
    const RootSystem& rs, const MultiplicityParams& p, std::uint64_t seed,
    int radius, int trials) {
  RandomSource rnd(seed);
  std::vector<CheckResult> out;
  for (int t = 0; t < trials; ++t) {
    Weight lam_max = rnd.dominant_weight(rs.rank, radius);
    auto region = saturated_region(rs, lam_max);
    // f supported inside the region
    FinFn fm;
    for (int i = 0; i < 4 && !region.empty(); ++i)
      fm[region[rnd.uniform(0, static_cast<int>(region.size()) - 1)]] =
          Laurent::constant(rnd.nonzero_rat());
    LatticeFn f = LatticeFn::from_map(fm);
    LatticeFn jf = intertwiner(rs, p, f);
    FinFn back = intertwiner_inverse(rs, p, jf, region);
    std::string id = "intertwine.roundtrip.t" + std::to_string(t);
    bool ok = true;
    for (const auto& lam : region) {
      Laurent l = back.count(lam) ? back.at(lam) : Laurent::zero();
      Laurent r = f(lam);
      if (l != r) {
        out.push_back(CheckResult::fail(id, "J^{-1} J = id",
                                        two_sides(lam, l, r, p.names(rs))));
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    // J (J^{-1} g) = g for g supported in the region
    FinFn gm;
    for (int i = 0; i < 4 && !region.empty(); ++i)
      gm[region[rnd.uniform(0, static_cast<int>(region.size()) - 1)]] =
          Laurent::constant(rnd.nonzero_rat());
    LatticeFn g = LatticeFn::from_map(gm);
    FinFn solved = intertwiner_inverse(rs, p, g, region);
    LatticeFn jsolved = intertwiner(rs, p, LatticeFn::from_map(solved));
    for (const auto& lam : region) {
      Laurent l = jsolved(lam), r = g(lam);
      if (l != r) {
        out.push_back(CheckResult::fail(id, "J J^{-1} = id",
                                        two_sides(lam, l, r, p.names(rs))));
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(CheckResult::ok(id, "J round trips"));
  }
  return out;
}

// stability: q_w (I(T_w^{-1}) f)(lam) = q_{w'} (I(T_{w'}^{-1}) f)(lam)
// for dominant lam with w^{-1} w' in the stabilizer of lam
inline CheckResult verify_stability(const RootSystem& rs,
                                    const MultiplicityParams& p,
                                    std::uint64_t seed, int trials) {
  RandomSource rnd(seed);
  for (int t = 0; t < trials; ++t) {
    Weight lam = rnd.dominant_weight(rs.rank, 2);
    auto stab = rs.stabilizer(lam);
    LatticeFn f = LatticeFn::from_map(rnd.sparse_function(rs, 2, 4));
    int w = rnd.uniform(0, rs.w0.size() - 1);
    int z = stab[rnd.uniform(0, static_cast<int>(stab.size()) - 1)];
    int w2 = rs.w0.mult(w, z);
    Laurent lhs = q_of_finite(rs, w, p) * op_i_finite_inv(rs, p, w, f)(lam);
    Laurent rhs = q_of_finite(rs, w2, p) * op_i_finite_inv(rs, p, w2, f)(lam);
    if (lhs != rhs)
      return CheckResult::fail("intertwine.stability", "stability of q_w I_w^{-1}",
                               two_sides(lam, lhs, rhs, p.names(rs)));
  }
  return CheckResult::ok("intertwine.stability", "stability of q_w I_w^{-1}");
}

// ---------------------------------------------------------------------------
// minuscule-weight facts and the Hecke-algebra operator identities behind
// the affine intertwining relations

inline std::vector<CheckResult> verify_weight_dichotomies(const RootSystem& rs,
                                                          int radius) {
  std::vector<CheckResult> out;
  auto ball = eval_window(rs, radius);
  // (i) minuscule omega: mu_+ + w_mu omega is dominant
  for (const auto& omega : rs.minuscule_weights()) {
    std::string id = "weights.minuscule." + weight_to_string(omega);
    bool ok = true;
    for (const auto& mu : ball) {
      auto [mup, wmu] = rs.dominant_rep(mu);
      if (!rs.is_dominant(add_w(mup, rs.act(wmu, omega)))) {
        out.push_back(CheckResult::fail(id, "mu_+ + w_mu omega dominant",
                                        "mu = " + weight_to_string(mu)));
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(CheckResult::ok(id, "mu_+ + w_mu omega dominant"));
  }
  // (iia)/(iib) for the quasi-minuscule weight
  if (rs.num_components == 1) {
    Weight a0 = rs.quasi_minuscule_weight();
    std::string id = "weights.quasiminuscule";
    for (const auto& mu : ball) {
      auto [mup, wmu] = rs.dominant_rep(mu);
      Weight wa0 = rs.act(wmu, a0);
      Weight sum = add_w(mup, wa0);
      auto [idx, sign] = rs.root_lookup(wa0);
      if (!rs.is_dominant(sum)) {
        // (iia): w_mu alpha_0 = -alpha_j and <mu_+, alpha_j^vee> = 1
        bool is_neg_simple = false;
        for (int j = 0; j < rs.rank; ++j)
          if (wa0 == neg_w(rs.alpha_fw(j)) &&
              rs.pair_coroot(mup, rs.simple[j]) == 1)
            is_neg_simple = true;
        if (!is_neg_simple)
          return {CheckResult::fail(id, "quasi-minuscule dichotomy (iia)",
                                    "mu = " + weight_to_string(mu))};
      } else if (sign < 0) {
        // (iib): <mu_+, (w_mu alpha_0)^vee> <= -2
        if (-rs.pair_coroot(mup, idx) > -2)
          return {CheckResult::fail(id, "quasi-minuscule dichotomy (iib)",
                                    "mu = " + weight_to_string(mu))};
      }
    }
    out.push_back(CheckResult::ok(id, "quasi-minuscule dichotomies"));
  }
  return out;
}

// operator identities in the integral representation:
//  (i)  T_w^{-1} Y^omega T_{v_omega}^{-1} = Y^{w^{-1} omega} T_{v_omega w}^{-1}
//  (ii) T_w^{-1} T_0^{sign(w^{-1} alpha_0)} = Y^{w^{-1} alpha_0} T_{s w}^{-1}
inline std::vector<CheckResult> verify_hecke_identities(
    const RootSystem& rs, const MultiplicityParams& p, std::uint64_t seed,
    int trials) {
  RandomSource rnd(seed);
  std::vector<CheckResult> out;
  auto window = eval_window(rs, 2);
  for (int t = 0; t < trials; ++t) {
    LatticeFn f = LatticeFn::from_map(rnd.sparse_function(rs, 2, 4));
    int w = rnd.uniform(0, rs.w0.size() - 1);
    for (const auto& omega : rs.minuscule_weights()) {
      int v = rs.v_element(omega);
      std::string id = "hecke.minuscule." + weight_to_string(omega) + ".t" +
                       std::to_string(t);
      LatticeFn lhs = op_i_finite_inv(
          rs, p, w, translate(omega, op_i_finite_inv(rs, p, v, f)));
      LatticeFn rhs = translate(rs.act(rs.w0.inv[w], omega),
                                op_i_finite_inv(rs, p, rs.w0.mult(v, w), f));
      bool ok = true;
      for (const auto& lam : window) {
        Laurent l = lhs(lam), r = rhs(lam);
        if (l != r) {
          out.push_back(
              CheckResult::fail(id, "T_w^{-1} Y^omega T_{v}^{-1} identity",
                                two_sides(lam, l, r, p.names(rs))));
          ok = false;
          break;
        }
      }
      if (ok) out.push_back(CheckResult::ok(id, "T_w^{-1} Y^omega T_v^{-1}"));
    }
    if (rs.num_components == 1) {
      Weight a0 = rs.quasi_minuscule_weight();
      int s = reflection_id(rs, rs.alpha0[0]);
      Weight wia0 = rs.act(rs.w0.inv[w], a0);
      int sign = rs.root_sign(wia0);
      std::string id = "hecke.affine.w" + std::to_string(w) + ".t" +
                       std::to_string(t);
      LatticeFn t0f = sign > 0 ? op_i_affine_gen(rs, p, 0, f)
                               : op_i_affine_gen_inv(rs, p, 0, f);
      LatticeFn lhs = op_i_finite_inv(rs, p, w, t0f);
      LatticeFn rhs =
          translate(wia0, op_i_finite_inv(rs, p, rs.w0.mult(s, w), f));
      bool ok = true;
      for (const auto& lam : window) {
        Laurent l = lhs(lam), r = rhs(lam);
        if (l != r) {
          out.push_back(
              CheckResult::fail(id, "T_w^{-1} T_0^{+-1} = Y^{w^{-1}a_0} T_{sw}^{-1}",
                                two_sides(lam, l, r, p.names(rs))));
          ok = false;
          break;
        }
      }
      if (ok)
        out.push_back(
            CheckResult::ok(id, "T_w^{-1} T_0^{+-1} = Y^{w^{-1}a_0} T_{sw}^{-1}"));
    }
  }
  return out;
}

}  // namespace hecke
