#pragma once

// The operator families of the affine Hecke algebra on lattice functions:
// difference-reflection \hat T, integral-reflection I, and the dual
// Demazure-Lusztig action on the group algebra, together with word
// evaluation and the relation-verification engine.

#include "hecke/latfun.hpp"
#include "hecke/params.hpp"
#include "hecke/random.hpp"
#include "hecke/report.hpp"
#include "hecke/ring.hpp"
#include "hecke/rootsystem.hpp"

#include <sstream>

namespace hecke {

// chi_g(lambda): q_g if the wall separates lambda from A, 1 on the wall,
// q_g^{-1} otherwise
inline Laurent chi_value(const RootSystem& rs, const MultiplicityParams& p,
                         int g, const Weight& lam) {
  auto gi = rs.gen_info(g);
  int c = rs.pair_coroot(lam, gi.root_idx);
  int side = c - gi.offset;              // sign on the alcove side:
  int alcove_side = gi.offset ? -1 : 1;  // <x,beta^vee> - k on int(A)
  if (side == 0) return Laurent::one();
  bool separates = (side > 0) != (alcove_side > 0);
  return separates ? p.q(gi.cls) : p.q_inv(gi.cls);
}

// \hat T_g = q_g + chi_g (s_g - 1)
inline LatticeFn op_that(const RootSystem& rs, const MultiplicityParams& p,
                         int g, LatticeFn f) {
  auto gi = rs.gen_info(g);
  Laurent qg = p.q(gi.cls);
  const RootSystem* r = &rs;
  MultiplicityParams pp = p;
  return LatticeFn::make([r, pp, g, qg, f](const Weight& lam) {
    Weight s = r->gen_reflect(g, lam);
    Laurent chi = chi_value(*r, pp, g, lam);
    return qg * f(lam) + chi * (f(s) - f(lam));
  });
}

// \hat T_g^{-1} = \hat T_g - (q_g - q_g^{-1})
inline LatticeFn op_that_inv(const RootSystem& rs, const MultiplicityParams& p,
                             int g, LatticeFn f) {
  auto gi = rs.gen_info(g);
  Laurent d = p.q(gi.cls) - p.q_inv(gi.cls);
  return fn_sub(op_that(rs, p, g, f), fn_scale(d, f));
}

// chi_g (s_g - 1), the building block of the reduced braid identity
inline LatticeFn op_chi_refl(const RootSystem& rs, const MultiplicityParams& p,
                             int g, LatticeFn f) {
  const RootSystem* r = &rs;
  MultiplicityParams pp = p;
  return LatticeFn::make([r, pp, g, f](const Weight& lam) {
    Weight s = r->gen_reflect(g, lam);
    return chi_value(*r, pp, g, lam) * (f(s) - f(lam));
  });
}

// I_j = q_j s_j + (q_j - q_j^{-1}) J_j with J_j the signed alpha_j-string sum
inline LatticeFn op_i(const RootSystem& rs, const MultiplicityParams& p, int j,
                      LatticeFn f) {
  if (j < 1 || j > rs.rank) throw std::runtime_error("op_i: finite index expected");
  auto gi = rs.gen_info(j);
  Laurent qj = p.q(gi.cls);
  Laurent d = qj - p.q_inv(gi.cls);
  const RootSystem* r = &rs;
  Weight alpha = rs.alpha_fw(j - 1);
  return LatticeFn::make([r, j, qj, d, alpha, f](const Weight& lam) {
    int c = r->pair_coroot(lam, r->simple[j - 1]);
    Laurent v = qj * f(r->gen_reflect(j, lam));
    if (c > 0) {
      Laurent s;
      Weight x = lam;
      for (int k = 1; k <= c; ++k) {
        x = sub_w(x, alpha);
        s += f(x);
      }
      v -= d * s;
    } else if (c < 0) {
      Laurent s;
      Weight x = lam;
      for (int k = 0; k < -c; ++k) {
        s += f(x);
        x = add_w(x, alpha);
      }
      v += d * s;
    }
    return v;
  });
}

inline LatticeFn op_i_inv(const RootSystem& rs, const MultiplicityParams& p,
                          int j, LatticeFn f) {
  auto gi = rs.gen_info(j);
  Laurent d = p.q(gi.cls) - p.q_inv(gi.cls);
  return fn_sub(op_i(rs, p, j, f), fn_scale(d, f));
}

// I(T_w) for finite w along a reduced word (letters in 1..n)
inline LatticeFn op_i_finite(const RootSystem& rs, const MultiplicityParams& p,
                             int w, LatticeFn f) {
  auto word = rs.w0.word(w);
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    f = op_i(rs, p, *it + 1, f);
  return f;
}

// I(T_w^{-1}) = I(T_{j_l})^{-1} ... I(T_{j_1})^{-1}
inline LatticeFn op_i_finite_inv(const RootSystem& rs,
                                 const MultiplicityParams& p, int w,
                                 LatticeFn f) {
  auto word = rs.w0.word(w);
  for (int j : word) f = op_i_inv(rs, p, j + 1, f);
  return f;
}

// reflection s_beta as an element of W_0
inline int reflection_id(const RootSystem& rs, int root_idx) {
  const Root& beta = rs.positive[root_idx];
  detail::Mat m = detail::mat_identity(rs.rank);
  for (int i = 0; i < rs.rank; ++i)
    for (int j = 0; j < rs.rank; ++j) m[i * rs.rank + j] -= beta.fw[i] * beta.cc[j];
  return rs.w0.index.at(m);
}

// I of an affine wall generator: T_{s_{beta,1}} = Y^beta T_{s_beta}^{-1},
// so I_g = t_beta o I(T_{s_beta})^{-1}
inline LatticeFn op_i_affine_gen(const RootSystem& rs,
                                 const MultiplicityParams& p, int g,
                                 LatticeFn f) {
  auto gi = rs.gen_info(g);
  if (gi.offset != 1) throw std::runtime_error("op_i_affine_gen: not affine");
  int s = reflection_id(rs, gi.root_idx);
  return translate(rs.positive[gi.root_idx].fw, op_i_finite_inv(rs, p, s, f));
}

inline LatticeFn op_i_affine_gen_inv(const RootSystem& rs,
                                     const MultiplicityParams& p, int g,
                                     LatticeFn f) {
  auto gi = rs.gen_info(g);
  int s = reflection_id(rs, gi.root_idx);
  return op_i_finite(rs, p, s, translate(neg_w(rs.positive[gi.root_idx].fw), f));
}

// I(T_u) for u = t_omega v_omega^{-1} in Omega: t_omega o I(T_{v_omega})^{-1}
inline LatticeFn op_i_omega(const RootSystem& rs, const MultiplicityParams& p,
                            const OmegaElt& u, LatticeFn f) {
  return translate(u.omega, op_i_finite_inv(rs, p, u.v_omega, f));
}

inline LatticeFn op_i_omega_inv(const RootSystem& rs,
                                const MultiplicityParams& p, const OmegaElt& u,
                                LatticeFn f) {
  return op_i_finite(rs, p, u.v_omega, translate(neg_w(u.omega), f));
}

// ---------------------------------------------------------------------------
// words

enum class Rep { Difference, Integral };

struct Tok {
  enum Kind { TGen, TGenInv, TU, TUInv, Y } kind = TGen;
  int gen = -1;        // TGen / TGenInv
  int omega_idx = -1;  // TU / TUInv, index into omega_group()
  Weight lam;          // Y

  static Tok t(int g) { return {TGen, g, -1, {}}; }
  static Tok t_inv(int g) { return {TGenInv, g, -1, {}}; }
  static Tok u(int idx) { return {TU, -1, idx, {}}; }
  static Tok u_inv(int idx) { return {TUInv, -1, idx, {}}; }
  static Tok y(Weight lam) { return {Y, -1, -1, std::move(lam)}; }
};

using Word = std::vector<Tok>;

// w = u * s_{g_1} ... s_{g_l}; returns (index of u in omega_group, letters)
inline std::pair<int, std::vector<int>> affine_factorization(
    const RootSystem& rs, AffineElt w) {
  std::vector<int> rev;
  long l = rs.aff_length(w);
  while (l > 0) {
    bool found = false;
    for (int g = 0; g < rs.num_gens(); ++g) {
      AffineElt w2 = rs.aff_mult(w, rs.gen_element(g));
      long l2 = rs.aff_length(w2);
      if (l2 == l - 1) {
        rev.push_back(g);
        w = w2;
        l = l2;
        found = true;
        break;
      }
    }
    if (!found) throw std::runtime_error("affine_factorization: no descent");
  }
  const auto& om = rs.omega_group();
  for (std::size_t i = 0; i < om.size(); ++i)
    if (om[i].u == w)
      return {static_cast<int>(i), {rev.rbegin(), rev.rend()}};
  throw std::runtime_error("affine_factorization: remainder not in Omega");
}

// tokens of T_w for affine w
inline Word word_of_affine(const RootSystem& rs, const AffineElt& w) {
  auto [ui, letters] = affine_factorization(rs, w);
  Word out;
  if (ui != 0 || !rs.aff_is_identity(rs.omega_group()[ui].u)) out.push_back(Tok::u(ui));
  for (int g : letters) out.push_back(Tok::t(g));
  return out;
}

inline Word word_inverse(const Word& w) {
  Word out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    Tok t = *it;
    switch (t.kind) {
      case Tok::TGen: t.kind = Tok::TGenInv; break;
      case Tok::TGenInv: t.kind = Tok::TGen; break;
      case Tok::TU: t.kind = Tok::TUInv; break;
      case Tok::TUInv: t.kind = Tok::TU; break;
      case Tok::Y: t.lam = neg_w(t.lam); break;
    }
    out.push_back(std::move(t));
  }
  return out;
}

// Y^lambda = T_{t_mu} T_{t_nu}^{-1} with mu - nu = lambda, both dominant
inline Word y_word_difference(const RootSystem& rs, const Weight& lam) {
  Weight mu(rs.rank, 0), nu(rs.rank, 0);
  for (int i = 0; i < rs.rank; ++i) {
    mu[i] = std::max(lam[i], 0);
    nu[i] = std::max(-lam[i], 0);
  }
  Word a = word_of_affine(rs, rs.aff_translation(mu));
  Word b = word_inverse(word_of_affine(rs, rs.aff_translation(nu)));
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

inline LatticeFn apply_word(const RootSystem& rs, const MultiplicityParams& p,
                            Rep rep, const Word& w, LatticeFn f);

inline LatticeFn apply_token(const RootSystem& rs, const MultiplicityParams& p,
                             Rep rep, const Tok& t, LatticeFn f) {
  const auto& om = rs.omega_group();
  switch (t.kind) {
    case Tok::TGen:
      if (rep == Rep::Difference) return op_that(rs, p, t.gen, f);
      if (t.gen >= 1 && t.gen <= rs.rank) return op_i(rs, p, t.gen, f);
      return op_i_affine_gen(rs, p, t.gen, f);
    case Tok::TGenInv:
      if (rep == Rep::Difference) return op_that_inv(rs, p, t.gen, f);
      if (t.gen >= 1 && t.gen <= rs.rank) return op_i_inv(rs, p, t.gen, f);
      return op_i_affine_gen_inv(rs, p, t.gen, f);
    case Tok::TU:
      if (rep == Rep::Difference) return weyl_act(rs, om[t.omega_idx].u, f);
      return op_i_omega(rs, p, om[t.omega_idx], f);
    case Tok::TUInv:
      if (rep == Rep::Difference)
        return weyl_act(rs, rs.aff_inverse(om[t.omega_idx].u), f);
      return op_i_omega_inv(rs, p, om[t.omega_idx], f);
    case Tok::Y:
      if (rep == Rep::Integral) return translate(t.lam, f);
      return apply_word(rs, p, Rep::Difference, y_word_difference(rs, t.lam), f);
  }
  throw std::runtime_error("apply_token: bad token");
}

// left-to-right algebra word, so the rightmost token acts first
inline LatticeFn apply_word(const RootSystem& rs, const MultiplicityParams& p,
                            Rep rep, const Word& w, LatticeFn f) {
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    f = apply_token(rs, p, rep, *it, f);
  return f;
}

// central element m_lambda(Y) applied in the given representation
inline LatticeFn op_central_m(const RootSystem& rs, const MultiplicityParams& p,
                              Rep rep, const Weight& lam, LatticeFn f) {
  if (!rs.is_dominant(lam)) throw std::runtime_error("op_central_m: not dominant");
  LatticeFn acc;
  for (const auto& mu : rs.orbit(lam)) {
    LatticeFn term = rep == Rep::Integral
                         ? translate(mu, f)
                         : apply_word(rs, p, rep, y_word_difference(rs, mu), f);
    acc = acc.valid() ? fn_add(acc, term) : term;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Demazure-Lusztig operators on the group algebra

// (e^lambda - e^{s_j lambda}) / (1 - e^{-alpha_j}), always a polynomial
inline GroupAlg string_quotient(const RootSystem& rs, const Weight& lam, int j) {
  int c = rs.pair_coroot(lam, rs.simple[j - 1]);
  Weight alpha = rs.alpha_fw(j - 1);
  GroupAlg r;
  if (c > 0) {
    Weight x = lam;
    for (int k = 0; k < c; ++k) {
      r.add_term(x, Laurent::one());
      x = sub_w(x, alpha);
    }
  } else if (c < 0) {
    Weight x = lam;
    for (int k = 1; k <= -c; ++k) {
      x = add_w(x, alpha);
      r.add_term(x, -Laurent::one());
    }
  }
  return r;
}

// \check T_j = q_j s_j + (q_j - q_j^{-1}) (1 - e^{-alpha_j})^{-1} (1 - s_j)
inline GroupAlg op_dl(const RootSystem& rs, const MultiplicityParams& p, int j,
                      const GroupAlg& f) {
  auto gi = rs.gen_info(j);
  Laurent qj = p.q(gi.cls);
  Laurent d = qj - p.q_inv(gi.cls);
  GroupAlg r;
  for (const auto& [lam, c] : f.terms) {
    r.add_term(rs.reflect(lam, rs.simple[j - 1], 0), qj * c);
    GroupAlg s = string_quotient(rs, lam, j);
    r += (d * c) * s;
  }
  return r;
}

inline GroupAlg op_dl_inv(const RootSystem& rs, const MultiplicityParams& p,
                          int j, const GroupAlg& f) {
  auto gi = rs.gen_info(j);
  Laurent d = p.q(gi.cls) - p.q_inv(gi.cls);
  return op_dl(rs, p, j, f) - d * f;
}

// \check T(T_w) along a reduced word
inline GroupAlg op_dl_finite(const RootSystem& rs, const MultiplicityParams& p,
                             int w, const GroupAlg& f) {
  auto word = rs.w0.word(w);
  GroupAlg r = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    r = op_dl(rs, p, *it + 1, r);
  return r;
}

// \check T(1_0) p with 1_0 = sum_w q_w T_w, cached along left descents
inline GroupAlg op_dl_symmetrizer(const RootSystem& rs,
                                  const MultiplicityParams& p,
                                  const GroupAlg& f) {
  std::vector<GroupAlg> val(rs.w0.size());
  std::vector<char> have(rs.w0.size(), 0);
  val[0] = f;
  have[0] = 1;
  // BFS order of the table is by increasing length
  GroupAlg acc;
  for (int w = 0; w < rs.w0.size(); ++w) {
    if (!have[w]) {
      int g = -1, w2 = -1;
      for (int j = 0; j < rs.rank; ++j) {
        int cand = rs.w0.left[j][w];
        if (rs.w0.len[cand] < rs.w0.len[w]) {
          g = j;
          w2 = cand;
          break;
        }
      }
      val[w] = op_dl(rs, p, g + 1, val[w2]);
      have[w] = 1;
    }
    acc += q_of_finite(rs, w, p) * val[w];
  }
  return acc;
}

}  // namespace hecke
