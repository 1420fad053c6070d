#pragma once

// Hecke parameters: one value per reflection class of W, either a formal
// Laurent variable or a fixed nonzero rational.  Derived quantities from the
// length-multiplicative function: q_w, e_q, Poincare series.

#include "hecke/ring.hpp"
#include "hecke/rootsystem.hpp"

namespace hecke {

struct MultiplicityParams {
  int num_classes = 1;
  bool formal = true;
  std::array<Rat, 2> numeric{Rat(1, 2), Rat(1, 2)};

  static MultiplicityParams make_formal(const RootSystem& rs) {
    MultiplicityParams p;
    p.num_classes = rs.num_classes;
    p.formal = true;
    return p;
  }

  static MultiplicityParams make_numeric(const RootSystem& rs, const Rat& q) {
    MultiplicityParams p;
    p.num_classes = rs.num_classes;
    p.formal = false;
    p.numeric = {q, q};
    return p;
  }

  static MultiplicityParams make_numeric2(const RootSystem& rs, const Rat& qs,
                                          const Rat& ql) {
    MultiplicityParams p;
    p.num_classes = rs.num_classes;
    p.formal = false;
    p.numeric = {qs, ql};
    return p;
  }

  // q_cls^k
  Laurent qpow(int cls, long k) const {
    if (cls < 0 || cls >= num_classes)
      throw std::runtime_error("qpow: bad class");
    if (k == 0) return Laurent::one();
    if (formal) return Laurent::monomial(cls, static_cast<int>(k));
    Rat v(1);
    Rat base = k > 0 ? numeric[cls] : Rat(1) / numeric[cls];
    for (long i = 0; i < std::abs(k); ++i) v *= base;
    return Laurent::constant(v);
  }

  Laurent q(int cls) const { return qpow(cls, 1); }
  Laurent q_inv(int cls) const { return qpow(cls, -1); }

  // first free symbol position (beyond the parameter variables)
  int symbol_base() const { return formal ? num_classes : 0; }

  std::vector<std::string> names(const RootSystem& rs) const {
    if (num_classes == 1) return {"q"};
    if (rs.num_components > 1) return {"q1", "q2"};
    return {"q_s", "q_l"};
  }
};

// q_w = prod over separating hyperplanes of the class parameters
inline Laurent q_of_element(const RootSystem& rs, const AffineElt& w,
                            const MultiplicityParams& p) {
  auto cnt = rs.separating_class_counts(w);
  Laurent r = Laurent::one();
  for (int c = 0; c < rs.num_classes; ++c) r *= p.qpow(c, cnt[c]);
  return r;
}

inline Laurent q_of_finite(const RootSystem& rs, int w,
                           const MultiplicityParams& p) {
  return q_of_element(rs, rs.aff_finite(w), p);
}

// e_q(lambda) = prod_{alpha > 0} q_alpha^{<lambda, alpha^vee>}
inline Laurent e_q(const RootSystem& rs, const Weight& lam,
                   const MultiplicityParams& p) {
  std::array<long, 2> ex{0, 0};
  for (std::size_t a = 0; a < rs.positive.size(); ++a)
    ex[rs.positive[a].cls] += rs.pair_coroot(lam, static_cast<int>(a));
  Laurent r = Laurent::one();
  for (int c = 0; c < rs.num_classes; ++c) r *= p.qpow(c, ex[c]);
  return r;
}

// sum_{w in ids} q_w^2 by brute force
inline Laurent poincare_sum(const RootSystem& rs, const std::vector<int>& ids,
                            const MultiplicityParams& p) {
  Laurent r;
  for (int w : ids) {
    std::array<long, 2> cnt{0, 0};
    for (int a : rs.inversions(w)) cnt[rs.positive[a].cls] += 1;
    Laurent t = Laurent::one();
    for (int c = 0; c < rs.num_classes; ++c) t *= p.qpow(c, 2 * cnt[c]);
    r += t;
  }
  return r;
}

inline std::vector<int> all_w0(const RootSystem& rs) {
  std::vector<int> ids(rs.w0.size());
  for (int i = 0; i < rs.w0.size(); ++i) ids[i] = i;
  return ids;
}

// W_{0,lambda}(q^2) via Macdonald's product formula
inline Laurent poincare_stabilizer_product(const RootSystem& rs,
                                           const Weight& lam,
                                           const MultiplicityParams& p) {
  if (!rs.is_dominant(lam))
    throw std::runtime_error("poincare_stabilizer_product: lambda not dominant");
  LaurentFrac r{Laurent::one()};
  for (std::size_t a = 0; a < rs.positive.size(); ++a) {
    if (rs.pair_coroot(lam, static_cast<int>(a)) != 0) continue;
    int cls = rs.positive[a].cls;
    Laurent eq = e_q(rs, rs.positive[a].fw, p);
    LaurentFrac f(Laurent::one() - p.qpow(cls, 2) * eq, Laurent::one() - eq);
    r = r * f;
  }
  return r.as_laurent();
}

// W_0(q^2) for the full finite Weyl group
inline Laurent poincare_w0(const RootSystem& rs, const MultiplicityParams& p) {
  Weight rho(rs.rank, 1);  // regular dominant, trivial stabilizer
  return poincare_sum(rs, all_w0(rs), p);
}

}  // namespace hecke
