#pragma once

// Lattice functions P -> Ring and the group algebra C[P].
//
// Difference-reflection operators keep supports finite but the
// integral-reflection operators do not, so lattice functions are represented
// as lazily evaluated nodes: every operator reads only finitely many values
// of its input per output weight, and a per-node memo table keeps composed
// words polynomial to evaluate.  Values are exact ring elements throughout,
// so comparisons on any finite window are exact (no truncation).

#include "hecke/params.hpp"
#include "hecke/ring.hpp"
#include "hecke/rootsystem.hpp"

#include <functional>
#include <memory>

namespace hecke {

using FinFn = std::map<Weight, Laurent>;  // finitely supported function

namespace detail {

struct FnNode {
  std::function<Laurent(const Weight&)> compute;
  mutable std::map<Weight, Laurent> memo;  // idempotent fill, pure cache

  const Laurent& eval(const Weight& w) const {
    auto it = memo.find(w);
    if (it != memo.end()) return it->second;
    Laurent v = compute(w);
    return memo.emplace(w, std::move(v)).first->second;
  }
};

}  // namespace detail

class LatticeFn {
 public:
  LatticeFn() = default;

  static LatticeFn from_map(FinFn f) {
    auto m = std::make_shared<FinFn>(std::move(f));
    return make([m](const Weight& w) {
      auto it = m->find(w);
      return it == m->end() ? Laurent::zero() : it->second;
    });
  }

  static LatticeFn delta(const Weight& w0, Laurent c = Laurent::one()) {
    return make([w0, c](const Weight& w) {
      return w == w0 ? c : Laurent::zero();
    });
  }

  static LatticeFn make(std::function<Laurent(const Weight&)> f) {
    LatticeFn r;
    r.node_ = std::make_shared<detail::FnNode>();
    r.node_->compute = std::move(f);
    return r;
  }

  const Laurent& operator()(const Weight& w) const { return node_->eval(w); }

  bool valid() const { return node_ != nullptr; }

  FinFn restrict_to(const std::vector<Weight>& window) const {
    FinFn r;
    for (const auto& w : window) {
      Laurent v = (*this)(w);
      if (!v.is_zero()) r.emplace(w, std::move(v));
    }
    return r;
  }

 private:
  std::shared_ptr<detail::FnNode> node_;
};

inline LatticeFn fn_add(LatticeFn a, LatticeFn b) {
  return LatticeFn::make(
      [a, b](const Weight& w) { return a(w) + b(w); });
}

inline LatticeFn fn_sub(LatticeFn a, LatticeFn b) {
  return LatticeFn::make(
      [a, b](const Weight& w) { return a(w) - b(w); });
}

inline LatticeFn fn_scale(Laurent c, LatticeFn a) {
  return LatticeFn::make(
      [c, a](const Weight& w) { return c * a(w); });
}

// (w f)(lambda) = f(w^{-1} lambda)
inline LatticeFn weyl_act(const RootSystem& rs, const AffineElt& w, LatticeFn f) {
  AffineElt wi = rs.aff_inverse(w);
  return LatticeFn::make(
      [&rs, wi, f](const Weight& lam) { return f(rs.act(wi, lam)); });
}

// (t_mu f)(lambda) = f(lambda - mu)
inline LatticeFn translate(const Weight& mu, LatticeFn f) {
  return LatticeFn::make(
      [mu, f](const Weight& lam) { return f(sub_w(lam, mu)); });
}

// generic function whose values are fresh free symbols, one per weight
class SymbolicFn {
 public:
  explicit SymbolicFn(int base_var) : state_(std::make_shared<State>()) {
    state_->base = base_var;
  }

  LatticeFn fn() const {
    auto st = state_;
    return LatticeFn::make([st](const Weight& w) {
      return Laurent::var(st->var_of(w));
    });
  }

  // the variable position attached to a weight (allocating if new)
  int var(const Weight& w) const { return state_->var_of(w); }

  Laurent value(const Weight& w) const { return Laurent::var(var(w)); }

 private:
  struct State {
    int base = 0;
    std::map<Weight, int> idx;
    int var_of(const Weight& w) {
      auto it = idx.find(w);
      if (it != idx.end()) return it->second;
      int v = base + static_cast<int>(idx.size());
      idx.emplace(w, v);
      return v;
    }
  };
  std::shared_ptr<State> state_;
};

// ---------------------------------------------------------------------------
// group algebra C[P]

class GroupAlg {
 public:
  std::map<Weight, Laurent> terms;

  GroupAlg() = default;

  static GroupAlg zero() { return {}; }

  static GroupAlg basis(const Weight& lam, Laurent c = Laurent::one()) {
    GroupAlg p;
    if (!c.is_zero()) p.terms.emplace(lam, std::move(c));
    return p;
  }

  static GroupAlg unit(int rank) { return basis(Weight(rank, 0)); }

  bool is_zero() const { return terms.empty(); }

  void add_term(const Weight& w, const Laurent& c) {
    if (c.is_zero()) return;
    auto it = terms.find(w);
    if (it == terms.end()) {
      terms.emplace(w, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }

  Laurent coeff(const Weight& w) const {
    auto it = terms.find(w);
    return it == terms.end() ? Laurent::zero() : it->second;
  }

  GroupAlg& operator+=(const GroupAlg& o) {
    for (const auto& [w, c] : o.terms) add_term(w, c);
    return *this;
  }
  GroupAlg& operator-=(const GroupAlg& o) {
    for (const auto& [w, c] : o.terms) add_term(w, -c);
    return *this;
  }
  friend GroupAlg operator+(GroupAlg a, const GroupAlg& b) { return a += b; }
  friend GroupAlg operator-(GroupAlg a, const GroupAlg& b) { return a -= b; }

  GroupAlg operator-() const {
    GroupAlg r;
    for (const auto& [w, c] : terms) r.terms.emplace(w, -c);
    return r;
  }

  // convolution e^lambda e^mu = e^{lambda+mu}
  friend GroupAlg operator*(const GroupAlg& a, const GroupAlg& b) {
    GroupAlg r;
    for (const auto& [wa, ca] : a.terms)
      for (const auto& [wb, cb] : b.terms) r.add_term(add_w(wa, wb), ca * cb);
    return r;
  }

  friend GroupAlg operator*(const Laurent& c, const GroupAlg& a) {
    GroupAlg r;
    for (const auto& [w, v] : a.terms) r.add_term(w, c * v);
    return r;
  }

  friend GroupAlg operator*(const Rat& c, const GroupAlg& a) {
    return Laurent::constant(c) * a;
  }

  bool operator==(const GroupAlg& o) const { return terms == o.terms; }
  bool operator!=(const GroupAlg& o) const { return terms != o.terms; }

  // substitute e^mu -> x^mu at a torus point (x given per fundamental weight)
  Laurent eval_torus(const std::vector<Rat>& x) const {
    Laurent r;
    for (const auto& [w, c] : terms) {
      Rat v(1);
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) throw std::runtime_error("eval_torus: zero coordinate");
        int k = w[i];
        Rat base = k >= 0 ? x[i] : Rat(1) / x[i];
        for (int t = 0; t < std::abs(k); ++t) v *= base;
      }
      r += v * c;
    }
    return r;
  }

  std::string to_string(const std::vector<std::string>& names = {}) const {
    if (terms.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [w, c] : terms) {
      if (!first) s += " + ";
      first = false;
      std::string cs = c.to_string(names);
      if (cs == "1") {
        s += "e" + weight_to_string(w);
      } else {
        bool simple = c.is_monomial() || c.is_constant();
        s += (simple ? cs : "(" + cs + ")") + " e" + weight_to_string(w);
      }
    }
    return s;
  }
};

// w e^lambda = e^{w lambda} for affine w
inline GroupAlg ga_weyl_act(const RootSystem& rs, const AffineElt& w,
                            const GroupAlg& p) {
  GroupAlg r;
  for (const auto& [mu, c] : p.terms) r.add_term(rs.act(w, mu), c);
  return r;
}

// sesquilinear pairing (f, p) = (conj(p) f)(0); over rationals conj = id,
// so (f, p) = sum_mu c_mu f(-mu)
inline Laurent pairing(const LatticeFn& f, const GroupAlg& p) {
  Laurent r;
  for (const auto& [mu, c] : p.terms) r += c * f(neg_w(mu));
  return r;
}

// m_lambda = sum over the orbit of e^mu
inline GroupAlg orbit_sum(const RootSystem& rs, const Weight& lam) {
  if (!rs.is_dominant(lam))
    throw std::runtime_error("orbit_sum: lambda not dominant");
  GroupAlg r;
  for (const auto& mu : rs.orbit(lam)) r.add_term(mu, Laurent::one());
  return r;
}

// e^lambda as a multiplication operator equals t_lambda on lattice functions
inline LatticeFn ga_mult_fn(const GroupAlg& p, LatticeFn f) {
  auto terms = std::make_shared<std::map<Weight, Laurent>>(p.terms);
  return LatticeFn::make([terms, f](const Weight& lam) {
    Laurent r;
    for (const auto& [mu, c] : *terms) r += c * f(sub_w(lam, mu));
    return r;
  });
}

}  // namespace hecke
