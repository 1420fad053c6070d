#pragma once

// Root-system catalog and (extended) affine Weyl group combinatorics.
//
// Weights live in the fundamental-weight basis with exact integer
// coordinates, so <lambda, alpha_j^vee> is simply the j-th coordinate.
// Finite Weyl elements are indexed into a fully enumerated group table
// (ranks are desk-scale); affine elements are stored as v * t_lambda.

#include "hecke/ring.hpp"

#include <array>
#include <cassert>
#include <cctype>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace hecke {

using Weight = std::vector<int>;

inline Weight add_w(const Weight& a, const Weight& b) {
  Weight r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

inline Weight sub_w(const Weight& a, const Weight& b) {
  Weight r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

inline Weight neg_w(const Weight& a) {
  Weight r(a);
  for (auto& x : r) x = -x;
  return r;
}

inline Weight scale_w(int c, const Weight& a) {
  Weight r(a);
  for (auto& x : r) x *= c;
  return r;
}

inline bool is_zero_w(const Weight& a) {
  for (int x : a)
    if (x != 0) return false;
  return true;
}

inline int norm1_w(const Weight& a) {
  int s = 0;
  for (int x : a) s += std::abs(x);
  return s;
}

inline std::string weight_to_string(const Weight& w) {
  std::string s = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i]);
  }
  return s + "]";
}

struct Root {
  Weight fw;            // coordinates on omega_1..omega_n
  std::vector<int> rc;  // coordinates on alpha_1..alpha_n
  std::vector<int> cc;  // coroot coordinates on alpha_1^vee..alpha_n^vee
  int cls = 0;          // reflection class
  int component = 0;
  long norm2x = 0;      // |alpha|^2 up to a fixed component-wise scale
};

namespace detail {

using Mat = std::vector<int>;  // row-major rank x rank

inline Mat mat_identity(int n) {
  Mat m(n * n, 0);
  for (int i = 0; i < n; ++i) m[i * n + i] = 1;
  return m;
}

inline Mat mat_mul(const Mat& a, const Mat& b, int n) {
  Mat r(n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      int aik = a[i * n + k];
      if (!aik) continue;
      for (int j = 0; j < n; ++j) r[i * n + j] += aik * b[k * n + j];
    }
  return r;
}

inline Weight mat_apply(const Mat& m, const Weight& v, int n) {
  Weight r(n, 0);
  for (int i = 0; i < n; ++i) {
    int s = 0;
    for (int j = 0; j < n; ++j) s += m[i * n + j] * v[j];
    r[i] = s;
  }
  return r;
}

}  // namespace detail

// Fully enumerated finite Weyl group; elements are ids into this table.
class W0Table {
 public:
  int rank = 0;
  std::vector<detail::Mat> mats;
  std::map<detail::Mat, int> index;
  std::vector<std::vector<int>> right;  // right[g][w] = w * s_g
  std::vector<std::vector<int>> left;   // left[g][w]  = s_g * w
  std::vector<int> len;
  std::vector<int> inv;
  std::vector<std::pair<int, int>> parent;  // (shorter element, last letter)

  int identity() const { return 0; }
  int longest() const { return longest_; }
  int size() const { return static_cast<int>(mats.size()); }

  int mult(int a, int b) const {
    for (int g : word(b)) a = right[g][a];
    return a;
  }

  std::vector<int> word(int w) const {
    std::vector<int> ltrs;
    while (w != 0) {
      ltrs.push_back(parent[w].second);
      w = parent[w].first;
    }
    std::reverse(ltrs.begin(), ltrs.end());
    return ltrs;
  }

  void build(const std::vector<detail::Mat>& gens) {
    int n = rank;
    mats.clear();
    index.clear();
    mats.push_back(detail::mat_identity(n));
    index[mats[0]] = 0;
    parent.push_back({-1, -1});
    len.push_back(0);
    std::queue<int> bfs;
    bfs.push(0);
    int ng = static_cast<int>(gens.size());
    right.assign(ng, {});
    left.assign(ng, {});
    while (!bfs.empty()) {
      int w = bfs.front();
      bfs.pop();
      for (int g = 0; g < ng; ++g) {
        detail::Mat m = detail::mat_mul(mats[w], gens[g], n);
        auto it = index.find(m);
        if (it == index.end()) {
          int id = static_cast<int>(mats.size());
          mats.push_back(m);
          index.emplace(std::move(m), id);
          parent.push_back({w, g});
          len.push_back(len[w] + 1);
          bfs.push(id);
        }
      }
    }
    for (int g = 0; g < ng; ++g) {
      right[g].resize(size());
      left[g].resize(size());
      for (int w = 0; w < size(); ++w) {
        right[g][w] = index.at(detail::mat_mul(mats[w], gens[g], n));
        left[g][w] = index.at(detail::mat_mul(gens[g], mats[w], n));
      }
    }
    inv.resize(size());
    for (int w = 0; w < size(); ++w) {
      int x = 0;
      auto ltrs = word(w);
      for (auto it = ltrs.rbegin(); it != ltrs.rend(); ++it) x = right[*it][x];
      inv[w] = x;
    }
    longest_ = 0;
    for (int w = 0; w < size(); ++w)
      if (len[w] > len[longest_]) longest_ = w;
  }

 private:
  int longest_ = -1;
};

// w = v * t_lambda, acting as x -> v(x + lambda)
struct AffineElt {
  int v = 0;       // finite part (W0Table id)
  Weight t;        // translation part

  bool operator==(const AffineElt& o) const { return v == o.v && t == o.t; }
  bool operator<(const AffineElt& o) const {
    return v != o.v ? v < o.v : t < o.t;
  }
};

struct OmegaElt {
  AffineElt u;
  Weight omega;    // u = t_omega * v_omega^{-1}
  int v_omega = 0; // W0Table id
};

class RootSystem {
 public:
  std::string label;
  int rank = 0;
  std::vector<std::vector<int>> cartan;  // cartan[i][j] = <alpha_j, alpha_i^vee>
  std::vector<Root> positive;            // positive roots
  std::vector<int> simple;               // indices of simple roots in `positive`
  int num_classes = 0;
  std::vector<int> node_component;       // per simple node
  int num_components = 0;
  std::vector<int> alpha0;               // per component: index of the root whose
                                         // coroot is the highest coroot
  std::vector<int> two_rho_cov;          // <omega_j, 2 rho^vee> per j
  W0Table w0;

  // --- basic pairings and actions -------------------------------------

  int pair_coroot(const Weight& lam, int root_idx) const {
    const auto& cc = positive[root_idx].cc;
    int s = 0;
    for (int j = 0; j < rank; ++j) s += cc[j] * lam[j];
    return s;
  }

  // <lambda, 2 rho^vee>
  int pair_two_rho_cov(const Weight& lam) const {
    int s = 0;
    for (int j = 0; j < rank; ++j) s += two_rho_cov[j] * lam[j];
    return s;
  }

  Weight act(int w, const Weight& lam) const {
    return detail::mat_apply(w0.mats[w], lam, rank);
  }

  Weight act(const AffineElt& w, const Weight& lam) const {
    return act(w.v, add_w(lam, w.t));
  }

  // reflection across V_{alpha,k}
  Weight reflect(const Weight& lam, int root_idx, int k = 0) const {
    int c = pair_coroot(lam, root_idx) - k;
    return sub_w(lam, scale_w(c, positive[root_idx].fw));
  }

  AffineElt aff_identity() const { return {0, Weight(rank, 0)}; }

  AffineElt aff_translation(const Weight& lam) const { return {0, lam}; }

  AffineElt aff_finite(int w) const { return {w, Weight(rank, 0)}; }

  // (v t_a)(v' t_b) = (v v') t_{v'^{-1} a + b}
  AffineElt aff_mult(const AffineElt& a, const AffineElt& b) const {
    AffineElt r;
    r.v = w0.mult(a.v, b.v);
    r.t = add_w(act(w0.inv[b.v], a.t), b.t);
    return r;
  }

  AffineElt aff_inverse(const AffineElt& a) const {
    AffineElt r;
    r.v = w0.inv[a.v];
    r.t = neg_w(act(a.v, a.t));
    return r;
  }

  bool aff_is_identity(const AffineElt& a) const {
    return a.v == 0 && is_zero_w(a.t);
  }

  // l(v t_lambda) = sum_{alpha>0} |<lambda,alpha^vee> + chi(v alpha)|
  long aff_length(const AffineElt& w) const {
    long l = 0;
    for (std::size_t a = 0; a < positive.size(); ++a) {
      int c = pair_coroot(w.t, static_cast<int>(a));
      if (root_sign(act(w.v, positive[a].fw)) < 0) c += 1;
      l += std::abs(c);
    }
    return l;
  }

  long length(int w) const { return w0.len[w]; }

  // per-class counts of hyperplanes separating A and wA
  std::array<long, 2> separating_class_counts(const AffineElt& w) const {
    std::array<long, 2> cnt{0, 0};
    for (std::size_t a = 0; a < positive.size(); ++a) {
      int c = pair_coroot(w.t, static_cast<int>(a));
      if (root_sign(act(w.v, positive[a].fw)) < 0) c += 1;
      cnt[positive[a].cls] += std::abs(c);
    }
    return cnt;
  }

  // sign of a root given by fw coordinates (+1 positive, -1 negative)
  int root_sign(const Weight& fw) const {
    auto it = root_index_.find(fw);
    if (it != root_index_.end()) return 1;
    it = root_index_.find(neg_w(fw));
    if (it != root_index_.end()) return -1;
    throw std::runtime_error("root_sign: not a root");
  }

  // index of +-root in `positive`, with sign
  std::pair<int, int> root_lookup(const Weight& fw) const {
    auto it = root_index_.find(fw);
    if (it != root_index_.end()) return {it->second, 1};
    it = root_index_.find(neg_w(fw));
    if (it != root_index_.end()) return {it->second, -1};
    throw std::runtime_error("root_lookup: not a root");
  }

  bool is_root(const Weight& fw) const {
    return root_index_.count(fw) || root_index_.count(neg_w(fw));
  }

  // inversion set R(w) = { alpha in R^+ : w alpha in R^- }
  std::vector<int> inversions(int w) const {
    std::vector<int> r;
    for (std::size_t a = 0; a < positive.size(); ++a)
      if (root_sign(act(w, positive[a].fw)) < 0) r.push_back(static_cast<int>(a));
    return r;
  }

  // --- dominance and distinguished elements ----------------------------

  bool is_dominant(const Weight& lam) const {
    for (int x : lam)
      if (x < 0) return false;
    return true;
  }

  // (lambda_+, w_lambda) with w_lambda lambda = lambda_+, w_lambda shortest
  std::pair<Weight, int> dominant_rep(const Weight& lam) const {
    Weight x = lam;
    int w = 0;
    for (;;) {
      int j = -1;
      for (int i = 0; i < rank; ++i)
        if (x[i] < 0) {
          j = i;
          break;
        }
      if (j < 0) break;
      x = sub_w(x, scale_w(x[j], alpha_fw(j)));
      w = w0.left[j][w];
    }
    return {x, w};
  }

  Weight dominant(const Weight& lam) const { return dominant_rep(lam).first; }

  // shortest element mapping lambda into the antidominant cone
  int v_element(const Weight& lam) const {
    Weight x = lam;
    int w = 0;
    for (;;) {
      int j = -1;
      for (int i = 0; i < rank; ++i)
        if (x[i] > 0) {
          j = i;
          break;
        }
      if (j < 0) break;
      x = sub_w(x, scale_w(x[j], alpha_fw(j)));
      w = w0.left[j][w];
    }
    return w;
  }

  // u_lambda = t_lambda v_lambda^{-1}, the shortest element of t_lambda W_0
  AffineElt u_element(const Weight& lam) const {
    int v = v_element(lam);
    return {w0.inv[v], act(v, lam)};
  }

  // lambda* = -w_o lambda
  Weight star(const Weight& lam) const {
    return neg_w(act(w0.longest(), lam));
  }

  // expresses lam in simple-root coordinates (exact rationals)
  std::vector<Rat> root_coords(const Weight& lam) const {
    // solve cartan * m = lam
    int n = rank;
    std::vector<std::vector<Rat>> A(n, std::vector<Rat>(n + 1));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) A[i][j] = Rat(cartan[i][j]);
      A[i][n] = Rat(lam[i]);
    }
    for (int col = 0; col < n; ++col) {
      int piv = -1;
      for (int r = col; r < n; ++r)
        if (A[r][col] != 0) {
          piv = r;
          break;
        }
      if (piv < 0) throw std::runtime_error("root_coords: singular Cartan matrix");
      std::swap(A[col], A[piv]);
      for (int r = 0; r < n; ++r) {
        if (r == col || A[r][col] == 0) continue;
        Rat f = A[r][col] / A[col][col];
        for (int c = col; c <= n; ++c) A[r][c] -= f * A[col][c];
      }
    }
    std::vector<Rat> m(n);
    for (int i = 0; i < n; ++i) m[i] = A[i][n] / A[i][i];
    return m;
  }

  bool in_positive_root_span(const Weight& lam) const {
    for (const Rat& c : root_coords(lam))
      if (c < 0 || denominator(c) != 1) return false;
    return true;
  }

  // Bruhat order on W_0 (lifting property, memoized)
  bool bruhat_leq(int u, int v) const {
    if (u == v) return true;
    if (w0.len[u] >= w0.len[v]) return false;
    auto key = std::make_pair(u, v);
    auto it = bruhat_cache_.find(key);
    if (it != bruhat_cache_.end()) return it->second;
    int g = w0.word(v).back();
    int vs = w0.right[g][v];
    int us = w0.right[g][u];
    bool r = w0.len[us] < w0.len[u] ? bruhat_leq(us, vs) : bruhat_leq(u, vs);
    bruhat_cache_.emplace(key, r);
    return r;
  }

  // dominance order, extended from P^+ to P via the Bruhat order
  bool dominance_leq(const Weight& mu, const Weight& lam) const {
    auto [mup, wmu] = dominant_rep(mu);
    auto [lap, wla] = dominant_rep(lam);
    if (mup != lap) {
      Weight d = sub_w(lap, mup);
      return in_positive_root_span(d);
    }
    return bruhat_leq(wmu, wla);
  }

  bool dominance_lt(const Weight& mu, const Weight& lam) const {
    return mu != lam && dominance_leq(mu, lam);
  }

  // --- orbits, stabilizers, facets -------------------------------------

  std::vector<Weight> orbit(const Weight& lam) const {
    std::set<Weight> seen;
    std::queue<Weight> bfs;
    Weight l0 = dominant(lam);
    seen.insert(l0);
    bfs.push(l0);
    while (!bfs.empty()) {
      Weight x = bfs.front();
      bfs.pop();
      for (int j = 0; j < rank; ++j) {
        Weight y = sub_w(x, scale_w(x[j], alpha_fw(j)));
        if (seen.insert(y).second) bfs.push(y);
      }
    }
    return {seen.begin(), seen.end()};
  }

  std::vector<int> stabilizer(const Weight& lam) const {
    std::vector<int> r;
    for (int w = 0; w < w0.size(); ++w)
      if (act(w, lam) == lam) r.push_back(w);
    return r;
  }

  // W_0 { sum_{j in S} omega_j : S subseteq {1..n} }, one weight per facet
  std::vector<Weight> facet_representatives() const {
    std::set<Weight> pts;
    for (unsigned mask = 0; mask < (1u << rank); ++mask) {
      Weight lam(rank, 0);
      for (int j = 0; j < rank; ++j)
        if (mask & (1u << j)) lam[j] = 1;
      for (const auto& mu : orbit(lam)) pts.insert(mu);
    }
    return {pts.begin(), pts.end()};
  }

  // theta(mu) = <mu_+ - mu, rho^vee> - l(w_mu)
  long theta(const Weight& mu) const {
    auto [mup, wmu] = dominant_rep(mu);
    int tw = pair_two_rho_cov(sub_w(mup, mu));
    assert(tw % 2 == 0);
    return tw / 2 - w0.len[wmu];
  }

  // --- Omega (length-zero subgroup) -------------------------------------

  const std::vector<OmegaElt>& omega_group() const {
    if (!omega_.empty()) return omega_;
    std::vector<AffineElt> elems;
    elems.push_back(aff_identity());
    for (int j = 0; j < rank; ++j) {
      Weight w(rank, 0);
      w[j] = 1;
      AffineElt u = u_element(w);
      if (aff_length(u) == 0 && !aff_is_identity(u)) elems.push_back(u);
    }
    // close under composition
    for (;;) {
      bool grew = false;
      std::set<AffineElt> have(elems.begin(), elems.end());
      std::size_t cur = elems.size();
      for (std::size_t i = 0; i < cur; ++i)
        for (std::size_t j = 0; j < cur; ++j) {
          AffineElt p = aff_mult(elems[i], elems[j]);
          if (have.insert(p).second) {
            elems.push_back(p);
            grew = true;
          }
        }
      if (!grew) break;
    }
    for (const auto& u : elems) {
      OmegaElt oe;
      oe.u = u;
      oe.omega = act(u, Weight(rank, 0));  // u = t_omega v_omega^{-1}
      AffineElt v = aff_mult(aff_inverse(u), aff_translation(oe.omega));
      assert(is_zero_w(v.t));
      oe.v_omega = v.v;
      omega_.push_back(oe);
    }
    return omega_;
  }

  // --- affine generators -------------------------------------------------
  //
  // Generator indices: 1..n are the simple reflections, 0 is the affine
  // reflection of component 0, and n+c (c >= 1) that of component c.

  int num_gens() const { return rank + num_components; }

  struct GenInfo {
    int root_idx;  // wall V_{alpha, k}
    int offset;    // k in {0, 1}
    int cls;
  };

  GenInfo gen_info(int g) const {
    if (g >= 1 && g <= rank)
      return {simple[g - 1], 0, positive[simple[g - 1]].cls};
    int comp = (g == 0) ? 0 : g - rank;
    if (comp < 0 || comp >= num_components)
      throw std::runtime_error("gen_info: bad generator index");
    return {alpha0[comp], 1, positive[alpha0[comp]].cls};
  }

  AffineElt gen_element(int g) const {
    GenInfo gi = gen_info(g);
    const Root& beta = positive[gi.root_idx];
    // s_{beta,k} = s_beta t_{-k beta}
    detail::Mat m = detail::mat_identity(rank);
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j) m[i * rank + j] -= beta.fw[i] * beta.cc[j];
    int v = w0.index.at(m);
    return {v, scale_w(-gi.offset, beta.fw)};
  }

  Weight gen_reflect(int g, const Weight& lam) const {
    GenInfo gi = gen_info(g);
    return reflect(lam, gi.root_idx, gi.offset);
  }

  // order m_{gh} of s_g s_h (0 when infinite)
  int braid_order(int g, int h) const {
    AffineElt p = aff_mult(gen_element(g), gen_element(h));
    AffineElt x = p;
    for (int m = 1; m <= 64; ++m) {
      if (aff_is_identity(x)) return m;
      x = aff_mult(x, p);
    }
    return 0;
  }

  // minuscule fundamental weights
  std::vector<Weight> minuscule_weights() const {
    std::vector<Weight> r;
    for (int j = 0; j < rank; ++j) {
      Weight w(rank, 0);
      w[j] = 1;
      bool ok = true;
      for (std::size_t a = 0; a < positive.size(); ++a)
        if (pair_coroot(w, static_cast<int>(a)) > 1) ok = false;
      if (ok) r.push_back(w);
    }
    return r;
  }

  Weight quasi_minuscule_weight() const {
    if (num_components != 1)
      throw std::runtime_error("quasi-minuscule weight needs an irreducible type");
    return positive[alpha0[0]].fw;
  }

  Weight alpha_fw(int j) const { return positive[simple[j]].fw; }

 private:
  std::map<Weight, int> root_index_;
  mutable std::map<std::pair<int, int>, bool> bruhat_cache_;
  mutable std::vector<OmegaElt> omega_;

  friend RootSystem build_root_system(const std::string& type);

  void finalize() {
    for (std::size_t a = 0; a < positive.size(); ++a)
      root_index_.emplace(positive[a].fw, static_cast<int>(a));
    two_rho_cov.assign(rank, 0);
    for (const auto& r : positive)
      for (int j = 0; j < rank; ++j) two_rho_cov[j] += r.cc[j];
  }
};

namespace detail {

inline std::vector<std::vector<int>> cartan_matrix(char fam, int n) {
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto link = [&](int i, int j, int aij, int aji) {
    a[i][j] = aij;
    a[j][i] = aji;
  };
  switch (fam) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1, -1);
      break;
    case 'B':
      if (n < 2) throw std::runtime_error("B needs rank >= 2");
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1, -1);
      link(n - 2, n - 1, -1, -2);
      break;
    case 'C':
      if (n < 2) throw std::runtime_error("C needs rank >= 2");
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1, -1);
      link(n - 2, n - 1, -2, -1);
      break;
    case 'D':
      if (n < 3) throw std::runtime_error("D needs rank >= 3");
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1, -1);
      link(n - 3, n - 1, -1, -1);
      break;
    case 'G':
      a = {{2, -3}, {-1, 2}};
      break;
    case 'F':
      a = {{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}};
      break;
    case 'X':  // A1 x A1
      a = {{2, 0}, {0, 2}};
      break;
    default:
      throw std::runtime_error("unknown family");
  }
  return a;
}

}  // namespace detail

// Supported labels: A1..A6, B2..B4, C2..C4, D3..D4, G2, F4, A1xA1.
inline RootSystem build_root_system(const std::string& type) {
  char fam;
  int n;
  if (type == "A1xA1") {
    fam = 'X';
    n = 2;
  } else if (type.size() == 2 && std::isdigit(static_cast<unsigned char>(type[1]))) {
    fam = type[0];
    n = type[1] - '0';
    if (fam == 'G' && n != 2) throw std::runtime_error("G2 only");
    if (fam == 'F' && n != 4) throw std::runtime_error("F4 only");
    if (fam == 'A' && (n < 1 || n > 6)) throw std::runtime_error("A1..A6");
    if ((fam == 'B' || fam == 'C') && (n < 2 || n > 4))
      throw std::runtime_error("B/C rank 2..4");
    if (fam == 'D' && (n < 3 || n > 4)) throw std::runtime_error("D3..D4");
    if (fam != 'A' && fam != 'B' && fam != 'C' && fam != 'D' && fam != 'G' &&
        fam != 'F')
      throw std::runtime_error("unsupported type " + type);
  } else {
    throw std::runtime_error("unsupported type " + type);
  }

  RootSystem rs;
  rs.label = type;
  rs.rank = n;
  rs.cartan = detail::cartan_matrix(fam, n);

  // connected components of the Dynkin diagram
  rs.node_component.assign(n, -1);
  int ncomp = 0;
  for (int s = 0; s < n; ++s) {
    if (rs.node_component[s] >= 0) continue;
    std::queue<int> bfs;
    bfs.push(s);
    rs.node_component[s] = ncomp;
    while (!bfs.empty()) {
      int i = bfs.front();
      bfs.pop();
      for (int j = 0; j < n; ++j)
        if (j != i && rs.cartan[i][j] != 0 && rs.node_component[j] < 0) {
          rs.node_component[j] = ncomp;
          bfs.push(j);
        }
    }
    ++ncomp;
  }
  rs.num_components = ncomp;

  // symmetrizer d_i with d_i a_ij = d_j a_ji, integral, min 1 per component
  std::vector<Rat> d(n, Rat(0));
  for (int s = 0; s < n; ++s) {
    if (d[s] != 0) continue;
    d[s] = 1;
    std::queue<int> bfs;
    bfs.push(s);
    while (!bfs.empty()) {
      int i = bfs.front();
      bfs.pop();
      for (int j = 0; j < n; ++j)
        if (j != i && rs.cartan[i][j] != 0 && d[j] == 0) {
          d[j] = d[i] * Rat(rs.cartan[i][j]) / Rat(rs.cartan[j][i]);
          bfs.push(j);
        }
    }
  }
  Int lcm_den = 1;
  for (const auto& x : d) lcm_den = boost::multiprecision::lcm(lcm_den, denominator(x));
  std::vector<long> dn(n);
  for (int i = 0; i < n; ++i) dn[i] = static_cast<long>(numerator(d[i] * Rat(lcm_den)));

  // generate all roots by reflection closure on (root coords, coroot coords)
  struct Seed {
    std::vector<int> rc, cc;
  };
  std::map<std::vector<int>, Seed> all;
  std::queue<Seed> bfs;
  for (int j = 0; j < n; ++j) {
    Seed s;
    s.rc.assign(n, 0);
    s.cc.assign(n, 0);
    s.rc[j] = 1;
    s.cc[j] = 1;
    all.emplace(s.rc, s);
    bfs.push(s);
  }
  while (!bfs.empty()) {
    Seed s = bfs.front();
    bfs.pop();
    for (int i = 0; i < n; ++i) {
      // s_i alpha: pair <alpha, alpha_i^vee> = sum_j rc_j a_ij
      int pr = 0, pc = 0;
      for (int j = 0; j < n; ++j) {
        pr += s.rc[j] * rs.cartan[i][j];
        pc += s.cc[j] * rs.cartan[j][i];  // <alpha_i, alpha^vee>
      }
      Seed t = s;
      t.rc[i] -= pr;
      t.cc[i] -= pc;
      if (all.emplace(t.rc, t).second) bfs.push(t);
    }
  }

  for (const auto& [rc, s] : all) {
    bool pos = true;
    for (int j = 0; j < n; ++j)
      if (rc[j] < 0) pos = false;
    if (!pos) continue;
    Root r;
    r.rc = s.rc;
    r.cc = s.cc;
    r.fw.assign(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) r.fw[i] += rs.cartan[i][j] * s.rc[j];
    for (int j = 0; j < n; ++j)
      if (s.rc[j] != 0) {
        r.component = rs.node_component[j];
        // |alpha|^2 scale: d_alpha = d_j * rc_j / cc_j
        assert(s.cc[j] != 0 && (dn[j] * s.rc[j]) % s.cc[j] == 0);
        r.norm2x = dn[j] * s.rc[j] / s.cc[j];
        break;
      }
    rs.positive.push_back(std::move(r));
  }

  // reflection classes: (component, length) pairs
  std::vector<std::pair<int, long>> classes;
  for (const auto& r : rs.positive) {
    auto key = std::make_pair(r.component, r.norm2x);
    if (std::find(classes.begin(), classes.end(), key) == classes.end())
      classes.push_back(key);
  }
  std::sort(classes.begin(), classes.end());  // short before long per component
  if (classes.size() > 2)
    throw std::runtime_error("more than two reflection classes");
  rs.num_classes = static_cast<int>(classes.size());
  for (auto& r : rs.positive) {
    auto key = std::make_pair(r.component, r.norm2x);
    r.cls = static_cast<int>(
        std::find(classes.begin(), classes.end(), key) - classes.begin());
  }

  rs.simple.assign(n, -1);
  for (std::size_t a = 0; a < rs.positive.size(); ++a) {
    int ht = 0, idx = -1;
    for (int j = 0; j < n; ++j) {
      ht += rs.positive[a].rc[j];
      if (rs.positive[a].rc[j] == 1) idx = j;
    }
    if (ht == 1) rs.simple[idx] = static_cast<int>(a);
  }

  // highest coroot per component -> alpha0
  rs.alpha0.assign(ncomp, -1);
  for (int c = 0; c < ncomp; ++c) {
    int best = -1;
    long best_ht = -1;
    for (std::size_t a = 0; a < rs.positive.size(); ++a) {
      if (rs.positive[a].component != c) continue;
      long ht = std::accumulate(rs.positive[a].cc.begin(), rs.positive[a].cc.end(), 0L);
      if (ht > best_ht) {
        best_ht = ht;
        best = static_cast<int>(a);
      }
    }
    rs.alpha0[c] = best;
  }

  // finite Weyl group table
  rs.w0.rank = n;
  std::vector<detail::Mat> gens;
  for (int k = 0; k < n; ++k) {
    detail::Mat m = detail::mat_identity(n);
    for (int i = 0; i < n; ++i) m[i * n + k] -= rs.cartan[i][k];
    gens.push_back(std::move(m));
  }
  rs.w0.build(gens);

  rs.finalize();
  return rs;
}

}  // namespace hecke
