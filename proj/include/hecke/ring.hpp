#pragma once

// Sparse multivariate Laurent polynomials over exact rationals.
//
// Variables are positional: an exponent vector (trailing zeros trimmed) maps
// to a nonzero rational coefficient.  By convention the Hecke parameters
// occupy the first slots (one per reflection class) and any further slots are
// free symbols (generic function values, spectral variables, ...).

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace hecke {

using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

using Exps = std::vector<int>;  // exponent vector, trailing zeros trimmed

inline void trim_exps(Exps& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

inline Exps add_exps(const Exps& a, const Exps& b) {
  Exps r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim_exps(r);
  return r;
}

inline Exps sub_exps(const Exps& a, const Exps& b) {
  Exps r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim_exps(r);
  return r;
}

class Laurent {
 public:
  // canonical form: no zero coefficients, trimmed exponent vectors
  std::map<Exps, Rat> terms;

  Laurent() = default;

  static Laurent zero() { return Laurent(); }

  static Laurent constant(Rat c) {
    Laurent p;
    if (c != 0) p.terms.emplace(Exps{}, std::move(c));
    return p;
  }

  static Laurent one() { return constant(Rat(1)); }

  // c * x_pos^k
  static Laurent monomial(std::size_t pos, int k, Rat c = Rat(1)) {
    Laurent p;
    if (c == 0) return p;
    Exps e;
    if (k != 0) {
      e.assign(pos + 1, 0);
      e[pos] = k;
    }
    p.terms.emplace(std::move(e), std::move(c));
    return p;
  }

  static Laurent var(std::size_t pos) { return monomial(pos, 1); }

  bool is_zero() const { return terms.empty(); }

  bool is_constant() const {
    return terms.empty() || (terms.size() == 1 && terms.begin()->first.empty());
  }

  bool is_one() const {
    return terms.size() == 1 && terms.begin()->first.empty() &&
           terms.begin()->second == 1;
  }

  // single-term elements are exactly the units of the Laurent ring
  bool is_monomial() const { return terms.size() == 1; }

  Rat constant_value() const {
    if (terms.empty()) return Rat(0);
    if (!is_constant()) throw std::runtime_error("Laurent: not a constant");
    return terms.begin()->second;
  }

  void add_term(const Exps& e, const Rat& c) {
    if (c == 0) return;
    auto it = terms.find(e);
    if (it == terms.end()) {
      terms.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }

  Laurent& operator+=(const Laurent& o) {
    for (const auto& [e, c] : o.terms) add_term(e, c);
    return *this;
  }

  Laurent& operator-=(const Laurent& o) {
    for (const auto& [e, c] : o.terms) add_term(e, -c);
    return *this;
  }

  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }

  Laurent operator-() const {
    Laurent r;
    for (const auto& [e, c] : terms) r.terms.emplace(e, -c);
    return r;
  }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    if (a.terms.empty() || b.terms.empty()) return r;
    for (const auto& [ea, ca] : a.terms)
      for (const auto& [eb, cb] : b.terms) r.add_term(add_exps(ea, eb), ca * cb);
    return r;
  }

  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  friend Laurent operator*(const Rat& c, const Laurent& a) {
    Laurent r;
    if (c == 0) return r;
    for (const auto& [e, v] : a.terms) r.terms.emplace(e, c * v);
    return r;
  }

  bool operator==(const Laurent& o) const { return terms == o.terms; }
  bool operator!=(const Laurent& o) const { return terms != o.terms; }

  // inverse, defined for monomials only
  Laurent inverse() const {
    if (terms.size() != 1)
      throw std::runtime_error("Laurent: inverse of a non-monomial");
    const auto& [e, c] = *terms.begin();
    Exps ei(e);
    for (auto& k : ei) k = -k;
    Laurent r;
    r.terms.emplace(std::move(ei), Rat(1) / c);
    return r;
  }

  Laurent pow(long n) const {
    if (n < 0) return inverse().pow(-n);
    Laurent r = one();
    Laurent base = *this;
    while (n > 0) {
      if (n & 1) r = r * base;
      base = base * base;
      n >>= 1;
    }
    return r;
  }

  // substitute rational values at the given positions (others untouched)
  Laurent substitute(const std::vector<std::optional<Rat>>& vals) const {
    Laurent r;
    for (const auto& [e, c] : terms) {
      Rat coeff = c;
      Exps rest = e;
      for (std::size_t i = 0; i < e.size() && i < vals.size(); ++i) {
        if (!vals[i] || e[i] == 0) continue;
        Rat v = *vals[i];
        if (v == 0) throw std::runtime_error("Laurent: substituting zero");
        int k = e[i];
        Rat p(1);
        Rat base = k > 0 ? v : Rat(1) / v;
        for (int t = 0; t < std::abs(k); ++t) p *= base;
        coeff *= p;
        rest[i] = 0;
      }
      trim_exps(rest);
      r.add_term(rest, coeff);
    }
    return r;
  }

  Rat eval(const std::vector<Rat>& vals) const {
    std::vector<std::optional<Rat>> v(vals.begin(), vals.end());
    Laurent r = substitute(v);
    return r.constant_value();
  }

  int degree_in(std::size_t pos) const {
    int d = 0;
    bool first = true;
    for (const auto& [e, c] : terms) {
      int k = pos < e.size() ? e[pos] : 0;
      if (first || k > d) d = k;
      first = false;
    }
    return d;
  }

  int valuation_in(std::size_t pos) const {
    int d = 0;
    bool first = true;
    for (const auto& [e, c] : terms) {
      int k = pos < e.size() ? e[pos] : 0;
      if (first || k < d) d = k;
      first = false;
    }
    return d;
  }

  std::size_t num_vars() const {
    std::size_t n = 0;
    for (const auto& [e, c] : terms) n = std::max(n, e.size());
    return n;
  }

  std::string to_string(const std::vector<std::string>& names = {}) const;
};

namespace detail {

// lex-largest term (exponent vectors compared position-wise, missing = 0)
inline std::map<Exps, Rat>::const_reverse_iterator lead(const Laurent& p) {
  return p.terms.rbegin();
}

inline bool exps_divides(const Exps& a, const Exps& b) {
  // monomial x^a | x^b termwise (nonnegative regime)
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > (i < b.size() ? b[i] : 0)) return false;
  return true;
}

}  // namespace detail

// Exact division in the Laurent ring; nullopt when b does not divide a.
// Both are shifted to the polynomial regime by their per-variable valuations
// and long division w.r.t. lex order is run to a zero remainder.
inline std::optional<Laurent> try_div_exact(const Laurent& a, const Laurent& b) {
  if (b.is_zero()) throw std::runtime_error("Laurent: division by zero");
  if (a.is_zero()) return Laurent::zero();
  std::size_t nv = std::max(a.num_vars(), b.num_vars());
  Exps shift_a(nv, 0), shift_b(nv, 0);
  for (std::size_t i = 0; i < nv; ++i) {
    shift_a[i] = a.valuation_in(i);
    shift_b[i] = b.valuation_in(i);
  }
  auto shifted = [nv](const Laurent& p, const Exps& s) {
    Laurent r;
    for (const auto& [e, c] : p.terms) {
      Exps e2(nv, 0);
      for (std::size_t i = 0; i < nv; ++i) e2[i] = (i < e.size() ? e[i] : 0) - s[i];
      trim_exps(e2);
      r.terms.emplace(std::move(e2), c);
    }
    return r;
  };
  Laurent A = shifted(a, shift_a), B = shifted(b, shift_b);
  Laurent q;
  const auto lb = detail::lead(B);
  while (!A.is_zero()) {
    const auto la = detail::lead(A);
    if (!detail::exps_divides(lb->first, la->first)) return std::nullopt;
    Exps e = sub_exps(la->first, lb->first);
    Rat c = la->second / lb->second;
    Laurent t;
    t.terms.emplace(e, c);
    q += t;
    A -= t * B;
  }
  // restore the monomial shift
  Exps sh(nv, 0);
  for (std::size_t i = 0; i < nv; ++i) sh[i] = shift_a[i] - shift_b[i];
  trim_exps(sh);
  Laurent m;
  m.terms.emplace(sh, Rat(1));
  return q * m;
}

inline Laurent div_exact(const Laurent& a, const Laurent& b) {
  auto q = try_div_exact(a, b);
  if (!q) throw std::runtime_error("Laurent: inexact division");
  return *q;
}

// Quotient of Laurent polynomials; equality decided by cross-multiplication.
class LaurentFrac {
 public:
  Laurent num, den;

  LaurentFrac() : num(Laurent::zero()), den(Laurent::one()) {}
  LaurentFrac(Laurent n) : num(std::move(n)), den(Laurent::one()) {}
  LaurentFrac(Laurent n, Laurent d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw std::runtime_error("LaurentFrac: zero denominator");
    reduce();
  }

  void reduce() {
    if (num.is_zero()) {
      den = Laurent::one();
      return;
    }
    if (auto q = try_div_exact(num, den)) {
      num = *q;
      den = Laurent::one();
    }
  }

  bool is_zero() const { return num.is_zero(); }

  // requires a polynomial value; throws if the quotient is not exact
  Laurent as_laurent() const {
    if (den.is_one()) return num;
    return div_exact(num, den);
  }

  friend LaurentFrac operator+(const LaurentFrac& a, const LaurentFrac& b) {
    return LaurentFrac(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend LaurentFrac operator-(const LaurentFrac& a, const LaurentFrac& b) {
    return LaurentFrac(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend LaurentFrac operator*(const LaurentFrac& a, const LaurentFrac& b) {
    return LaurentFrac(a.num * b.num, a.den * b.den);
  }
  friend LaurentFrac operator/(const LaurentFrac& a, const LaurentFrac& b) {
    if (b.num.is_zero()) throw std::runtime_error("LaurentFrac: division by zero");
    return LaurentFrac(a.num * b.den, a.den * b.num);
  }

  bool operator==(const LaurentFrac& o) const {
    return num * o.den == o.num * den;
  }
  bool operator!=(const LaurentFrac& o) const { return !(*this == o); }
};

inline std::string rat_to_string(const Rat& c) {
  std::ostringstream os;
  os << c;
  return os.str();
}

inline std::string Laurent::to_string(const std::vector<std::string>& names) const {
  if (terms.empty()) return "0";
  auto var_name = [&names](std::size_t i) {
    if (i < names.size()) return names[i];
    return "x" + std::to_string(i);
  };
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms) {
    Rat a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += " ";
      mono += var_name(i);
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      os << rat_to_string(a);
    } else {
      if (a != 1) os << rat_to_string(a) << " ";
      os << mono;
    }
  }
  return os.str();
}

// parses "p", "-p", "p/q"
inline Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int n(s.substr(0, slash)), d(s.substr(slash + 1));
    if (d == 0) throw std::runtime_error("zero denominator");
    return Rat(n, d);
  } catch (const std::exception&) {
    throw std::runtime_error("cannot parse rational '" + s + "'");
  }
}

}  // namespace hecke
