#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "crjet/error.hpp"
#include "crjet/gaussian.hpp"

namespace crjet {

/// Variable set of a quadric with CR dimension n and codimension k.
///
/// Slots are laid out as z_1..z_n, zb_1..zb_n, w_1..w_k, wb_1..wb_k, u_1..u_k,
/// which is also the variable order used by the monomial order.
struct Variables {
  std::size_t n = 0;
  std::size_t k = 0;

  std::size_t count() const { return 2 * n + 3 * k; }
  std::size_t z(std::size_t a) const { return a; }
  std::size_t zbar(std::size_t a) const { return n + a; }
  std::size_t w(std::size_t j) const { return 2 * n + j; }
  std::size_t wbar(std::size_t j) const { return 2 * n + k + j; }
  std::size_t u(std::size_t j) const { return 2 * n + 2 * k + j; }

  bool is_holomorphic(std::size_t slot) const { return slot < n || (slot >= 2 * n && slot < 2 * n + k); }

  /// Slot of the formal conjugate variable; u is real.
  std::size_t conjugate(std::size_t slot) const {
    if (slot < n) return slot + n;
    if (slot < 2 * n) return slot - n;
    if (slot < 2 * n + k) return slot + k;
    if (slot < 2 * n + 2 * k) return slot - k;
    return slot;
  }

  std::string name(std::size_t slot) const {
    if (slot < n) return "z" + std::to_string(slot + 1);
    if (slot < 2 * n) return "zb" + std::to_string(slot - n + 1);
    if (slot < 2 * n + k) return "w" + std::to_string(slot - 2 * n + 1);
    if (slot < 2 * n + 2 * k) return "wb" + std::to_string(slot - 2 * n - k + 1);
    return "u" + std::to_string(slot - 2 * n - 2 * k + 1);
  }

  friend bool operator==(const Variables&, const Variables&) = default;
};

using Exponent = std::vector<std::int32_t>;

/// Graded lexicographic order: total degree first, then exponents compared
/// slot by slot.
struct GradedLex {
  bool operator()(const Exponent& a, const Exponent& b) const {
    const auto da = std::accumulate(a.begin(), a.end(), std::int64_t{0});
    const auto db = std::accumulate(b.begin(), b.end(), std::int64_t{0});
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

/// Sparse multivariate polynomial over Q(i). Zero coefficients are never stored.
class Poly {
 public:
  using Terms = std::map<Exponent, GaussianRational, GradedLex>;

  Poly() = default;
  explicit Poly(Variables vars) : vars_(vars) {}

  static Poly constant(Variables vars, const GaussianRational& c) {
    Poly p(vars);
    p.add_term(Exponent(vars.count(), 0), c);
    return p;
  }

  static Poly variable(Variables vars, std::size_t slot) {
    Exponent e(vars.count(), 0);
    e.at(slot) = 1;
    Poly p(vars);
    p.add_term(std::move(e), GaussianRational(1));
    return p;
  }

  static Poly monomial(Variables vars, Exponent e, const GaussianRational& c) {
    if (e.size() != vars.count()) throw DimensionError("exponent length mismatch");
    Poly p(vars);
    p.add_term(std::move(e), c);
    return p;
  }

  const Variables& vars() const { return vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(Exponent e, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  GaussianRational coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? GaussianRational() : it->second;
  }

  Poly& operator+=(const Poly& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  Poly& operator*=(const GaussianRational& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) { return a *= GaussianRational(-1); }
  friend Poly operator*(Poly a, const GaussianRational& s) { return a *= s; }
  friend Poly operator*(const GaussianRational& s, Poly a) { return a *= s; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check(b);
    Poly out(a.vars_);
    Exponent e(a.vars_.count());
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    return out;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  /// Multiplies by a single variable.
  Poly times_variable(std::size_t slot) const {
    Poly out(vars_);
    for (const auto& [e, c] : terms_) {
      Exponent f = e;
      ++f.at(slot);
      out.terms_.emplace_hint(out.terms_.end(), std::move(f), c);
    }
    return out;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.vars_ == b.vars_ && a.terms_ == b.terms_; }

  Poly derivative(std::size_t slot) const {
    Poly out(vars_);
    for (const auto& [e, c] : terms_) {
      if (e.at(slot) == 0) continue;
      Exponent f = e;
      const std::int32_t power = f[slot]--;
      out.add_term(std::move(f), c * GaussianRational(Rational(power)));
    }
    return out;
  }

  /// Conjugates coefficients and swaps z<->zb, w<->wb; u is fixed.
  Poly conjugate() const {
    Poly out(vars_);
    for (const auto& [e, c] : terms_) {
      Exponent f(e.size());
      for (std::size_t s = 0; s < e.size(); ++s) f[vars_.conjugate(s)] = e[s];
      out.add_term(std::move(f), c.conj());
    }
    return out;
  }

  /// Real part (p + conj p) / 2.
  Poly real_part() const { return (*this + conjugate()) * GaussianRational(Rational(1, 2)); }

  Poly pow(unsigned e) const {
    Poly out = constant(vars_, GaussianRational(1));
    for (unsigned i = 0; i < e; ++i) out *= *this;
    return out;
  }

  /// Replaces every occurrence of the variable in `slot` by `q`.
  Poly substitute(std::size_t slot, const Poly& q) const {
    check(q);
    std::vector<Poly> powers{constant(vars_, GaussianRational(1))};
    Poly out(vars_);
    for (const auto& [e, c] : terms_) {
      const auto power = static_cast<std::size_t>(e.at(slot));
      while (powers.size() <= power) powers.push_back(powers.back() * q);
      Exponent rest = e;
      rest[slot] = 0;
      if (power == 0) {
        out.add_term(std::move(rest), c);
        continue;
      }
      for (const auto& [eq, cq] : powers[power].terms_) {
        Exponent f = rest;
        for (std::size_t i = 0; i < f.size(); ++i) f[i] += eq[i];
        out.add_term(std::move(f), c * cq);
      }
    }
    return out;
  }

  /// Exact evaluation at a point given for every slot.
  GaussianRational evaluate(std::span<const GaussianRational> point) const {
    if (point.size() != vars_.count()) throw DimensionError("evaluation point size mismatch");
    GaussianRational sum;
    for (const auto& [e, c] : terms_) {
      GaussianRational t = c;
      for (std::size_t s = 0; s < e.size(); ++s)
        for (std::int32_t p = 0; p < e[s]; ++p) t *= point[s];
      sum += t;
    }
    return sum;
  }

  /// True iff every monomial only involves slots accepted by `allowed`.
  template <class Pred>
  bool only_uses(Pred allowed) const {
    for (const auto& [e, c] : terms_)
      for (std::size_t s = 0; s < e.size(); ++s)
        if (e[s] != 0 && !allowed(s)) return false;
    return true;
  }

  bool is_holomorphic() const {
    return only_uses([this](std::size_t s) { return vars_.is_holomorphic(s); });
  }

  /// Canonical text: terms in monomial order joined by " + ".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += c.str();
      for (std::size_t s = 0; s < e.size(); ++s) {
        if (e[s] == 0) continue;
        out += "*" + vars_.name(s);
        if (e[s] > 1) out += "^" + std::to_string(e[s]);
      }
    }
    return out;
  }

 private:
  void check(const Poly& o) const {
    if (!(vars_ == o.vars_)) throw DimensionError("polynomials over different variable sets");
  }

  Variables vars_;
  Terms terms_;
};

/// Ordinary total degree of an exponent.
inline std::int64_t total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), std::int64_t{0}); }

}  // namespace crjet
