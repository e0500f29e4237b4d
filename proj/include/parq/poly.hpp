#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "parq/arith.hpp"

namespace parq {

/// Sparse multivariate polynomial: exponent vector -> coefficient.
/// C is GaussRat for the exact phase of the solver and Complex after
/// numeric specialization. Polynomials combined by arithmetic must share the
/// same variable list; constants with an empty list are lifted on demand.
template <class C>
struct MultiPolyT {
  std::vector<std::string> vars;
  std::map<std::vector<unsigned>, C> terms;

  MultiPolyT() = default;
  MultiPolyT(long k) {
    if (k != 0) terms.emplace(std::vector<unsigned>{}, C(k));
  }

  static MultiPolyT constant(C value, std::vector<std::string> vs = {}) {
    MultiPolyT p;
    p.vars = std::move(vs);
    if (!poly_is_zero_coeff(value))
      p.terms.emplace(std::vector<unsigned>(p.vars.size(), 0), std::move(value));
    return p;
  }

  static MultiPolyT variable(std::size_t index, std::vector<std::string> vs) {
    if (index >= vs.size()) throw std::out_of_range("MultiPolyT::variable");
    MultiPolyT p;
    p.vars = std::move(vs);
    std::vector<unsigned> e(p.vars.size(), 0);
    e[index] = 1;
    p.terms.emplace(std::move(e), C(1));
    return p;
  }

  static bool poly_is_zero_coeff(const C& c) { return parq::is_zero(c); }

  bool is_zero() const { return terms.empty(); }
  bool is_constant() const {
    if (terms.empty()) return true;
    return terms.size() == 1 && total_degree(terms.begin()->first) == 0;
  }
  C constant_value() const {
    if (terms.empty()) return C(0);
    return terms.begin()->second;
  }

  static unsigned total_degree(const std::vector<unsigned>& e) {
    return std::accumulate(e.begin(), e.end(), 0u);
  }

  /// Variables with a positive exponent in some term.
  std::set<std::size_t> active_vars() const {
    std::set<std::size_t> out;
    for (const auto& [e, c] : terms)
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] > 0) out.insert(i);
    return out;
  }

  void prune() {
    for (auto it = terms.begin(); it != terms.end();)
      it = poly_is_zero_coeff(it->second) ? terms.erase(it) : std::next(it);
  }

 private:
  // Lift a raw constant (empty variable list) to the other operand's list.
  static void align(MultiPolyT& a, MultiPolyT& b) {
    if (a.vars == b.vars) return;
    if (a.vars.empty() && a.is_constant()) {
      a = constant(a.constant_value(), b.vars);
      return;
    }
    if (b.vars.empty() && b.is_constant()) {
      b = constant(b.constant_value(), a.vars);
      return;
    }
    throw std::invalid_argument("MultiPolyT: mixing different variable lists");
  }

 public:
  friend MultiPolyT operator+(MultiPolyT a, MultiPolyT b) {
    align(a, b);
    for (auto& [e, c] : b.terms) {
      auto [it, fresh] = a.terms.emplace(e, c);
      if (!fresh) it->second += c;
    }
    a.prune();
    return a;
  }
  friend MultiPolyT operator-(MultiPolyT a) {
    for (auto& [e, c] : a.terms) c = -c;
    return a;
  }
  friend MultiPolyT operator-(MultiPolyT a, MultiPolyT b) { return a + (-std::move(b)); }
  friend MultiPolyT operator*(MultiPolyT a, MultiPolyT b) {
    align(a, b);
    MultiPolyT out;
    out.vars = a.vars;
    for (const auto& [ea, ca] : a.terms)
      for (const auto& [eb, cb] : b.terms) {
        std::vector<unsigned> e(ea.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        C prod = ca * cb;
        auto [it, fresh] = out.terms.emplace(std::move(e), prod);
        if (!fresh) it->second += prod;
      }
    out.prune();
    return out;
  }
  MultiPolyT& operator+=(const MultiPolyT& b) { return *this = *this + b; }
  MultiPolyT& operator-=(const MultiPolyT& b) { return *this = *this - b; }
  MultiPolyT& operator*=(const MultiPolyT& b) { return *this = *this * b; }

  friend bool operator==(const MultiPolyT& a, const MultiPolyT& b) {
    if (a.vars != b.vars) {
      if (a.is_constant() && b.is_constant()) return a.constant_value() == b.constant_value();
      return false;
    }
    return a.terms == b.terms;
  }

  MultiPolyT scaled(const C& k) const {
    MultiPolyT out = *this;
    for (auto& [e, c] : out.terms) c = c * k;
    out.prune();
    return out;
  }

  /// Remove the monomial content: divide by the largest monomial dividing
  /// every term. Lossy only on solutions with a vanishing variable.
  MultiPolyT primitive_part() const {
    if (terms.empty()) return *this;
    std::vector<unsigned> mins(vars.size(), ~0u);
    for (const auto& [e, c] : terms)
      for (std::size_t i = 0; i < e.size(); ++i) mins[i] = std::min(mins[i], e[i]);
    MultiPolyT out;
    out.vars = vars;
    for (const auto& [e, c] : terms) {
      std::vector<unsigned> f(e.size());
      for (std::size_t i = 0; i < e.size(); ++i) f[i] = e[i] - mins[i];
      out.terms.emplace(std::move(f), c);
    }
    return out;
  }

  MultiPolyT derivative(std::size_t var) const {
    MultiPolyT out;
    out.vars = vars;
    for (const auto& [e, c] : terms) {
      if (e[var] == 0) continue;
      std::vector<unsigned> f = e;
      f[var] -= 1;
      out.terms.emplace(std::move(f), c * C(long(e[var])));
    }
    return out;
  }

  unsigned degree(std::size_t var) const {
    unsigned d = 0;
    for (const auto& [e, c] : terms) d = std::max(d, e[var]);
    return d;
  }

  /// Substitute vars[var] := value (a polynomial over the same list).
  MultiPolyT substituted(std::size_t var, const MultiPolyT& value) const {
    std::vector<MultiPolyT> powers{constant(C(1), vars)};
    MultiPolyT out;
    out.vars = vars;
    for (const auto& [e, c] : terms) {
      while (powers.size() <= e[var]) powers.push_back(powers.back() * value);
      std::vector<unsigned> f = e;
      f[var] = 0;
      MultiPolyT mono;
      mono.vars = vars;
      mono.terms.emplace(std::move(f), c);
      out += mono * powers[e[var]];
    }
    return out;
  }

  Complex eval(const std::vector<Complex>& point) const {
    Complex acc(0.0, 0.0);
    for (const auto& [e, c] : terms) {
      Complex t = to_complex(c);
      for (std::size_t i = 0; i < e.size(); ++i)
        for (unsigned k = 0; k < e[i]; ++k) t *= point[i];
      acc += t;
    }
    return acc;
  }

  /// Magnitude scale of the evaluation, for relative residuals.
  double eval_scale(const std::vector<Complex>& point) const {
    double acc = 0.0;
    for (const auto& [e, c] : terms) {
      double t = std::abs(to_complex(c));
      for (std::size_t i = 0; i < e.size(); ++i)
        for (unsigned k = 0; k < e[i]; ++k) t *= std::abs(point[i]);
      acc += t;
    }
    return acc;
  }

  /// Numeric specialization vars[var] := z.
  MultiPolyT<Complex> specialized(std::size_t var, Complex z) const {
    MultiPolyT<Complex> out;
    out.vars = vars;
    for (const auto& [e, c] : terms) {
      Complex t = to_complex(c);
      for (unsigned k = 0; k < e[var]; ++k) t *= z;
      std::vector<unsigned> f = e;
      f[var] = 0;
      auto [it, fresh] = out.terms.emplace(std::move(f), t);
      if (!fresh) it->second += t;
    }
    out.prune();
    return out;
  }

  /// If the polynomial involves only vars[var], dense coefficients by degree.
  std::optional<std::vector<Complex>> univariate_coeffs(std::size_t var) const {
    auto act = active_vars();
    act.erase(var);
    if (!act.empty()) return std::nullopt;
    std::vector<Complex> cs(degree(var) + 1, Complex(0.0));
    for (const auto& [e, c] : terms) cs[e[var]] += to_complex(c);
    return cs;
  }

  /// Leading coefficient under graded lex (used to compare up to a unit).
  const C& leading_coeff() const {
    if (terms.empty()) throw std::domain_error("leading_coeff of zero");
    const std::pair<const std::vector<unsigned>, C>* best = nullptr;
    for (const auto& t : terms) {
      if (!best) { best = &t; continue; }
      unsigned da = total_degree(t.first), db = total_degree(best->first);
      if (da > db || (da == db && t.first > best->first)) best = &t;
    }
    return best->second;
  }

  std::string str() const {
    if (terms.empty()) return "0";
    // graded-lex descending for readability
    std::vector<const std::pair<const std::vector<unsigned>, C>*> order;
    for (const auto& t : terms) order.push_back(&t);
    std::sort(order.begin(), order.end(), [](auto* p, auto* q) {
      unsigned dp = total_degree(p->first), dq = total_degree(q->first);
      if (dp != dq) return dp > dq;
      return p->first > q->first;
    });
    std::ostringstream os;
    bool first = true;
    for (auto* t : order) {
      if (!first) os << " + ";
      first = false;
      os << "(" << coeff_str(t->second) << ")";
      for (std::size_t i = 0; i < t->first.size(); ++i) {
        if (t->first[i] == 0) continue;
        os << "*" << vars[i];
        if (t->first[i] > 1) os << "^" << t->first[i];
      }
    }
    return os.str();
  }

 private:
  static std::string coeff_str(const GaussRat& c) { return c.str(); }
  static std::string coeff_str(const Complex& c) {
    std::ostringstream os;
    os << c.real() << (c.imag() < 0 ? "" : "+") << c.imag() << "i";
    return os.str();
  }
};

using MultiPoly = MultiPolyT<GaussRat>;
using NumPoly = MultiPolyT<Complex>;

inline NumPoly to_numeric(const MultiPoly& p) {
  NumPoly out;
  out.vars = p.vars;
  for (const auto& [e, c] : p.terms) out.terms.emplace(e, c.to_complex());
  out.prune();
  return out;
}

/// p and q equal up to a nonzero constant factor.
template <class C>
bool proportional(const MultiPolyT<C>& p, const MultiPolyT<C>& q) {
  if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
  if (p.terms.size() != q.terms.size()) return false;
  C k = p.leading_coeff() / q.leading_coeff();
  return p == q.scaled(k);
}

template <class C>
MultiPolyT<C> det2x2(const MultiPolyT<C>& a, const MultiPolyT<C>& b,
                     const MultiPolyT<C>& c, const MultiPolyT<C>& d) {
  return a * d - b * c;
}

}  // namespace parq
