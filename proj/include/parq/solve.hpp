#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "parq/diagram.hpp"
#include "parq/parabolic.hpp"
#include "parq/poly.hpp"
#include "parq/presentation.hpp"
#include "parq/representation.hpp"
#include "parq/roots.hpp"

namespace parq {

struct TooFewGenerators : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Gauge-fixed polynomial systems for parabolic colorings.
//
// Relations realize in Par through conjugation acting on the left:
// x * y maps to P(y) P(x) P(y)^-1, i.e. vectors transform by v -> P(y) v
// (par_op_inv) for * and v -> P(y)^-1 v (par_op) for *^-1. This matches the
// Wirtinger relator orientation (u+1) = o u o^-1, so the matrices of every
// coloring satisfy the link group relators; on the Borromean presentation it
// reproduces the known six-equation system verbatim.

struct GaugePin {
  enum Kind { UnitX, Param, Free } kind = UnitX;  // [1,0], [0,t], [x_i,y_i]
  std::size_t generator = 0;   // index into the presentation
  std::size_t xvar = 0, yvar = 0;  // variable indices (Param uses yvar = t)
};

struct ConstraintSystem {
  std::vector<std::string> vars;
  std::vector<MultiPoly> polynomials;  // two per relation, monomial content removed
  std::vector<int> sign_branch;        // ±1 per relation
  std::vector<GaugePin> pins;          // gauge record, one per generator
};

namespace detail {

inline ParVec<MultiPoly> eval_par_symbolic(const QuandleWord& w,
                                           const std::vector<ParVec<MultiPoly>>& asg) {
  if (w.is_leaf()) return asg[w.gen()];
  ParVec<MultiPoly> l = eval_par_symbolic(w.left(), asg);
  ParVec<MultiPoly> r = eval_par_symbolic(w.right(), asg);
  return w.exp() == 1 ? par_op_inv(l, r) : par_op(l, r);
}

inline ParC eval_par_numeric(const QuandleWord& w, const std::vector<ParC>& asg) {
  if (w.is_leaf()) return asg[w.gen()];
  ParC l = eval_par_numeric(w.left(), asg);
  ParC r = eval_par_numeric(w.right(), asg);
  return w.exp() == 1 ? par_op_inv(l, r) : par_op(l, r);
}

/// Rewrite L ~ R as g ~ W by peeling the outer operations off L.
inline std::pair<std::size_t, QuandleWord> peel_to_generator(QuandleWord L, QuandleWord R) {
  while (!L.is_leaf()) {
    R = QuandleWord::op(R, L.right(), -L.exp());
    L = L.left();
  }
  return {L.gen(), R};
}

}  // namespace detail

/// One constraint system per sign vector: relation i contributes the two
/// coordinate equations of  eval(W_i) - sigma_i * gauge(g_i) = 0.
inline std::vector<ConstraintSystem> build_systems(const QuandlePresentation& p,
                                                   std::size_t pin_first = 0,
                                                   std::size_t pin_second = 1,
                                                   std::size_t max_branches = 1024) {
  std::size_t n = p.generator_names.size();
  if (n < 2) throw TooFewGenerators("gauge fixing needs at least two generators");
  if (pin_first >= n || pin_second >= n || pin_first == pin_second)
    throw std::invalid_argument("build_systems: bad pinned generator pair");
  std::size_t k = p.relations.size();
  if (k >= 63 || (std::size_t(1) << k) > max_branches)
    throw std::invalid_argument("build_systems: too many sign branches (see --max-branches)");

  std::vector<std::string> vars{"t"};
  std::vector<GaugePin> pins(n);
  std::size_t free_count = 0;
  for (std::size_t g = 0; g < n; ++g) {
    if (g == pin_first) {
      pins[g] = {GaugePin::UnitX, g, 0, 0};
    } else if (g == pin_second) {
      pins[g] = {GaugePin::Param, g, 0, 0};
    } else {
      std::string suffix = free_count == 0 ? "" : std::to_string(free_count + 1);
      pins[g].kind = GaugePin::Free;
      pins[g].generator = g;
      pins[g].xvar = vars.size();
      vars.push_back("x" + suffix);
      pins[g].yvar = vars.size();
      vars.push_back("y" + suffix);
      ++free_count;
    }
  }

  std::vector<ParVec<MultiPoly>> asg(n);
  auto cst = [&](long v) { return MultiPoly::constant(GaussRat(v), vars); };
  for (std::size_t g = 0; g < n; ++g) {
    switch (pins[g].kind) {
      case GaugePin::UnitX:
        asg[g] = {cst(1), cst(0)};
        break;
      case GaugePin::Param:
        asg[g] = {cst(0), MultiPoly::variable(0, vars)};
        break;
      case GaugePin::Free:
        asg[g] = {MultiPoly::variable(pins[g].xvar, vars),
                  MultiPoly::variable(pins[g].yvar, vars)};
        break;
    }
  }

  // per relation: (gauge of g, value of W), independent of the branch sign
  std::vector<std::array<MultiPoly, 4>> parts;  // Wx, Wy, Gx, Gy
  for (const auto& rel : p.relations) {
    auto [g, W] = detail::peel_to_generator(rel.lhs, rel.rhs);
    ParVec<MultiPoly> w = detail::eval_par_symbolic(W, asg);
    parts.push_back({w.x, w.y, asg[g].x, asg[g].y});
  }

  std::vector<ConstraintSystem> systems;
  for (std::size_t mask = 0; mask < (std::size_t(1) << k); ++mask) {
    ConstraintSystem sys;
    sys.vars = vars;
    sys.pins = pins;
    for (std::size_t i = 0; i < k; ++i) {
      int sigma = (mask >> i) & 1 ? -1 : 1;
      sys.sign_branch.push_back(sigma);
      const auto& [wx, wy, gx, gy] = parts[i];
      MultiPoly sx = wx - gx.scaled(GaussRat(sigma));
      MultiPoly sy = wy - gy.scaled(GaussRat(sigma));
      sys.polynomials.push_back(sx.primitive_part());
      sys.polynomials.push_back(sy.primitive_part());
    }
    systems.push_back(std::move(sys));
  }
  return systems;
}

// ---------------------------------------------------------------------------
// Polynomial system solving.

struct SolveOptions {
  double eps_res = 1e-12;       // relative residual accepted for a solution
  double cluster_radius = 1e-8; // closer solutions merge (with a note)
  double zero_pin = 1e-8;       // a gauge vector below this is degenerate
  int newton_starts = 64;
  double polydisc_radius = 4.0;
  unsigned seed = 1;
  std::size_t max_vars = 8;
  std::size_t max_isolated = 64;  // more distinct points: positive-dimensional
};

enum class SolveStatus { Ok, Stalled, PositiveDimensional };

struct SolveOutcome {
  SolveStatus status = SolveStatus::Ok;
  std::vector<std::vector<Complex>> solutions;  // over the system's vars
  std::vector<double> residuals;
  std::vector<std::string> notes;
};

namespace detail {

inline MultiPoly with_vars(const MultiPoly& p, const std::vector<std::string>& vars) {
  MultiPoly out;
  out.vars = vars;
  for (const auto& [e, c] : p.terms) {
    std::vector<unsigned> f = e;
    f.resize(vars.size(), 0);
    out.terms.emplace(std::move(f), c);
  }
  return out;
}

struct SubstRecord {
  enum Kind { Exact, Pair } kind = Exact;
  // Exact: vars[var] := value
  std::size_t var = 0;
  MultiPoly value;
  // Pair: (u,v) := s * kernel of (A1 u + B1 v, A2 u + B2 v)
  std::size_t uvar = 0, vvar = 0, svar = 0;
  MultiPoly A1, B1, A2, B2;
};

inline double rel_residual(const std::vector<MultiPoly>& polys, const std::vector<Complex>& pt) {
  double worst = 0.0;
  for (const auto& p : polys) {
    double denom = std::max(1.0, p.eval_scale(pt));
    worst = std::max(worst, std::abs(p.eval(pt)) / denom);
  }
  return worst;
}

/// Damped Gauss-Newton on the full system; returns the refined point.
inline std::vector<Complex> gauss_newton(const std::vector<MultiPoly>& polys,
                                         const std::vector<std::vector<MultiPoly>>& jac,
                                         std::vector<Complex> pt, int iters, double tol) {
  std::size_t nv = pt.size(), m = polys.size();
  for (int it = 0; it < iters; ++it) {
    double res = rel_residual(polys, pt);
    if (res <= tol) break;
    std::vector<Complex> r(m);
    for (std::size_t i = 0; i < m; ++i) r[i] = polys[i].eval(pt);
    // normal equations H d = g with H = J^H J, g = J^H r
    std::vector<std::vector<Complex>> J(m, std::vector<Complex>(nv));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < nv; ++j) J[i][j] = jac[i][j].eval(pt);
    std::vector<std::vector<Complex>> H(nv, std::vector<Complex>(nv, Complex(0)));
    std::vector<Complex> g(nv, Complex(0));
    for (std::size_t a = 0; a < nv; ++a) {
      for (std::size_t b = 0; b < nv; ++b)
        for (std::size_t i = 0; i < m; ++i) H[a][b] += std::conj(J[i][a]) * J[i][b];
      for (std::size_t i = 0; i < m; ++i) g[a] += std::conj(J[i][a]) * r[i];
    }
    double ridge = 0.0;
    for (std::size_t a = 0; a < nv; ++a) ridge = std::max(ridge, std::abs(H[a][a]));
    ridge = ridge * 1e-14 + 1e-300;
    for (std::size_t a = 0; a < nv; ++a) H[a][a] += ridge;
    // gaussian elimination with partial pivoting
    std::vector<Complex> d = g;
    for (std::size_t col = 0; col < nv; ++col) {
      std::size_t piv = col;
      for (std::size_t rr = col + 1; rr < nv; ++rr)
        if (std::abs(H[rr][col]) > std::abs(H[piv][col])) piv = rr;
      std::swap(H[col], H[piv]);
      std::swap(d[col], d[piv]);
      if (std::abs(H[col][col]) == 0.0) return pt;
      for (std::size_t rr = col + 1; rr < nv; ++rr) {
        Complex f = H[rr][col] / H[col][col];
        for (std::size_t cc = col; cc < nv; ++cc) H[rr][cc] -= f * H[col][cc];
        d[rr] -= f * d[col];
      }
    }
    for (std::size_t col = nv; col-- > 0;) {
      for (std::size_t cc = col + 1; cc < nv; ++cc) d[col] -= H[col][cc] * d[cc];
      d[col] = d[col] / H[col][col];
    }
    // damping
    double step = 1.0;
    std::vector<Complex> trial(nv);
    bool improved = false;
    for (int half = 0; half < 12; ++half) {
      for (std::size_t j = 0; j < nv; ++j) trial[j] = pt[j] - step * d[j];
      if (rel_residual(polys, trial) < res) {
        improved = true;
        break;
      }
      step *= 0.5;
    }
    if (!improved) break;
    pt = trial;
  }
  return pt;
}

}  // namespace detail

/// Isolated solutions of one gauge-fixed system.
///
/// Strategy: (1) exact substitution of variables with constant linear
/// coefficient; (2) exact elimination of a gauge vector pair on which two
/// equations are linear and homogeneous (determinant equation replaces the
/// pair; the Borromean systems hit this with determinant 4 + t^4); (3)
/// univariate specialization cascade using the simultaneous-iteration root
/// finder; (4) multistart damped Gauss-Newton fallback; every candidate is
/// refined on the full system and filtered by relative residual.
inline SolveOutcome solve_system(const ConstraintSystem& sys, const SolveOptions& opt = {}) {
  SolveOutcome out;
  if (sys.vars.size() > opt.max_vars)
    throw std::invalid_argument("solve_system: more variables than max_vars");

  std::vector<std::string> vars = sys.vars;  // grows with auxiliary kernel vars
  std::vector<MultiPoly> work;
  for (const auto& p : sys.polynomials) {
    if (p.is_zero()) continue;
    if (p.is_constant()) {  // nonzero constant: branch infeasible
      out.notes.push_back("constant equation " + p.str() + " != 0: empty branch");
      return out;
    }
    work.push_back(p);
  }
  if (work.empty()) {
    if (sys.vars.empty()) {
      out.solutions.push_back({});
      out.residuals.push_back(0.0);
    } else {
      out.status = SolveStatus::PositiveDimensional;
      out.notes.push_back("no constraints on a nonempty variable set");
    }
    return out;
  }

  std::vector<detail::SubstRecord> records;
  std::set<std::size_t> eliminated;

  auto resize_all = [&](const std::vector<std::string>& vs) {
    for (auto& p : work) p = detail::with_vars(p, vs);
  };

  // -- exact phase -----------------------------------------------------------
  bool progress = true;
  while (progress) {
    progress = false;

    // (1) constant-coefficient linear substitution
    for (std::size_t i = 0; i < work.size() && !progress; ++i) {
      const MultiPoly& p = work[i];
      for (std::size_t v = 0; v < vars.size() && !progress; ++v) {
        if (eliminated.count(v) || p.degree(v) != 1) continue;
        MultiPoly coeff, rest;
        coeff.vars = rest.vars = vars;
        for (const auto& [e, c] : p.terms) {
          std::vector<unsigned> f = e;
          if (e[v] == 1) {
            f[v] = 0;
            coeff.terms.emplace(std::move(f), c);
          } else {
            rest.terms.emplace(std::move(f), c);
          }
        }
        if (!coeff.is_constant() || coeff.is_zero()) continue;
        GaussRat inv = GaussRat(-1) / coeff.constant_value();
        detail::SubstRecord rec;
        rec.kind = detail::SubstRecord::Exact;
        rec.var = v;
        rec.value = rest.scaled(inv);
        work.erase(work.begin() + long(i));
        for (auto& q : work) q = q.substituted(v, rec.value);
        for (auto& q : work) q = q.primitive_part();
        records.push_back(std::move(rec));
        eliminated.insert(v);
        progress = true;
      }
    }
    if (progress) continue;

    // (2) homogeneous linear pair on a free gauge vector
    for (const auto& pin : sys.pins) {
      if (pin.kind != GaugePin::Free || progress) continue;
      std::size_t u = pin.xvar, v = pin.yvar;
      if (eliminated.count(u) || eliminated.count(v)) continue;
      auto linear_homog = [&](const MultiPoly& p) {
        if (p.is_zero()) return false;
        for (const auto& [e, c] : p.terms)
          if (e[u] + e[v] != 1) return false;
        return true;
      };
      auto coeff_of = [&](const MultiPoly& p, std::size_t var) {
        MultiPoly out2;
        out2.vars = vars;
        for (const auto& [e, c] : p.terms)
          if (e[var] == 1) {
            std::vector<unsigned> f = e;
            f[var] = 0;
            out2.terms.emplace(std::move(f), c);
          }
        return out2;
      };
      std::vector<std::size_t> lin;
      for (std::size_t i = 0; i < work.size(); ++i)
        if (linear_homog(work[i])) lin.push_back(i);
      if (lin.size() < 2) continue;
      std::size_t i = lin[0], j = lin[1];
      detail::SubstRecord rec;
      rec.kind = detail::SubstRecord::Pair;
      rec.uvar = u;
      rec.vvar = v;
      rec.A1 = coeff_of(work[i], u);
      rec.B1 = coeff_of(work[i], v);
      rec.A2 = coeff_of(work[j], u);
      rec.B2 = coeff_of(work[j], v);
      MultiPoly det = det2x2(rec.A1, rec.B1, rec.A2, rec.B2);
      if (det.is_constant() && !det.is_zero()) {
        out.notes.push_back("gauge pair (" + vars[u] + "," + vars[v] +
                            ") forced to zero by unit determinant: empty branch");
        return out;
      }
      if (det.is_zero()) continue;  // dependent pair; leave to the fallback
      rec.svar = vars.size();
      vars.push_back("s" + (records.empty() ? std::string() : std::to_string(records.size())));
      resize_all(vars);
      MultiPoly su = detail::with_vars(rec.B1, vars) * MultiPoly::variable(rec.svar, vars);
      MultiPoly sv = detail::with_vars(rec.A1, vars).scaled(GaussRat(-1)) *
                     MultiPoly::variable(rec.svar, vars);
      std::vector<MultiPoly> next;
      for (std::size_t kk = 0; kk < work.size(); ++kk) {
        if (kk == i || kk == j) continue;
        next.push_back(work[kk].substituted(u, su).substituted(v, sv).primitive_part());
      }
      next.push_back(detail::with_vars(det.primitive_part(), vars));
      work = std::move(next);
      eliminated.insert(u);
      eliminated.insert(v);
      records.push_back(std::move(rec));
      progress = true;
    }
  }

  // -- numeric phase ---------------------------------------------------------
  std::vector<NumPoly> numeric;
  for (const auto& p : work) numeric.push_back(to_numeric(p));

  std::vector<std::map<std::size_t, Complex>> partials;
  bool positive_dim = false;
  bool stalled = false;

  std::mt19937 rng(opt.seed);
  std::uniform_real_distribution<double> unif(-opt.polydisc_radius, opt.polydisc_radius);

  std::function<void(std::vector<NumPoly>, std::map<std::size_t, Complex>)> cascade =
      [&](std::vector<NumPoly> polys, std::map<std::size_t, Complex> fixed) {
        // clean: drop numerically-zero polys, stop on clearly-nonzero constants
        std::vector<NumPoly> live;
        for (auto& p : polys) {
          double scale = 0.0;
          for (auto& [e, c] : p.terms) scale = std::max(scale, std::abs(c));
          if (scale < 1e-13) continue;
          if (p.is_constant()) {
            if (std::abs(p.constant_value()) > 1e-9) return;  // dead branch
            continue;
          }
          live.push_back(p);
        }
        std::set<std::size_t> active;
        for (const auto& p : live)
          for (auto v : p.active_vars()) active.insert(v);
        if (live.empty()) {
          bool all_fixed = true;
          for (std::size_t v = 0; v < vars.size(); ++v)
            if (!eliminated.count(v) && !fixed.count(v)) all_fixed = false;
          if (all_fixed)
            partials.push_back(fixed);
          else
            positive_dim = true;
          return;
        }
        // prefer the lowest-degree univariate equation
        std::optional<std::size_t> pick;
        std::size_t pick_var = 0;
        for (std::size_t i = 0; i < live.size(); ++i) {
          auto act = live[i].active_vars();
          if (act.size() != 1) continue;
          std::size_t v = *act.begin();
          if (!pick || live[i].degree(v) < live[*pick].degree(pick_var)) {
            pick = i;
            pick_var = v;
          }
        }
        if (pick) {
          auto coeffs = live[*pick].univariate_coeffs(pick_var);
          auto roots = aberth_roots(*coeffs);
          if (roots.empty()) return;  // no finite roots: dead branch
          // dedup near-identical roots to avoid exploding on multiplicities
          std::vector<Complex> uniq;
          for (auto r : roots) {
            bool dup = false;
            for (auto u2 : uniq) dup = dup || std::abs(r - u2) < 1e-10 * std::max(1.0, std::abs(r));
            if (!dup) uniq.push_back(r);
          }
          for (auto r : uniq) {
            std::vector<NumPoly> rest;
            for (std::size_t i = 0; i < live.size(); ++i) {
              if (i == *pick) continue;
              rest.push_back(live[i].specialized(pick_var, r));
            }
            auto f2 = fixed;
            f2[pick_var] = r;
            cascade(std::move(rest), std::move(f2));
          }
          return;
        }
        // multistart fallback on the remaining multivariate block; candidates
        // get refined on the full system afterwards
        std::vector<std::size_t> act(active.begin(), active.end());
        std::vector<std::vector<Complex>> found;
        for (int s = 0; s < opt.newton_starts; ++s) {
          std::map<std::size_t, Complex> point = fixed;
          for (auto v : act) point[v] = Complex(unif(rng), unif(rng));
          // damped Newton on the numeric block via finite re-evaluation
          for (int it = 0; it < 80; ++it) {
            // residual and numeric Jacobian
            std::vector<Complex> pt(vars.size(), Complex(0));
            for (auto& [v, z] : point) pt[v] = z;
            std::size_t mm = live.size(), nn = act.size();
            std::vector<Complex> rvec(mm);
            double rnorm = 0.0;
            for (std::size_t i2 = 0; i2 < mm; ++i2) {
              rvec[i2] = live[i2].eval(pt);
              rnorm = std::max(rnorm, std::abs(rvec[i2]));
            }
            if (rnorm < 1e-11) break;
            std::vector<std::vector<Complex>> J(mm, std::vector<Complex>(nn));
            const double h = 1e-7;
            for (std::size_t j2 = 0; j2 < nn; ++j2) {
              auto ph = pt;
              ph[act[j2]] += h;
              for (std::size_t i2 = 0; i2 < mm; ++i2)
                J[i2][j2] = (live[i2].eval(ph) - rvec[i2]) / h;
            }
            // least-squares step via normal equations
            std::vector<std::vector<Complex>> H(nn, std::vector<Complex>(nn, Complex(0)));
            std::vector<Complex> g(nn, Complex(0));
            for (std::size_t a = 0; a < nn; ++a) {
              for (std::size_t b = 0; b < nn; ++b)
                for (std::size_t i2 = 0; i2 < mm; ++i2)
                  H[a][b] += std::conj(J[i2][a]) * J[i2][b];
              for (std::size_t i2 = 0; i2 < mm; ++i2) g[a] += std::conj(J[i2][a]) * rvec[i2];
            }
            for (std::size_t a = 0; a < nn; ++a) H[a][a] += 1e-12;
            // solve H d = g
            std::vector<Complex> d = g;
            bool ok = true;
            for (std::size_t col = 0; col < nn && ok; ++col) {
              std::size_t piv = col;
              for (std::size_t rr = col + 1; rr < nn; ++rr)
                if (std::abs(H[rr][col]) > std::abs(H[piv][col])) piv = rr;
              std::swap(H[col], H[piv]);
              std::swap(d[col], d[piv]);
              if (std::abs(H[col][col]) == 0.0) {
                ok = false;
                break;
              }
              for (std::size_t rr = col + 1; rr < nn; ++rr) {
                Complex f = H[rr][col] / H[col][col];
                for (std::size_t cc = col; cc < nn; ++cc) H[rr][cc] -= f * H[col][cc];
                d[rr] -= f * d[col];
              }
            }
            if (!ok) break;
            for (std::size_t col = nn; col-- > 0;) {
              for (std::size_t cc = col + 1; cc < nn; ++cc) d[col] -= H[col][cc] * d[cc];
              d[col] = d[col] / H[col][col];
            }
            for (std::size_t j2 = 0; j2 < nn; ++j2) point[act[j2]] -= d[j2];
          }
          std::vector<Complex> pt(vars.size(), Complex(0));
          for (auto& [v, z] : point) pt[v] = z;
          double rnorm = 0.0;
          for (const auto& p : live) rnorm = std::max(rnorm, std::abs(p.eval(pt)));
          if (rnorm < 1e-9) {
            std::vector<Complex> key;
            for (auto v : act) key.push_back(point.at(v));
            bool dup = false;
            for (const auto& f3 : found) {
              double dist = 0.0;
              for (std::size_t q = 0; q < key.size(); ++q)
                dist = std::max(dist, std::abs(f3[q] - key[q]));
              dup = dup || dist < 1e-7;
            }
            if (!dup) {
              found.push_back(key);
              partials.push_back(point);
            }
          }
        }
        if (found.empty()) stalled = true;
        if (found.size() > opt.max_isolated) positive_dim = true;
      };

  cascade(numeric, {});

  if (positive_dim) out.status = SolveStatus::PositiveDimensional;

  // -- back substitution, refinement, filtering ------------------------------
  std::vector<std::vector<MultiPoly>> jac;
  std::vector<MultiPoly> base;  // original system, extended to the final vars
  for (const auto& p : sys.polynomials) base.push_back(detail::with_vars(p, vars));
  for (const auto& p : base) {
    std::vector<MultiPoly> row;
    for (std::size_t v = 0; v < sys.vars.size(); ++v) row.push_back(p.derivative(v));
    for (std::size_t v = sys.vars.size(); v < vars.size(); ++v)
      row.push_back(MultiPoly::constant(GaussRat(0), vars));
    jac.push_back(std::move(row));
  }

  std::vector<std::vector<Complex>> accepted;
  std::vector<double> acc_res;
  for (const auto& fixed : partials) {
    std::vector<Complex> pt(vars.size(), Complex(0));
    std::vector<bool> have(vars.size(), false);
    for (const auto& [v, z] : fixed) {
      pt[v] = z;
      have[v] = true;
    }
    for (auto it = records.rbegin(); it != records.rend(); ++it) {
      if (it->kind == detail::SubstRecord::Exact) {
        pt[it->var] = detail::with_vars(it->value, vars).eval(pt);
        have[it->var] = true;
      } else {
        Complex s = pt[it->svar];
        Complex a1 = detail::with_vars(it->A1, vars).eval(pt);
        Complex b1 = detail::with_vars(it->B1, vars).eval(pt);
        if (std::max(std::abs(a1), std::abs(b1)) < 1e-12) {
          a1 = detail::with_vars(it->A2, vars).eval(pt);
          b1 = detail::with_vars(it->B2, vars).eval(pt);
        }
        pt[it->uvar] = b1 * s;
        pt[it->vvar] = -a1 * s;
        have[it->uvar] = have[it->vvar] = true;
      }
    }
    pt = detail::gauss_newton(base, jac, pt, 40, opt.eps_res);
    double res = detail::rel_residual(base, pt);
    if (res > opt.eps_res) continue;
    // degenerate gauge values are not colorings
    bool valid = true;
    for (const auto& pin : sys.pins) {
      if (pin.kind == GaugePin::Param && std::abs(pt[0]) < opt.zero_pin) valid = false;
      if (pin.kind == GaugePin::Free &&
          std::hypot(std::abs(pt[pin.xvar]), std::abs(pt[pin.yvar])) < opt.zero_pin)
        valid = false;
    }
    if (!valid) continue;
    std::vector<Complex> sol(pt.begin(), pt.begin() + long(sys.vars.size()));
    bool dup = false;
    for (const auto& s : accepted) {
      double dist = 0.0, scale = 1.0;
      for (std::size_t q = 0; q < sol.size(); ++q) {
        dist = std::max(dist, std::abs(s[q] - sol[q]));
        scale = std::max(scale, std::abs(sol[q]));
      }
      if (dist < opt.cluster_radius * scale) {
        dup = true;
        out.notes.push_back("merged nearby solutions (cluster radius)");
      }
    }
    if (!dup) {
      accepted.push_back(sol);
      acc_res.push_back(res);
    }
  }
  if (stalled && accepted.empty() && out.status == SolveStatus::Ok)
    out.status = SolveStatus::Stalled;

  // deterministic order
  std::vector<std::size_t> idx(accepted.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    const auto& A = accepted[a];
    const auto& B = accepted[b];
    for (std::size_t q = 0; q < A.size(); ++q) {
      if (A[q].real() != B[q].real()) return A[q].real() < B[q].real();
      if (A[q].imag() != B[q].imag()) return A[q].imag() < B[q].imag();
    }
    return false;
  });
  for (auto i : idx) {
    out.solutions.push_back(accepted[i]);
    out.residuals.push_back(acc_res[i]);
  }
  return out;
}

}  // namespace parq
