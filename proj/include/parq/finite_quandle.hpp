#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "parq/diagram.hpp"
#include "parq/presentation.hpp"

namespace parq {

struct SubsetNotClosed : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SearchSpaceTooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Axiom violations are data, not errors: (axiom number, witness indices).
struct AxiomViolation {
  int axiom;  // 1 idempotence, 2 right invertibility, 3 self-distributivity
  std::size_t i, j, k;
};

inline std::vector<AxiomViolation> verify_quandle(const std::vector<std::vector<std::size_t>>& t) {
  std::vector<AxiomViolation> out;
  std::size_t n = t.size();
  for (std::size_t i = 0; i < n; ++i)
    if (t[i].size() != n || *std::max_element(t[i].begin(), t[i].end()) >= n)
      throw std::invalid_argument("verify_quandle: table is not n x n over 0..n-1");
  for (std::size_t i = 0; i < n; ++i)
    if (t[i][i] != i) out.push_back({1, i, i, 0});
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<bool> seen(n, false);
    for (std::size_t i = 0; i < n; ++i) {
      if (seen[t[i][j]]) out.push_back({2, i, j, 0});
      seen[t[i][j]] = true;
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (t[t[i][j]][k] != t[t[i][k]][t[j][k]]) out.push_back({3, i, j, k});
  return out;
}

/// Finite quandle {0..n-1} with operation table[i][j] = i*j. The inverse
/// table (i *^-1 j) is derived from the column permutations.
struct FiniteQuandle {
  std::size_t n = 0;
  std::vector<std::vector<std::size_t>> table;
  std::vector<std::vector<std::size_t>> inv;
  std::string name;

  FiniteQuandle() = default;
  explicit FiniteQuandle(std::vector<std::vector<std::size_t>> t, std::string nm = "")
      : n(t.size()), table(std::move(t)), name(std::move(nm)) {
    auto bad = verify_quandle(table);
    if (!bad.empty())
      throw std::invalid_argument("FiniteQuandle: table violates a quandle axiom");
    inv.assign(n, std::vector<std::size_t>(n, 0));
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) inv[table[i][j]][j] = i;
  }

  std::size_t op(std::size_t i, std::size_t j) const { return table[i][j]; }
  std::size_t op_inv(std::size_t i, std::size_t j) const { return inv[i][j]; }
  std::size_t apply(std::size_t i, std::size_t j, int exp) const {
    return exp == 1 ? op(i, j) : op_inv(i, j);
  }
};

inline FiniteQuandle make_trivial(std::size_t n) {
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = i;
  return FiniteQuandle(std::move(t), "trivial:" + std::to_string(n));
}

/// i * j = 2j - i (mod n).
inline FiniteQuandle make_dihedral(std::size_t n) {
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = (2 * j + n - i % n) % n;
  return FiniteQuandle(std::move(t), "dihedral:" + std::to_string(n));
}

/// Z_m ⊔ Z_n with a*b = a within a part and a*b = a+1 (mod own part size)
/// across parts. Elements 0..m-1 are the Z_m part.
inline FiniteQuandle make_eisermann(std::size_t m, std::size_t n) {
  if (m < 1 || n < 1) throw std::invalid_argument("make_eisermann: m,n >= 1");
  std::size_t N = m + n;
  std::vector<std::vector<std::size_t>> t(N, std::vector<std::size_t>(N));
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b) {
      bool a1 = a < m, b1 = b < m;
      if (a1 == b1)
        t[a][b] = a;
      else if (a1)
        t[a][b] = (a + 1) % m;
      else
        t[a][b] = m + ((a - m + 1) % n);
    }
  return FiniteQuandle(std::move(t), "eisermann:" + std::to_string(m) + "," + std::to_string(n));
}

/// Finite group as a multiplication table.
struct FiniteGroup {
  std::size_t n = 0;
  std::vector<std::vector<std::size_t>> table;
  std::size_t identity = 0;
  std::vector<std::size_t> inv;
  std::string name;

  FiniteGroup() = default;
  explicit FiniteGroup(std::vector<std::vector<std::size_t>> t, std::string nm = "")
      : n(t.size()), table(std::move(t)), name(std::move(nm)) {
    std::optional<std::size_t> e;
    for (std::size_t c = 0; c < n; ++c) {
      bool ok = true;
      for (std::size_t i = 0; i < n; ++i) ok = ok && table[i][c] == i && table[c][i] == i;
      if (ok) {
        e = c;
        break;
      }
    }
    if (!e) throw std::invalid_argument("FiniteGroup: no identity");
    identity = *e;
    inv.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      bool found = false;
      for (std::size_t j = 0; j < n; ++j)
        if (table[i][j] == identity) {
          inv[i] = j;
          found = true;
        }
      if (!found) throw std::invalid_argument("FiniteGroup: missing inverse");
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (table[table[i][j]][k] != table[i][table[j][k]])
            throw std::invalid_argument("FiniteGroup: not associative");
  }

  std::size_t mul(std::size_t a, std::size_t b) const { return table[a][b]; }
  std::size_t conj_n(std::size_t x, std::size_t y, std::size_t nfold) const {
    std::size_t yn = identity;
    for (std::size_t k = 0; k < nfold; ++k) yn = mul(yn, y);
    return mul(mul(inv[yn], x), yn);
  }
};

inline FiniteGroup group_cyclic(std::size_t n) {
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return FiniteGroup(std::move(t), "Z" + std::to_string(n));
}

/// Symmetric group on k letters, elements = permutations in lexicographic
/// order, product (pq)(x) = p(q(x)).
inline FiniteGroup group_symmetric(std::size_t k) {
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> base(k);
  std::iota(base.begin(), base.end(), 0);
  do {
    perms.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = i;
  std::size_t n = perms.size();
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::size_t> comp(k);
      for (std::size_t x = 0; x < k; ++x) comp[x] = perms[i][perms[j][x]];
      t[i][j] = index[comp];
    }
  return FiniteGroup(std::move(t), "S" + std::to_string(k));
}

/// n-fold conjugation quandle on a subset closed under conjugation:
/// x * y = y^-n x y^n.
inline FiniteQuandle make_conj(const FiniteGroup& g, const std::vector<std::size_t>& subset,
                               std::size_t nfold = 1) {
  std::map<std::size_t, std::size_t> index;
  for (std::size_t i = 0; i < subset.size(); ++i) index[subset[i]] = i;
  for (auto h : subset)
    for (std::size_t x = 0; x < g.n; ++x)
      if (!index.count(g.mul(g.mul(g.inv[x], h), x)))
        throw SubsetNotClosed("make_conj: subset not closed under conjugation");
  std::size_t n = subset.size();
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = index.at(g.conj_n(subset[i], subset[j], nfold));
  return FiniteQuandle(std::move(t), "conj:" + g.name + ":" + std::to_string(nfold));
}

// ---------------------------------------------------------------------------
// Coloring enumeration.

/// A coloring assigns a quandle element to each arc (or presentation
/// generator); at each crossing f(underOut) = f(underIn) * f(over) for
/// right-handed crossings, *^-1 for left-handed ones.
using Coloring = std::vector<std::size_t>;

namespace detail {

struct ColoringProblem {
  std::size_t vars;
  // constraints f(out) = f(in) op^exp f(over)
  struct Triple {
    std::size_t in, over, out;
    int exp;
  };
  std::vector<Triple> triples;                       // forcing constraints
  std::vector<std::pair<QuandleWord, QuandleWord>> word_rels;  // general relations
};

inline std::size_t eval_word(const QuandleWord& w, const Coloring& f, const FiniteQuandle& q) {
  if (w.is_leaf()) return f[w.gen()];
  return q.apply(eval_word(w.left(), f, q), eval_word(w.right(), f, q), w.exp());
}

inline std::vector<Coloring> enumerate_colorings_impl(const ColoringProblem& pr,
                                                      const FiniteQuandle& q) {
  // variable order: breadth-first from the most constrained variable
  std::vector<std::size_t> degree(pr.vars, 0);
  std::vector<std::vector<std::size_t>> adj(pr.vars);
  for (const auto& t : pr.triples) {
    for (auto v : {t.in, t.over, t.out}) ++degree[v];
    adj[t.in].push_back(t.over);
    adj[t.over].push_back(t.out);
    adj[t.out].push_back(t.in);
    adj[t.over].push_back(t.in);
    adj[t.out].push_back(t.over);
    adj[t.in].push_back(t.out);
  }
  std::vector<std::size_t> order;
  std::vector<bool> queued(pr.vars, false);
  auto seed = [&] {
    std::size_t best = pr.vars;
    for (std::size_t v = 0; v < pr.vars; ++v)
      if (!queued[v] && (best == pr.vars || degree[v] > degree[best])) best = v;
    return best;
  };
  while (order.size() < pr.vars) {
    std::size_t s = seed();
    std::queue<std::size_t> bfs;
    bfs.push(s);
    queued[s] = true;
    while (!bfs.empty()) {
      std::size_t v = bfs.front();
      bfs.pop();
      order.push_back(v);
      for (auto w : adj[v])
        if (!queued[w]) {
          queued[w] = true;
          bfs.push(w);
        }
    }
  }

  constexpr std::size_t kUnset = ~std::size_t(0);
  Coloring f(pr.vars, kUnset);
  std::vector<Coloring> out;
  std::vector<std::size_t> trail;

  auto propagate = [&](std::size_t depth_mark) -> bool {
    (void)depth_mark;
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& t : pr.triples) {
        std::size_t a = f[t.in], b = f[t.over], c = f[t.out];
        if (a != kUnset && b != kUnset) {
          std::size_t v = q.apply(a, b, t.exp);
          if (c == kUnset) {
            f[t.out] = v;
            trail.push_back(t.out);
            changed = true;
          } else if (c != v) {
            return false;
          }
        } else if (c != kUnset && b != kUnset) {
          std::size_t v = q.apply(c, b, -t.exp);
          if (a == kUnset) {
            f[t.in] = v;
            trail.push_back(t.in);
            changed = true;
          } else if (a != v) {
            return false;
          }
        }
      }
    }
    for (const auto& [L, R] : pr.word_rels) {
      std::set<std::size_t> gens;
      L.collect_gens(gens);
      R.collect_gens(gens);
      bool all = std::all_of(gens.begin(), gens.end(), [&](std::size_t g) { return f[g] != kUnset; });
      if (all && eval_word(L, f, q) != eval_word(R, f, q)) return false;
    }
    return true;
  };

  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    while (idx < pr.vars && f[order[idx]] != kUnset) ++idx;
    if (idx == pr.vars) {
      out.push_back(f);
      return;
    }
    std::size_t v = order[idx];
    for (std::size_t color = 0; color < q.n; ++color) {
      std::size_t mark = trail.size();
      f[v] = color;
      trail.push_back(v);
      if (propagate(mark)) rec(idx + 1);
      while (trail.size() > mark) {
        f[trail.back()] = kUnset;
        trail.pop_back();
      }
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

inline std::vector<Coloring> enumerate_colorings(const LinkDiagram& d, const FiniteQuandle& q) {
  detail::ColoringProblem pr;
  pr.vars = d.arc_count;
  for (const auto& c : d.crossings)
    pr.triples.push_back({c.under_in, c.over, c.under_out,
                          c.handedness == Handedness::Right ? 1 : -1});
  return detail::enumerate_colorings_impl(pr, q);
}

inline std::vector<Coloring> enumerate_colorings(const QuandlePresentation& p,
                                                 const FiniteQuandle& q) {
  detail::ColoringProblem pr;
  pr.vars = p.generator_names.size();
  for (const auto& r : p.relations) {
    // fast path: (in * over, out) patterns become forcing triples
    const QuandleWord &L = r.lhs, &R = r.rhs;
    if (!L.is_leaf() && L.left().is_leaf() && L.right().is_leaf() && R.is_leaf())
      pr.triples.push_back({L.left().gen(), L.right().gen(), R.gen(), L.exp()});
    else if (!R.is_leaf() && R.left().is_leaf() && R.right().is_leaf() && L.is_leaf())
      pr.triples.push_back({R.left().gen(), R.right().gen(), L.gen(), R.exp()});
    else
      pr.word_rels.push_back({L, R});
  }
  return detail::enumerate_colorings_impl(pr, q);
}

/// Some dihedral-3 coloring uses all three colors.
inline bool is_tricolorable(const LinkDiagram& d) {
  auto q3 = make_dihedral(3);
  for (const auto& f : enumerate_colorings(d, q3))
    if (std::set<std::size_t>(f.begin(), f.end()).size() == 3) return true;
  return false;
}

// ---------------------------------------------------------------------------
// Adjoint group, inner group, adjoint action, hom counting.

/// Generators = elements of Q; one relator adj(a*b) b^-1 a^-1 b per pair.
inline GroupPresentation adjoint_presentation(const FiniteQuandle& q) {
  GroupPresentation p;
  for (std::size_t i = 0; i < q.n; ++i) p.generator_names.push_back("q" + std::to_string(i));
  for (std::size_t a = 0; a < q.n; ++a)
    for (std::size_t b = 0; b < q.n; ++b)
      p.relators.push_back(
          {{q.op(a, b), 1}, {b, -1}, {a, -1}, {b, 1}});
  return p;
}

inline void check_search_space(double combos, double bound = 1e7) {
  if (combos > bound)
    throw SearchSpaceTooLarge("exhaustive search space exceeds bound");
}

/// |Hom_Qnd(Q, Conj_n(G))| by exhaustive assignment.
inline std::size_t count_quandle_homs(const FiniteQuandle& q, const FiniteGroup& g,
                                      std::size_t nfold = 1) {
  check_search_space(std::pow(double(g.n), double(q.n)));
  std::vector<std::size_t> f(q.n, 0);
  std::size_t count = 0;
  while (true) {
    bool ok = true;
    for (std::size_t a = 0; a < q.n && ok; ++a)
      for (std::size_t b = 0; b < q.n && ok; ++b)
        ok = f[q.op(a, b)] == g.conj_n(f[a], f[b], nfold);
    count += ok;
    std::size_t i = 0;
    while (i < q.n && ++f[i] == g.n) f[i++] = 0;
    if (i == q.n) break;
  }
  return count;
}

/// |Hom_Grp(<gens | relators>, G)| by exhaustive assignment.
inline std::size_t count_group_homs(const GroupPresentation& p, const FiniteGroup& g) {
  std::size_t ngen = p.generator_names.size();
  check_search_space(std::pow(double(g.n), double(ngen)));
  std::vector<std::size_t> f(ngen, 0);
  std::size_t count = 0;
  while (true) {
    bool ok = true;
    for (const auto& r : p.relators) {
      std::size_t acc = g.identity;
      for (const auto& l : r) acc = g.mul(acc, l.exp == 1 ? f[l.gen] : g.inv[f[l.gen]]);
      if (acc != g.identity) {
        ok = false;
        break;
      }
    }
    count += ok;
    std::size_t i = 0;
    while (i < ngen && ++f[i] == g.n) f[i++] = 0;
    if (i == ngen) break;
  }
  return count;
}

/// Closure of the translations beta_y under composition; returns the group
/// elements as permutations, identity first, lexicographically sorted.
inline std::vector<std::vector<std::size_t>> inner_group(const FiniteQuandle& q) {
  std::set<std::vector<std::size_t>> elems;
  std::vector<std::size_t> id(q.n);
  std::iota(id.begin(), id.end(), 0);
  elems.insert(id);
  std::vector<std::vector<std::size_t>> gens;
  for (std::size_t y = 0; y < q.n; ++y) {
    std::vector<std::size_t> beta(q.n);
    for (std::size_t x = 0; x < q.n; ++x) beta[x] = q.op(x, y);
    gens.push_back(beta);
  }
  std::queue<std::vector<std::size_t>> work;
  for (const auto& b : gens)
    if (elems.insert(b).second) work.push(b);
  while (!work.empty()) {
    auto p = work.front();
    work.pop();
    for (const auto& b : gens) {
      std::vector<std::size_t> pb(q.n);
      for (std::size_t x = 0; x < q.n; ++x) pb[x] = b[p[x]];
      if (elems.insert(pb).second) work.push(pb);
    }
  }
  return {elems.begin(), elems.end()};
}

/// Right action of Adj(Q): fold x *^(e1) x1 *^(e2) x2 ... left to right.
inline std::size_t act_right(std::size_t x, const std::vector<std::pair<std::size_t, int>>& word,
                             const FiniteQuandle& q) {
  for (const auto& [y, e] : word) x = q.apply(x, y, e);
  return x;
}

}  // namespace parq
