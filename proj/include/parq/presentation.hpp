#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "parq/arith.hpp"
#include "parq/diagram.hpp"

namespace parq {

// ---------------------------------------------------------------------------
// Group presentations

struct GroupLetter {
  std::size_t gen{};
  int exp{1};  // +1 or -1
  friend bool operator==(const GroupLetter&, const GroupLetter&) = default;
};
using GroupWord = std::vector<GroupLetter>;

inline GroupWord inverse(const GroupWord& w) {
  GroupWord out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->gen, -it->exp});
  return out;
}

inline GroupWord free_reduce(const GroupWord& w) {
  GroupWord out;
  for (const auto& l : w) {
    if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

inline GroupWord cyclic_reduce(GroupWord w) {
  w = free_reduce(w);
  while (w.size() >= 2 && w.front().gen == w.back().gen && w.front().exp == -w.back().exp) {
    w.erase(w.begin());
    w.pop_back();
    w = free_reduce(w);
  }
  return w;
}

struct GroupPresentation {
  std::vector<std::string> generator_names;
  std::vector<GroupWord> relators;
};

inline std::string group_word_str(const GroupWord& w, const std::vector<std::string>& names) {
  if (w.empty()) return "e";
  std::ostringstream os;
  bool first = true;
  for (const auto& l : w) {
    if (!first) os << " ";
    first = false;
    os << names[l.gen];
    if (l.exp != 1) os << "^" << l.exp;
  }
  return os.str();
}

/// Parse "C a C^-1 A^-1" style words; unknown names are an error.
inline GroupWord parse_group_word(const std::string& text,
                                  const std::vector<std::string>& names) {
  GroupWord out;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    int exp = 1;
    auto caret = tok.find('^');
    std::string name = tok.substr(0, caret);
    if (caret != std::string::npos) exp = std::stoi(tok.substr(caret + 1));
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw std::invalid_argument("unknown generator '" + name + "'");
    std::size_t g = std::size_t(it - names.begin());
    int step = exp >= 0 ? 1 : -1;
    for (int k = 0; k != exp; k += step) out.push_back({g, step});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Quandle words: binary trees with leaves = generators, nodes * or *^-1.

class QuandleWord {
  struct Node {
    bool is_leaf;
    std::size_t gen;
    int exp;  // +1: left * right, -1: left *^-1 right
    std::shared_ptr<const Node> l, r;
  };
  std::shared_ptr<const Node> n_;
  explicit QuandleWord(std::shared_ptr<const Node> n) : n_(std::move(n)) {}

 public:
  QuandleWord() = default;

  static QuandleWord leaf(std::size_t g) {
    return QuandleWord(std::make_shared<Node>(Node{true, g, 0, nullptr, nullptr}));
  }
  static QuandleWord op(QuandleWord l, QuandleWord r, int exp = 1) {
    return QuandleWord(std::make_shared<Node>(Node{false, 0, exp, l.n_, r.n_}));
  }

  bool valid() const { return n_ != nullptr; }
  bool is_leaf() const { return n_->is_leaf; }
  std::size_t gen() const { return n_->gen; }
  int exp() const { return n_->exp; }
  QuandleWord left() const { return QuandleWord(n_->l); }
  QuandleWord right() const { return QuandleWord(n_->r); }

  bool contains(std::size_t g) const {
    if (is_leaf()) return gen() == g;
    return left().contains(g) || right().contains(g);
  }
  std::size_t size() const {  // leaf count
    if (is_leaf()) return 1;
    return left().size() + right().size();
  }
  void collect_gens(std::set<std::size_t>& out) const {
    if (is_leaf()) {
      out.insert(gen());
      return;
    }
    left().collect_gens(out);
    right().collect_gens(out);
  }

  QuandleWord substituted(std::size_t g, const QuandleWord& w) const {
    if (is_leaf()) return gen() == g ? w : *this;
    return op(left().substituted(g, w), right().substituted(g, w), exp());
  }
  QuandleWord remapped(const std::map<std::size_t, std::size_t>& m) const {
    if (is_leaf()) return leaf(m.at(gen()));
    return op(left().remapped(m), right().remapped(m), exp());
  }

  friend bool operator==(const QuandleWord& a, const QuandleWord& b) {
    if (a.n_ == b.n_) return true;
    if (!a.n_ || !b.n_) return false;
    if (a.is_leaf() != b.is_leaf()) return false;
    if (a.is_leaf()) return a.gen() == b.gen();
    return a.exp() == b.exp() && a.left() == b.left() && a.right() == b.right();
  }
};

struct QuandleRelation {
  QuandleWord lhs, rhs;
};

struct QuandlePresentation {
  std::vector<std::string> generator_names;
  std::vector<QuandleRelation> relations;
};

inline std::string quandle_word_str(const QuandleWord& w,
                                    const std::vector<std::string>& names) {
  if (w.is_leaf()) return names[w.gen()];
  std::string o = w.exp() == 1 ? "*" : "*^-1";
  return "(" + quandle_word_str(w.left(), names) + o + quandle_word_str(w.right(), names) + ")";
}

inline std::string quandle_relation_str(const QuandleRelation& r,
                                        const std::vector<std::string>& names) {
  return quandle_word_str(r.lhs, names) + " = " + quandle_word_str(r.rhs, names);
}

// ---------------------------------------------------------------------------
// Diagram -> presentations.
//
// Conventions (frozen): at a right-handed crossing the relator is
// (u+1) o u^-1 o^-1 and the quandle relation  underIn * over = underOut;
// at a left-handed crossing the relator is  o (u+1) o^-1 u^-1  and the
// quandle relation is written  underOut * over = underIn  (same constraint,
// plain * on both handedness).

inline GroupPresentation wirtinger_presentation(const LinkDiagram& d) {
  if (d.arc_count == 0) throw EmptyDiagram("wirtinger: empty diagram");
  GroupPresentation p;
  p.generator_names = d.arc_names;
  for (const auto& c : d.crossings) {
    GroupWord r;
    if (c.handedness == Handedness::Right) {
      r = {{c.under_out, 1}, {c.over, 1}, {c.under_in, -1}, {c.over, -1}};
    } else {
      r = {{c.over, 1}, {c.under_out, 1}, {c.over, -1}, {c.under_in, -1}};
    }
    p.relators.push_back(free_reduce(r));
  }
  return p;
}

inline QuandlePresentation fundamental_quandle_presentation(const LinkDiagram& d) {
  if (d.arc_count == 0) throw EmptyDiagram("fundamental quandle: empty diagram");
  QuandlePresentation p;
  p.generator_names = d.arc_names;
  for (const auto& c : d.crossings) {
    if (c.handedness == Handedness::Right)
      p.relations.push_back({QuandleWord::op(QuandleWord::leaf(c.under_in),
                                             QuandleWord::leaf(c.over)),
                             QuandleWord::leaf(c.under_out)});
    else
      p.relations.push_back({QuandleWord::op(QuandleWord::leaf(c.under_out),
                                             QuandleWord::leaf(c.over)),
                             QuandleWord::leaf(c.under_in)});
  }
  return p;
}

// ---------------------------------------------------------------------------
// Tietze-style generator elimination.

struct QuandleElimination {
  QuandlePresentation presentation;       // over kept generators
  std::vector<std::size_t> kept;          // original indices, ascending
  std::map<std::size_t, QuandleWord> defining;  // original idx -> word over kept idx
};

/// Repeatedly eliminate a generator appearing alone on one side of a
/// relation whose other side does not mention it. Preference order: words
/// avoiding generators that are themselves a lone side elsewhere, then
/// shorter words, then earlier relations.
inline QuandleElimination eliminate_generators(const QuandlePresentation& p0) {
  std::vector<std::optional<QuandleRelation>> rels;
  for (const auto& r : p0.relations) rels.push_back(r);
  std::map<std::size_t, QuandleWord> defs;  // over original indices, kept current

  auto drop_tautologies = [&] {
    for (auto& r : rels)
      if (r && r->lhs == r->rhs) r.reset();
  };
  drop_tautologies();

  while (true) {
    std::set<std::size_t> lone_sides;
    for (const auto& r : rels) {
      if (!r) continue;
      if (r->lhs.is_leaf()) lone_sides.insert(r->lhs.gen());
      if (r->rhs.is_leaf()) lone_sides.insert(r->rhs.gen());
    }
    struct Cand {
      int refs_lone;
      std::size_t wsize;
      std::size_t rel;
      std::size_t gen;
      QuandleWord w;
    };
    std::optional<Cand> best;
    for (std::size_t i = 0; i < rels.size(); ++i) {
      if (!rels[i]) continue;
      auto consider = [&](const QuandleWord& side, const QuandleWord& other) {
        if (!side.is_leaf()) return;
        std::size_t g = side.gen();
        if (other.contains(g)) return;
        std::set<std::size_t> gens;
        other.collect_gens(gens);
        int refs = 0;
        for (auto h : gens)
          if (h != g && lone_sides.count(h)) refs = 1;
        Cand c{refs, other.size(), i, g, other};
        auto better = [](const Cand& a, const Cand& b) {
          return std::tie(a.refs_lone, a.wsize, a.rel) < std::tie(b.refs_lone, b.wsize, b.rel);
        };
        if (!best || better(c, *best)) best = c;
      };
      consider(rels[i]->rhs, rels[i]->lhs);
      consider(rels[i]->lhs, rels[i]->rhs);
    }
    if (!best) break;

    std::size_t g = best->gen;
    QuandleWord w = best->w;
    for (auto& r : rels) {
      if (!r) continue;
      r->lhs = r->lhs.substituted(g, w);
      r->rhs = r->rhs.substituted(g, w);
    }
    for (auto& [h, def] : defs) def = def.substituted(g, w);
    defs.emplace(g, w);
    drop_tautologies();
  }

  QuandleElimination out;
  std::map<std::size_t, std::size_t> remap;
  for (std::size_t i = 0; i < p0.generator_names.size(); ++i)
    if (!defs.count(i)) {
      remap[i] = out.kept.size();
      out.kept.push_back(i);
      out.presentation.generator_names.push_back(p0.generator_names[i]);
    }
  for (const auto& r : rels)
    if (r) out.presentation.relations.push_back({r->lhs.remapped(remap), r->rhs.remapped(remap)});
  for (const auto& [g, w] : defs) out.defining.emplace(g, w.remapped(remap));
  return out;
}

struct GroupElimination {
  GroupPresentation presentation;
  std::vector<std::size_t> kept;
  std::map<std::size_t, GroupWord> defining;  // original idx -> word over kept idx
};

namespace detail {

inline GroupWord substitute(const GroupWord& w, std::size_t g, const GroupWord& def) {
  GroupWord out;
  GroupWord inv_def = inverse(def);
  for (const auto& l : w) {
    if (l.gen != g) {
      out.push_back(l);
      continue;
    }
    const GroupWord& rep = l.exp == 1 ? def : inv_def;
    out.insert(out.end(), rep.begin(), rep.end());
  }
  return free_reduce(out);
}

}  // namespace detail

/// Group analogue: a relator containing g exactly once yields g = W after a
/// cyclic rotation. Preference: occurrences with exponent -1, then shorter
/// defining words, then later relators (this reproduces the usual hand
/// simplification of Wirtinger presentations, where the left-handed
/// relators define the redundant arcs).
inline GroupElimination eliminate_generators(const GroupPresentation& p0) {
  std::vector<GroupWord> rels;
  for (const auto& r : p0.relators) rels.push_back(cyclic_reduce(r));
  std::map<std::size_t, GroupWord> defs;

  while (true) {
    struct Cand {
      int exp_rank;  // 0 when the single occurrence has exponent -1
      std::size_t wsize;
      std::size_t rel_rank;  // later relators first
      std::size_t gen;
      GroupWord w;
      std::size_t rel;
    };
    std::optional<Cand> best;
    for (std::size_t i = 0; i < rels.size(); ++i) {
      const GroupWord& r = rels[i];
      if (r.empty()) continue;
      std::map<std::size_t, int> count;
      for (const auto& l : r) ++count[l.gen];
      for (std::size_t pos = 0; pos < r.size(); ++pos) {
        if (count[r[pos].gen] != 1) continue;
        // rotate so the occurrence leads: r = g^e . rest, then g = rest^-e
        GroupWord rest(r.begin() + long(pos) + 1, r.end());
        rest.insert(rest.end(), r.begin(), r.begin() + long(pos));
        GroupWord w = free_reduce(r[pos].exp == 1 ? inverse(rest) : rest);
        Cand c{r[pos].exp == -1 ? 0 : 1, w.size(), rels.size() - i, r[pos].gen, w, i};
        auto better = [](const Cand& a, const Cand& b) {
          return std::tie(a.exp_rank, a.wsize, a.rel_rank, a.gen) <
                 std::tie(b.exp_rank, b.wsize, b.rel_rank, b.gen);
        };
        if (!best || better(c, *best)) best = c;
      }
    }
    if (!best) break;

    for (auto& r : rels) r = cyclic_reduce(detail::substitute(r, best->gen, best->w));
    for (auto& [h, def] : defs) def = detail::substitute(def, best->gen, best->w);
    defs.emplace(best->gen, best->w);
  }

  GroupElimination out;
  std::map<std::size_t, std::size_t> remap;
  for (std::size_t i = 0; i < p0.generator_names.size(); ++i)
    if (!defs.count(i)) {
      remap[i] = out.kept.size();
      out.kept.push_back(i);
      out.presentation.generator_names.push_back(p0.generator_names[i]);
    }
  auto remap_word = [&](const GroupWord& w) {
    GroupWord o;
    for (const auto& l : w) o.push_back({remap.at(l.gen), l.exp});
    return o;
  };
  for (const auto& r : rels)
    if (!r.empty()) out.presentation.relators.push_back(remap_word(r));
  for (const auto& [g, w] : defs) out.defining.emplace(g, remap_word(w));
  return out;
}

/// Rank of the abelianized group: #generators minus the rational rank of the
/// relator exponent-sum matrix (exact elimination).
inline std::size_t abelianization_rank(const GroupPresentation& p) {
  std::size_t n = p.generator_names.size();
  std::vector<std::vector<Rational>> m;
  for (const auto& r : p.relators) {
    std::vector<Rational> row(n, Rational(0));
    for (const auto& l : r) row[l.gen] += l.exp;
    m.push_back(std::move(row));
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < m.size(); ++col) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][col] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[rank], m[piv]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == rank || m[i][col] == 0) continue;
      Rational f = m[i][col] / m[rank][col];
      for (std::size_t j = col; j < n; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return n - rank;
}

}  // namespace parq
