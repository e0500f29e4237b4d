#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace parq {

using ArcId = std::size_t;

enum class Handedness { Right, Left };

inline Handedness opposite(Handedness h) {
  return h == Handedness::Right ? Handedness::Left : Handedness::Right;
}

/// One crossing at arc level. The over strand is not split by the crossing,
/// so a single arc id suffices for it.
struct Crossing {
  ArcId over{};
  ArcId under_in{};
  ArcId under_out{};
  Handedness handedness{Handedness::Right};

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

struct DiagramError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct MalformedCode : DiagramError {
  using DiagramError::DiagramError;
};
struct InconsistentArcs : DiagramError {
  using DiagramError::DiagramError;
};
struct EmptyDiagram : DiagramError {
  using DiagramError::DiagramError;
};
struct InvalidSite : DiagramError {
  using DiagramError::DiagramError;
};

/// Oriented link diagram over numbered arcs.
///
/// PD text convention (frozen; see README for a worked trefoil example):
/// an entry X[a,b,c,d] lists the four incident edge labels counterclockwise
/// starting at the incoming under-edge, so the under strand runs a -> c.
/// The crossing is right-handed when the over strand runs d -> b and
/// left-handed when it runs b -> d; the direction is inferred from the
/// under-edge occurrences and propagated along over-passes. An entry O[k]
/// declares a crossingless circle (PD codes cannot express those otherwise).
struct LinkDiagram {
  std::size_t arc_count = 0;
  std::vector<Crossing> crossings;
  std::vector<std::size_t> component_of_arc;
  std::vector<std::string> arc_names;

  std::size_t component_count() const {
    std::size_t m = 0;
    for (auto c : component_of_arc) m = std::max(m, c + 1);
    return m;
  }

  const std::string& name_of(ArcId a) const { return arc_names[a]; }
};

namespace detail {

inline std::string default_arc_name(std::size_t i) {
  std::string s;
  do {
    s.insert(s.begin(), char('a' + i % 26));
    i = i / 26;
  } while (i-- > 0);
  return s;
}

inline void assign_default_names(LinkDiagram& d) {
  d.arc_names.resize(d.arc_count);
  for (std::size_t i = 0; i < d.arc_count; ++i) d.arc_names[i] = default_arc_name(i);
}

/// Components from the under-succession relation (under_in -> under_out);
/// free circles are their own component.
inline void compute_components(LinkDiagram& d) {
  std::vector<std::optional<ArcId>> succ(d.arc_count);
  for (const auto& c : d.crossings) {
    if (succ[c.under_in]) throw InconsistentArcs("arc is under-in at two crossings");
    succ[c.under_in] = c.under_out;
  }
  d.component_of_arc.assign(d.arc_count, ~std::size_t(0));
  std::size_t comp = 0;
  for (ArcId a = 0; a < d.arc_count; ++a) {
    if (d.component_of_arc[a] != ~std::size_t(0)) continue;
    ArcId cur = a;
    while (d.component_of_arc[cur] == ~std::size_t(0)) {
      d.component_of_arc[cur] = comp;
      if (!succ[cur]) break;
      cur = *succ[cur];
    }
    ++comp;
  }
}

inline void validate_arc_usage(const LinkDiagram& d) {
  std::vector<int> ins(d.arc_count, 0), outs(d.arc_count, 0);
  for (const auto& c : d.crossings) {
    if (c.over >= d.arc_count || c.under_in >= d.arc_count || c.under_out >= d.arc_count)
      throw InconsistentArcs("crossing references unknown arc");
    ++ins[c.under_in];
    ++outs[c.under_out];
  }
  for (ArcId a = 0; a < d.arc_count; ++a) {
    if (!((ins[a] == 1 && outs[a] == 1) || (ins[a] == 0 && outs[a] == 0)))
      throw InconsistentArcs("arc '" + (a < d.arc_names.size() ? d.arc_names[a] : std::to_string(a)) +
                             "' must be under-in and under-out exactly once (or never)");
  }
}

struct PdEntry {
  bool circle = false;
  long labels[4] = {0, 0, 0, 0};
};

inline std::vector<PdEntry> tokenize_pd(const std::string& text) {
  std::vector<PdEntry> entries;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size()) {
      if (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ';' || text[i] == ',') {
        ++i;
      } else if (text[i] == '#') {
        while (i < text.size() && text[i] != '\n') ++i;
      } else {
        break;
      }
    }
  };
  auto number = [&]() -> long {
    skip();
    std::size_t start = i;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) throw MalformedCode("expected edge label near offset " + std::to_string(start));
    return std::stol(text.substr(start, i - start));
  };
  auto expect = [&](char c) {
    skip();
    if (i >= text.size() || text[i] != c)
      throw MalformedCode(std::string("expected '") + c + "' near offset " + std::to_string(i));
    ++i;
  };
  while (true) {
    skip();
    if (i >= text.size()) break;
    char k = text[i];
    if (k == 'X' || k == 'x') {
      ++i;
      expect('[');
      PdEntry e;
      for (int j = 0; j < 4; ++j) e.labels[j] = number();
      expect(']');
      entries.push_back(e);
    } else if (k == 'O' || k == 'o') {
      ++i;
      expect('[');
      PdEntry e;
      e.circle = true;
      e.labels[0] = number();
      expect(']');
      entries.push_back(e);
    } else {
      throw MalformedCode(std::string("unexpected token '") + k + "' at offset " + std::to_string(i));
    }
  }
  return entries;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace detail

/// Parse PD-code text. Arc labels may be arbitrary positive integers and are
/// renumbered to contiguous 0-based ids by first appearance. No planarity
/// check is performed: any combinatorially consistent code is accepted.
inline LinkDiagram parse_pd(const std::string& text) {
  auto entries = detail::tokenize_pd(text);
  if (entries.empty()) throw EmptyDiagram("no PD entries");

  // occurrences per edge label: (entry index, position)
  std::map<long, std::vector<std::pair<std::size_t, int>>> occ;
  std::vector<long> label_order;
  for (std::size_t e = 0; e < entries.size(); ++e) {
    int npos = entries[e].circle ? 1 : 4;
    for (int p = 0; p < npos; ++p) {
      long lab = entries[e].labels[p];
      if (!occ.count(lab)) label_order.push_back(lab);
      occ[lab].push_back({e, p});
    }
  }
  for (auto& [lab, os] : occ) {
    bool in_circle = std::any_of(os.begin(), os.end(),
                                 [&](auto& o) { return entries[o.first].circle; });
    if (os.size() != (in_circle ? 1u : 2u))
      throw InconsistentArcs("edge label " + std::to_string(lab) + " used " +
                             std::to_string(os.size()) + " times");
  }

  // edges of one over-pass (positions 1 and 3) belong to the same arc
  std::map<long, std::size_t> edge_index;
  for (std::size_t k = 0; k < label_order.size(); ++k) edge_index[label_order[k]] = k;
  detail::UnionFind uf(label_order.size());
  for (const auto& e : entries)
    if (!e.circle) uf.unite(edge_index[e.labels[1]], edge_index[e.labels[3]]);

  // head/tail orientation: +1 edge arrives at the occurrence, -1 departs
  // under-in arrives, under-out departs; over positions carry one of each.
  std::map<std::pair<std::size_t, int>, int> dir;
  std::vector<std::pair<std::size_t, int>> work;
  auto set_dir = [&](std::size_t e, int p, int v) {
    auto key = std::make_pair(e, p);
    auto it = dir.find(key);
    if (it != dir.end()) {
      if (it->second != v) throw InconsistentArcs("inconsistent strand orientation");
      return;
    }
    dir[key] = v;
    work.push_back(key);
  };
  for (std::size_t e = 0; e < entries.size(); ++e) {
    if (entries[e].circle) continue;
    set_dir(e, 0, +1);
    set_dir(e, 2, -1);
  }
  auto propagate = [&] {
    while (!work.empty()) {
      auto [e, p] = work.back();
      work.pop_back();
      int v = dir[{e, p}];
      // the other occurrence of the same edge has the opposite role
      for (auto [e2, p2] : occ[entries[e].labels[p]])
        if (!(e2 == e && p2 == p)) set_dir(e2, p2, -v);
      // over positions of one crossing carry one head and one tail
      if (p == 1 || p == 3) set_dir(e, p == 1 ? 3 : 1, -v);
    }
  };
  propagate();
  for (std::size_t e = 0; e < entries.size(); ++e) {
    if (entries[e].circle) continue;
    if (!dir.count({e, 3})) {
      set_dir(e, 3, +1);  // undetermined over component: default right-handed
      propagate();
    }
  }

  // arcs by first appearance
  std::map<std::size_t, ArcId> root_to_arc;
  LinkDiagram d;
  auto arc_of = [&](long lab) {
    std::size_t r = uf.find(edge_index[lab]);
    auto it = root_to_arc.find(r);
    if (it != root_to_arc.end()) return it->second;
    ArcId id = d.arc_count++;
    root_to_arc.emplace(r, id);
    return id;
  };
  for (std::size_t e = 0; e < entries.size(); ++e) {
    int npos = entries[e].circle ? 1 : 4;
    for (int p = 0; p < npos; ++p) arc_of(entries[e].labels[p]);
  }
  for (std::size_t e = 0; e < entries.size(); ++e) {
    if (entries[e].circle) continue;
    Crossing c;
    c.under_in = arc_of(entries[e].labels[0]);
    c.under_out = arc_of(entries[e].labels[2]);
    c.over = arc_of(entries[e].labels[1]);
    // over flows d->b  <=>  d arrives  <=>  right-handed
    c.handedness = dir[{e, 3}] == +1 ? Handedness::Right : Handedness::Left;
    d.crossings.push_back(c);
  }

  detail::assign_default_names(d);
  detail::validate_arc_usage(d);
  detail::compute_components(d);
  return d;
}

/// Deterministic PD serialization: crossings in stored order, edge labels
/// assigned in first-use order, entries joined by "; ". Crossingless circles
/// serialize as O[k].
inline std::string serialize_pd(const LinkDiagram& d) {
  // per-arc over-passes in crossing order
  std::vector<std::vector<std::size_t>> overs(d.arc_count);
  std::vector<bool> has_under(d.arc_count, false);
  for (std::size_t k = 0; k < d.crossings.size(); ++k) {
    overs[d.crossings[k].over].push_back(k);
    has_under[d.crossings[k].under_in] = true;
    has_under[d.crossings[k].under_out] = true;
  }
  // edge slots per arc: a normal arc with p over-passes has p+1 slots,
  // a free circle with p >= 1 passes has p cyclic slots
  std::vector<std::vector<long>> slot_label(d.arc_count);
  for (ArcId a = 0; a < d.arc_count; ++a) {
    std::size_t p = overs[a].size();
    slot_label[a].assign(has_under[a] ? p + 1 : std::max<std::size_t>(p, 1), 0);
  }
  long next = 1;
  auto label_of = [&](ArcId a, std::size_t slot) {
    if (slot_label[a][slot] == 0) slot_label[a][slot] = next++;
    return slot_label[a][slot];
  };
  auto pass_index = [&](ArcId a, std::size_t crossing) {
    const auto& v = overs[a];
    return std::size_t(std::find(v.begin(), v.end(), crossing) - v.begin());
  };

  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < d.crossings.size(); ++k) {
    const Crossing& c = d.crossings[k];
    std::size_t r = pass_index(c.over, k);
    std::size_t nslots = slot_label[c.over].size();
    long over_in = label_of(c.over, r);
    long over_out = label_of(c.over, has_under[c.over] ? r + 1 : (r + 1) % nslots);
    long ui = label_of(c.under_in, slot_label[c.under_in].size() - 1);
    long uo = label_of(c.under_out, 0);
    long b = c.handedness == Handedness::Right ? over_out : over_in;
    long dd = c.handedness == Handedness::Right ? over_in : over_out;
    if (!first) os << "; ";
    first = false;
    os << "X[" << ui << "," << b << "," << uo << "," << dd << "]";
  }
  for (ArcId a = 0; a < d.arc_count; ++a) {
    if (!has_under[a] && overs[a].empty()) {
      if (!first) os << "; ";
      first = false;
      os << "O[" << label_of(a, 0) << "]";
    }
  }
  return os.str();
}

/// Equality up to an arc renumbering (crossing order and handedness fixed).
inline bool equal_up_to_renumbering(const LinkDiagram& d1, const LinkDiagram& d2) {
  if (d1.arc_count != d2.arc_count || d1.crossings.size() != d2.crossings.size()) return false;
  std::vector<std::optional<ArcId>> to2(d1.arc_count), to1(d2.arc_count);
  auto bind = [&](ArcId a, ArcId b) {
    if (to2[a] && *to2[a] != b) return false;
    if (to1[b] && *to1[b] != a) return false;
    to2[a] = b;
    to1[b] = a;
    return true;
  };
  for (std::size_t k = 0; k < d1.crossings.size(); ++k) {
    const auto& c1 = d1.crossings[k];
    const auto& c2 = d2.crossings[k];
    if (c1.handedness != c2.handedness) return false;
    if (!bind(c1.over, c2.over) || !bind(c1.under_in, c2.under_in) ||
        !bind(c1.under_out, c2.under_out))
      return false;
  }
  // leftover free circles match by count
  std::size_t free1 = 0, free2 = 0;
  for (ArcId a = 0; a < d1.arc_count; ++a) free1 += !to2[a];
  for (ArcId b = 0; b < d2.arc_count; ++b) free2 += !to1[b];
  return free1 == free2;
}

enum class Builtin { Unknot, Trefoil, Hopf, Borromean, BorromeanMirror };

inline LinkDiagram mirror_of(LinkDiagram d) {
  for (auto& c : d.crossings) c.handedness = opposite(c.handedness);
  return d;
}

/// Fixed built-in diagrams. Borromean uses the 6-crossing alternating
/// diagram whose arcs, in first-appearance order, are named a,C,A,b,B,c;
/// its quandle relations come out as a*C=A, b*A=B, c*B=C, a*c=A, b*a=B,
/// c*b=C (see tests).
inline LinkDiagram builtin(Builtin which) {
  switch (which) {
    case Builtin::Unknot: {
      LinkDiagram d;
      d.arc_count = 1;
      detail::assign_default_names(d);
      detail::compute_components(d);
      return d;
    }
    case Builtin::Trefoil:
      return parse_pd("X[1,4,2,5]; X[3,6,4,1]; X[5,2,6,3]");
    case Builtin::Hopf:
      return parse_pd("X[2,4,1,3]; X[4,2,3,1]");
    case Builtin::Borromean: {
      LinkDiagram d =
          parse_pd("X[2,12,3,11]; X[6,4,7,3]; X[10,8,11,7]; X[4,9,1,10]; X[8,1,5,2]; X[12,5,9,6]");
      d.arc_names = {"a", "C", "A", "b", "B", "c"};
      return d;
    }
    case Builtin::BorromeanMirror: {
      LinkDiagram d = mirror_of(builtin(Builtin::Borromean));
      return d;
    }
  }
  throw std::logic_error("unknown builtin");
}

inline std::optional<Builtin> builtin_by_name(std::string name) {
  std::transform(name.begin(), name.end(), name.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (name == "unknot") return Builtin::Unknot;
  if (name == "trefoil") return Builtin::Trefoil;
  if (name == "hopf") return Builtin::Hopf;
  if (name == "borromean") return Builtin::Borromean;
  if (name == "borromeanmirror" || name == "borromean-mirror") return Builtin::BorromeanMirror;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Reidemeister moves. Sites reference crossings/arcs by id; validation is
// purely combinatorial (a move may be "virtual" on a non-planar code).

enum class Move { R1Plus, R1Minus, R2Plus, R2Minus, R3 };

/// Site descriptor; the meaning of the fields depends on the move:
///   R1+  : arc, over_first (pass over before under along the arc), hand
///   R1-  : c1 = kink crossing
///   R2+  : arc  = over strand, arc2 = under strand, hand = first crossing
///   R2-  : c1, c2 = the two crossings (c1.under_out == c2.under_in)
///   R3   : c1, c2 = bottom strand's crossings in under order
struct MoveSite {
  ArcId arc = 0;
  ArcId arc2 = 0;
  std::size_t c1 = 0;
  std::size_t c2 = 0;
  bool over_first = true;
  Handedness hand = Handedness::Right;

  static MoveSite kink(ArcId a, bool over_first, Handedness h) {
    MoveSite s;
    s.arc = a;
    s.over_first = over_first;
    s.hand = h;
    return s;
  }
  static MoveSite unkink(std::size_t c) {
    MoveSite s;
    s.c1 = c;
    return s;
  }
  static MoveSite poke(ArcId over, ArcId under, Handedness first) {
    MoveSite s;
    s.arc = over;
    s.arc2 = under;
    s.hand = first;
    return s;
  }
  static MoveSite unpoke(std::size_t c1, std::size_t c2) {
    MoveSite s;
    s.c1 = c1;
    s.c2 = c2;
    return s;
  }
  static MoveSite triangle(std::size_t c1, std::size_t c2) {
    MoveSite s;
    s.c1 = c1;
    s.c2 = c2;
    return s;
  }
};

namespace detail {

inline std::string fresh_arc_name(const LinkDiagram& d) {
  std::size_t k = d.arc_names.size();
  std::string n = default_arc_name(k);
  while (std::find(d.arc_names.begin(), d.arc_names.end(), n) != d.arc_names.end())
    n = default_arc_name(++k);
  return n;
}

inline bool arc_is_free(const LinkDiagram& d, ArcId a) {
  for (const auto& c : d.crossings)
    if (c.under_in == a || c.under_out == a) return false;
  return true;
}

// merge arc `gone` into arc `keep`, compacting ids above `gone`
inline void merge_arcs(LinkDiagram& d, ArcId keep, ArcId gone) {
  if (keep == gone) return;
  for (auto& c : d.crossings) {
    auto fix = [&](ArcId& x) {
      if (x == gone) x = keep;
      if (x > gone) --x;
    };
    fix(c.over);
    fix(c.under_in);
    fix(c.under_out);
  }
  d.arc_names.erase(d.arc_names.begin() + long(gone));
  --d.arc_count;
}

inline std::size_t count_uses(const LinkDiagram& d, ArcId a) {
  std::size_t n = 0;
  for (const auto& c : d.crossings) n += (c.over == a) + (c.under_in == a) + (c.under_out == a);
  return n;
}

}  // namespace detail

inline LinkDiagram apply_reidemeister(const LinkDiagram& d0, Move move, const MoveSite& site) {
  LinkDiagram d = d0;
  switch (move) {
    case Move::R1Plus: {
      if (site.arc >= d.arc_count) throw InvalidSite("R1+: no such arc");
      ArcId a = site.arc;
      if (detail::arc_is_free(d, a)) {
        d.crossings.push_back({a, a, a, site.hand});
        break;
      }
      ArcId a2 = d.arc_count++;
      d.arc_names.push_back(detail::fresh_arc_name(d));
      for (auto& c : d.crossings)
        if (c.under_in == a) c.under_in = a2;  // the tail piece ends where a ended
      d.crossings.push_back({site.over_first ? a : a2, a, a2, site.hand});
      break;
    }
    case Move::R1Minus: {
      if (site.c1 >= d.crossings.size()) throw InvalidSite("R1-: no such crossing");
      Crossing c = d.crossings[site.c1];
      bool self_kink = c.over == c.under_in && c.over == c.under_out;
      bool kink = c.over == c.under_in || c.over == c.under_out;
      if (!kink || (c.under_in == c.under_out && !self_kink))
        throw InvalidSite("R1-: crossing is not a kink");
      d.crossings.erase(d.crossings.begin() + long(site.c1));
      if (!self_kink) detail::merge_arcs(d, std::min(c.under_in, c.under_out),
                                         std::max(c.under_in, c.under_out));
      break;
    }
    case Move::R2Plus: {
      if (site.arc >= d.arc_count || site.arc2 >= d.arc_count) throw InvalidSite("R2+: no such arc");
      ArcId o = site.arc, u = site.arc2;
      if (detail::arc_is_free(d, u)) {
        ArcId u2 = d.arc_count++;
        d.arc_names.push_back(detail::fresh_arc_name(d));
        d.crossings.push_back({o, u, u2, site.hand});
        d.crossings.push_back({o, u2, u, opposite(site.hand)});
      } else {
        ArcId u2 = d.arc_count++;
        d.arc_names.push_back(detail::fresh_arc_name(d));
        ArcId u3 = d.arc_count++;
        d.arc_names.push_back(detail::fresh_arc_name(d));
        for (auto& c : d.crossings)
          if (c.under_in == u) c.under_in = u3;
        d.crossings.push_back({o, u, u2, site.hand});
        d.crossings.push_back({o, u2, u3, opposite(site.hand)});
      }
      break;
    }
    case Move::R2Minus: {
      if (site.c1 >= d.crossings.size() || site.c2 >= d.crossings.size() || site.c1 == site.c2)
        throw InvalidSite("R2-: bad crossing ids");
      Crossing x = d.crossings[site.c1], y = d.crossings[site.c2];
      if (x.over != y.over || x.handedness != opposite(y.handedness))
        throw InvalidSite("R2-: crossings do not form an opposite-handed pair");
      if (x.under_out != y.under_in) throw InvalidSite("R2-: under strands are not consecutive");
      ArcId m = x.under_out;
      if (m == x.over || m == x.under_in || m == y.under_out)
        throw InvalidSite("R2-: middle arc entangled");
      if (detail::count_uses(d, m) != 2) throw InvalidSite("R2-: middle arc used elsewhere");
      std::size_t hi = std::max(site.c1, site.c2), lo = std::min(site.c1, site.c2);
      d.crossings.erase(d.crossings.begin() + long(hi));
      d.crossings.erase(d.crossings.begin() + long(lo));
      if (x.under_in != y.under_out) {
        detail::merge_arcs(d, std::min(x.under_in, y.under_out), std::max(x.under_in, y.under_out));
        ArcId mm = m > std::max(x.under_in, y.under_out) ? m - 1 : m;
        detail::merge_arcs(d, std::min(x.under_in, y.under_out), mm);  // drop the middle arc
      } else {
        detail::merge_arcs(d, x.under_in, m);
      }
      break;
    }
    case Move::R3: {
      if (site.c1 >= d.crossings.size() || site.c2 >= d.crossings.size() || site.c1 == site.c2)
        throw InvalidSite("R3: bad crossing ids");
      Crossing x = d.crossings[site.c1], y = d.crossings[site.c2];
      if (x.under_out != y.under_in) throw InvalidSite("R3: bottom strand not consecutive");
      if (x.over == y.over) throw InvalidSite("R3: needs three distinct strands");
      ArcId b2 = x.under_out;
      if (detail::count_uses(d, b2) != 2) throw InvalidSite("R3: middle bottom arc used elsewhere");
      // locate the top-mid crossing
      std::optional<std::size_t> tm;
      bool mid_first = false;  // bottom passes under the mid strand before the top one
      for (std::size_t k = 0; k < d.crossings.size() && !tm; ++k) {
        if (k == site.c1 || k == site.c2) continue;
        const Crossing& K = d.crossings[k];
        if (K.over == y.over && (K.under_in == x.over || K.under_out == x.over)) {
          tm = k;
          mid_first = true;
        } else if (K.over == x.over && (K.under_in == y.over || K.under_out == y.over)) {
          tm = k;
          mid_first = false;
        }
      }
      if (!tm) throw InvalidSite("R3: no matching top-mid crossing");
      const Crossing& K = d.crossings[*tm];
      if (mid_first) {
        ArcId m = x.over;
        ArcId other = (K.under_in == m) ? K.under_out : K.under_in;
        d.crossings[site.c1] = {y.over, x.under_in, b2, y.handedness};
        d.crossings[site.c2] = {other, b2, y.under_out, x.handedness};
      } else {
        ArcId m = y.over;
        ArcId other = (K.under_in == m) ? K.under_out : K.under_in;
        d.crossings[site.c1] = {other, x.under_in, b2, y.handedness};
        d.crossings[site.c2] = {x.over, b2, y.under_out, x.handedness};
      }
      break;
    }
  }
  detail::validate_arc_usage(d);
  detail::compute_components(d);
  return d;
}

}  // namespace parq
