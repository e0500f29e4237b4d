#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "parq/diagram.hpp"
#include "parq/parabolic.hpp"
#include "parq/presentation.hpp"
#include "parq/representation.hpp"
#include "parq/solve.hpp"

namespace parq {

struct PipelineOptions {
  SolveOptions solve;
  double eps_fp = 1e-8;       // fingerprint matching / injectivity tolerance
  std::size_t pin_first = 0;   // which kept generators receive [1,0] and [0,t]
  std::size_t pin_second = 1;
  std::size_t max_branches = 1024;
};

struct RawSolution {
  std::vector<int> branch;        // sign vector, one ±1 per relation
  std::vector<Complex> values;    // over the system variables
  double residual = 0.0;
};

struct ColoringRecord {
  std::vector<ParC> values;  // one per original generator (arc), sign-normalized
  bool injective = false;
  bool reducible = false;
  std::vector<Complex> fingerprint;
};

struct ConjugacyClass {
  std::vector<std::size_t> members;  // indices into colorings
  std::size_t representative = 0;
  std::vector<Complex> fingerprint;
  std::optional<std::size_t> conjugate_partner;
};

struct SolutionSet {
  std::vector<std::string> generator_names;  // all arcs
  std::vector<std::string> variables;
  QuandlePresentation simplified_quandle;
  GroupPresentation simplified_group;
  std::vector<std::size_t> quandle_kept;  // arc ids of the gauge generators
  std::vector<std::size_t> group_kept;    // arc ids of the group generators
  std::vector<RawSolution> raw;
  std::vector<ColoringRecord> colorings;  // aligned with raw
  std::vector<ConjugacyClass> classes;    // injective + irreducible only
  SolveStatus status = SolveStatus::Ok;
  std::vector<std::string> notes;
};

/// Traces of the images of a word list, sign-normalized.
inline std::vector<Complex> trace_fingerprint(const std::vector<Mat2c>& images,
                                              const std::vector<GroupWord>& words) {
  std::vector<Complex> out;
  for (const auto& w : words) out.push_back(sign_normalize(evaluate_word(images, w).trace()));
  return out;
}

namespace detail {

inline bool fingerprints_close(const std::vector<Complex>& a, const std::vector<Complex>& b,
                               double eps) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    double scale = std::max({1.0, std::abs(a[i]), std::abs(b[i])});
    if (std::abs(a[i] - b[i]) > eps * scale) return false;
  }
  return true;
}

inline bool fingerprint_less(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    if (a[i].real() != b[i].real()) return a[i].real() < b[i].real();
    if (a[i].imag() != b[i].imag()) return a[i].imag() < b[i].imag();
  }
  return a.size() < b.size();
}

inline bool coloring_less(const std::vector<ParC>& a, const std::vector<ParC>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (auto [x, y] : {std::pair{a[i].x, b[i].x}, std::pair{a[i].y, b[i].y}}) {
      if (x.real() != y.real()) return x.real() < y.real();
      if (x.imag() != y.imag()) return x.imag() < y.imag();
    }
  }
  return false;
}

}  // namespace detail

/// Full pipeline: fundamental quandle -> simplification -> gauge-fixed sign
/// branch systems -> roots -> colorings of every arc -> injectivity and
/// irreducibility filter -> conjugacy classes by trace fingerprint ->
/// conjugate pairing.
inline SolutionSet enumerate_parabolic_colorings(const LinkDiagram& d,
                                                 const PipelineOptions& opt = {}) {
  SolutionSet out;
  out.generator_names = d.arc_names;

  QuandleElimination qe = eliminate_generators(fundamental_quandle_presentation(d));
  GroupElimination ge = eliminate_generators(wirtinger_presentation(d));
  out.simplified_quandle = qe.presentation;
  out.simplified_group = ge.presentation;
  out.quandle_kept = qe.kept;
  out.group_kept = ge.kept;

  std::size_t nkept = qe.kept.size();
  auto extend_coloring = [&](const std::vector<ParC>& kept_values) {
    std::vector<ParC> all(d.arc_count);
    for (std::size_t i = 0; i < nkept; ++i) all[qe.kept[i]] = kept_values[i];
    for (const auto& [gen, def] : qe.defining) {
      ParC v = detail::eval_par_numeric(def, kept_values);
      all[gen] = v;
    }
    for (auto& v : all) v = normalize_sign(v, 1e-12);
    return all;
  };

  auto fingerprint_of = [&](const std::vector<ParC>& all) {
    std::vector<Mat2c> images;
    for (auto a : ge.kept) images.push_back(to_matrix(all[a]));
    return trace_fingerprint(images,
                             default_fingerprint_words(ge.kept.size(),
                                                       ge.presentation.relators));
  };

  if (nkept == 0) return out;

  if (nkept == 1) {
    // single-generator gauge case: one coloring, no constraints
    out.variables = {};
    out.raw.push_back({{}, {}, 0.0});
    ColoringRecord rec;
    rec.values = extend_coloring({ParC{Complex(1.0), Complex(0.0)}});
    rec.injective = true;
    rec.reducible = false;  // a single parabolic cannot witness reducibility
    rec.fingerprint = fingerprint_of(rec.values);
    out.colorings.push_back(rec);
    out.classes.push_back({{0}, 0, out.colorings[0].fingerprint, std::nullopt});
    return out;
  }

  auto systems = build_systems(qe.presentation, opt.pin_first, opt.pin_second, opt.max_branches);
  out.variables = systems.front().vars;
  const auto& pins = systems.front().pins;

  for (const auto& sys : systems) {
    SolveOutcome so = solve_system(sys, opt.solve);
    if (so.status != SolveStatus::Ok) out.status = so.status;
    for (auto& n : so.notes) out.notes.push_back(n);
    for (std::size_t s = 0; s < so.solutions.size(); ++s) {
      out.raw.push_back({sys.sign_branch, so.solutions[s], so.residuals[s]});

      std::vector<ParC> kept_values(nkept);
      for (const auto& pin : pins) {
        ParC v;
        switch (pin.kind) {
          case GaugePin::UnitX: v = {Complex(1.0), Complex(0.0)}; break;
          case GaugePin::Param: v = {Complex(0.0), so.solutions[s][0]}; break;
          case GaugePin::Free:
            v = {so.solutions[s][pin.xvar], so.solutions[s][pin.yvar]};
            break;
        }
        kept_values[pin.generator] = v;
      }

      ColoringRecord rec;
      rec.values = extend_coloring(kept_values);
      rec.injective = true;
      for (std::size_t i = 0; i < rec.values.size() && rec.injective; ++i)
        for (std::size_t j = i + 1; j < rec.values.size() && rec.injective; ++j)
          if (projective_eq(rec.values[i], rec.values[j], opt.eps_fp)) rec.injective = false;
      // reducible: all images share the parabolic fixed point (all vectors parallel)
      rec.reducible = rec.values.size() >= 2;
      for (std::size_t i = 1; i < rec.values.size() && rec.reducible; ++i) {
        Complex cross = rec.values[0].x * rec.values[i].y - rec.values[i].x * rec.values[0].y;
        double scale = std::max(1.0, norm2(rec.values[0]) * norm2(rec.values[i]));
        if (std::abs(cross) > opt.eps_fp * scale) rec.reducible = false;
      }
      rec.fingerprint = fingerprint_of(rec.values);
      out.colorings.push_back(rec);
    }
  }

  // conjugacy classes over injective, irreducible colorings
  for (std::size_t i = 0; i < out.colorings.size(); ++i) {
    const auto& rec = out.colorings[i];
    if (!rec.injective || rec.reducible) continue;
    bool placed = false;
    for (auto& cls : out.classes)
      if (detail::fingerprints_close(cls.fingerprint, rec.fingerprint, opt.eps_fp)) {
        cls.members.push_back(i);
        placed = true;
        break;
      }
    if (!placed) out.classes.push_back({{i}, i, rec.fingerprint, std::nullopt});
  }
  for (auto& cls : out.classes) {
    cls.representative = cls.members.front();
    for (auto m : cls.members)
      if (detail::coloring_less(out.colorings[m].values, out.colorings[cls.representative].values))
        cls.representative = m;
  }
  std::sort(out.classes.begin(), out.classes.end(),
            [](const ConjugacyClass& a, const ConjugacyClass& b) {
              return detail::fingerprint_less(a.fingerprint, b.fingerprint);
            });
  for (std::size_t i = 0; i < out.classes.size(); ++i) {
    for (std::size_t j = 0; j < out.classes.size(); ++j) {
      std::vector<Complex> want;
      for (auto z : out.classes[i].fingerprint) want.push_back(sign_normalize(std::conj(z)));
      if (detail::fingerprints_close(want, out.classes[j].fingerprint, opt.eps_fp)) {
        out.classes[i].conjugate_partner = j;
        break;
      }
    }
  }
  return out;
}

/// Representation of a class representative over the simplified group
/// presentation.
inline MoebiusRepresentation class_representation(const SolutionSet& s, std::size_t cls) {
  const auto& rec = s.colorings[s.classes[cls].representative];
  std::vector<ParC> values;
  for (auto a : s.group_kept) values.push_back(rec.values[a]);
  return coloring_to_rep(values, s.simplified_group);
}

}  // namespace parq
