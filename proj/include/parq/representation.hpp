#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "parq/arith.hpp"
#include "parq/parabolic.hpp"
#include "parq/presentation.hpp"

namespace parq {

struct MissingGenerator : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Default conjugacy-invariant word list: the generators, the products
/// g_i g_j (i < j), the full product g_1...g_n, then the relators.
inline std::vector<GroupWord> default_fingerprint_words(std::size_t ngens,
                                                        const std::vector<GroupWord>& relators) {
  std::vector<GroupWord> words;
  for (std::size_t i = 0; i < ngens; ++i) words.push_back({{i, 1}});
  for (std::size_t i = 0; i < ngens; ++i)
    for (std::size_t j = i + 1; j < ngens; ++j) words.push_back({{i, 1}, {j, 1}});
  if (ngens >= 2) {
    GroupWord all;
    for (std::size_t i = 0; i < ngens; ++i) all.push_back({i, 1});
    words.push_back(all);
  }
  for (const auto& r : relators) words.push_back(r);
  return words;
}

/// Inverses via the adjugate: exact for unimodular matrices, and deviations
/// of non-unimodular input surface as relator residuals.
template <class R>
Mat2<R> evaluate_word(const std::vector<Mat2<R>>& images, const GroupWord& w) {
  Mat2<R> acc = Mat2<R>::identity();
  for (const auto& l : w) {
    if (l.gen >= images.size()) throw MissingGenerator("word references missing generator");
    acc = acc * (l.exp == 1 ? images[l.gen] : images[l.gen].inv_unimodular());
  }
  return acc;
}

/// A representation of a link group into unimodular 2x2 complex matrices,
/// with its verification data.
struct MoebiusRepresentation {
  std::vector<std::string> generator_names;
  std::vector<Mat2c> images;
  std::vector<GroupWord> relators;
  std::vector<double> relator_residuals;   // min-entry distance to ±I
  std::vector<Complex> meridian_traces;    // trace of each generator image
  std::vector<GroupWord> fingerprint_words;
  std::vector<Complex> fingerprint;        // sign-normalized traces
};

inline MoebiusRepresentation make_representation(std::vector<std::string> names,
                                                 std::vector<Mat2c> images,
                                                 std::vector<GroupWord> relators) {
  if (names.size() != images.size())
    throw MissingGenerator("one matrix per generator required");
  MoebiusRepresentation r;
  r.generator_names = std::move(names);
  r.images = std::move(images);
  r.relators = std::move(relators);
  for (const auto& rel : r.relators)
    r.relator_residuals.push_back(pm_identity_residual(evaluate_word(r.images, rel)));
  for (const auto& m : r.images) r.meridian_traces.push_back(m.trace());
  r.fingerprint_words = default_fingerprint_words(r.images.size(), r.relators);
  for (const auto& w : r.fingerprint_words)
    r.fingerprint.push_back(sign_normalize(evaluate_word(r.images, w).trace()));
  return r;
}

/// Parabolic coloring -> representation: one matrix P(f(g)) per generator.
inline MoebiusRepresentation coloring_to_rep(const std::vector<ParC>& values,
                                             const GroupPresentation& g) {
  if (values.size() != g.generator_names.size())
    throw MissingGenerator("coloring does not cover every generator");
  std::vector<Mat2c> images;
  for (const auto& v : values) images.push_back(to_matrix(v));
  return make_representation(g.generator_names, std::move(images), g.relators);
}

inline MoebiusRepresentation conjugate_rep(const MoebiusRepresentation& r) {
  std::vector<Mat2c> images;
  for (const auto& m : r.images) images.push_back(conj(m));
  return make_representation(r.generator_names, std::move(images), r.relators);
}

/// Fingerprint comparison within tolerance; requires matching word lists.
inline bool same_rep_up_to_conjugacy(const MoebiusRepresentation& r1,
                                     const MoebiusRepresentation& r2, double eps) {
  if (r1.generator_names.size() != r2.generator_names.size() ||
      r1.fingerprint.size() != r2.fingerprint.size())
    return false;
  for (std::size_t i = 0; i < r1.fingerprint.size(); ++i) {
    double scale = std::max({1.0, std::abs(r1.fingerprint[i]), std::abs(r2.fingerprint[i])});
    if (std::abs(r1.fingerprint[i] - r2.fingerprint[i]) > eps * scale) return false;
  }
  return true;
}

/// fp(r2) == sign-normalized conjugate of fp(r1): the two live in the PSL
/// sign quotient, so traces are compared after normalization.
inline bool conjugate_pair(const MoebiusRepresentation& r1, const MoebiusRepresentation& r2,
                           double eps) {
  if (r1.fingerprint.size() != r2.fingerprint.size()) return false;
  for (std::size_t i = 0; i < r1.fingerprint.size(); ++i) {
    Complex want = sign_normalize(std::conj(r1.fingerprint[i]));
    double scale = std::max(1.0, std::abs(want));
    if (std::abs(want - r2.fingerprint[i]) > eps * scale) return false;
  }
  return true;
}

struct GaussianEvidence {
  std::vector<std::array<double, 4>> entry_distances;  // per matrix: a,b,c,d
  double max_distance = 0.0;
  bool all_integral = false;  // evidence for discreteness, not a proof
};

inline GaussianEvidence gaussian_integer_evidence(const MoebiusRepresentation& r,
                                                  double eps = 1e-9) {
  GaussianEvidence ev;
  for (const auto& m : r.images) {
    std::array<double, 4> d{gaussian_integer_distance(m.a), gaussian_integer_distance(m.b),
                            gaussian_integer_distance(m.c), gaussian_integer_distance(m.d)};
    for (double x : d) ev.max_distance = std::max(ev.max_distance, x);
    ev.entry_distances.push_back(d);
  }
  ev.all_integral = ev.max_distance <= eps;
  return ev;
}

// ---------------------------------------------------------------------------
// The two Borromean reference triples (exact Gaussian-integer entries).
// The displayed triple lists the images in the order (rho(a), rho(c),
// rho(b)): the triple-commutator relators hold exactly for the assignment
// a -> [[2+i,2i],[-1,-i]], b -> [[1,0],[-1,1]], c -> [[1,2i],[0,1]].

inline std::array<Mat2q, 3> reference_borromean_triple_exact(bool conjugated = false) {
  auto gr = [&](long re, long im) {
    return GaussRat(Rational(re), Rational(conjugated ? -im : im));
  };
  Mat2q a{gr(2, 1), gr(0, 2), gr(-1, 0), gr(0, -1)};
  Mat2q b{gr(1, 0), gr(0, 0), gr(-1, 0), gr(1, 0)};
  Mat2q c{gr(1, 0), gr(0, 2), gr(0, 0), gr(1, 0)};
  return {a, b, c};
}

/// Both reference representations over a given simplified Borromean group
/// presentation (generators a, b, c).
inline std::pair<MoebiusRepresentation, MoebiusRepresentation> reference_borromean_reps(
    const GroupPresentation& simplified) {
  if (simplified.generator_names.size() != 3)
    throw MissingGenerator("reference reps need the 3-generator presentation");
  auto mk = [&](bool conjd) {
    auto t = reference_borromean_triple_exact(conjd);
    std::vector<Mat2c> images{to_complex(t[0]), to_complex(t[1]), to_complex(t[2])};
    return make_representation(simplified.generator_names, std::move(images),
                               simplified.relators);
  };
  return {mk(false), mk(true)};
}

}  // namespace parq
