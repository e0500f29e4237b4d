#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "parq/pipeline.hpp"
#include "parq/representation.hpp"

using namespace parq;

namespace {

GroupPresentation borromean_group() {
  return eliminate_generators(wirtinger_presentation(builtin(Builtin::Borromean))).presentation;
}

bool is_pm_identity_exact(const Mat2q& m) {
  Mat2q id = Mat2q::identity();
  Mat2q nid{GaussRat(-1), GaussRat(0), GaussRat(0), GaussRat(-1)};
  return m == id || m == nid;
}

}  // namespace

TEST_CASE("reference triple entries: unimodular, parabolic, Gaussian integers") {
  for (bool conjd : {false, true}) {
    auto t = reference_borromean_triple_exact(conjd);
    for (const auto& m : t) {
      CHECK(m.det() == GaussRat(1));
      CHECK(m.trace() == GaussRat(2));
      for (const auto& e : {m.a, m.b, m.c, m.d}) {
        CHECK(boost::multiprecision::denominator(e.re) == 1);
        CHECK(boost::multiprecision::denominator(e.im) == 1);
      }
    }
  }
  // the displayed first matrix: trace (2+i) + (-i) = 2, det 1
  auto t = reference_borromean_triple_exact(false);
  CHECK(t[0].a == GaussRat(Rational(2), Rational(1)));
  CHECK(t[0].d == GaussRat(Rational(0), Rational(-1)));
}

TEST_CASE("reference triples satisfy the triple-commutator relators exactly") {
  auto gp = borromean_group();
  for (bool conjd : {false, true}) {
    auto t = reference_borromean_triple_exact(conjd);
    std::vector<Mat2q> images{t[0], t[1], t[2]};
    for (const auto& r : gp.relators)
      CHECK(is_pm_identity_exact(evaluate_word(images, r)));
  }
}

TEST_CASE("reference representations verify numerically") {
  auto gp = borromean_group();
  auto [r1, r2] = reference_borromean_reps(gp);
  for (const auto& r : {r1, r2}) {
    for (double res : r.relator_residuals) CHECK(res == 0.0);  // integer arithmetic
    for (auto tr : r.meridian_traces) CHECK(std::abs(tr - Complex(2.0)) < 1e-15);
    auto ev = gaussian_integer_evidence(r);
    CHECK(ev.all_integral);
    CHECK(ev.max_distance == 0.0);
  }
  CHECK(conjugate_pair(r1, r2, 1e-12));
  CHECK_FALSE(same_rep_up_to_conjugacy(r1, r2, 1e-9));
}

TEST_CASE("conjugate_rep is an involution exchanging the pair") {
  auto gp = borromean_group();
  auto [r1, r2] = reference_borromean_reps(gp);
  auto c = conjugate_rep(r1);
  CHECK(same_rep_up_to_conjugacy(c, r2, 1e-12));
  CHECK(same_rep_up_to_conjugacy(conjugate_rep(c), r1, 1e-12));
  CHECK(c.relator_residuals == r1.relator_residuals);
}

TEST_CASE("computed representation matches the reference under the cyclic matchings") {
  auto s = enumerate_parabolic_colorings(builtin(Builtin::Borromean));
  REQUIRE(s.classes.size() == 2);
  auto computed = class_representation(s, 0);
  auto gp = s.simplified_group;
  auto triple = reference_borromean_triple_exact(false);
  std::vector<Mat2c> ref{to_complex(triple[0]), to_complex(triple[1]), to_complex(triple[2])};

  std::vector<std::size_t> perm{0, 1, 2};
  std::vector<std::vector<std::size_t>> matching;
  std::sort(perm.begin(), perm.end());
  do {
    std::vector<Mat2c> images{ref[perm[0]], ref[perm[1]], ref[perm[2]]};
    auto cand = make_representation(gp.generator_names, images, gp.relators);
    if (same_rep_up_to_conjugacy(computed, cand, 1e-9)) matching.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  // the Borromean symmetry allows exactly the three cyclic matchings
  CHECK(matching == std::vector<std::vector<std::size_t>>{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
}

TEST_CASE("representations from colorings verify relators and traces") {
  for (auto which : {Builtin::Borromean, Builtin::Trefoil}) {
    auto s = enumerate_parabolic_colorings(builtin(which));
    for (std::size_t c = 0; c < s.classes.size(); ++c) {
      auto rep = class_representation(s, c);
      for (double r : rep.relator_residuals) CHECK(r <= 1e-9);
      for (auto tr : rep.meridian_traces)
        CHECK(std::min(std::abs(tr - 2.0), std::abs(tr + 2.0)) <= 1e-12);
    }
  }
}

TEST_CASE("constant colorings give abelian images with zero residuals") {
  auto gp = borromean_group();
  std::vector<ParC> constant(3, ParC{Complex(1.0), Complex(0.0)});
  auto rep = coloring_to_rep(constant, gp);
  for (double r : rep.relator_residuals) CHECK(r == 0.0);
}

TEST_CASE("trace invariance under global conjugation") {
  auto gp = borromean_group();
  auto [r1, r2] = reference_borromean_reps(gp);
  (void)r2;
  Mat2c g{{2.0, 1.0}, {1.0, 0.0}, {1.0, -1.0}, {1.0, 0.0}};  // det != 0
  Complex det = g.det();
  Complex scale = std::sqrt(det);
  Mat2c gu{g.a / scale, g.b / scale, g.c / scale, g.d / scale};  // det 1
  std::vector<Mat2c> conj_images;
  for (const auto& m : r1.images) conj_images.push_back(gu.inv_unimodular() * m * gu);
  auto moved = make_representation(r1.generator_names, conj_images, r1.relators);
  CHECK(same_rep_up_to_conjugacy(r1, moved, 1e-9));
}

TEST_CASE("gaussian evidence flags perturbed matrices") {
  auto gp = borromean_group();
  auto [r1, r2] = reference_borromean_reps(gp);
  (void)r2;
  auto images = r1.images;
  images[1].b += Complex(0.3, 0.0);
  auto bad = make_representation(r1.generator_names, images, r1.relators);
  auto ev = gaussian_integer_evidence(bad);
  CHECK_FALSE(ev.all_integral);
  CHECK(ev.max_distance == Catch::Approx(0.3));
}

TEST_CASE("same_rep_up_to_conjugacy is an equivalence on the produced reps") {
  auto s = enumerate_parabolic_colorings(builtin(Builtin::Borromean));
  std::vector<MoebiusRepresentation> reps;
  for (std::size_t c = 0; c < s.classes.size(); ++c) reps.push_back(class_representation(s, c));
  auto gp = s.simplified_group;
  auto [q1, q2] = reference_borromean_reps(gp);
  reps.push_back(q1);
  reps.push_back(q2);
  for (const auto& a : reps) CHECK(same_rep_up_to_conjugacy(a, a, 1e-9));
  for (const auto& a : reps)
    for (const auto& b : reps) {
      CHECK(same_rep_up_to_conjugacy(a, b, 1e-9) == same_rep_up_to_conjugacy(b, a, 1e-9));
      for (const auto& c : reps)
        if (same_rep_up_to_conjugacy(a, b, 1e-9) && same_rep_up_to_conjugacy(b, c, 1e-9))
          CHECK(same_rep_up_to_conjugacy(a, c, 1e-9));
    }
}

TEST_CASE("missing generators are reported") {
  auto gp = borromean_group();
  std::vector<ParC> short_values(2, ParC{Complex(1.0), Complex(0.0)});
  CHECK_THROWS_AS(coloring_to_rep(short_values, gp), MissingGenerator);
}
