#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "parq/diagram.hpp"
#include "parq/finite_quandle.hpp"

using namespace parq;

namespace {

// brute-force oracle: check every assignment against every crossing
std::size_t brute_count(const LinkDiagram& d, const FiniteQuandle& q) {
  std::size_t count = 0;
  std::vector<std::size_t> f(d.arc_count, 0);
  while (true) {
    bool ok = true;
    for (const auto& c : d.crossings) {
      std::size_t expect = c.handedness == Handedness::Right ? q.op(f[c.under_in], f[c.over])
                                                             : q.op_inv(f[c.under_in], f[c.over]);
      if (f[c.under_out] != expect) {
        ok = false;
        break;
      }
    }
    count += ok;
    std::size_t i = 0;
    while (i < d.arc_count && ++f[i] == q.n) f[i++] = 0;
    if (i == d.arc_count) break;
  }
  return count;
}

std::vector<FiniteQuandle> small_quandles() {
  std::vector<FiniteQuandle> qs;
  qs.push_back(make_trivial(2));
  qs.push_back(make_trivial(3));
  for (std::size_t n = 3; n <= 6; ++n) qs.push_back(make_dihedral(n));
  qs.push_back(make_eisermann(2, 3));
  return qs;
}

}  // namespace

TEST_CASE("verify_quandle accepts the families and reports violations") {
  CHECK(verify_quandle(make_trivial(4).table).empty());
  CHECK(verify_quandle(make_dihedral(3).table).empty());
  CHECK(verify_quandle(make_dihedral(6).table).empty());
  CHECK(verify_quandle(make_eisermann(2, 3).table).empty());
  CHECK(verify_quandle(make_eisermann(1, 2).table).empty());

  auto t = make_trivial(2).table;
  t[0][0] = 1;  // break idempotence (and column 0 stays a permutation)
  auto bad = verify_quandle(t);
  bool idem = false;
  for (const auto& v : bad) idem = idem || (v.axiom == 1 && v.i == 0);
  CHECK(idem);

  auto s = make_dihedral(3).table;
  s[0][1] = s[1][1];  // column 1 no longer a permutation
  bad = verify_quandle(s);
  bool perm = false;
  for (const auto& v : bad) perm = perm || v.axiom == 2;
  CHECK(perm);
}

TEST_CASE("dihedral and eisermann sample values") {
  auto d3 = make_dihedral(3);
  CHECK(d3.op(1, 2) == 0);  // 2*2-1 mod 3
  auto e23 = make_eisermann(2, 3);
  CHECK(e23.op(0, 3) == 1);  // a in Z_2, b in Z_3: a+1 mod 2
  CHECK(e23.op(1, 4) == 0);
  CHECK(e23.op(3, 0) == 4);  // Z_3 side increments mod 3
  CHECK(e23.op(4, 4) == 4);  // same part: trivial
}

TEST_CASE("conjugation quandle of S3 transpositions is dihedral(3)") {
  auto s3 = group_symmetric(3);
  // transpositions = non-identity involutions
  std::vector<std::size_t> transpositions;
  for (std::size_t g = 0; g < s3.n; ++g)
    if (g != s3.identity && s3.mul(g, g) == s3.identity) transpositions.push_back(g);
  REQUIRE(transpositions.size() == 3);
  auto q = make_conj(s3, transpositions, 1);
  auto d3 = make_dihedral(3);
  // exhaustive isomorphism search over the 3! bijections
  std::vector<std::size_t> perm{0, 1, 2};
  bool iso = false;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < 3 && ok; ++i)
      for (std::size_t j = 0; j < 3 && ok; ++j)
        ok = perm[q.op(i, j)] == d3.op(perm[i], perm[j]);
    iso = iso || ok;
  } while (std::next_permutation(perm.begin(), perm.end()));
  CHECK(iso);
}

TEST_CASE("make_conj rejects subsets that are not closed") {
  auto s3 = group_symmetric(3);
  std::vector<std::size_t> one_transposition;
  for (std::size_t g = 0; g < s3.n; ++g)
    if (g != s3.identity && s3.mul(g, g) == s3.identity) {
      one_transposition.push_back(g);
      break;
    }
  CHECK_THROWS_AS(make_conj(s3, one_transposition, 1), SubsetNotClosed);
}

TEST_CASE("coloring counts match the brute-force oracle") {
  auto d3 = make_dihedral(3);
  auto trefoil = builtin(Builtin::Trefoil);
  auto colorings = enumerate_colorings(trefoil, d3);
  CHECK(colorings.size() == 9);
  CHECK(colorings.size() == brute_count(trefoil, d3));

  auto borromean = builtin(Builtin::Borromean);
  auto bc = enumerate_colorings(borromean, d3);
  CHECK(bc.size() == 3);
  CHECK(bc.size() == brute_count(borromean, d3));
  for (const auto& f : bc) {  // all constant
    for (auto v : f) CHECK(v == f[0]);
  }

  auto unknot = builtin(Builtin::Unknot);
  CHECK(enumerate_colorings(unknot, make_trivial(4)).size() == 4);

  // spot check more diagrams and quandles against the oracle
  for (auto which : {Builtin::Hopf, Builtin::Trefoil}) {
    auto d = builtin(which);
    for (const auto& q : small_quandles())
      CHECK(enumerate_colorings(d, q).size() == brute_count(d, q));
  }
}

TEST_CASE("colorings are sorted and deterministic") {
  auto cs = enumerate_colorings(builtin(Builtin::Trefoil), make_dihedral(3));
  CHECK(std::is_sorted(cs.begin(), cs.end()));
}

TEST_CASE("tricolorability") {
  CHECK(is_tricolorable(builtin(Builtin::Trefoil)));
  CHECK_FALSE(is_tricolorable(builtin(Builtin::Unknot)));
  CHECK_FALSE(is_tricolorable(builtin(Builtin::Borromean)));
  CHECK_FALSE(is_tricolorable(builtin(Builtin::Hopf)));
}

TEST_CASE("coloring counts are Reidemeister invariants") {
  auto quandles = small_quandles();
  for (auto which : {Builtin::Unknot, Builtin::Trefoil, Builtin::Hopf, Builtin::Borromean}) {
    auto d = builtin(which);
    std::vector<LinkDiagram> moved;
    moved.push_back(apply_reidemeister(d, Move::R1Plus, MoveSite::kink(0, true, Handedness::Left)));
    moved.push_back(
        apply_reidemeister(d, Move::R1Plus, MoveSite::kink(0, false, Handedness::Right)));
    if (d.arc_count >= 2)
      moved.push_back(apply_reidemeister(d, Move::R2Plus, MoveSite::poke(0, 1, Handedness::Right)));
    moved.push_back(apply_reidemeister(d, Move::R2Plus, MoveSite::poke(0, 0, Handedness::Left)));
    // R3 wherever a site exists after a preparatory poke
    if (d.arc_count >= 2) {
      auto p = apply_reidemeister(d, Move::R2Plus, MoveSite::poke(0, 1, Handedness::Right));
      for (std::size_t i = 0; i < p.crossings.size(); ++i)
        for (std::size_t j = 0; j < p.crossings.size(); ++j) {
          if (i == j) continue;
          try {
            moved.push_back(apply_reidemeister(p, Move::R3, MoveSite::triangle(i, j)));
          } catch (const InvalidSite&) {
          }
        }
    }
    for (const auto& q : quandles) {
      auto base = enumerate_colorings(d, q).size();
      for (const auto& m : moved) CHECK(enumerate_colorings(m, q).size() == base);
    }
  }
}

TEST_CASE("presentation colorings agree with diagram colorings") {
  for (auto which : {Builtin::Trefoil, Builtin::Hopf, Builtin::Borromean}) {
    auto d = builtin(which);
    auto qp = fundamental_quandle_presentation(d);
    auto qe = eliminate_generators(qp);
    for (const auto& q : small_quandles()) {
      auto diag = enumerate_colorings(d, q).size();
      CHECK(enumerate_colorings(qp, q).size() == diag);
      // elimination preserves the coloring count (bijection)
      CHECK(enumerate_colorings(qe.presentation, q).size() == diag);
    }
  }
}

TEST_CASE("adjoint presentation shape") {
  auto d3 = make_dihedral(3);
  auto p = adjoint_presentation(d3);
  CHECK(p.generator_names.size() == 3);
  CHECK(p.relators.size() == 9);
  std::size_t tautological = 0;
  for (const auto& r : p.relators) tautological += free_reduce(r).empty();
  CHECK(tautological == 3);  // the a = b cases

  auto q = make_eisermann(1, 2);
  CHECK(adjoint_presentation(q).relators.size() == q.n * q.n);
}

TEST_CASE("hom-count adjointness identity on standard quandles") {
  auto z2 = group_cyclic(2);
  auto z3 = group_cyclic(3);
  auto z4 = group_cyclic(4);
  auto s3 = group_symmetric(3);

  // one free generator: |Hom| = |G| on both sides
  auto t1 = make_trivial(1);
  CHECK(count_quandle_homs(t1, s3) == 6);
  CHECK(count_group_homs(adjoint_presentation(t1), s3) == 6);

  for (const auto& q : {make_trivial(2), make_dihedral(3), make_eisermann(1, 2),
                        make_eisermann(2, 2), make_trivial(4)}) {
    auto adj = adjoint_presentation(q);
    for (const auto& g : {z2, z3, z4, s3})
      CHECK(count_quandle_homs(q, g) == count_group_homs(adj, g));
  }
}

TEST_CASE("search space bound throws") {
  CHECK_THROWS_AS(count_quandle_homs(make_trivial(12), group_symmetric(4)),
                  SearchSpaceTooLarge);
}

TEST_CASE("inner group orders") {
  CHECK(inner_group(make_trivial(5)).size() == 1);
  CHECK(inner_group(make_dihedral(3)).size() == 6);  // the three reflections generate S3
  CHECK(inner_group(make_dihedral(4)).size() == 4);
  for (const auto& b : inner_group(make_dihedral(4))) CHECK(b.size() == 4);
}

TEST_CASE("adjoint right action folds the word") {
  auto d5 = make_dihedral(5);
  CHECK(act_right(0, {}, d5) == 0);
  CHECK(act_right(3, {{1, 1}, {1, -1}}, d5) == 3);
  CHECK(act_right(0, {{1, 1}, {2, 1}}, d5) == 2);

  // action property: acting by w1.w2 = acting by w1 then w2
  std::mt19937 rng(99);
  for (const auto& q : small_quandles()) {
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<std::pair<std::size_t, int>> w1, w2;
      for (int i = 0; i < 4; ++i) {
        w1.push_back({rng() % q.n, rng() % 2 ? 1 : -1});
        w2.push_back({rng() % q.n, rng() % 2 ? 1 : -1});
      }
      auto w12 = w1;
      w12.insert(w12.end(), w2.begin(), w2.end());
      std::size_t x = rng() % q.n;
      CHECK(act_right(x, w12, q) == act_right(act_right(x, w1, q), w2, q));
    }
  }
}

TEST_CASE("translation composition identity inn(a*b)(c)") {
  for (const auto& q : small_quandles()) {
    for (std::size_t a = 0; a < q.n; ++a)
      for (std::size_t b = 0; b < q.n; ++b)
        for (std::size_t c = 0; c < q.n; ++c)
          CHECK(q.op(q.op_inv(q.op_inv(c, b), a), b) == q.op_inv(c, q.op(a, b)));
  }
}
