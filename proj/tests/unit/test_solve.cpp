#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "parq/pipeline.hpp"

using namespace parq;

namespace {

QuandlePresentation borromean_simplified() {
  return eliminate_generators(fundamental_quandle_presentation(builtin(Builtin::Borromean)))
      .presentation;
}

MultiPoly T(const std::vector<std::string>& v) { return MultiPoly::variable(0, v); }
MultiPoly X(const std::vector<std::string>& v) { return MultiPoly::variable(1, v); }
MultiPoly Y(const std::vector<std::string>& v) { return MultiPoly::variable(2, v); }
MultiPoly C(long k, const std::vector<std::string>& v) {
  return MultiPoly::constant(GaussRat(k), v);
}

bool contains_poly(const std::vector<MultiPoly>& ps, const MultiPoly& q) {
  return std::any_of(ps.begin(), ps.end(), [&](const MultiPoly& p) { return p == q; });
}

std::vector<std::vector<Complex>> sorted_fingerprints(const SolutionSet& s) {
  std::vector<std::vector<Complex>> fps;
  for (const auto& c : s.classes) fps.push_back(c.fingerprint);
  std::sort(fps.begin(), fps.end(), [](const auto& a, const auto& b) {
    return detail::fingerprint_less(a, b);
  });
  return fps;
}

bool close(Complex a, Complex b, double eps = 1e-9) { return std::abs(a - b) <= eps; }

}  // namespace

TEST_CASE("build_systems produces one system per sign vector") {
  auto p = borromean_simplified();
  auto systems = build_systems(p);
  CHECK(systems.size() == 8);
  for (const auto& s : systems) {
    CHECK(s.vars == std::vector<std::string>{"t", "x", "y"});
    CHECK(s.polynomials.size() == 6);
    CHECK(s.sign_branch.size() == 3);
  }
}

TEST_CASE("the all-minus branch is the paper's six-equation system, verbatim") {
  auto systems = build_systems(borromean_simplified());
  const auto& allminus = systems.back();
  CHECK(allminus.sign_branch == std::vector<int>{-1, -1, -1});
  const auto v = allminus.vars;
  MultiPoly t = T(v), x = X(v), y = Y(v);
  std::vector<MultiPoly> expected{
      C(2, v) - x * x * t * t + x * x * x * t * t * y,
      t * t * x - C(2, v) * y - t * t * x * x * y + x * y * y,
      C(0, v) - y + x * y * y + C(2, v) * x - x * x * y,
      y * y * y * y + C(2, v) + y * y - x * y * y * y,
      (C(2, v) + t * t + t * t * t * t) * x - t * t * y,
      t * t * t * t * x + (C(2, v) - t * t) * y};
  REQUIRE(allminus.polynomials.size() == 6);
  for (std::size_t i = 0; i < 6; ++i) CHECK(allminus.polynomials[i] == expected[i]);
}

TEST_CASE("the all-plus branch zeroes the pinned constants") {
  auto systems = build_systems(borromean_simplified());
  const auto& allplus = systems.front();
  CHECK(allplus.sign_branch == std::vector<int>{1, 1, 1});
  // first coordinate of the first relation: -x^2 t^2 + x^3 t^2 y, primitive part
  const auto v = allplus.vars;
  MultiPoly t = T(v), x = X(v), y = Y(v);
  CHECK(allplus.polynomials[0] == (C(0, v) - x * x * t * t + x * x * x * t * t * y).primitive_part());
  CHECK(contains_poly(allplus.polynomials, C(1, v) + y * y - x * y));
}

TEST_CASE("a two-generator one-relation presentation gives 2 systems over {t}") {
  QuandlePresentation p;
  p.generator_names = {"a", "b"};
  p.relations.push_back({QuandleWord::op(QuandleWord::leaf(0), QuandleWord::leaf(1)),
                         QuandleWord::leaf(0)});
  auto systems = build_systems(p);
  CHECK(systems.size() == 2);
  for (const auto& s : systems) {
    CHECK(s.vars == std::vector<std::string>{"t"});
    CHECK(s.polynomials.size() == 2);
  }
}

TEST_CASE("gauge fixing needs two generators") {
  QuandlePresentation p;
  p.generator_names = {"a"};
  CHECK_THROWS_AS(build_systems(p), TooFewGenerators);
}

TEST_CASE("all-minus Borromean branch has the eight closed-form solutions") {
  auto systems = build_systems(borromean_simplified());
  auto out = solve_system(systems.back());
  CHECK(out.status == SolveStatus::Ok);
  REQUIRE(out.solutions.size() == 8);
  for (std::size_t i = 0; i < 8; ++i) {
    const auto& s = out.solutions[i];
    REQUIRE(s.size() == 3);
    Complex t = s[0], x = s[1], y = s[2];
    CHECK(close(t * t * t * t, Complex(-4.0)));
    CHECK((close(y, t) || close(y, -t)));
    CHECK(close(x, (Complex(2.0) - t * t) * y / 4.0));
    CHECK(out.residuals[i] <= 1e-12);
  }
  // conjugation closure: conjugating every solution permutes the set
  for (const auto& s : out.solutions) {
    bool found = false;
    for (const auto& s2 : out.solutions)
      found = found || (close(std::conj(s[0]), s2[0]) && close(std::conj(s[1]), s2[1]) &&
                        close(std::conj(s[2]), s2[2]));
    CHECK(found);
  }
}

TEST_CASE("every other Borromean branch is empty") {
  auto systems = build_systems(borromean_simplified());
  for (std::size_t i = 0; i + 1 < systems.size(); ++i) {
    auto out = solve_system(systems[i]);
    CHECK(out.status == SolveStatus::Ok);
    CHECK(out.solutions.empty());
  }
}

TEST_CASE("determinant of the linear pair is a unit multiple of 4 + t^4") {
  auto systems = build_systems(borromean_simplified());
  const auto& sys = systems.back();
  const auto v = sys.vars;
  // the last two equations are linear and homogeneous in (x, y)
  auto linear = [&](const MultiPoly& p) {
    for (const auto& [e, c] : p.terms)
      if (e[1] + e[2] != 1) return false;
    return true;
  };
  std::vector<MultiPoly> lin;
  for (const auto& p : sys.polynomials)
    if (linear(p)) lin.push_back(p);
  REQUIRE(lin.size() == 2);
  auto coeff = [&](const MultiPoly& p, std::size_t var) {
    MultiPoly out;
    out.vars = v;
    for (const auto& [e, c] : p.terms)
      if (e[var] == 1) {
        auto f = e;
        f[var] = 0;
        out.terms.emplace(f, c);
      }
    return out;
  };
  MultiPoly det = det2x2(coeff(lin[0], 1), coeff(lin[0], 2), coeff(lin[1], 1), coeff(lin[1], 2));
  MultiPoly t = T(v);
  CHECK(proportional(det, C(4, v) + t * t * t * t));
}

TEST_CASE("borromean pipeline: 8 raw solutions, 2 conjugate classes") {
  auto s = enumerate_parabolic_colorings(builtin(Builtin::Borromean));
  CHECK(s.status == SolveStatus::Ok);
  CHECK(s.raw.size() == 8);
  for (const auto& r : s.raw) {
    CHECK(r.branch == std::vector<int>{-1, -1, -1});
    CHECK(r.residual <= 1e-12);
  }
  REQUIRE(s.classes.size() == 2);
  CHECK(s.classes[0].members.size() == 4);
  CHECK(s.classes[1].members.size() == 4);
  CHECK(s.classes[0].conjugate_partner == std::size_t(1));
  CHECK(s.classes[1].conjugate_partner == std::size_t(0));

  // the first class carries the representative f1(a)=[1,0], f1(b)=[0,1+i], f1(c)=[1,1+i]
  const auto& rec = s.colorings[s.classes[0].representative];
  REQUIRE(s.quandle_kept.size() == 3);
  auto va = rec.values[s.quandle_kept[0]];
  auto vb = rec.values[s.quandle_kept[1]];
  auto vc = rec.values[s.quandle_kept[2]];
  CHECK(close(va.x, {1, 0}));
  CHECK(close(va.y, {0, 0}));
  CHECK(close(vb.x, {0, 0}));
  CHECK(close(vb.y, {1, 1}));
  CHECK(close(vc.x, {1, 0}));
  CHECK(close(vc.y, {1, 1}));
  for (const auto& rr : s.colorings) {
    CHECK(rr.injective);
    CHECK_FALSE(rr.reducible);
  }
}

TEST_CASE("unknot pipeline yields the single trivial class") {
  auto s = enumerate_parabolic_colorings(builtin(Builtin::Unknot));
  CHECK(s.raw.size() == 1);
  REQUIRE(s.classes.size() == 1);
  auto v = s.colorings[s.classes[0].representative].values[0];
  CHECK(close(v.x, {1, 0}));
  CHECK(close(v.y, {0, 0}));
}

TEST_CASE("hopf pipeline has no injective parabolic colorings") {
  auto s = enumerate_parabolic_colorings(builtin(Builtin::Hopf));
  CHECK(s.status == SolveStatus::Ok);
  CHECK(s.raw.empty());
  CHECK(s.classes.empty());
}

TEST_CASE("trefoil pipeline: one self-conjugate class") {
  auto s = enumerate_parabolic_colorings(builtin(Builtin::Trefoil));
  CHECK(s.status == SolveStatus::Ok);
  CHECK(s.raw.size() == 2);  // t = 1 and t = -1, the same coloring class
  REQUIRE(s.classes.size() == 1);
  CHECK(s.classes[0].conjugate_partner == std::size_t(0));
  for (auto z : s.classes[0].fingerprint) CHECK(std::abs(z.imag()) < 1e-9);
  auto rep = class_representation(s, 0);
  for (double r : rep.relator_residuals) CHECK(r <= 1e-9);
}

TEST_CASE("mirror diagram reproduces the conjugate pair") {
  auto s = enumerate_parabolic_colorings(builtin(Builtin::Borromean));
  auto m = enumerate_parabolic_colorings(builtin(Builtin::BorromeanMirror));
  REQUIRE(m.classes.size() == 2);
  CHECK(m.classes[0].conjugate_partner == std::size_t(1));
  auto fps = sorted_fingerprints(s);
  auto fpm = sorted_fingerprints(m);
  REQUIRE(fps.size() == fpm.size());
  // the mirror's fingerprints are the conjugates of the originals, as a set
  for (std::size_t i = 0; i < fps.size(); ++i) {
    std::vector<Complex> conj_fp;
    for (auto z : fps[i]) conj_fp.push_back(sign_normalize(std::conj(z)));
    bool found = false;
    for (const auto& g : fpm) {
      bool all = g.size() == conj_fp.size();
      for (std::size_t k = 0; all && k < g.size(); ++k) all = close(g[k], conj_fp[k]);
      found = found || all;
    }
    CHECK(found);
  }
}

TEST_CASE("gauge independence: any pinned pair gives the same two classes") {
  auto d = builtin(Builtin::Borromean);
  auto base = sorted_fingerprints(enumerate_parabolic_colorings(d));
  for (std::size_t first = 0; first < 3; ++first)
    for (std::size_t second = 0; second < 3; ++second) {
      if (first == second) continue;
      PipelineOptions opt;
      opt.pin_first = first;
      opt.pin_second = second;
      auto s = enumerate_parabolic_colorings(d, opt);
      REQUIRE(s.classes.size() == 2);
      auto fps = sorted_fingerprints(s);
      for (std::size_t i = 0; i < base.size(); ++i)
        for (std::size_t k = 0; k < base[i].size(); ++k) CHECK(close(fps[i][k], base[i][k]));
    }
}

TEST_CASE("branch union is invariant under relation reordering") {
  auto p = borromean_simplified();
  QuandlePresentation reordered = p;
  std::reverse(reordered.relations.begin(), reordered.relations.end());
  auto collect = [](const QuandlePresentation& pres) {
    std::set<std::string> keys;
    for (const auto& sys : build_systems(pres)) {
      auto out = solve_system(sys);
      for (const auto& s : out.solutions) {
        std::ostringstream os;
        for (auto z : s)
          os << std::round(z.real() * 1e6) / 1e6 << "," << std::round(z.imag() * 1e6) / 1e6
             << ";";
        keys.insert(os.str());
      }
    }
    return keys;
  };
  CHECK(collect(p) == collect(reordered));
}

TEST_CASE("a relation-free system on pinned generators is positive dimensional") {
  QuandlePresentation p;
  p.generator_names = {"a", "b"};
  auto systems = build_systems(p);
  REQUIRE(systems.size() == 1);
  auto out = solve_system(systems[0]);
  CHECK(out.status == SolveStatus::PositiveDimensional);
}
