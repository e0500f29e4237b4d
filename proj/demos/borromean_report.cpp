// Walks the whole pipeline on the Borromean rings and prints a short report:
// presentations, the sign-branch systems, the eight raw solutions, the two
// conjugate representation classes and their verification data.

#include <cstdio>

#include "parq/pipeline.hpp"

using namespace parq;

int main() {
  LinkDiagram d = builtin(Builtin::Borromean);
  std::printf("Borromean rings: %zu arcs, %zu crossings, %zu components\n", d.arc_count,
              d.crossings.size(), d.component_count());
  std::printf("PD: %s\n\n", serialize_pd(d).c_str());

  auto qe = eliminate_generators(fundamental_quandle_presentation(d));
  std::printf("fundamental quandle (simplified):\n");
  for (const auto& r : qe.presentation.relations)
    std::printf("  %s\n", quandle_relation_str(r, qe.presentation.generator_names).c_str());

  auto ge = eliminate_generators(wirtinger_presentation(d));
  std::printf("link group (simplified):\n");
  for (const auto& r : ge.presentation.relators)
    std::printf("  %s = e\n", group_word_str(r, ge.presentation.generator_names).c_str());

  auto systems = build_systems(qe.presentation);
  std::printf("\nall-minus sign branch (%zu branches total):\n", systems.size());
  for (const auto& p : systems.back().polynomials) std::printf("  %s = 0\n", p.str().c_str());

  SolutionSet s = enumerate_parabolic_colorings(d);
  std::printf("\nraw solutions over (t, x, y): %zu\n", s.raw.size());
  for (const auto& r : s.raw) {
    std::printf("  ");
    for (auto z : r.values) std::printf("(%+.4f%+.4fi) ", z.real(), z.imag());
    std::printf(" residual %.1e\n", r.residual);
  }

  std::printf("\nconjugacy classes: %zu\n", s.classes.size());
  for (std::size_t c = 0; c < s.classes.size(); ++c) {
    auto rep = class_representation(s, c);
    std::printf("class %zu: representative coloring", c);
    for (auto a : s.quandle_kept) {
      const auto& v = s.colorings[s.classes[c].representative].values[a];
      std::printf("  %s -> [%.4g%+.4gi, %.4g%+.4gi]", s.generator_names[a].c_str(), v.x.real(),
                  v.x.imag(), v.y.real(), v.y.imag());
    }
    std::printf("\n  relator residuals:");
    for (double r : rep.relator_residuals) std::printf(" %.2e", r);
    auto ev = gaussian_integer_evidence(rep);
    std::printf("\n  gaussian-integer evidence: max entry distance %.2e\n", ev.max_distance);
  }
  return 0;
}
