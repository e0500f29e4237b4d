#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "parq/diagram.hpp"
#include "parq/finite_quandle.hpp"
#include "parq/parabolic.hpp"
#include "parq/pipeline.hpp"
#include "parq/presentation.hpp"
#include "parq/representation.hpp"

namespace parq {

using Json = nlohmann::ordered_json;

inline Json json_complex(Complex z) { return Json::array({z.real(), z.imag()}); }

inline Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("expected [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

inline Json json_parvec(const ParC& v) {
  return Json{{"x", json_complex(v.x)}, {"y", json_complex(v.y)}};
}

inline Json json_matrix(const Mat2c& m) {
  return Json::array({Json::array({json_complex(m.a), json_complex(m.b)}),
                      Json::array({json_complex(m.c), json_complex(m.d)})});
}

inline Mat2c matrix_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || j[0].size() != 2 || j[1].size() != 2)
    throw std::invalid_argument("expected a 2x2 matrix of [re, im] entries");
  return {complex_from_json(j[0][0]), complex_from_json(j[0][1]),
          complex_from_json(j[1][0]), complex_from_json(j[1][1])};
}

inline Json json_diagram(const LinkDiagram& d) {
  Json j;
  j["arcs"] = d.arc_count;
  j["arc_names"] = d.arc_names;
  j["components"] = d.component_count();
  j["component_of_arc"] = d.component_of_arc;
  Json cs = Json::array();
  for (const auto& c : d.crossings)
    cs.push_back(Json{{"over", c.over},
                      {"under_in", c.under_in},
                      {"under_out", c.under_out},
                      {"handedness", c.handedness == Handedness::Right ? "right" : "left"}});
  j["crossings"] = cs;
  j["pd"] = serialize_pd(d);
  return j;
}

inline Json json_group_presentation(const GroupPresentation& p) {
  Json j;
  j["generators"] = p.generator_names;
  Json rs = Json::array();
  for (const auto& r : p.relators) rs.push_back(group_word_str(r, p.generator_names));
  j["relators"] = rs;
  return j;
}

inline Json json_quandle_presentation(const QuandlePresentation& p) {
  Json j;
  j["generators"] = p.generator_names;
  Json rs = Json::array();
  for (const auto& r : p.relations) rs.push_back(quandle_relation_str(r, p.generator_names));
  j["relations"] = rs;
  return j;
}

inline Json json_finite_quandle(const FiniteQuandle& q) {
  Json j;
  j["name"] = q.name;
  j["size"] = q.n;
  j["table"] = q.table;
  return j;
}

inline Json json_representation(const MoebiusRepresentation& r, double gauss_eps = 1e-9) {
  Json j;
  j["generators"] = r.generator_names;
  Json imgs = Json::object();
  for (std::size_t i = 0; i < r.images.size(); ++i)
    imgs[r.generator_names[i]] = json_matrix(r.images[i]);
  j["images"] = imgs;
  Json rels = Json::array();
  for (const auto& rel : r.relators) rels.push_back(group_word_str(rel, r.generator_names));
  j["relators"] = rels;
  j["relator_residuals"] = r.relator_residuals;
  Json traces = Json::array();
  for (auto t : r.meridian_traces) traces.push_back(json_complex(t));
  j["meridian_traces"] = traces;
  Json fp = Json::array();
  for (auto t : r.fingerprint) fp.push_back(json_complex(t));
  j["fingerprint"] = fp;
  auto ev = gaussian_integer_evidence(r, gauss_eps);
  j["gaussian_evidence"] =
      Json{{"max_distance", ev.max_distance}, {"all_integral", ev.all_integral}};
  return j;
}

inline Json json_solution_set(const SolutionSet& s, bool include_raw) {
  Json j;
  j["generators"] = s.generator_names;
  j["variables"] = s.variables;
  j["simplified_quandle"] = json_quandle_presentation(s.simplified_quandle);
  j["simplified_group"] = json_group_presentation(s.simplified_group);
  switch (s.status) {
    case SolveStatus::Ok: j["status"] = "ok"; break;
    case SolveStatus::Stalled: j["status"] = "stalled"; break;
    case SolveStatus::PositiveDimensional: j["status"] = "positive-dimensional"; break;
  }
  j["raw_count"] = s.raw.size();
  if (include_raw) {
    Json raw = Json::array();
    for (const auto& r : s.raw) {
      Json values = Json::array();
      for (auto z : r.values) values.push_back(json_complex(z));
      raw.push_back(Json{{"branch", r.branch}, {"values", values}, {"residual", r.residual}});
    }
    j["raw_solutions"] = raw;
  }
  Json classes = Json::array();
  for (const auto& cls : s.classes) {
    Json c;
    c["members"] = cls.members.size();
    Json rep = Json::object();
    const auto& rec = s.colorings[cls.representative];
    for (std::size_t a = 0; a < s.generator_names.size(); ++a)
      rep[s.generator_names[a]] = json_parvec(rec.values[a]);
    c["representative_coloring"] = rep;
    Json fp = Json::array();
    for (auto z : cls.fingerprint) fp.push_back(json_complex(z));
    c["fingerprint"] = fp;
    if (cls.conjugate_partner)
      c["conjugate_class"] = *cls.conjugate_partner;
    else
      c["conjugate_class"] = nullptr;
    classes.push_back(c);
  }
  j["classes"] = classes;
  j["conjugate_pair"] =
      s.classes.size() == 2 && s.classes[0].conjugate_partner == std::size_t(1);
  if (!s.notes.empty()) j["notes"] = s.notes;
  return j;
}

// ---------------------------------------------------------------------------
// Representation files (input to `verify`):
// { "schema": 1, "kind": "moebius-representations",
//   "generators": [...], "relators": ["c^-1 b c b^-1 a b c^-1 b^-1 c a^-1", ...],
//   "representations": [ {"name": "...", "images": {gen: 2x2 [re,im] matrix}} ] }

struct RepFile {
  std::vector<std::string> generators;
  std::vector<GroupWord> relators;
  std::vector<std::string> names;
  std::vector<MoebiusRepresentation> reps;
};

inline RepFile parse_rep_file(const Json& j) {
  RepFile f;
  if (!j.contains("generators") || !j.contains("representations"))
    throw std::invalid_argument("representation file needs generators and representations");
  f.generators = j["generators"].get<std::vector<std::string>>();
  if (j.contains("relators"))
    for (const auto& r : j["relators"])
      f.relators.push_back(parse_group_word(r.get<std::string>(), f.generators));
  for (const auto& jr : j["representations"]) {
    f.names.push_back(jr.contains("name") ? jr["name"].get<std::string>() : "");
    std::vector<Mat2c> images;
    for (const auto& g : f.generators) {
      if (!jr["images"].contains(g))
        throw MissingGenerator("representation lacks an image for generator '" + g + "'");
      images.push_back(matrix_from_json(jr["images"][g]));
    }
    f.reps.push_back(make_representation(f.generators, std::move(images), f.relators));
  }
  return f;
}

inline FiniteGroup group_from_json(const Json& j) {
  if (!j.contains("table")) throw std::invalid_argument("group file needs a table");
  auto t = j["table"].get<std::vector<std::vector<std::size_t>>>();
  std::string name = j.contains("name") ? j["name"].get<std::string>() : "group";
  return FiniteGroup(std::move(t), name);
}

inline std::vector<std::size_t> subset_from_json(const Json& j, const FiniteGroup& g) {
  if (j.contains("subset")) return j["subset"].get<std::vector<std::size_t>>();
  std::vector<std::size_t> all(g.n);
  std::iota(all.begin(), all.end(), 0);
  return all;
}

}  // namespace parq
