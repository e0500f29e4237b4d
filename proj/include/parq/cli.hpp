#pragma once

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "parq/json_io.hpp"
#include "parq/pipeline.hpp"

namespace parq {

// Exit codes: 0 success, 1 verification failure, 2 input error, 3 solver failure.
namespace exit_code {
constexpr int ok = 0;
constexpr int verification = 1;
constexpr int input = 2;
constexpr int solver = 3;
}  // namespace exit_code

namespace detail {

inline std::string read_stream(std::istream& in) {
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline std::string read_file(const std::string& path) {
  if (path == "-") return read_stream(std::cin);
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open '" + path + "'");
  return read_stream(f);
}

}  // namespace detail

/// Quandle spec grammar: trivial:n | dihedral:n | eisermann:m,n | conj:<groupfile>:k
inline FiniteQuandle parse_quandle_spec(const std::string& spec) {
  auto split = [](const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
      auto pos = s.find(sep, start);
      out.push_back(s.substr(start, pos - start));
      if (pos == std::string::npos) break;
      start = pos + 1;
    }
    return out;
  };
  auto parts = split(spec, ':');
  auto num = [&](const std::string& s) {
    std::size_t idx = 0;
    long v = std::stol(s, &idx);
    if (idx != s.size() || v < 0) throw std::invalid_argument("bad number '" + s + "'");
    return std::size_t(v);
  };
  if (parts.size() == 2 && parts[0] == "trivial") return make_trivial(num(parts[1]));
  if (parts.size() == 2 && parts[0] == "dihedral") return make_dihedral(num(parts[1]));
  if (parts.size() == 2 && parts[0] == "eisermann") {
    auto mn = split(parts[1], ',');
    if (mn.size() != 2) throw std::invalid_argument("eisermann:m,n");
    return make_eisermann(num(mn[0]), num(mn[1]));
  }
  if (parts.size() == 3 && parts[0] == "conj") {
    Json j = Json::parse(detail::read_file(parts[1]));
    FiniteGroup g = group_from_json(j);
    return make_conj(g, subset_from_json(j, g), num(parts[2]));
  }
  throw std::invalid_argument("quandle spec '" + spec +
                              "' (want trivial:n | dihedral:n | eisermann:m,n | conj:<file>:k)");
}

namespace detail {

struct InputArgs {
  std::string builtin_name;
  std::string pd_text;
  std::string file;

  void attach(CLI::App* cmd) {
    cmd->add_option("--builtin", builtin_name, "built-in diagram (unknot, trefoil, hopf, borromean, borromeanmirror)");
    cmd->add_option("--pd", pd_text, "inline PD code");
    cmd->add_option("file", file, "PD file ('-' reads stdin)");
  }

  LinkDiagram resolve() const {
    int given = !builtin_name.empty() + !pd_text.empty() + !file.empty();
    if (given != 1)
      throw std::invalid_argument("give exactly one of --builtin, --pd, or a PD file");
    if (!builtin_name.empty()) {
      auto b = builtin_by_name(builtin_name);
      if (!b) throw std::invalid_argument("unknown builtin '" + builtin_name + "'");
      return builtin(*b);
    }
    if (!pd_text.empty()) return parse_pd(pd_text);
    return parse_pd(read_file(file));
  }
};

inline void emit(const Json& j, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << j.dump(2) << "\n";
  } else {
    std::ofstream f(out_path);
    if (!f) throw std::invalid_argument("cannot write '" + out_path + "'");
    f << j.dump(2) << "\n";
  }
}

inline void emit_text(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
  } else {
    std::ofstream f(out_path);
    if (!f) throw std::invalid_argument("cannot write '" + out_path + "'");
    f << text;
  }
}

}  // namespace detail

/// Command-line front end; testable in-process. Arguments exclude argv[0].
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"link diagrams, quandle colorings and parabolic representations"};
  app.require_subcommand(1);

  std::string out_path;
  std::string format = "json";
  double tolerance = 1e-9;
  unsigned seed = 1;
  std::size_t max_branches = 1024;
  app.add_option("--out", out_path, "write output to a file instead of stdout");
  app.add_option("--format", format, "json or table")
      ->check(CLI::IsMember({"json", "table"}));
  app.add_option("--tolerance", tolerance, "verification tolerance (default 1e-9)")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "multistart seed");
  app.add_option("--max-branches", max_branches, "cap on sign-branch systems");

  auto* present = app.add_subcommand("present", "Wirtinger and fundamental-quandle presentations");
  detail::InputArgs present_in;
  present_in.attach(present);

  auto* color = app.add_subcommand("color", "colorings by a finite quandle");
  detail::InputArgs color_in;
  color_in.attach(color);
  std::string quandle_spec;
  bool tricolor = false;
  color->add_option("--quandle", quandle_spec, "trivial:n | dihedral:n | eisermann:m,n | conj:<file>:k")
      ->required();
  color->add_flag("--tricolor", tricolor, "also report tricolorability");

  auto* parabolic = app.add_subcommand("parabolic", "parabolic colorings and representations");
  detail::InputArgs parabolic_in;
  parabolic_in.attach(parabolic);
  bool raw = false;
  parabolic->add_flag("--raw", raw, "list raw solutions with branch vectors");

  auto* verify = app.add_subcommand("verify", "check a representation file");
  std::string rep_path;
  verify->add_option("file", rep_path, "representation JSON file ('-' reads stdin)")->required();

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? exit_code::ok : exit_code::input;
  }

  try {
    if (present->parsed()) {
      LinkDiagram d = present_in.resolve();
      auto gp = wirtinger_presentation(d);
      auto qp = fundamental_quandle_presentation(d);
      auto ge = eliminate_generators(gp);
      auto qe = eliminate_generators(qp);
      if (format == "table") {
        std::ostringstream os;
        os << "diagram: " << d.arc_count << " arcs, " << d.crossings.size() << " crossings, "
           << d.component_count() << " components\n";
        os << "wirtinger generators:";
        for (const auto& n : gp.generator_names) os << " " << n;
        os << "\n";
        for (const auto& r : gp.relators)
          os << "  relator: " << group_word_str(r, gp.generator_names) << "\n";
        for (const auto& r : qp.relations)
          os << "  relation: " << quandle_relation_str(r, qp.generator_names) << "\n";
        os << "simplified group generators:";
        for (const auto& n : ge.presentation.generator_names) os << " " << n;
        os << "\n";
        for (const auto& r : ge.presentation.relators)
          os << "  relator: " << group_word_str(r, ge.presentation.generator_names) << "\n";
        os << "simplified quandle generators:";
        for (const auto& n : qe.presentation.generator_names) os << " " << n;
        os << "\n";
        for (const auto& r : qe.presentation.relations)
          os << "  relation: " << quandle_relation_str(r, qe.presentation.generator_names) << "\n";
        detail::emit_text(os.str(), out_path, out);
      } else {
        Json j;
        j["schema"] = 1;
        j["command"] = "present";
        j["diagram"] = json_diagram(d);
        j["wirtinger"] = json_group_presentation(gp);
        j["fundamental_quandle"] = json_quandle_presentation(qp);
        j["simplified_group"] = json_group_presentation(ge.presentation);
        j["simplified_quandle"] = json_quandle_presentation(qe.presentation);
        j["abelianization_rank"] = abelianization_rank(gp);
        detail::emit(j, out_path, out);
      }
      return exit_code::ok;
    }

    if (color->parsed()) {
      LinkDiagram d = color_in.resolve();
      FiniteQuandle q = parse_quandle_spec(quandle_spec);
      auto colorings = enumerate_colorings(d, q);
      if (format == "table") {
        std::ostringstream os;
        os << "quandle: " << q.name << "\ncolorings: " << colorings.size() << "\n";
        for (const auto& f : colorings) {
          os << " ";
          for (auto v : f) os << " " << v;
          os << "\n";
        }
        if (tricolor) os << "tricolorable: " << (is_tricolorable(d) ? "true" : "false") << "\n";
        detail::emit_text(os.str(), out_path, out);
      } else {
        Json j;
        j["schema"] = 1;
        j["command"] = "color";
        j["quandle"] = json_finite_quandle(q);
        j["count"] = colorings.size();
        j["colorings"] = colorings;
        if (tricolor) j["tricolorable"] = is_tricolorable(d);
        detail::emit(j, out_path, out);
      }
      return exit_code::ok;
    }

    if (parabolic->parsed()) {
      LinkDiagram d = parabolic_in.resolve();
      PipelineOptions opt;
      opt.solve.seed = seed;
      opt.max_branches = max_branches;
      SolutionSet s = enumerate_parabolic_colorings(d, opt);
      Json j;
      j["schema"] = 1;
      j["command"] = "parabolic";
      j["seed"] = seed;
      j["solutions"] = json_solution_set(s, raw);
      Json reps = Json::array();
      for (std::size_t c = 0; c < s.classes.size(); ++c)
        reps.push_back(json_representation(class_representation(s, c), tolerance));
      j["representations"] = reps;
      detail::emit(j, out_path, out);
      return s.status == SolveStatus::Ok ? exit_code::ok : exit_code::solver;
    }

    if (verify->parsed()) {
      Json jin = Json::parse(detail::read_file(rep_path));
      RepFile f = parse_rep_file(jin);
      bool pass = true;
      Json jreps = Json::array();
      for (std::size_t i = 0; i < f.reps.size(); ++i) {
        const auto& r = f.reps[i];
        Json jr = json_representation(r, tolerance);
        jr["name"] = f.names[i];
        bool relators_ok = std::all_of(r.relator_residuals.begin(), r.relator_residuals.end(),
                                       [&](double x) { return x <= tolerance; });
        bool traces_ok = std::all_of(r.meridian_traces.begin(), r.meridian_traces.end(),
                                     [&](Complex t) {
                                       return std::min(std::abs(t - 2.0), std::abs(t + 2.0)) <=
                                              tolerance;
                                     });
        jr["relators_ok"] = relators_ok;
        jr["meridian_traces_ok"] = traces_ok;
        pass = pass && relators_ok && traces_ok;
        jreps.push_back(jr);
      }
      Json pairs = Json::array();
      for (std::size_t i = 0; i < f.reps.size(); ++i)
        for (std::size_t k = i + 1; k < f.reps.size(); ++k)
          if (conjugate_pair(f.reps[i], f.reps[k], tolerance))
            pairs.push_back(Json::array({i, k}));
      Json j;
      j["schema"] = 1;
      j["command"] = "verify";
      j["representations"] = jreps;
      j["conjugate_pairs"] = pairs;
      j["pass"] = pass;
      detail::emit(j, out_path, out);
      return pass ? exit_code::ok : exit_code::verification;
    }
  } catch (const TooFewGenerators& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::input;
  } catch (const DiagramError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::input;
  } catch (const MissingGenerator& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::input;
  } catch (const Json::parse_error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::input;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::input;
  } catch (const std::exception& e) {
    err << "solver error: " << e.what() << "\n";
    return exit_code::solver;
  }
  return exit_code::input;
}

}  // namespace parq
