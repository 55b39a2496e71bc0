// coxtool: command-line front end over the shared-library C API.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "coxeter.h"
#include "json.hpp"

using json = nlohmann::ordered_json;

namespace {

struct SystemDeleter {
  void operator()(cox_system* s) const { cox_system_free(s); }
};
using SystemPtr = std::unique_ptr<cox_system, SystemDeleter>;

struct StringOut {
  char* value = nullptr;
  ~StringOut() { cox_string_free(value); }
  std::string str() const { return value ? value : ""; }
};

int report_error(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return 1;
}

int check(cox_status status) {
  if (status == COX_OK) return 0;
  return report_error(cox_last_error());
}

std::string join(const json& names, const char* sep = " ") {
  std::string out;
  for (const auto& n : names) {
    if (!out.empty()) out += sep;
    out += n.get<std::string>();
  }
  return out;
}

std::string join_or_dash(const json& names, const char* sep = " ") {
  return names.empty() ? "-" : join(names, sep);
}

// Human rendering of a structured payload, one deterministic line per field.
void render(const std::string& command, const json& r, std::ostream& out) {
  if (command == "reduce") {
    out << "word: " << r["word"].get<std::string>() << "\n";
  } else if (command == "equal") {
    out << "equal: " << (r["equal"].get<bool>() ? "true" : "false") << "\n";
  } else if (command == "length") {
    out << "length: " << r["length"] << "\n";
  } else if (command == "classify") {
    out << "finite: " << (r["finite"].get<bool>() ? "true" : "false") << "\n";
    out << "order: " << r["order"].get<std::string>() << "\n";
    for (const auto& comp : r["components"])
      out << "component: " << join(comp["generators"]) << " -> "
          << comp["label"].get<std::string>() << "\n";
  } else if (command == "spherical") {
    out << "k: " << r["k"] << "\n";
    out << "holds: " << (r["holds"].get<bool>() ? "true" : "false") << "\n";
    if (!r["witness"].is_null()) out << "witness: " << join(r["witness"]) << "\n";
  } else if (command == "v") {
    out << "v: " << (r["v"].is_string() ? r["v"].get<std::string>()
                                        : std::to_string(r["v"].get<int>()))
        << "\n";
  } else if (command == "intersect") {
    out << "mode: " << r["mode"].get<std::string>() << "\n";
    if (r["mode"] == "parabolic") {
      out << "word: " << r["word"].get<std::string>() << "\n";
      out << "x: " << r["decomposition"]["x"].get<std::string>() << "\n";
      out << "d: " << r["decomposition"]["d"].get<std::string>() << "\n";
      out << "y: " << r["decomposition"]["y"].get<std::string>() << "\n";
      out << "conjugator: " << r["conjugator"].get<std::string>() << "\n";
    }
    out << "core: " << join_or_dash(r["core"]) << "\n";
    if (r.contains("inclusion"))
      out << "inclusion: " << (r["inclusion"].get<bool>() ? "true" : "false") << "\n";
  } else if (command == "angle") {
    out << "method: " << r["method"].get<std::string>() << "\n";
    out << "angle: " << r["angle"].get<std::string>() << "\n";
  } else if (command == "split") {
    out << "sprime: " << join(r["sprime"]) << "\n";
    out << "v: " << r["v"] << "\n";
    out << "metric: " << r["metric"].get<std::string>() << "\n";
    for (const auto& face : r["faces"])
      out << "face " << join_or_dash(face["subset"], ",") << " (dim " << face["dim"]
          << "): " << join_or_dash(face["local"]) << "\n";
  } else if (command == "curvature") {
    out << "sprime: " << join(r["sprime"]) << "\n";
    out << "angles: " << join(r["angles"]) << "\n";
    out << "sum: " << r["sum"].get<std::string>() << "\n";
    out << "compare: " << r["compare"].get<std::string>() << "\n";
    out << "verdict: " << r["verdict"].get<std::string>() << "\n";
  } else if (command == "fa") {
    out << "n: " << r["n"] << "\n";
    out << "status: " << r["status"].get<std::string>() << "\n";
    out << "basis: " << r["basis"].get<std::string>() << "\n";
    if (!r["v"].is_null()) out << "v: " << r["v"] << "\n";
    if (!r["witness"].is_null()) {
      const json& w = r["witness"];
      out << "witness sprime: " << join(w["sprime"]) << "\n";
      if (w.contains("splitting"))
        out << "witness metric: " << w["splitting"]["metric"].get<std::string>() << "\n";
      if (w.contains("curvature")) {
        out << "witness angles: " << join(w["curvature"]["angles"]) << "\n";
        out << "witness sum: " << w["curvature"]["sum"].get<std::string>() << "\n";
        out << "witness verdict: " << w["curvature"]["verdict"].get<std::string>() << "\n";
      }
    }
  } else if (command == "maxfa") {
    out << "n: " << r["n"] << "\n";
    out << "tag: " << r["tag"].get<std::string>() << "\n";
    for (const auto& subset : r["subsets"]) out << "subset: " << join(subset) << "\n";
  } else if (command == "nerve") {
    out << "T: " << join_or_dash(r["T"]) << "\n";
    out << "vertices: " << join_or_dash(r["vertices"]) << "\n";
    std::string facets;
    for (const auto& f : r["facets"]) {
      if (!facets.empty()) facets += " | ";
      facets += join(f, ",");
    }
    out << "facets: " << (facets.empty() ? "-" : facets) << "\n";
    out << "dimension: " << r["dimension"] << "\n";
    const json& h = r["homology"];
    auto numbers = [](const json& a) {
      std::string s;
      for (const auto& v : a) {
        if (!s.empty()) s += " ";
        s += v.dump();
      }
      return s.empty() ? std::string("-") : s;
    };
    out << "simplices: " << numbers(h["simplex_counts"]) << "\n";
    out << "betti: " << numbers(h["betti"]) << "\n";
    out << "reduced betti: " << numbers(h["reduced_betti"]) << "\n";
    std::string torsion;
    for (size_t k = 0; k < h["torsion"].size(); ++k)
      for (const auto& d : h["torsion"][k]) {
        if (!torsion.empty()) torsion += " ";
        torsion += "[" + std::to_string(k) + "]" + d.get<std::string>();
      }
    out << "torsion: " << (torsion.empty() ? "none" : torsion) << "\n";
    out << "euler: " << h["euler"] << "\n";
  } else if (command == "dim-bounds") {
    out << "lower: " << r["lower"] << "\n";
    out << "upper: " << r["upper"] << "\n";
    const json& w = r["witness"];
    out << "witness: " << w["kind"].get<std::string>() << " T=" << join_or_dash(w["T"], ",");
    if (w.contains("k")) out << " k=" << w["k"] << " (" << w["convention"].get<std::string>() << ")";
    if (w.contains("n")) out << " n=" << w["n"];
    out << "\n";
  } else if (command == "enumerate") {
    out << "T: " << join_or_dash(r["T"]) << "\n";
    out << "count: " << r["count"] << "\n";
    for (const auto& w : r["elements"]) out << w.get<std::string>() << "\n";
  }
}

int print_report(const std::string& command, cox_system* sys, const json& payload,
                 bool as_json) {
  StringOut fp;
  if (int rc = check(cox_system_fingerprint(sys, &fp.value))) return rc;
  if (as_json) {
    json doc = {{"schema", 1}, {"command", command}, {"system", fp.str()}, {"result", payload}};
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "command: " << command << "\n";
    std::cout << "system: " << fp.str() << "\n";
    render(command, payload, std::cout);
  }
  return 0;
}

int print_json_result(const std::string& command, cox_system* sys, cox_status status,
                      StringOut& out, bool as_json) {
  if (int rc = check(status)) return rc;
  return print_report(command, sys, json::parse(out.str()), as_json);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coxeter system toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string system_path;
  bool as_json = false;
  long cap = 0;  // 0 = per-operation default
  app.add_option("--system", system_path, "path to the system description file");
  app.add_flag("--json", as_json, "machine-readable report");
  app.add_option("--cap", cap, "work bound (closure words / elements / subset rank)");

  std::vector<std::string> words;
  std::string T, U, sprime, word;
  bool have_T = false;
  int n = 0;
  bool use_oracle = false;

  auto* cmd_reduce = app.add_subcommand("reduce", "canonical form of a word");
  cmd_reduce->add_option("--word", word)->required();
  auto* cmd_equal = app.add_subcommand("equal", "compare two words");
  cmd_equal->add_option("--word", words, "the two words, flag given twice")
      ->expected(2)
      ->required();
  auto* cmd_length = app.add_subcommand("length", "length of the element of a word");
  cmd_length->add_option("--word", word)->required();
  app.add_subcommand("classify", "type of each irreducible component");
  auto* cmd_spherical = app.add_subcommand("spherical", "k-sphericity check");
  cmd_spherical->add_option("--n", n, "the k to check")->required();
  app.add_subcommand("v", "largest m with W m-spherical");
  auto* cmd_intersect = app.add_subcommand("intersect", "special/parabolic intersection");
  cmd_intersect->add_option("--T", T)->required();
  cmd_intersect->add_option("--U", U)->required();
  cmd_intersect->add_option("--word", word);
  auto* cmd_angle = app.add_subcommand("angle", "Gersten-Stallings angle");
  cmd_angle->add_option("--T", T)->required();
  cmd_angle->add_option("--U", U)->required();
  cmd_angle->add_flag("--oracle", use_oracle, "use the coset-graph oracle");
  auto* cmd_split = app.add_subcommand("split", "v-splitting determined by S'");
  cmd_split->add_option("--sprime", sprime)->required();
  auto* cmd_curvature = app.add_subcommand("curvature", "triangle-of-groups curvature");
  cmd_curvature->add_option("--sprime", sprime)->required();
  auto* cmd_fa = app.add_subcommand("fa", "fixed-point verdict for CAT(0) n-complexes");
  cmd_fa->add_option("--n", n)->required();
  auto* cmd_maxfa = app.add_subcommand("maxfa", "maximal (n+1)-spherical subsets");
  cmd_maxfa->add_option("--n", n)->required();
  auto* cmd_nerve = app.add_subcommand("nerve", "nerve and its homology");
  cmd_nerve->add_option("--T", T)->each([&](const std::string&) { have_T = true; });
  app.add_subcommand("dim-bounds", "CAT(0)-dimension bounds");
  auto* cmd_enumerate = app.add_subcommand("enumerate", "list the elements of <T>");
  cmd_enumerate->add_option("--T", T)->each([&](const std::string&) { have_T = true; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;  // usage errors
  }

  if (system_path.empty()) {
    std::cerr << "error: --system <path> is required\n";
    return 2;
  }
  std::ifstream file(system_path);
  if (!file) return report_error("cannot open file: " + system_path);
  std::stringstream buffer;
  buffer << file.rdbuf();

  cox_system* raw = nullptr;
  if (int rc = check(cox_system_parse(buffer.str().c_str(), &raw))) return rc;
  SystemPtr sys(raw);

  const std::string command = app.get_subcommands().front()->get_name();
  StringOut out;

  if (command == "reduce") {
    StringOut reduced;
    if (int rc = check(cox_reduce(sys.get(), word.c_str(), cap, &reduced.value))) return rc;
    return print_report(command, sys.get(), {{"word", reduced.str()}}, as_json);
  }
  if (command == "equal") {
    int eq = 0;
    if (int rc = check(cox_equal(sys.get(), words[0].c_str(), words[1].c_str(), cap, &eq)))
      return rc;
    return print_report(command, sys.get(), {{"equal", eq != 0}}, as_json);
  }
  if (command == "length") {
    long len = 0;
    if (int rc = check(cox_length(sys.get(), word.c_str(), cap, &len))) return rc;
    return print_report(command, sys.get(), {{"length", len}}, as_json);
  }
  if (command == "classify")
    return print_json_result(command, sys.get(), cox_classify(sys.get(), &out.value), out,
                             as_json);
  if (command == "spherical")
    return print_json_result(command, sys.get(), cox_spherical(sys.get(), n, &out.value),
                             out, as_json);
  if (command == "v")
    return print_json_result(command, sys.get(), cox_v(sys.get(), &out.value), out, as_json);
  if (command == "intersect")
    return print_json_result(
        command, sys.get(),
        cox_intersect(sys.get(), T.c_str(), U.c_str(), word.empty() ? nullptr : word.c_str(),
                      cap, &out.value),
        out, as_json);
  if (command == "angle")
    return print_json_result(
        command, sys.get(),
        cox_angle(sys.get(), T.c_str(), U.c_str(), use_oracle ? 1 : 0, cap, &out.value), out,
        as_json);
  if (command == "split")
    return print_json_result(command, sys.get(),
                             cox_split(sys.get(), sprime.c_str(), &out.value), out, as_json);
  if (command == "curvature")
    return print_json_result(command, sys.get(),
                             cox_curvature(sys.get(), sprime.c_str(), &out.value), out,
                             as_json);
  if (command == "fa")
    return print_json_result(command, sys.get(), cox_fa(sys.get(), n, &out.value), out,
                             as_json);
  if (command == "maxfa")
    return print_json_result(command, sys.get(), cox_maxfa(sys.get(), n, &out.value), out,
                             as_json);
  if (command == "nerve")
    return print_json_result(command, sys.get(),
                             cox_nerve(sys.get(), have_T ? T.c_str() : nullptr, &out.value),
                             out, as_json);
  if (command == "dim-bounds")
    return print_json_result(command, sys.get(),
                             cox_dim_bounds(sys.get(), static_cast<int>(cap), &out.value),
                             out, as_json);
  if (command == "enumerate")
    return print_json_result(
        command, sys.get(),
        cox_enumerate(sys.get(), have_T ? T.c_str() : nullptr, cap, &out.value), out,
        as_json);

  std::cerr << "error: unknown subcommand\n";
  return 2;
}
