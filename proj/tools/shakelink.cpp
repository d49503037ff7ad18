#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "shakelink/fixtures.hpp"
#include "shakelink/milnor.hpp"
#include "shakelink/pd_io.hpp"
#include "shakelink/recipes.hpp"
#include "shakelink/verify.hpp"

using json = nlohmann::json;
using namespace shakelink;

namespace {

constexpr int kOk = 0;
constexpr int kComputeError = 1;
constexpr int kInputError = 2;

void print_lines(const std::vector<std::string>& lines, const std::string& format) {
  if (format == "json") {
    json j;
    j["lines"] = lines;
    std::cout << j.dump(2) << "\n";
    return;
  }
  for (const std::string& l : lines) std::cout << l << "\n";
}

int input_error(const std::string& what) {
  std::cerr << "error: " << what << "\n";
  return kInputError;
}

int compute_error(const std::string& what) {
  std::cerr << "error: " << what << "\n";
  return kComputeError;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

LinkDiagram load_link(const std::string& path) {
  ParsedDiagram p = parse_pd(read_file(path));
  if (const LinkDiagram* d = std::get_if<LinkDiagram>(&p)) return *d;
  return closure(std::get<StringLinkDiagram>(p));
}

// Knot parameters accept any one component fixture, closed or open.
StringLinkDiagram knot_strand(const std::string& name) {
  ParsedDiagram p = fixture(name);
  if (const StringLinkDiagram* s = std::get_if<StringLinkDiagram>(&p)) {
    if (s->m() != 1) throw DiagramError("'" + name + "' has more than one strand");
    return *s;
  }
  return open_knot(std::get<LinkDiagram>(p));
}

StringLinkDiagram pattern_strands(const std::string& name) {
  ParsedDiagram p = fixture(name);
  if (const StringLinkDiagram* s = std::get_if<StringLinkDiagram>(&p)) return *s;
  throw DiagramError("'" + name + "' is not a string link fixture");
}

int run_mu(const std::string& path, const std::string& digits, int degree,
           const std::string& format) {
  std::vector<int> index;
  LinkDiagram d;
  try {
    index = parse_index(digits);
    d = load_link(path);
    for (int entry : index) {
      if (entry > d.m()) throw DiagramError("index entry exceeds the component count");
    }
    if (degree == 0) degree = static_cast<int>(index.size());
    if (degree < static_cast<int>(index.size())) {
      throw DiagramError("degree must reach the index length");
    }
  } catch (const std::exception& e) {
    return input_error(e.what());
  }
  try {
    MuResult r = MilnorCalculator(d, degree).evaluate(index);
    print_lines({mu_line(digits, r)}, format);
  } catch (const std::exception& e) {
    return compute_error(e.what());
  }
  return kOk;
}

int run_lk(const std::string& path, const std::string& format) {
  LinkDiagram d;
  try {
    d = load_link(path);
  } catch (const std::exception& e) {
    return input_error(e.what());
  }
  std::vector<std::string> lines;
  for (int i = 0; i < d.m(); ++i) {
    for (int j = i + 1; j < d.m(); ++j) {
      lines.push_back("lk i=" + std::to_string(i + 1) + " j=" + std::to_string(j + 1) +
                      " value=" + std::to_string(linking_number(d, i, j)));
    }
  }
  print_lines(lines, format);
  return kOk;
}

int run_fixtures(const std::string& name, const std::string& out_dir,
                 const std::string& format) {
  if (name.empty()) {
    print_lines(fixture_names(), format);
    return kOk;
  }
  std::string text;
  try {
    ParsedDiagram p = fixture(name);
    text = std::holds_alternative<LinkDiagram>(p) ? emit_pd(std::get<LinkDiagram>(p))
                                                  : emit_pd(std::get<StringLinkDiagram>(p));
  } catch (const std::exception& e) {
    return input_error(e.what());
  }
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    std::ofstream out(std::filesystem::path(out_dir) / (name + ".pd"), std::ios::binary);
    if (!out) return input_error("cannot write into '" + out_dir + "'");
    out << text;
  }
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  print_lines(lines, format);
  return kOk;
}

int run_verify(const std::string& suite, unsigned long long seed, const std::string& format) {
  std::vector<SuiteResult> results;
  if (suite == "all") {
    results = verify_all(seed);
  } else if (suite == "magnus") {
    results = {verify_magnus(seed)};
  } else if (suite == "oracle") {
    results = {verify_oracle(seed)};
  } else if (suite == "additivity") {
    results = {verify_additivity_suite(seed)};
  } else {
    results = {verify_pairs(seed)};
  }
  std::vector<std::string> lines;
  int failures = 0;
  for (const SuiteResult& r : results) {
    lines.insert(lines.end(), r.lines.begin(), r.lines.end());
    lines.push_back("summary suite=" + r.name + " checks=" + std::to_string(r.checks) +
                    " failures=" + std::to_string(r.failures));
    failures += r.failures;
  }
  print_lines(lines, format);
  return failures == 0 ? kOk : kComputeError;
}

// ---- recipe files ----------------------------------------------------------

ParsedDiagram canonical(const ParsedDiagram& p) {
  if (const LinkDiagram* d = std::get_if<LinkDiagram>(&p)) return parse_pd(emit_pd(*d));
  return parse_pd(emit_pd(std::get<StringLinkDiagram>(p)));
}

MultidiskSpec parse_subdisks(const json& params, const LinkDiagram& host) {
  MultidiskSpec e;
  if (!params.contains("subdisks")) {
    for (int i = 0; i < host.m(); ++i) {
      e.subdisks.push_back({{host.components()[i].front(), 1}});
    }
  } else {
    for (const json& disk : params.at("subdisks")) {
      std::vector<Passage> passes;
      for (const json& p : disk) {
        passes.push_back({p.at("arc").get<Arc>(), p.at("sign").get<int>()});
      }
      e.subdisks.push_back(std::move(passes));
    }
  }
  if (params.contains("framings")) {
    e.framings = params.at("framings").get<std::vector<int>>();
  }
  return e;
}

Side parse_side(const json& step, const char* key) {
  std::string s = step.value(key, "right");
  if (s == "left") return Side::left;
  if (s == "right") return Side::right;
  throw DiagramError(std::string(key) + " must be left or right");
}

// Steps run against a single current diagram whose arc labels are
// renumbered canonically after every step, so each step addresses arcs and
// components exactly as the previous step's emitted form shows them.
ParsedDiagram apply_step(const json& step, std::optional<ParsedDiagram> cur) {
  std::string op = step.at("op").get<std::string>();
  if (op == "fixture") {
    return canonical(fixture(step.at("name").get<std::string>()));
  }
  if (!cur) throw DiagramError("steps must start with a fixture");

  auto as_link = [&]() -> LinkDiagram {
    if (const LinkDiagram* d = std::get_if<LinkDiagram>(&*cur)) return *d;
    throw DiagramError("step '" + op + "' needs a closed diagram");
  };
  auto as_string = [&]() -> StringLinkDiagram {
    if (const StringLinkDiagram* s = std::get_if<StringLinkDiagram>(&*cur)) return *s;
    throw DiagramError("step '" + op + "' needs a string link");
  };

  ParsedDiagram next;
  if (op == "closure") {
    next = closure(as_string());
  } else if (op == "open") {
    next = open_knot(as_link());
  } else if (op == "mirror") {
    next = mirror(as_link());
  } else if (op == "reverse") {
    next = reverse_component(as_link(), step.at("component").get<int>() - 1);
  } else if (op == "sublink") {
    std::vector<int> comps;
    for (int c : step.at("components").get<std::vector<int>>()) comps.push_back(c - 1);
    next = sublink(as_link(), comps);
  } else if (op == "permute") {
    std::vector<int> order;
    for (int c : step.at("order").get<std::vector<int>>()) order.push_back(c - 1);
    next = permute_components(as_link(), order);
  } else if (op == "meridian") {
    next = add_meridian(as_link(), step.at("arc").get<Arc>(), step.value("sign", 1));
  } else if (op == "cable") {
    CopyPattern pattern{step.at("signs").get<std::vector<int>>()};
    next = cable_component(as_link(), step.at("component").get<int>() - 1, pattern,
                           step.value("twists", 0))
               .diagram;
  } else if (op == "shake") {
    std::vector<CopyPattern> patterns;
    for (const json& signs : step.at("signs")) {
      patterns.push_back(CopyPattern{signs.get<std::vector<int>>()});
    }
    next = r_shaking(as_link(), patterns, step.value("framing", 0)).diagram;
  } else if (op == "band") {
    BandSpec band;
    band.end1 = step.at("end1").get<Arc>();
    band.end2 = step.at("end2").get<Arc>();
    band.side1 = parse_side(step, "side1");
    band.side2 = parse_side(step, "side2");
    band.half_twists = step.value("half_twists", 0);
    if (step.contains("route")) {
      for (const json& r : step.at("route")) {
        band.route.push_back(
            {r.at("arc").get<Arc>(), r.value("over", true), r.value("sign", 1)});
      }
    }
    next = band_sum(as_link(), band);
  } else if (op == "infect") {
    LinkDiagram host = as_link();
    json params = step;
    MultidiskSpec e = parse_subdisks(params, host);
    next = infect(host, e, pattern_strands(step.at("pattern").get<std::string>())).diagram;
  } else if (op == "union") {
    ParsedDiagram other = fixture(step.at("name").get<std::string>());
    if (const LinkDiagram* d = std::get_if<LinkDiagram>(&other)) {
      next = split_union(as_link(), *d);
    } else {
      next = split_union(as_link(), closure(std::get<StringLinkDiagram>(other)));
    }
  } else {
    throw DiagramError("unknown step op '" + op + "'");
  }
  return canonical(next);
}

void check_step_schema(const json& step) {
  if (!step.is_object()) throw std::runtime_error("steps must be objects");
  if (!step.contains("op") || !step.at("op").is_string()) {
    throw std::runtime_error("every step needs an op string");
  }
  std::string op = step.at("op").get<std::string>();
  const std::vector<std::string> known = {
      "fixture", "closure", "open",   "mirror", "reverse", "sublink",
      "permute", "meridian", "cable", "shake",  "band",    "infect", "union",
  };
  bool found = false;
  for (const std::string& k : known) found = found || k == op;
  if (!found) throw std::runtime_error("unknown step op '" + op + "'");
  if ((op == "fixture" || op == "union" || op == "infect") &&
      !(step.contains(op == "infect" ? "pattern" : "name"))) {
    throw std::runtime_error("step '" + op + "' needs its diagram name");
  }
}

void summary_lines(std::vector<std::string>& out, const std::string& side,
                   const LinkDiagram& d) {
  for (int i = 0; i < d.m(); ++i) {
    for (int j = i + 1; j < d.m(); ++j) {
      out.push_back(side + " lk i=" + std::to_string(i + 1) + " j=" + std::to_string(j + 1) +
                    " value=" + std::to_string(linking_number(d, i, j)));
    }
  }
  FirstNonVanishing first = first_nonvanishing(d, 4);
  if (first.length == 0) {
    out.push_back(side + " mu none");
    return;
  }
  MilnorCalculator calc(d, first.length);
  for (const auto& [index, value] : first.values) {
    out.push_back(side + " " + mu_line(index_digits(index), calc.evaluate(index)));
  }
}

int run_build(const std::string& recipe_path, const std::string& out_dir,
              const std::string& format) {
  json recipe;
  std::string name;
  json params;
  json steps = json::array();
  try {
    recipe = json::parse(read_file(recipe_path));
    if (!recipe.is_object()) throw std::runtime_error("recipe must be a JSON object");
    if (!recipe.contains("name") || !recipe.at("name").is_string()) {
      throw std::runtime_error("recipe needs a name string");
    }
    name = recipe.at("name").get<std::string>();
    params = recipe.value("params", json::object());
    if (recipe.contains("steps")) {
      steps = recipe.at("steps");
      if (!steps.is_array()) throw std::runtime_error("steps must be an array");
      for (const json& s : steps) check_step_schema(s);
      if (!steps.empty() && steps.front().at("op").get<std::string>() != "fixture") {
        throw std::runtime_error("steps must start with a fixture");
      }
      for (const json& s : steps) {
        std::string op = s.at("op").get<std::string>();
        if (op == "fixture" || op == "union") fixture(s.at("name").get<std::string>());
        if (op == "infect") pattern_strands(s.at("pattern").get<std::string>());
      }
    }
    if (name == "crossing_change" || name == "strong_shake_hopf") {
      if (!params.contains("knot")) throw std::runtime_error("recipe needs params.knot");
      knot_strand(params.at("knot").get<std::string>());
      if (name == "crossing_change" && !params.contains("crossing")) {
        throw std::runtime_error("recipe needs params.crossing");
      }
    } else if (name == "lemma41") {
      if (!params.contains("host") || !params.contains("pattern")) {
        throw std::runtime_error("recipe needs params.host and params.pattern");
      }
      fixture(params.at("host").get<std::string>());
      pattern_strands(params.at("pattern").get<std::string>());
    } else if (name == "steps") {
      if (steps.empty()) throw std::runtime_error("a steps recipe needs steps");
    } else {
      throw std::runtime_error("unknown recipe '" + name + "'");
    }
  } catch (const std::exception& e) {
    return input_error(e.what());
  }

  std::optional<ConcordancePairReport> report;
  ParsedDiagram before;
  ParsedDiagram after;
  try {
    if (name == "crossing_change") {
      report = crossing_change_recipe(knot_strand(params.at("knot").get<std::string>()),
                                      params.at("crossing").get<int>(),
                                      params.value("half_twists", 0));
    } else if (name == "strong_shake_hopf") {
      report = strong_shake_hopf_recipe(knot_strand(params.at("knot").get<std::string>()));
    } else if (name == "lemma41") {
      ParsedDiagram hostp = canonical(fixture(params.at("host").get<std::string>()));
      const LinkDiagram* host = std::get_if<LinkDiagram>(&hostp);
      if (host == nullptr) throw DiagramError("lemma41 host must be a closed diagram");
      report = lemma41_recipe(*host, pattern_strands(params.at("pattern").get<std::string>()),
                              parse_subdisks(params, *host));
    } else {
      std::optional<ParsedDiagram> cur;
      std::optional<ParsedDiagram> start;
      for (const json& s : steps) {
        cur = apply_step(s, cur);
        if (!start) start = cur;
      }
      before = *start;
      after = *cur;
      const LinkDiagram* bl = std::get_if<LinkDiagram>(&before);
      const LinkDiagram* al = std::get_if<LinkDiagram>(&after);
      if (bl != nullptr && al != nullptr && bl->m() == al->m()) {
        ConcordancePairReport rep;
        rep.before = *bl;
        rep.after = *al;
        rep.profile_before.assign(bl->m(), 1);
        rep.profile_after.assign(al->m(), 1);
        compare_endpoints(rep);
        report = std::move(rep);
      }
    }
  } catch (const std::exception& e) {
    return compute_error(e.what());
  }

  std::vector<std::string> lines;
  if (report) {
    before = report->before;
    after = report->after;
    lines = report_lines(*report);
  } else {
    const LinkDiagram* al = std::get_if<LinkDiagram>(&after);
    if (al != nullptr) {
      summary_lines(lines, "after", *al);
    } else {
      summary_lines(lines, "after", closure(std::get<StringLinkDiagram>(after)));
    }
  }

  try {
    std::filesystem::create_directories(out_dir);
    auto write = [&](const char* file, const std::string& text) {
      std::ofstream out(std::filesystem::path(out_dir) / file, std::ios::binary);
      if (!out) throw std::runtime_error(std::string("cannot write ") + file);
      out << text;
    };
    auto emit_any = [](const ParsedDiagram& p) {
      if (const LinkDiagram* d = std::get_if<LinkDiagram>(&p)) return emit_pd(*d);
      return emit_pd(std::get<StringLinkDiagram>(p));
    };
    write("before.pd", emit_any(before));
    write("after.pd", emit_any(after));
    std::string text;
    for (const std::string& l : lines) text += l + "\n";
    write("report.txt", text);
  } catch (const std::exception& e) {
    return input_error(e.what());
  }

  print_lines(lines, format);
  if (report && !report->verdict()) return kComputeError;
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Link diagram calculus: invariants, surgery recipes, verification"};
  app.require_subcommand(1);

  std::string mu_path, mu_index, mu_format = "lines";
  int mu_degree = 0;
  CLI::App* mu = app.add_subcommand("mu", "Milnor invariant of a diagram file");
  mu->add_option("path", mu_path, "PD diagram file")->required();
  mu->add_option("--index", mu_index, "multi index digits, e.g. 123")->required();
  mu->add_option("--degree", mu_degree, "truncation degree, defaults to the index length");
  mu->add_option("--format", mu_format)->check(CLI::IsMember({"lines", "json"}));

  std::string lk_path, lk_format = "lines";
  CLI::App* lk = app.add_subcommand("lk", "pairwise linking numbers of a diagram file");
  lk->add_option("path", lk_path, "PD diagram file")->required();
  lk->add_option("--format", lk_format)->check(CLI::IsMember({"lines", "json"}));

  std::string build_recipe, build_out, build_format = "lines";
  unsigned long long build_seed = 7;
  CLI::App* build = app.add_subcommand("build", "run a recipe file and write its outputs");
  build->add_option("recipe", build_recipe, "recipe JSON file")->required();
  build->add_option("--out", build_out, "output directory")->required();
  build->add_option("--seed", build_seed, "accepted for interface parity; recipes are deterministic");
  build->add_option("--format", build_format)->check(CLI::IsMember({"lines", "json"}));

  std::string verify_suite, verify_format = "lines";
  unsigned long long verify_seed = 7;
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", verify_suite, "magnus|oracle|additivity|pairs|all")
      ->required()
      ->check(CLI::IsMember({"magnus", "oracle", "additivity", "pairs", "all"}));
  verify->add_option("--seed", verify_seed, "suite seed");
  verify->add_option("--format", verify_format)->check(CLI::IsMember({"lines", "json"}));

  std::string fixtures_name, fixtures_out, fixtures_format = "lines";
  CLI::App* fixtures = app.add_subcommand("fixtures", "list fixtures or print one");
  fixtures->add_option("name", fixtures_name, "fixture name; omit to list");
  fixtures->add_option("--out", fixtures_out, "also write <name>.pd into this directory");
  fixtures->add_option("--format", fixtures_format)->check(CLI::IsMember({"lines", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  if (mu->parsed()) return run_mu(mu_path, mu_index, mu_degree, mu_format);
  if (lk->parsed()) return run_lk(lk_path, lk_format);
  if (build->parsed()) return run_build(build_recipe, build_out, build_format);
  if (verify->parsed()) return run_verify(verify_suite, verify_seed, verify_format);
  return run_fixtures(fixtures_name, fixtures_out, fixtures_format);
}
