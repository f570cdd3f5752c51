// thetacat: build constructions, run checks and the verification suite.
//
// Exit codes: 0 pass, 1 verified failure, 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "thetacat/thetacat.hpp"

using namespace thetacat;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BuildArgs {
  std::string name;
  std::string params;
  std::vector<std::string> inputs;
  std::string category = "I";
  int n = -1;
  int k = 1;
  int i = 1;
  int order = 2;
  int point = 0;
  bool pre_erratum = false;
};

// A construction together with the canonical map it comes with, if any.
struct Built {
  Precat precat;
  std::optional<PrecatMap> map;
  std::string map_name;
};

FiniteCategory parse_category(const std::string& s) {
  std::smatch m;
  if (s == "I") return categories::I();
  if (s == "Ibar") return categories::Ibar();
  if (s == "point") return categories::point();
  if (std::regex_match(s, m, std::regex(R"((\d+)\*)"))) return categories::discrete(std::stoul(m[1]));
  if (std::regex_match(s, m, std::regex(R"(chain(\d+))"))) return categories::chain(std::stoi(m[1]));
  if (std::regex_match(s, m, std::regex(R"(groupoid(\d+))"))) return categories::contractible_groupoid(std::stoi(m[1]));
  if (std::regex_match(s, m, std::regex(R"(Z/(\d+))"))) return categories::cyclic_group(std::stoi(m[1]));
  throw UsageError("unknown category '" + s + "' (I, Ibar, point, k*, chainK, groupoidK, Z/m)");
}

// Named inputs: empty, point, k*, N(C) for a category name C, sigmaK.
PointedPrecat parse_input(const std::string& s, int dim, Indexing ix) {
  std::smatch m;
  if (s == "empty" || s == "0") return {empty(dim), 0};
  if (s == "point" || s == "*") return {terminal(dim), 0};
  if (std::regex_match(s, m, std::regex(R"((\d+)\*)"))) return {discrete(dim, std::stoul(m[1])), 0};
  if (std::regex_match(s, m, std::regex(R"(sigma(\d+))"))) return sigma(std::stoi(m[1]), dim, ix);
  if (std::regex_match(s, m, std::regex(R"(N\((.+)\))"))) {
    if (dim < 1) throw UsageError("nerve inputs need dimension >= 1");
    return {nerve(parse_category(m[1]), dim), 0};
  }
  throw UsageError("unknown input '" + s + "' (empty, point, k*, N(C), sigmaK)");
}

void apply_params(BuildArgs& b) {
  if (b.params.empty()) return;
  json p;
  try {
    p = json::parse(b.params);
    if (p.contains("n")) b.n = p["n"].get<int>();
    if (p.contains("k")) b.k = p["k"].get<int>();
    if (p.contains("i")) b.i = p["i"].get<int>();
    if (p.contains("order")) b.order = p["order"].get<int>();
    if (p.contains("point")) b.point = p["point"].get<int>();
    if (p.contains("category")) b.category = p["category"].get<std::string>();
    if (p.contains("inputs")) b.inputs = p["inputs"].get<std::vector<std::string>>();
  } catch (const json::exception& e) {
    throw UsageError(std::string("bad --params: ") + e.what());
  }
}

Built build(BuildArgs b) {
  apply_params(b);
  const Indexing ix = b.pre_erratum ? Indexing::PreErratum : Indexing::Corrected;
  auto need_inputs = [&](std::size_t lo) {
    if (b.inputs.size() < lo) throw UsageError(b.name + " needs --inputs");
  };
  const std::string& nm = b.name;
  if (nm == "point") return {terminal(std::max(b.n, 0)), {}, ""};
  if (nm == "empty") return {empty(std::max(b.n, 0)), {}, ""};
  if (nm == "discrete") return {discrete(std::max(b.n, 0), static_cast<std::size_t>(b.k)), {}, ""};
  if (nm == "nerve") return {nerve(parse_category(b.category), b.n < 0 ? 1 : b.n), {}, ""};
  if (nm == "upsilon") {
    need_inputs(1);
    const int n = b.n < 0 ? 1 : b.n;
    std::vector<Precat> e;
    for (const auto& s : b.inputs) e.push_back(parse_input(s, n - 1, ix).space);
    return {upsilon(e, ix), {}, ""};
  }
  if (nm == "cell" || nm == "boundary") {
    auto c = cell(b.i, b.n < 0 ? b.i : b.n, ix);
    return {nm == "cell" ? c.cell : c.boundary, c.inclusion, "boundary inclusion"};
  }
  if (nm == "sigma") return {sigma(b.k, b.n < 0 ? b.k : b.n, ix).space, {}, ""};
  if (nm == "suspension" || nm == "suspension-ibar" || nm == "delooping") {
    need_inputs(1);
    auto a = parse_input(b.inputs.front(), b.n < 0 ? 0 : b.n - 1, ix);
    if (b.inputs.front().rfind("sigma", 0) != 0) a.point = static_cast<Cell>(b.point);
    if (nm == "delooping") return {delooping_X(a), {}, ""};
    if (nm == "suspension-ibar") return {suspension_ibar(a, ix), {}, ""};
    auto s = suspension(a, ix);
    return {s.space, {}, ""};
  }
  if (nm == "whitehead") {
    need_inputs(1);
    auto a = parse_input(b.inputs.front(), b.n < 0 ? 2 : b.n, ix);
    auto wh = whitehead(a.space, static_cast<Cell>(b.point), b.k);
    return {wh.object, wh.inclusion, "inclusion"};
  }
  if (nm == "ck") {
    auto mon = cyclic_monoid(b.n < 0 ? 0 : b.n - b.k, b.order);
    return {ck_monoidal(mon, b.k), {}, ""};
  }
  if (nm == "truncate") {
    need_inputs(1);
    auto a = parse_input(b.inputs.front(), b.n < 0 ? 2 : b.n, ix);
    return {truncate(a.space, b.k), {}, ""};
  }
  throw UsageError("unknown construction '" + nm +
                   "' (point, empty, discrete, nerve, upsilon, cell, boundary, sigma, suspension, "
                   "suspension-ibar, delooping, whitehead, ck, truncate)");
}

void add_build_options(CLI::App* sub, BuildArgs& b) {
  sub->add_option("--params", b.params, "JSON object with any of n, k, i, order, point, category, inputs");
  sub->add_option("--inputs", b.inputs, "named inputs: empty, point, k*, N(C), sigmaK");
  sub->add_option("--category", b.category, "I, Ibar, point, k*, chainK, groupoidK, Z/m");
  sub->add_option("--n", b.n, "ambient dimension of the result");
  sub->add_option("--k", b.k, "k for sigma, whitehead, ck, truncate, discrete");
  sub->add_option("--i", b.i, "cell index");
  sub->add_option("--order", b.order, "order of the cyclic monoid for ck");
  sub->add_option("--point", b.point, "base point (object index)");
  sub->add_flag("--pre-erratum", b.pre_erratum, "use the uncorrected Upsilon indexing");
}

json segal_json(const SegalReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries) {
    entries.push_back({{"level", to_json(e.level)}, {"direction", e.direction + 1}, {"p", e.p},
                       {"source", e.source_size}, {"target", e.target_size}, {"image", e.image_size},
                       {"injective", e.injective}, {"surjective", e.surjective}});
  }
  return {{"window", {{"B", r.window.B}}}, {"strict", r.strict()}, {"entries", entries}};
}

int run_check(const std::string& kind, const std::string& in_path, const BuildArgs& b, int window, int k,
              bool as_json) {
  Precat p;
  std::optional<PrecatMap> map;
  Window w{window, -1};
  if (!in_path.empty()) {
    std::ifstream f(in_path);
    if (!f) throw UsageError("cannot read " + in_path);
    json j;
    try {
      j = json::parse(f);
    } catch (const json::exception& e) {
      throw UsageError(std::string("malformed dump: ") + e.what());
    }
    LoadedDump d;
    try {
      d = load_dump(j, in_path);
    } catch (const InvalidArgument& e) {
      throw UsageError(e.what());
    }
    p = d.precat;
    w.B = std::min(w.B, d.window.B);
  } else {
    if (b.name.empty()) throw UsageError("check needs --in PATH or a construction name");
    auto built = build(b);
    p = built.precat;
    map = built.map;
  }

  bool pass = false;
  json report;
  std::ostringstream text;
  text << kind << " on " << p.name() << " (window B=" << w.B << "): ";
  if (kind == "segal") {
    auto r = segal_check(p, w);
    pass = r.strict();
    report = segal_json(r);
    if (auto e = r.first_failure()) {
      text << "not strict; at " << e->level.str() << " direction " << e->direction + 1 << " p=" << e->p
           << " the Segal map has source " << e->source_size << " and target " << e->target_size;
    } else {
      text << "strict (" << r.entries.size() << " Segal maps bijective)";
    }
  } else if (kind == "functorial") {
    auto r = check_functoriality(p, w);
    pass = r.ok();
    json v = json::array();
    for (const auto& x : r.violations) {
      json ms = json::array();
      for (const auto& m : x.morphisms) ms.push_back(to_json(m));
      v.push_back({{"kind", x.kind}, {"morphisms", ms}, {"cell", x.cell}, {"detail", x.detail}});
    }
    report = {{"window", {{"B", w.B}}}, {"ok", pass}, {"morphisms", r.morphisms_checked},
              {"pairs", r.pairs_checked}, {"violations", v}};
    if (pass) {
      text << "functorial (" << r.morphisms_checked << " morphisms, " << r.pairs_checked << " composable pairs)";
    } else {
      const auto& x = r.violations.front();
      text << r.violations.size() << " violation(s); first: " << x.kind << " at cell " << x.cell;
      for (const auto& m : x.morphisms) text << " " << m.str();
    }
  } else if (kind == "cofibration") {
    if (!map) throw UsageError("this construction has no canonical map to check");
    const bool natural = is_natural(*map, w);
    pass = natural && is_cofibration(*map, w);
    report = {{"window", {{"B", w.B}}}, {"map", map->name()}, {"natural", natural}, {"cofibration", pass}};
    text << map->name() << (pass ? " is a cofibration" : " is not a cofibration");
  } else if (kind == "connected") {
    try {
      pass = is_k_connected(p, k, w);
      report = {{"window", {{"B", w.B}}}, {"k", k}, {"connected", pass}};
      text << (pass ? "" : "not ") << k << "-connected";
    } catch (const NotStrict& e) {
      pass = false;
      report = {{"window", {{"B", w.B}}}, {"k", k}, {"connected", nullptr}, {"error", e.what()}};
      text << "undefined: " << e.what();
    }
  } else {
    throw UsageError("unknown check '" + kind + "' (segal, functorial, cofibration, connected)");
  }
  if (as_json) {
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << text.str() << "\n";
  }
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact constructions on presheaves over Theta^n"};
  app.require_subcommand(1);

  BuildArgs build_args;
  int build_window = 3;
  std::string out_path;
  auto* b = app.add_subcommand("build", "write the canonical windowed dump of a construction");
  b->add_option("name", build_args.name, "construction name")->required();
  add_build_options(b, build_args);
  b->add_option("--window", build_window, "entry bound B of the dumped window");
  b->add_option("--out", out_path, "output path (default: standard output)");

  BuildArgs check_args;
  std::string check_kind, in_path;
  int check_window = 3, check_k = 0;
  bool check_json = false;
  auto* c = app.add_subcommand("check", "run one check on a dump or a construction");
  c->add_option("kind", check_kind, "segal | functorial | cofibration | connected")->required();
  c->add_option("name", check_args.name, "construction name (instead of --in)");
  c->add_option("--in", in_path, "dump to check");
  add_build_options(c, check_args);
  c->add_option("--window", check_window, "entry bound B");
  c->add_flag("--json", check_json, "print a JSON report");

  int verify_window = 2;
  unsigned jobs = 1;
  std::vector<std::string> only;
  bool verify_json = false, verify_pre = false;
  auto* v = app.add_subcommand("verify", "run the identity verification suite");
  v->add_option("--window", verify_window, "entry bound B (>= 2)");
  v->add_option("--only", only, "run only the named item(s)");
  v->add_option("--jobs", jobs, "items run in parallel");
  v->add_flag("--json", verify_json, "print JSON results");
  v->add_flag("--pre-erratum", verify_pre, "build Upsilon with the uncorrected indexing");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*b) {
      auto built = build(build_args);
      if (build_window < 1) throw UsageError("--window must be >= 1");
      const std::string text = dump(built.precat, Window{build_window, -1}).dump(2) + "\n";
      if (out_path.empty()) {
        std::cout << text;
      } else {
        std::ofstream f(out_path);
        if (!f) throw UsageError("cannot write " + out_path);
        f << text;
      }
      return 0;
    }
    if (*c) {
      if (c->count("--k") > 0) check_k = check_args.k;
      return run_check(check_kind, in_path, check_args, check_window, check_k, check_json);
    }
    if (*v) {
      if (verify_window < 2) throw UsageError("--window must be >= 2");
      SuiteOptions o;
      o.window.B = verify_window;
      o.indexing = verify_pre ? Indexing::PreErratum : Indexing::Corrected;
      if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
      const auto results = run_suite(o, only, jobs);
      bool all = true;
      json arr = json::array();
      for (const auto& r : results) {
        all = all && r.pass;
        arr.push_back({{"name", r.name}, {"anchor", r.anchor}, {"window", r.window}, {"verdict", r.verdict()},
                       {"seconds", r.seconds}, {"detail", r.detail}});
        if (!verify_json) {
          std::printf("%-22s window B=%d  %s  %8.3fs  %s\n", r.name.c_str(), r.window, r.verdict().c_str(), r.seconds,
                      r.detail.c_str());
        }
      }
      if (verify_json) std::cout << arr.dump(2) << "\n";
      return all ? 0 : 1;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
