// latcross command line tool.
//
// Subcommands:
//   gpoly   refined count of paths from (0,0) to (b,a), graded by crossings of y = ell
//   hpoly   refined count of path pairs, graded by crossings between the two paths
//   stats   descent/major-index/peak statistics of a single path word
//   encode  valley encoding of a path as a two-rowed array
//   biject  apply one of the crossing-reducing maps to an array or array pair
//   verify  run the formula/enumeration cross-check suites
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage or input error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "latcross/errors.hpp"
#include "latcross/formulas.hpp"
#include "latcross/json_io.hpp"
#include "latcross/oracle.hpp"
#include "latcross/pair_arrays.hpp"
#include "latcross/paths.hpp"
#include "latcross/qtpoly.hpp"
#include "latcross/verify.hpp"

namespace {

using namespace latcross;

Point parse_point(const std::string& name, const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos)
    throw CLI::ValidationError(name, "expected a point as X,Y");
  try {
    std::size_t used = 0;
    const int x = std::stoi(text.substr(0, comma), &used);
    if (used != comma) throw std::invalid_argument(text);
    const std::string rest = text.substr(comma + 1);
    const int y = std::stoi(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(text);
    return Point{x, y};
  } catch (const std::exception&) {
    throw CLI::ValidationError(name, "expected a point as X,Y with integer coordinates");
  }
}

void print_poly(const QTPoly& p, const std::string& format) {
  if (format == "json") {
    std::cout << poly_to_json(p).dump() << "\n";
  } else if (format == "latex") {
    std::cout << p.to_latex() << "\n";
  } else {
    std::cout << p.to_text() << "\n";
  }
}

QTPoly at_least(const std::map<int, QTPoly>& refined, int r) {
  const auto it = refined.find(r);
  return it == refined.end() ? QTPoly{} : it->second;
}

// Returns 0 when formula and enumeration agree, 1 otherwise.
int report_match(const QTPoly& formula, const QTPoly& enumerated, const std::string& format) {
  if (formula == enumerated) {
    print_poly(formula, format);
    std::cerr << "enumeration agrees\n";
    return 0;
  }
  std::cerr << "mismatch against enumeration\n"
            << "  formula:     " << formula.to_text() << "\n"
            << "  enumeration: " << enumerated.to_text() << "\n";
  return 1;
}

const char* kind_name(CrossKind k) { return k == CrossKind::upward ? "upward" : "downward"; }

void print_path_crossings(const std::vector<Crossing>& crossings) {
  std::cout << " crossings=" << crossings.size() << "\n";
  for (const Crossing& c : crossings) {
    std::cout << "crossing " << c.index << ": " << kind_name(c.kind) << " at (" << c.vertex.x
              << "," << c.vertex.y << ")\n";
  }
}

json load_json(const std::string& path) {
  if (path == "-") return json::parse(std::cin);
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return json::parse(in);
}

void trace_single(const TwoRowedArray& a, const std::string& map, int r) {
  if (map == "nu") {
    std::cout << "reflect: bounds (" << a.x() << "," << a.y() << "," << a.u() << "," << a.v()
              << ") -> (" << -a.v() << "," << -a.u() << "," << -a.y() << "," << -a.x() << ")\n";
    return;
  }
  const auto crossings = array_crossings(a);
  const ArrayCrossing& c = crossings.at(static_cast<std::size_t>(r - 1));
  std::cout << map << " at crossing " << r << ": " << kind_name(c.kind) << " at "
            << (c.on_top ? "c_" : "d_") << c.i << " = " << c.value << "\n";
}

void trace_pair(const ArrayPair& ap, const std::string& map, int r) {
  if (map == "sigma") {
    std::cout << "swap: components exchanged, imbalance " << ap.k() << " -> " << -ap.k() << "\n";
    return;
  }
  if (map == "gamma0") {
    std::cout << "boundary swap at the leftmost zig-zag difference, imbalance " << ap.k()
              << " -> " << -ap.k() - 1 << "\n";
    return;
  }
  const auto crossings = pair_array_crossings(ap);
  const PairCrossing& c = crossings.at(static_cast<std::size_t>(r - 1));
  if (c.kind == CrossKind::upward) {
    std::cout << map << " at crossing " << r << ": upward at (" << c.vertex.x << ","
              << c.vertex.y << "), entries c_" << c.i << " = " << c.vertex.x << " and f_" << c.j
              << " = " << c.vertex.y << "\n";
  } else {
    std::cout << map << " at crossing " << r << ": downward at (" << c.vertex.x << ","
              << c.vertex.y << "), entries e_" << c.j << " = " << c.vertex.x << " and d_" << c.i
              << " = " << c.vertex.y << "\n";
  }
}

void print_suite(const SuiteResult& s) { std::cout << s.summary() << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact enumeration of lattice paths refined by descents, major index and crossings"};
  app.require_subcommand(1);
  int exit_code = 0;

  int threads = default_threads();
  app.add_option("--threads", threads, "worker threads for enumeration")->capture_default_str();

  // gpoly
  auto* gp = app.add_subcommand("gpoly", "crossings of a path with a horizontal line");
  int g_a = 0, g_b = 0, g_ell = 0, g_r = 0;
  bool g_oracle = false;
  std::string g_format = "text";
  gp->add_option("--a", g_a, "number of up steps")->required();
  gp->add_option("--b", g_b, "number of down steps")->required();
  gp->add_option("--ell", g_ell, "height of the crossed line")->required();
  gp->add_option("--r", g_r, "minimum number of crossings")->required();
  gp->add_flag("--oracle", g_oracle, "cross-check against direct enumeration");
  gp->add_option("--format", g_format)->check(CLI::IsMember({"text", "json", "latex"}));
  gp->callback([&]() {
    const QTPoly formula = g_poly(LineQuery{g_a, g_b, g_ell, g_r});
    if (!g_oracle) {
      print_poly(formula, g_format);
      return;
    }
    exit_code = report_match(formula, at_least(oracle_g(g_a, g_b, g_ell, threads), g_r), g_format);
  });

  // hpoly
  auto* hp = app.add_subcommand("hpoly", "crossings between two paths");
  std::string h_a1, h_a2, h_bp, h_bq;
  int h_r = 0;
  bool h_oracle = false;
  std::string h_format = "text";
  hp->add_option("--a1", h_a1, "start of the first path, X,Y")->required();
  hp->add_option("--a2", h_a2, "start of the second path, X,Y")->required();
  hp->add_option("--bp", h_bp, "target of the first path, X,Y")->required();
  hp->add_option("--bq", h_bq, "target of the second path, X,Y")->required();
  hp->add_option("--r", h_r, "minimum number of crossings")->required();
  hp->add_flag("--oracle", h_oracle, "cross-check against direct enumeration");
  hp->add_option("--format", h_format)->check(CLI::IsMember({"text", "json", "latex"}));
  hp->callback([&]() {
    const Point a1 = parse_point("--a1", h_a1);
    const Point a2 = parse_point("--a2", h_a2);
    const Point bp = parse_point("--bp", h_bp);
    const Point bq = parse_point("--bq", h_bq);
    const QTPoly formula = h_poly(make_pair_query(a1, a2, bp, bq, h_r));
    if (!h_oracle) {
      print_poly(formula, h_format);
      return;
    }
    exit_code =
        report_match(formula, at_least(oracle_h(a1, a2, bp, bq, threads), h_r), h_format);
  });

  // stats
  auto* st = app.add_subcommand("stats", "statistics of one path word");
  std::string s_word, s_start = "0,0";
  bool s_ud = false;
  int s_line = 0;
  st->add_option("--path", s_word, "path word over N/E or U/D")->required();
  st->add_option("--start", s_start, "start point X,Y")->capture_default_str();
  st->add_flag("--ud", s_ud, "read the word in the up/down view");
  auto* line_opt = st->add_option("--line", s_line, "also list crossings of the line y = L");
  st->callback([&]() {
    LatticePath p = parse_path(s_word, parse_point("--start", s_start));
    if (s_ud && !p.ud_view()) p = LatticePath(p.start(), p.steps(), true);
    if (line_opt->count() > 0 && !p.ud_view())
      throw CLI::ValidationError("--line", "line crossings need the up/down view (--ud)");
    const PathStats stats = path_stats(p);
    std::cout << "des=" << stats.des << " maj=" << stats.maj << " peaks=" << stats.peaks;
    if (line_opt->count() > 0) {
      print_path_crossings(line_crossings(p, s_line));
    } else {
      std::cout << "\n";
    }
  });

  // encode
  auto* en = app.add_subcommand("encode", "valley encoding of a path as a two-rowed array");
  std::string e_word, e_start = "0,0";
  en->add_option("--path", e_word, "path word over N/E")->required();
  en->add_option("--start", e_start, "start point X,Y")->capture_default_str();
  en->callback([&]() {
    const LatticePath p = parse_path(e_word, parse_point("--start", e_start));
    std::cout << array_to_json(encode_path(p)).dump(2) << "\n";
  });

  // biject
  auto* bj = app.add_subcommand("biject", "apply a crossing-reducing map");
  std::string b_map, b_input;
  int b_r = 0;
  bj->add_option("--map", b_map, "one of alpha, beta, nu, gamma, delta, sigma, gamma0")
      ->required()
      ->check(CLI::IsMember({"alpha", "beta", "nu", "gamma", "delta", "sigma", "gamma0"}));
  bj->add_option("--r", b_r, "crossing ordinal for alpha/beta/gamma/delta");
  bj->add_option("--input", b_input, "JSON file with an array or a pair (- for stdin)")
      ->required();
  bj->callback([&]() {
    const json j = load_json(b_input);
    const bool pair_input = j.contains("first");
    const bool pair_map =
        b_map == "gamma" || b_map == "delta" || b_map == "sigma" || b_map == "gamma0";
    if (pair_input != pair_map)
      throw std::runtime_error("map " + b_map + (pair_map ? " needs a pair input"
                                                          : " needs a single array input"));
    if (pair_map) {
      const ArrayPair ap = pair_from_json(j);
      ArrayPair image = ap;
      if (b_map == "gamma") image = gamma(b_r, ap);
      if (b_map == "delta") image = delta(b_r, ap);
      if (b_map == "sigma") image = sigma(ap);
      if (b_map == "gamma0") image = gamma0(ap);
      trace_pair(ap, b_map, b_r);
      std::cout << pair_to_json(image).dump(2) << "\n";
    } else {
      const TwoRowedArray a = array_from_json(j);
      TwoRowedArray image = a;
      if (b_map == "alpha") image = alpha(b_r, a);
      if (b_map == "beta") image = beta(b_r, a);
      if (b_map == "nu") image = nu(a);
      trace_single(a, b_map, b_r);
      std::cout << array_to_json(image).dump(2) << "\n";
    }
  });

  // verify
  auto* vf = app.add_subcommand("verify", "run a cross-check suite");
  std::string v_suite;
  vf->add_option("suite", v_suite, "line, pairs, lemmas or bijections")
      ->required()
      ->check(CLI::IsMember({"line", "pairs", "lemmas", "bijections"}));
  int v_max_a = 7, v_max_b = 7, v_margin = 2, v_rcap = -1, v_window = 5;
  long long v_instances = 100000;
  unsigned v_seed = 12345;
  std::string v_jsonl;
  vf->add_option("--max-a", v_max_a, "largest up-step count in the line sweep")
      ->capture_default_str();
  vf->add_option("--max-b", v_max_b, "largest down-step count in the line sweep")
      ->capture_default_str();
  vf->add_option("--ell-margin", v_margin, "line heights swept beyond the path range")
      ->capture_default_str();
  vf->add_option("--r-cap", v_rcap, "largest crossing bound (default: suite specific)");
  vf->add_option("--window", v_window, "coordinate window for the pair sweep")
      ->capture_default_str();
  vf->add_option("--instances", v_instances, "minimum map applications for bijections")
      ->capture_default_str();
  vf->add_option("--seed", v_seed, "seed for the randomized bijection instances")
      ->capture_default_str();
  vf->add_option("--jsonl", v_jsonl, "write one JSON line per sweep query to this file");
  vf->callback([&]() {
    std::ofstream jsonl_file;
    std::ostream* jsonl = nullptr;
    if (!v_jsonl.empty()) {
      jsonl_file.open(v_jsonl);
      if (!jsonl_file) throw std::runtime_error("cannot open " + v_jsonl);
      jsonl = &jsonl_file;
    }
    SuiteResult result;
    if (v_suite == "line") {
      result = verify_line(v_max_a, v_max_b, v_margin, v_rcap < 0 ? 14 : v_rcap, threads, jsonl);
    } else if (v_suite == "pairs") {
      result = verify_pairs(v_window, v_rcap < 0 ? 8 : v_rcap, threads, jsonl);
    } else if (v_suite == "lemmas") {
      result = verify_lemmas();
    } else {
      result = verify_bijections(v_instances, v_seed);
    }
    print_suite(result);
    if (!result.pass()) exit_code = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const Error& e) {
    std::cerr << "error (" << errc_name(e.code()) << "): " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
