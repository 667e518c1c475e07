// zconvex: census, analysis, series and verification front end.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "zconvex/anatomy.hpp"
#include "zconvex/census.hpp"
#include "zconvex/gf.hpp"
#include "zconvex/grid.hpp"
#include "zconvex/pathmetry.hpp"
#include "zconvex/verify.hpp"

namespace {

using namespace zconvex;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

// ---------------------------------------------------------------- enumerate

struct EnumerateArgs {
  int max_sp = 0;
  std::string classes = "all";
  std::string group_by = "full";
  std::string format = "csv";
  std::string out;
  int workers = 1;
};

std::string grouped_csv(const CensusTable& table, const std::string& group_by) {
  if (group_by == "full") return to_csv(table);
  std::ostringstream os;
  if (group_by == "semiperimeter") {
    std::map<std::pair<int, std::string>, Integer> g;
    for (const auto& [k, n] : table) g[{k.semiperimeter, k.class_label}] += n;
    os << "semiperimeter,class,count\n";
    for (const auto& [k, n] : g) os << k.first << ',' << k.second << ',' << n.get_str() << '\n';
  } else {
    std::map<std::tuple<int, int, std::string>, Integer> g;
    for (const auto& [k, n] : table) g[{k.width, k.height, k.class_label}] += n;
    os << "width,height,class,count\n";
    for (const auto& [k, n] : g)
      os << std::get<0>(k) << ',' << std::get<1>(k) << ',' << std::get<2>(k) << ',' << n.get_str() << '\n';
  }
  return os.str();
}

std::string census_plain(const CensusTable& table) {
  std::ostringstream os;
  os << "sp  width  height  class  count\n";
  for (const auto& [k, n] : table)
    os << k.semiperimeter << "  " << k.width << "  " << k.height << "  " << k.class_label << "  " << n.get_str()
       << '\n';
  std::map<std::string, std::map<int, Integer>> totals;
  for (const auto& [k, n] : table) totals[k.class_label][k.semiperimeter] += n;
  for (const auto& [label, by_sp] : totals)
    for (const auto& [sp, n] : by_sp) os << "total " << label << " sp=" << sp << ": " << n.get_str() << '\n';
  return os.str();
}

int cmd_enumerate(const EnumerateArgs& a) {
  if (a.max_sp < 2) throw UsageError("--max-sp must be at least 2");
  const CensusTable table = census_table(a.max_sp, label_filter(split_commas(a.classes)), a.workers);
  std::string text;
  if (a.format == "csv")
    text = grouped_csv(table, a.group_by);
  else if (a.format == "json")
    text = to_json(table) + "\n";
  else
    text = census_plain(table);
  write_output(a.out, text);
  return kExitSuccess;
}

// ---------------------------------------------------------------- analyze / show

struct AnalyzeArgs {
  std::string input;
  bool regions = false;
  bool hooks = false;
  bool grid = false;
};

std::string cell_str(Cell c) { return "(" + std::to_string(c.x) + "," + std::to_string(c.y) + ")"; }

std::string cells_str(const std::vector<Cell>& cells) {
  if (cells.empty()) return "empty";
  std::string s;
  for (const Cell& c : cells) s += (s.empty() ? "" : " ") + cell_str(c);
  return s;
}

int cmd_analyze(const AnalyzeArgs& a) {
  const Polyomino p = parse_polyomino(read_input(a.input));
  std::ostringstream os;
  if (a.grid) os << to_text(p) << "\n";
  os << "size: " << p.size() << ", width: " << p.width() << ", height: " << p.height()
     << ", semi-perimeter: " << semi_perimeter(p) << "\n";
  if (!is_convex(p)) {
    os << "not convex\n";
    std::cout << os.str();
    return kExitSuccess;
  }
  const DegreeWitness w = convexity_witness(p);
  const ClassLabel label = classify(p);
  os << "degree: " << w.degree << ", class: " << to_string(label) << "\n";
  os << "witness: " << cell_str(w.a) << " -> " << cell_str(w.b) << "\n";
  if (a.regions) {
    if (label != ClassLabel::Descending) {
      os << "regions: only defined for descending polyominoes\n";
    } else {
      const Regions r = regions(p);
      os << "rows X=" << r.row_x << " Y=" << r.row_y << ", columns S=" << r.col_s << " T=" << r.col_t << "\n";
      os << render_regions(p, r) << "\n";
      os << "omega: " << cells_str(r.omega) << "\n";
      os << "xi: " << cells_str(r.xi) << "\n";
      os << "theta: " << cells_str(r.theta) << "\n";
      os << "lambda: " << cells_str(r.lambda) << (r.lambda.empty() ? " (reduction is the identity)" : "")
         << "\n";
      const bool property1 = check_property1(p);
      os << "property 1: " << (property1 ? "holds" : "fails") << "\n";
      if (!property1) {
        os << "reduction: skipped, so not Z-convex\n";
      } else {
        const Reduced red = reduce(p);
        os << "reduction:\n" << to_text(red.image) << "\n";
        os << "reduction hook: arm row " << red.hook.arm_row << ", corner column " << red.hook.corner_col
           << ", type " << to_string(red.hook.type) << ", k=" << red.hook.k_stat << "\n";
      }
    }
  }
  if (a.hooks) {
    if (label == ClassLabel::Ascending) {
      os << "hooks: none on ascending polyominoes\n";
    } else {
      const std::vector<HookSpec> hooks = enumerate_hooks(p);
      os << "hooks: " << hooks.size() << "\n";
      for (const HookSpec& h : hooks)
        os << "  arm row " << h.arm_row << ", corner column " << h.corner_col << ", type " << to_string(h.type)
           << ", k=" << h.k_stat << "\n";
    }
  }
  std::cout << os.str();
  return kExitSuccess;
}

// ---------------------------------------------------------------- series

struct SeriesArgs {
  std::string target;
  int order = 12;
  std::string format = "table";
  std::string out;
};

struct SeriesRenderer {
  std::string format;

  std::string operator()(const BiSeries& f) const {
    if (format == "table") return to_table(f);
    if (format == "csv") {
      std::ostringstream os;
      os << "i,j,value\n";
      for (int n = 0; n <= f.order(); ++n)
        for (int i = n; i >= 0; --i) os << i << ',' << n - i << ',' << f(i, n - i).get_str() << '\n';
      return os.str();
    }
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int n = 0; n <= f.order(); ++n)
      for (int i = n; i >= 0; --i)
        if (sgn(f(i, n - i)) != 0) rows.push_back({{"i", i}, {"j", n - i}, {"value", f(i, n - i).get_str()}});
    return wrap(rows, f.order());
  }

  std::string operator()(const USeries& f) const {
    if (format == "table") return to_table(f);
    if (format == "csv") {
      std::ostringstream os;
      os << "i,j,k,value\n";
      for (int n = 0; n <= f.order(); ++n)
        for (int i = n; i >= 0; --i) {
          const UPoly& c = f(i, n - i);
          for (int k = 0; k <= c.degree(); ++k)
            if (sgn(c.coeff(k)) != 0) os << i << ',' << n - i << ',' << k << ',' << c.coeff(k).get_str() << '\n';
        }
      return os.str();
    }
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int n = 0; n <= f.order(); ++n)
      for (int i = n; i >= 0; --i) {
        const UPoly& c = f(i, n - i);
        for (int k = 0; k <= c.degree(); ++k)
          if (sgn(c.coeff(k)) != 0)
            rows.push_back({{"i", i}, {"j", n - i}, {"k", k}, {"value", c.coeff(k).get_str()}});
      }
    return wrap(rows, f.order());
  }

  std::string operator()(const UniSeries& f) const {
    std::ostringstream os;
    if (format == "table") {
      for (int n = 0; n <= f.order(); ++n) os << n << ": " << f[n].get_str() << '\n';
      return os.str();
    }
    if (format == "csv") {
      os << "n,value\n";
      for (int n = 0; n <= f.order(); ++n) os << n << ',' << f[n].get_str() << '\n';
      return os.str();
    }
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int n = 0; n <= f.order(); ++n)
      if (sgn(f[n]) != 0) rows.push_back({{"n", n}, {"value", f[n].get_str()}});
    return wrap(rows, f.order());
  }

  std::string wrap(nlohmann::ordered_json rows, int order) const {
    nlohmann::ordered_json doc;
    doc["target"] = target;
    doc["order"] = order;
    doc["coefficients"] = std::move(rows);
    return doc.dump() + "\n";
  }

  std::string target;
};

int cmd_series(const SeriesArgs& a) {
  if (a.order < 0) throw UsageError("--order must be non-negative");
  const AnySeries s = series_by_name(a.target, a.order);
  write_output(a.out, std::visit(SeriesRenderer{a.format, a.target}, s));
  return kExitSuccess;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  int max_sp = 10;
  int order = 12;
  int workers = 1;
  std::string report;
  std::vector<std::string> only;
};

int cmd_verify(const VerifyArgs& a) {
  if (a.max_sp < 2) throw UsageError("--max-sp must be at least 2");
  if (a.order < a.max_sp) throw UsageError("--order must be at least --max-sp");
  VerifyOptions o;
  o.max_sp = a.max_sp;
  o.order = a.order;
  o.workers = a.workers;
  o.only = a.only;
  o.progress = [](const CheckResult& c) {
    std::cerr << (c.pass ? "PASS " : "FAIL ") << c.name << " (" << c.seconds << " s): " << c.observed << "\n";
  };
  const VerificationReport report = run_verification(o);
  if (!a.report.empty()) write_output(a.report, report.to_json() + "\n");
  std::cout << (report.all_passed() ? "all checks passed" : "verification failed") << "\n";
  return report.all_passed() ? kExitSuccess : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Convex and Z-convex polyomino enumeration and generating function checks"};
  app.require_subcommand(1);

  EnumerateArgs en;
  auto* enumerate = app.add_subcommand("enumerate", "Census of convex polyominoes by semi-perimeter");
  enumerate->add_option("--max-sp", en.max_sp, "Largest semi-perimeter")->required();
  enumerate->add_option("--class", en.classes,
                        "Comma-separated labels: all, convex, centered, ascending, descending, l-convex, "
                        "z-convex, degree")
      ->capture_default_str();
  enumerate->add_option("--group-by", en.group_by, "full, semiperimeter or width-height")
      ->check(CLI::IsMember({"full", "semiperimeter", "width-height"}))
      ->capture_default_str();
  enumerate->add_option("--format", en.format, "csv, json or table")
      ->check(CLI::IsMember({"csv", "json", "table"}))
      ->capture_default_str();
  enumerate->add_option("--out", en.out, "Output file (default stdout)")->envname("ZCONVEX_OUT");
  enumerate->add_option("--workers", en.workers, "Worker threads")
      ->envname("ZCONVEX_WORKERS")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  AnalyzeArgs an;
  auto* analyze = app.add_subcommand("analyze", "Degree, class and structure of one polyomino");
  analyze->add_option("input", an.input, "Text grid or JSON cells file, - for stdin")->required();
  analyze->add_flag("--regions", an.regions, "Region split and reduction (descending only)");
  analyze->add_flag("--hooks", an.hooks, "List hooks");

  AnalyzeArgs sh;
  sh.grid = true;
  auto* show = app.add_subcommand("show", "Render a polyomino with its analyses");
  show->add_option("input", sh.input, "Text grid or JSON cells file, - for stdin")->required();
  show->add_flag("--regions", sh.regions, "Annotate regions");
  show->add_flag("--hooks", sh.hooks, "List hooks");

  SeriesArgs se;
  auto* series = app.add_subcommand("series", "Expand a generating function");
  series->add_option("--target", se.target, "Series name")
      ->required()
      ->check(CLI::IsMember(series_targets()));
  series->add_option("--order", se.order, "Truncation order (total degree)")
      ->envname("ZCONVEX_ORDER")
      ->capture_default_str();
  series->add_option("--format", se.format, "table, json or csv")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();
  series->add_option("--out", se.out, "Output file (default stdout)")->envname("ZCONVEX_OUT");

  VerifyArgs ve;
  auto* verify = app.add_subcommand("verify", "Run every cross-check and write a JSON report");
  verify->add_option("--max-sp", ve.max_sp, "Census bound")->capture_default_str();
  verify->add_option("--order", ve.order, "Series order")->envname("ZCONVEX_ORDER")->capture_default_str();
  verify->add_option("--workers", ve.workers, "Worker threads")
      ->envname("ZCONVEX_WORKERS")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_option("--report", ve.report, "JSON report path")->envname("ZCONVEX_OUT");
  verify->add_option("--only", ve.only, "Run only these checks")
      ->delimiter(',')
      ->check(CLI::IsMember(verification_checks()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitSuccess : kExitUsage;
  }

  try {
    if (*enumerate) return cmd_enumerate(en);
    if (*analyze) return cmd_analyze(an);
    if (*show) return cmd_analyze(sh);
    if (*series) return cmd_series(se);
    if (*verify) return cmd_verify(ve);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const GridError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CensusError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
