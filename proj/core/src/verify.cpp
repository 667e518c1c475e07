#include "zconvex/verify.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "zconvex/anatomy.hpp"
#include "zconvex/gf.hpp"
#include "zconvex/pathmetry.hpp"

namespace zconvex {

Classifier standard_classifier() {
  return [](const Polyomino& p) {
    std::vector<std::string> labels;
    labels.reserve(5);
    labels.emplace_back("convex");
    switch (classify(p)) {
      case ClassLabel::Centered: labels.emplace_back("centered"); break;
      case ClassLabel::Ascending: labels.emplace_back("ascending"); break;
      case ClassLabel::Descending: labels.emplace_back("descending"); break;
    }
    const int degree = convexity_degree(p);
    if (degree <= 1) labels.emplace_back("l-convex");
    if (degree <= 2) labels.emplace_back("z-convex");
    labels.push_back("degree=" + std::to_string(degree));
    return labels;
  };
}

Classifier label_filter(const std::vector<std::string>& names) {
  static const std::set<std::string> known = {"all",        "convex",   "centered", "ascending",
                                              "descending", "l-convex", "z-convex", "degree"};
  std::set<std::string> wanted;
  bool degrees = false;
  for (const std::string& n : names) {
    if (!known.count(n)) throw CensusError("unknown class '" + n + "'");
    if (n == "degree")
      degrees = true;
    else
      wanted.insert(n == "all" ? "convex" : n);
  }
  Classifier base = standard_classifier();
  return [base, wanted, degrees](const Polyomino& p) {
    std::vector<std::string> labels = base(p);
    std::erase_if(labels, [&](const std::string& l) {
      if (l.rfind("degree=", 0) == 0) return !degrees;
      return wanted.count(l) == 0;
    });
    return labels;
  };
}

Integer convex_count_formula(int sp) {
  if (sp < 2) throw std::invalid_argument("semi-perimeter must be at least 2");
  if (sp == 2) return 1;
  if (sp == 3) return 2;
  const unsigned long n = static_cast<unsigned long>(sp - 4);
  Integer four_n;
  mpz_ui_pow_ui(four_n.get_mpz_t(), 4, n);
  Integer binom;
  mpz_bin_uiui(binom.get_mpz_t(), 2 * n, n);
  return Integer(2 * n + 11) * four_n - Integer(4 * (2 * n + 1)) * binom;
}

bool VerificationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

const CheckResult* VerificationReport::find(const std::string& name) const {
  for (const CheckResult& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::string VerificationReport::to_json() const {
  nlohmann::ordered_json doc;
  doc["environment"] = {{"order", order}, {"max_sp", max_sp}, {"workers", workers}};
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const CheckResult& c : checks) {
    list.push_back({{"name", c.name},
                    {"source", c.source},
                    {"observed", c.observed},
                    {"expected", c.expected},
                    {"pass", c.pass},
                    {"seconds", c.seconds}});
  }
  doc["checks"] = std::move(list);
  doc["passed"] = all_passed();
  return doc.dump(2);
}

VerificationReport VerificationReport::from_json(const std::string& text) {
  VerificationReport r;
  try {
    const nlohmann::json doc = nlohmann::json::parse(text);
    const auto& env = doc.at("environment");
    r.order = env.at("order").get<int>();
    r.max_sp = env.at("max_sp").get<int>();
    r.workers = env.at("workers").get<int>();
    for (const auto& c : doc.at("checks")) {
      r.checks.push_back({c.at("name").get<std::string>(), c.at("source").get<std::string>(),
                          c.at("observed").get<std::string>(), c.at("expected").get<std::string>(),
                          c.at("pass").get<bool>(), c.at("seconds").get<double>()});
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed verification report: ") + e.what());
  }
  return r;
}

const std::vector<std::string>& verification_checks() {
  static const std::vector<std::string> names = {
      "convex-census",    "l-convex-census", "z-convex-census",   "bivariate-census",
      "system-vs-closed", "structure",       "series-identities", "hooked-series"};
  return names;
}

namespace {

template <class T>
std::string join(const std::vector<T>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  return os.str();
}

std::vector<Integer> totals_list(const CensusTable& table, const std::string& label, int max_sp) {
  const std::map<int, Integer> by_sp = totals_by_semiperimeter(table, label);
  std::vector<Integer> out;
  for (int sp = 2; sp <= max_sp; ++sp) {
    const auto it = by_sp.find(sp);
    out.push_back(it == by_sp.end() ? Integer(0) : it->second);
  }
  return out;
}

std::vector<Integer> ints(std::initializer_list<long> v) {
  std::vector<Integer> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

// Whether observed starts with the published prefix (clipped to its length).
bool prefix_matches(const std::vector<Integer>& observed, const std::vector<Integer>& published) {
  const std::size_t n = std::min(observed.size(), published.size());
  return std::equal(published.begin(), published.begin() + static_cast<long>(n), observed.begin());
}

std::vector<Integer> uni_coeffs(const UniSeries& s, int from, int to) {
  std::vector<Integer> out;
  for (int n = from; n <= to; ++n) {
    const Rational c = n < static_cast<int>(s.coeffs().size()) ? s.coeffs()[static_cast<std::size_t>(n)] : Rational(0);
    if (c.get_den() != 1) throw std::runtime_error("non-integral series coefficient");
    out.push_back(c.get_num());
  }
  return out;
}

std::string rational_str(const Rational& r) { return r.get_str(); }

class Runner {
 public:
  explicit Runner(const VerifyOptions& o) : opt_(o) {}

  VerificationReport run() {
    VerificationReport report;
    report.order = opt_.order;
    report.max_sp = opt_.max_sp;
    report.workers = opt_.workers;
    for (const std::string& name : verification_checks()) {
      if (!opt_.only.empty() && std::find(opt_.only.begin(), opt_.only.end(), name) == opt_.only.end())
        continue;
      const auto start = std::chrono::steady_clock::now();
      CheckResult r;
      try {
        r = dispatch(name);
      } catch (const std::exception& e) {
        r.observed = std::string("error: ") + e.what();
        r.pass = false;
      }
      r.name = name;
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      if (opt_.progress) opt_.progress(r);
      report.checks.push_back(std::move(r));
    }
    return report;
  }

 private:
  CheckResult dispatch(const std::string& name) {
    if (name == "convex-census") return convex_census();
    if (name == "l-convex-census") return lconvex_census();
    if (name == "z-convex-census") return zconvex_census();
    if (name == "bivariate-census") return bivariate_census();
    if (name == "system-vs-closed") return system_vs_closed();
    if (name == "structure") return structure();
    if (name == "series-identities") return identities();
    if (name == "hooked-series") return hooked();
    throw std::logic_error("unknown check " + name);
  }

  const CensusTable& census() {
    if (!census_) census_ = census_table(opt_.max_sp, standard_classifier(), opt_.workers);
    return *census_;
  }

  BiSeries tampered(const std::string& name, BiSeries f) const {
    if (opt_.tamper) opt_.tamper(name, f);
    return f;
  }

  const BiSeries& zconvex_closed() {
    if (!p_closed_) p_closed_ = tampered("z-convex-closed", gf_zconvex_closed(opt_.order));
    return *p_closed_;
  }

  CheckResult convex_census() {
    const std::vector<Integer> observed = totals_list(census(), "convex", opt_.max_sp);
    std::vector<Integer> formula;
    for (int sp = 2; sp <= opt_.max_sp; ++sp) formula.push_back(convex_count_formula(sp));
    const UniSeries f = diagonal(tampered("convex", gf_convex(opt_.max_sp)));
    const bool pass = prefix_matches(observed, ints({1, 2, 7, 28, 120, 528})) && observed == formula &&
                      observed == uni_coeffs(f, 2, opt_.max_sp);
    return {"", "literature", join(observed), join(formula), pass, 0};
  }

  CheckResult lconvex_census() {
    const std::vector<Integer> observed = totals_list(census(), "l-convex", opt_.max_sp);
    const std::vector<Integer> series = uni_coeffs(gf_lconvex_univariate(opt_.max_sp), 2, opt_.max_sp);
    bool recurrence = true;
    // g_n = 4 g_{n-1} - 2 g_{n-2} from semi-perimeter 5 on.
    for (std::size_t i = 3; i < observed.size(); ++i)
      recurrence = recurrence && observed[i] == 4 * observed[i - 1] - 2 * observed[i - 2];
    const bool pass = prefix_matches(observed, ints({1, 2, 7, 24, 82, 280})) && recurrence && observed == series;
    std::string obs = join(observed);
    if (!recurrence) obs += " (recurrence fails)";
    return {"", "literature", obs, join(series), pass, 0};
  }

  CheckResult zconvex_census() {
    const std::vector<Integer> observed = totals_list(census(), "z-convex", opt_.max_sp);
    const UniSeries closed_diag = diagonal(zconvex_closed());
    const std::vector<Integer> series = uni_coeffs(closed_diag, 2, opt_.max_sp);
    const std::vector<Integer> univariate =
        uni_coeffs(gf_zconvex_univariate_closed(opt_.max_sp), 2, opt_.max_sp);
    const bool pass = prefix_matches(observed, ints({1, 2, 7, 28, 116, 484})) && observed == series &&
                      series == univariate;
    return {"", "literature", join(observed), join(series), pass, 0};
  }

  CheckResult bivariate_census() {
    const int n = opt_.max_sp;
    const std::vector<std::pair<std::string, BiSeries>> targets = {
        {"convex", tampered("convex", gf_convex(n))},
        {"centered", tampered("centered", gf_centered(n))},
        {"z-convex", zconvex_closed().truncated(n)},
    };
    std::map<std::tuple<std::string, int, int>, Integer> counts;
    for (const auto& [key, count] : census()) counts[{key.class_label, key.width, key.height}] += count;
    int compared = 0;
    std::vector<std::string> mismatches;
    for (const auto& [label, f] : targets) {
      for (int i = 0; i <= n; ++i) {
        for (int j = 0; i + j <= n; ++j) {
          const auto it = counts.find({label, i, j});
          const Rational brute = it == counts.end() ? Rational(0) : Rational(it->second);
          ++compared;
          if (f(i, j) != brute && mismatches.size() < 5)
            mismatches.push_back(label + "(" + std::to_string(i) + "," + std::to_string(j) + ")=" +
                                 rational_str(f(i, j)) + " vs " + brute.get_str());
        }
      }
    }
    const std::string expected = std::to_string(compared) + " coefficients equal";
    if (mismatches.empty()) return {"", "brute-force", expected, expected, true, 0};
    return {"", "brute-force", join(mismatches), expected, false, 0};
  }

  CheckResult system_vs_closed() {
    SystemOptions o;
    const SystemState s = solve_system(opt_.order, o);
    const BiSeries p = tampered("z-convex-system", s.p);
    const BiSeries& closed = zconvex_closed();
    std::string first;
    for (int n = 0; n <= opt_.order && first.empty(); ++n)
      for (int i = 0; i <= n && first.empty(); ++i)
        if (p(i, n - i) != closed(i, n - i))
          first = "differs at (" + std::to_string(i) + "," + std::to_string(n - i) + "): " +
                  rational_str(p(i, n - i)) + " vs " + rational_str(closed(i, n - i));
    const std::string toggles = "b1=A2*z*pi, multiplicity=2, b-equations=completed, passes=" +
                                std::to_string(s.iterations + 1);
    const std::string expected = "equal through order " + std::to_string(opt_.order);
    if (first.empty()) return {"", "identity", expected + " (" + toggles + ")", expected, true, 0};
    return {"", "identity", first + " (" + toggles + ")", expected, false, 0};
  }

  CheckResult structure() {
    const int reduction_sp = std::min(opt_.max_sp, 10);
    const int paths_sp = std::min(opt_.max_sp, 9);
    long reduction_checked = 0;
    long paths_checked = 0;
    std::vector<std::string> failures;
    enumerate_convex(reduction_sp, [&](const Polyomino& p) {
      const int sp = p.width() + p.height();
      if (sp <= paths_sp) {
        ++paths_checked;
        if (is_centered(p) != has_centered_paths(p) && failures.size() < 3)
          failures.push_back("centered path shape fails on " + to_json(p));
      }
      if (classify(p) != ClassLabel::Descending) return;
      ++reduction_checked;
      const bool z = is_z_convex(p);
      const bool rhs = check_property1(p) && is_z_convex(reduce(p).image);
      if (z != rhs && failures.size() < 3) failures.push_back("reduction criterion fails on " + to_json(p));
    });
    const std::vector<Integer> asc = totals_list(census(), "ascending", opt_.max_sp);
    const std::vector<Integer> desc = totals_list(census(), "descending", opt_.max_sp);
    const std::vector<Integer> cen = totals_list(census(), "centered", opt_.max_sp);
    const std::vector<Integer> all = totals_list(census(), "convex", opt_.max_sp);
    bool partition = true;
    for (std::size_t i = 0; i < all.size(); ++i) partition = partition && asc[i] + desc[i] + cen[i] == all[i];
    if (asc != desc) failures.push_back("ascending " + join(asc) + " vs descending " + join(desc));
    if (!partition) failures.push_back("class counts do not sum to the convex count");

    std::ostringstream summary;
    summary << "reduction criterion on " << reduction_checked << " descending (sp<=" << reduction_sp
            << "), centered paths on " << paths_checked << " convex (sp<=" << paths_sp
            << "), ascending=descending through sp " << opt_.max_sp;
    if (failures.empty()) return {"", "brute-force", summary.str(), summary.str(), true, 0};
    return {"", "brute-force", join(failures), summary.str(), false, 0};
  }

  CheckResult identities() {
    const int n = opt_.order;
    const BiSeries x = BiSeries::x(n);
    const BiSeries y = BiSeries::y(n);
    const BiSeries one = BiSeries::one(n);
    const BiSeries d = tampered("d", solve_d(n));
    const BiSeries c = tampered("catalan", solve_kernel_root(n));
    std::vector<std::string> failures;
    if (!(d == (x + d) * (y + d))) failures.push_back("d != (x+d)(y+d)");
    const BiSeries lhs = one - x - y - Rational(2) * d;
    if (!(lhs * lhs == delta(n))) failures.push_back("(1-x-y-2d)^2 != Delta");
    if (!(c - one - (x - y) * c - y * c * c).is_zero()) failures.push_back("kernel residual nonzero");
    if (!(d == y * (c - one))) failures.push_back("d != y(c-1)");
    const std::vector<Integer> cat = uni_coeffs(diagonal(c), 0, n);
    std::vector<Integer> expected;
    for (int k = 0; k <= n; ++k) {
      Integer b;
      mpz_bin_uiui(b.get_mpz_t(), 2 * static_cast<unsigned long>(k), static_cast<unsigned long>(k));
      expected.push_back(b / (k + 1));
    }
    if (!prefix_matches(cat, ints({1, 1, 2, 5, 14, 42, 132})) || cat != expected)
      failures.push_back("c(t,t) = " + join(cat));
    const std::string summary = "four identities and Catalan diagonal through order " + std::to_string(n);
    if (failures.empty()) return {"", "identity", summary, summary, true, 0};
    return {"", "identity", join(failures), summary, false, 0};
  }

  CheckResult hooked() {
    const int n = std::min(opt_.max_sp, opt_.order);
    const HookedCensus brute = hooked_census(n);
    const HookedCentered centered = gf_centered_hooked(opt_.order);
    const SystemState sys = solve_system(opt_.order);
    std::vector<std::string> failures;
    long compared = 0;
    auto compare = [&](const std::string& label, const USeries& s, const HookCounts& h) {
      for (int i = 0; i <= n; ++i) {
        for (int j = 0; i + j <= n; ++j) {
          const UPoly& poly = s(i, j);
          int top = poly.degree();
          for (const auto& [key, count] : h)
            if (std::get<0>(key) == i && std::get<1>(key) == j) top = std::max(top, std::get<2>(key));
          for (int k = 0; k <= top; ++k) {
            const auto it = h.find({i, j, k});
            const Rational want(static_cast<long>(it == h.end() ? 0 : it->second));
            ++compared;
            if (poly.coeff(k) != want && failures.size() < 5)
              failures.push_back(label + "(" + std::to_string(i) + "," + std::to_string(j) + ",u^" +
                                 std::to_string(k) + ")=" + rational_str(poly.coeff(k)) + " vs " +
                                 want.get_str());
          }
        }
      }
    };
    compare("C_A", centered.type_a, brute.centered_a);
    compare("C_B", centered.type_b, brute.centered_b);
    compare("A", sys.a, brute.all_a);
    compare("B", sys.b, brute.all_b);
    const std::string summary = "C_A, C_B, A, B agree with hooked census through total degree " +
                                std::to_string(n) + " (" + std::to_string(compared) + " coefficients)";
    if (failures.empty()) return {"", "brute-force", summary, summary, true, 0};
    return {"", "brute-force", join(failures), summary, false, 0};
  }

  const VerifyOptions& opt_;
  std::optional<CensusTable> census_;
  std::optional<BiSeries> p_closed_;
};

}  // namespace

VerificationReport run_verification(const VerifyOptions& options) {
  if (options.max_sp < 2) throw std::invalid_argument("max-sp must be at least 2");
  if (options.order < options.max_sp) throw std::invalid_argument("order must be at least max-sp");
  if (options.workers < 1) throw std::invalid_argument("workers must be positive");
  return Runner(options).run();
}

}  // namespace zconvex
