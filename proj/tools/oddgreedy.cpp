// oddgreedy: expansions, families, attainability and brute-force scans.
//
// Exit codes: 0 ok, 1 usage or invalid input, 2 step cap reached,
// 3 valuation bound not attainable, 4 counterexample found.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "oddgreedy/oddgreedy.hpp"
#include "oddgreedy/serialize.hpp"

namespace {

using namespace oddgreedy;

enum Exit : int { kOk = 0, kUsage = 1, kCap = 2, kUnattainable = 3, kCounterexample = 4 };

class UsageError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

Integer parse_integer(const std::string& s) {
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size() || s.find_first_not_of("0123456789", start) != std::string::npos) {
    throw UsageError("not an integer: '" + s + "'");
  }
  return Integer{s[0] == '+' ? s.substr(1) : s};
}

std::vector<OddInt> parse_prefix(const std::vector<std::string>& items) {
  std::vector<OddInt> out;
  for (const auto& s : items) {
    const Integer v = parse_integer(s);
    if (v < 1 || !is_odd(v)) throw UsageError("prefix entries must be odd and positive: " + s);
    out.emplace_back(v);
  }
  if (out.empty()) throw UsageError("empty prefix");
  return out;
}

std::string join_odd(const std::vector<OddInt>& xs, const char* sep = " ") {
  std::string s;
  for (const auto& x : xs) s += (s.empty() ? "" : sep) + x.value().str();
  return s;
}

json prefix_inputs(const std::vector<OddInt>& prefix) { return io::odd_list(prefix); }

std::size_t default_jobs() {
  if (const char* env = std::getenv("ODDGREEDY_JOBS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring ODDGREEDY_JOBS='" << env << "'\n";
  }
  return 1;
}

// ---- expand ---------------------------------------------------------------

struct ExpandArgs {
  std::string n, d;
  std::size_t cap = StepCap::kDefault;
  bool trace = false;
  std::string format = "text";
};

int cmd_expand(const ExpandArgs& a) {
  const Fraction q{parse_integer(a.n), parse_integer(a.d)};
  const Expansion e = odd_greedy_expand(q, StepCap{a.cap}, a.trace);
  if (a.format == "json") {
    json inputs{{"n", a.n}, {"d", a.d}, {"cap", io::dec(a.cap)}, {"trace", a.trace}};
    std::cout << make_record("expand", inputs, to_json(e)).dump(2) << '\n';
  } else {
    std::cout << join_odd(e.denominators) << '\n';
    for (std::size_t i = 0; i < e.remainders.size(); ++i) {
      std::cout << "r" << i << " = " << e.remainders[i].str() << '\n';
    }
  }
  if (!e.terminated()) {
    std::cerr << "step cap of " << a.cap << " reached; expansion is incomplete\n";
    return kCap;
  }
  return kOk;
}

// ---- families -------------------------------------------------------------

struct FamiliesArgs {
  std::string numerator;
  std::vector<std::string> prefix;
  bool two_step = false;
  bool reduced = false;
  std::string format = "text";
};

int cmd_families(const FamiliesArgs& a) {
  const bool by_numerator = !a.numerator.empty();
  if (by_numerator == !a.prefix.empty()) {
    throw UsageError("give exactly one of --numerator and --prefix");
  }
  json inputs;
  json results = json::array();
  std::vector<std::string> lines;

  if (by_numerator) {
    if (a.two_step) throw UsageError("--two-step needs --prefix");
    const Integer n = parse_integer(a.numerator);
    inputs = {{"numerator", io::dec(n)}, {"reduced", a.reduced}};
    for (const auto& f : length2_families(n, a.reduced)) {
      results.push_back(to_json(f));
      lines.push_back("r=" + f.witness.r.value().str() + " M=" + f.witness.multiplier().str() +
                      "  " + to_string(f.family));
    }
  } else {
    const auto prefix = parse_prefix(a.prefix);
    inputs = {{"prefix", prefix_inputs(prefix)}, {"two_step", a.two_step}, {"reduced", a.reduced}};
    if (a.two_step && a.reduced) throw UsageError("--two-step and --reduced do not combine");
    if (a.reduced) {
      if (prefix.size() != 1) throw UsageError("--reduced with --prefix needs a single entry");
      require_admissible(prefix);
      for (const auto& rf : fixed1_length2_reduced_forms(prefix[0])) {
        results.push_back({{"y", io::dec(rf.y)}, {"family", to_json(rf.family)}});
        lines.push_back("y=" + rf.y.str() + "  " + to_string(rf.family));
      }
    } else if (a.two_step) {
      const BiFamily f = two_step_family(prefix);
      const XmPolynomial p = f.xm_polynomial();
      const std::size_t m = prefix.size() + 2;
      results.push_back(to_json(f));
      lines.push_back("c1=" + f.c1.str() + " b=" + f.b.value().str() + " c2=" + f.c2.str());
      lines.push_back("x" + std::to_string(m - 1) + " = " + f.b.value().str() + "+2t1");
      lines.push_back("x" + std::to_string(m) + " = " + p.constant.str() + "+" + p.t1.str() +
                      "t1+" + p.t1_squared.str() + "t1^2+" + p.t2.str() + "t2");
    } else {
      const PrefixFamilyResult r = prefix_family(prefix);
      results.push_back(to_json(r));
      lines.push_back("b=" + r.b.value().str() + "  " + to_string(r.family));
    }
  }

  if (a.format == "json") {
    std::cout << make_record("families", inputs, results).dump(2) << '\n';
  } else {
    for (const auto& l : lines) std::cout << l << '\n';
  }
  return kOk;
}

// ---- attain ---------------------------------------------------------------

struct AttainArgs {
  std::vector<std::string> prefix;
  std::string which;  // empty = both
  std::string format = "text";
};

int cmd_attain(const AttainArgs& a) {
  const auto prefix = parse_prefix(a.prefix);
  const auto primes = relevant_primes(prefix);
  const std::size_t m = prefix.size() + 1;

  json prime_rows = json::array();
  bool all_attainable = true;
  std::vector<ValuationBound> bounds;
  for (const auto& p : primes) {
    const ValuationBound b = gcd_valuation_bounds(prefix, p);
    const bool ok = attainability(prefix, p);
    all_attainable = all_attainable && ok;
    bounds.push_back(b);
    prime_rows.push_back({{"p", io::dec(p)},
                          {"V", io::dec(b.max_valuation)},
                          {"vp_prefix", io::dec(b.prefix_valuation)},
                          {"lower", io::dec(b.lower)},
                          {"upper", io::dec(b.upper)},
                          {"attainable", ok}});
    if (a.format != "json") {
      std::cout << "p=" << p << "  bounds [" << b.lower << ", " << b.upper << "]  "
                << (ok ? "attainable" : "not attainable") << '\n';
    }
  }
  if (primes.empty() && a.format != "json") std::cout << "no prime divides the prefix\n";

  json witnesses = json::array();
  bool verified = true;
  if (all_attainable) {
    std::vector<Extreme> which;
    if (a.which.empty() || a.which == "lower") which.push_back(Extreme::Lower);
    if (a.which.empty() || a.which == "upper") which.push_back(Extreme::Upper);
    for (Extreme w : which) {
      const OddInt xm = construct_extremal_xm(prefix, w);
      std::vector<OddInt> all = prefix;
      all.push_back(xm);
      const Integer y = gcd(sigma(static_cast<long>(m) - 1, all), product<OddInt>(std::span<const OddInt>(all)));
      json vals = json::object();
      std::string text;
      bool hit = true;
      for (std::size_t k = 0; k < primes.size(); ++k) {
        const long v = vp(primes[k], y);
        const long target = w == Extreme::Lower ? bounds[k].lower : bounds[k].upper;
        hit = hit && v == target;
        vals[io::dec(primes[k])] = io::dec(v);
        text += " v" + primes[k].str() + "=" + std::to_string(v);
      }
      verified = verified && hit;
      witnesses.push_back({{"which", to_string(w)},
                           {"xm", io::dec(xm.value())},
                           {"y", io::dec(y)},
                           {"valuations", vals},
                           {"verified", hit}});
      if (a.format != "json") {
        std::cout << to_string(w) << " witness x" << m << "=" << xm.value() << "  y=" << y << text
                  << (hit ? "  (verified)" : "  (MISMATCH)") << '\n';
      }
    }
  }

  if (a.format == "json") {
    json inputs{{"prefix", prefix_inputs(prefix)}, {"which", a.which.empty() ? "both" : a.which}};
    std::cout << make_record("attain", inputs, {{"primes", prime_rows}, {"witnesses", witnesses}})
                     .dump(2)
              << '\n';
  }
  if (!verified) {
    std::cerr << "witness does not attain the bound; this contradicts the construction\n";
    return kCounterexample;
  }
  if (!all_attainable) {
    std::cerr << "some prime cannot attain its bounds; no witness constructed\n";
    return kUnattainable;
  }
  return kOk;
}

// ---- scan -----------------------------------------------------------------

struct ScanArgs {
  std::string mode;
  std::string numerator, nmin, nmax, dmax;
  std::optional<std::size_t> expect_length;
  std::size_t max_length = 64;
  std::vector<std::string> prefix;
  std::string xmax;
  std::size_t cap = StepCap::kDefault;
  std::size_t jobs = 0;
  std::string format = "json";
};

int cmd_scan(const ScanArgs& a) {
  const std::size_t jobs = a.jobs ? a.jobs : default_jobs();
  ScanReport report;
  json inputs{{"mode", a.mode}, {"jobs", io::dec(jobs)}};

  if (a.mode == "lengths") {
    ScanWindow w;
    if (!a.numerator.empty()) {
      if (!a.nmin.empty() || !a.nmax.empty()) throw UsageError("--numerator excludes --nmin/--nmax");
      w.numerator_min = w.numerator_max = parse_integer(a.numerator);
    } else {
      if (a.nmin.empty() || a.nmax.empty()) throw UsageError("give --numerator or --nmin and --nmax");
      w.numerator_min = parse_integer(a.nmin);
      w.numerator_max = parse_integer(a.nmax);
    }
    if (a.dmax.empty()) throw UsageError("lengths mode needs --dmax");
    w.max_denominator = parse_integer(a.dmax);
    w.max_length = a.max_length;
    w.cap = StepCap{a.cap};
    w.expect_length = a.expect_length;
    inputs["nmin"] = io::dec(w.numerator_min);
    inputs["nmax"] = io::dec(w.numerator_max);
    inputs["dmax"] = io::dec(w.max_denominator);
    inputs["cap"] = io::dec(a.cap);
    if (a.expect_length) inputs["expect_length"] = io::dec(*a.expect_length);
    report = scan_lengths(w, jobs);
    apply_length2_crosscheck(report);
  } else {
    if (a.prefix.empty() || a.xmax.empty()) throw UsageError("gcd mode needs --prefix and --xmax");
    const auto prefix = parse_prefix(a.prefix);
    const Integer xmax = parse_integer(a.xmax);
    inputs["prefix"] = prefix_inputs(prefix);
    inputs["xmax"] = io::dec(xmax);
    report = scan_gcd_bounds(prefix, xmax, jobs);
  }

  if (a.format == "csv") {
    std::cout << to_csv(report);
  } else {
    std::cout << make_record("scan", inputs, to_json(report)).dump(2) << '\n';
  }

  std::cerr << report.claims_checked << " claims checked, " << report.counterexamples.size()
            << " counterexamples";
  if (a.mode == "lengths") {
    std::cerr << ", " << report.cap_hits << " cap hits";
    if (a.expect_length) std::cerr << ", " << report.expect_length_hits << " of length " << *a.expect_length;
  }
  std::cerr << " (" << report.wall_seconds << " s)\n";
  for (const auto& c : report.counterexamples) {
    std::cerr << "counterexample " << c.subject << ": expected " << c.expected << ", observed "
              << c.observed << '\n';
  }
  if (!report.ok()) return kCounterexample;
  if (report.cap_hits > 0) return kCap;
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Odd greedy unit-fraction expansions and their families"};
  app.require_subcommand(1);

  ExpandArgs ea;
  auto* expand = app.add_subcommand("expand", "Odd greedy expansion of N/D");
  expand->add_option("N", ea.n, "numerator")->required();
  expand->add_option("D", ea.d, "denominator")->required();
  expand->add_option("--cap", ea.cap, "step cap")->check(CLI::PositiveNumber);
  expand->add_flag("--trace", ea.trace, "print the remainder before each step");
  expand->add_option("--format", ea.format)->check(CLI::IsMember({"text", "json"}));

  FamiliesArgs fa;
  auto* families = app.add_subcommand("families", "Closed-form families of expansions");
  families->add_option("--numerator", fa.numerator, "even numerator n (length-2 families)");
  families->add_option("--prefix", fa.prefix, "greedy prefix x1,...,xk")->delimiter(',');
  families->add_flag("--two-step", fa.two_step, "two-parameter family, two terms past the prefix");
  families->add_flag("--reduced", fa.reduced, "reduced-fraction variants");
  families->add_option("--format", fa.format)->check(CLI::IsMember({"text", "json"}));

  AttainArgs aa;
  auto* attain = app.add_subcommand("attain", "Bounds on gcd(sigma, product) and witnesses");
  attain->add_option("--prefix", aa.prefix, "prefix x1,...,xk")->delimiter(',')->required();
  attain->add_option("--which", aa.which)->check(CLI::IsMember({"lower", "upper"}));
  attain->add_option("--format", aa.format)->check(CLI::IsMember({"text", "json"}));

  ScanArgs sa;
  auto* scan = app.add_subcommand("scan", "Brute-force verification over a window");
  scan->add_option("--mode", sa.mode)->required()->check(CLI::IsMember({"lengths", "gcd"}));
  scan->add_option("--numerator", sa.numerator);
  scan->add_option("--nmin", sa.nmin);
  scan->add_option("--nmax", sa.nmax);
  scan->add_option("--dmax", sa.dmax, "largest odd denominator");
  scan->add_option("--expect-length", sa.expect_length, "count fractions of this length");
  scan->add_option("--max-length", sa.max_length, "longer expansions share one tally bucket")
      ->check(CLI::PositiveNumber);
  scan->add_option("--prefix", sa.prefix)->delimiter(',');
  scan->add_option("--xmax", sa.xmax, "largest odd x_m");
  scan->add_option("--cap", sa.cap, "step cap")->check(CLI::PositiveNumber);
  scan->add_option("--jobs", sa.jobs, "worker threads (default $ODDGREEDY_JOBS or 1)")
      ->check(CLI::PositiveNumber);
  scan->add_option("--format", sa.format)->check(CLI::IsMember({"json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (expand->parsed()) return cmd_expand(ea);
    if (families->parsed()) return cmd_families(fa);
    if (attain->parsed()) return cmd_attain(aa);
    return cmd_scan(sa);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
