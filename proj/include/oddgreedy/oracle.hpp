#pragma once

// Brute-force scans. Lengths come from running the odd greedy algorithm and
// gcd data from direct integer gcds; none of the family formulas are used, so
// agreement with them is evidence rather than tautology.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "oddgreedy/exact.hpp"
#include "oddgreedy/greedy.hpp"

namespace oddgreedy {

struct ScanWindow {
  Integer numerator_min = 1;
  Integer numerator_max = 1;
  Integer max_denominator = 3;  ///< odd denominators 1, 3, ..., max_denominator
  std::size_t max_length = 64;  ///< lengths above this are tallied together
  StepCap cap{};
  std::optional<std::size_t> expect_length;

  void validate() const {
    if (numerator_min < 1 || numerator_max < numerator_min) {
      throw std::invalid_argument("numerator range must satisfy 1 <= min <= max");
    }
    if (max_denominator < 3) throw std::invalid_argument("denominator bound must be at least 3");
    if (max_length < 1) throw std::invalid_argument("max length must be at least 1");
  }
};

struct Counterexample {
  std::string subject;   ///< the fraction or tuple in question
  std::string expected;  ///< classification the theorem predicts
  std::string observed;  ///< what the scan saw (expansion, valuation, ...)

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct LengthRow {
  Integer n;
  Integer d;
  std::vector<Integer> denominators;
  ExpansionStatus status = ExpansionStatus::Terminated;
  std::string issue;  ///< empty unless this row is a counterexample

  std::size_t length() const noexcept { return denominators.size(); }
  friend bool operator==(const LengthRow&, const LengthRow&) = default;
};

struct GcdRow {
  Integer xm;
  Integer y;
  Integer p;
  long valuation = 0;
  long lower = 0;
  long upper = 0;
  std::string issue;

  friend bool operator==(const GcdRow&, const GcdRow&) = default;
};

struct PrimeSummary {
  Integer p;
  long lower = 0;
  long upper = 0;
  bool lower_attained = false;
  bool upper_attained = false;
  std::map<long, std::size_t> histogram;  ///< v_p(y) -> count

  friend bool operator==(const PrimeSummary&, const PrimeSummary&) = default;
};

struct ScanReport {
  std::string mode;  ///< "lengths" or "gcd"
  std::size_t claims_checked = 0;
  std::vector<Counterexample> counterexamples;
  std::map<std::size_t, std::size_t> length_counts;  ///< length (max_length+1 = longer) -> count
  std::size_t cap_hits = 0;
  std::size_t expect_length_hits = 0;
  double wall_seconds = 0.0;
  std::vector<LengthRow> length_rows;
  std::vector<GcdRow> gcd_rows;
  std::vector<PrimeSummary> primes;

  bool ok() const noexcept { return counterexamples.empty(); }
};

namespace detail {

/// Runs fn(worker, jobs) on `jobs` threads (inline when jobs <= 1).
template <typename Fn>
void run_partitioned(std::size_t jobs, Fn&& fn) {
  if (jobs <= 1) {
    fn(std::size_t{0}, std::size_t{1});
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (std::size_t w = 0; w < jobs; ++w) pool.emplace_back([&fn, w, jobs] { fn(w, jobs); });
  for (auto& t : pool) t.join();
}

inline std::string join(const std::vector<Integer>& xs) {
  std::string s;
  for (const auto& x : xs) {
    if (!s.empty()) s += ' ';
    s += x.str();
  }
  return s;
}

/// Exactness and the greedy criterion for one expansion without any
/// sigma polynomials. With r_i = n/d - (1/x_1 + ... + 1/x_{i-1}), the
/// pairwise inequality at (i, k) rearranges to
/// x_i (x_i - 2) (1/x_{i+1} + ... + 1/x_k) < 2; the left side grows with k,
/// so once the sum is exact it reads (r_i - 1/x_i) x_i (x_i - 2) < 2.
/// Remainders are kept reduced; their numerators stay small, so every gcd
/// is cheap even when the denominators run to millions of digits.
inline std::string check_expansion(Integer n, Integer d, const std::vector<Integer>& xs) {
  const Integer g0 = gcd(n, d);
  n /= g0;
  d /= g0;
  bool greedy = true;
  for (const auto& x : xs) {
    const Integer rest = n * x - d;  // r - 1/x = rest / (d x)
    if (rest * (x - 2) >= 2 * d) greedy = false;
    d *= x;
    n = rest;
    const Integer g = gcd(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
  }
  if (n != 0) return "sum of reciprocals differs from input";
  if (!greedy) return "output fails the greedy inequality criterion";
  return {};
}

inline LengthRow expand_row(const Integer& n, const Integer& d, const ScanWindow& w) {
  LengthRow row{n, d, {}, ExpansionStatus::Terminated, {}};
  const Expansion e = odd_greedy_expand(Fraction{n, d}, w.cap);
  row.status = e.status;
  row.denominators = to_integers(e.denominators);
  if (!e.terminated()) return row;

  // exactness, the greedy criterion on the output, and length parity
  row.issue = check_expansion(n, d, row.denominators);
  if (row.issue.empty() && row.length() % 2 == 0 && is_odd(n)) {
    row.issue = "even-length expansion of a reduced fraction with odd numerator";
  }
  return row;
}

}  // namespace detail

/// Expands every reduced n/d in the window (d odd) and tallies lengths.
/// Each row is checked for exactness, the greedy criterion and parity.
inline ScanReport scan_lengths(const ScanWindow& w, std::size_t jobs = 1) {
  w.validate();
  const auto start = std::chrono::steady_clock::now();
  jobs = std::max<std::size_t>(jobs, 1);

  std::vector<std::vector<LengthRow>> parts(jobs);
  detail::run_partitioned(jobs, [&](std::size_t worker, std::size_t stride) {
    std::size_t index = 0;
    for (Integer n = w.numerator_min; n <= w.numerator_max; ++n) {
      for (Integer d = 1; d <= w.max_denominator; d += 2, ++index) {
        if (index % stride != worker) continue;
        if (gcd(n, d) != 1) continue;
        parts[worker].push_back(detail::expand_row(n, d, w));
      }
    }
  });

  ScanReport report;
  report.mode = "lengths";
  for (auto& part : parts) {
    for (auto& row : part) report.length_rows.push_back(std::move(row));
  }
  std::sort(report.length_rows.begin(), report.length_rows.end(),
            [](const LengthRow& a, const LengthRow& b) {
              return a.n != b.n ? a.n < b.n : a.d < b.d;
            });

  for (const auto& row : report.length_rows) {
    ++report.claims_checked;
    // Cap hits are reported through cap_hits and the row status; they do not
    // contradict any theorem.
    if (row.status == ExpansionStatus::StepCapReached) {
      ++report.cap_hits;
      continue;
    }
    const std::size_t bucket = std::min(row.length(), w.max_length + 1);
    ++report.length_counts[bucket];
    if (w.expect_length && row.length() == *w.expect_length) ++report.expect_length_hits;
    if (!row.issue.empty()) {
      report.counterexamples.push_back(
          {row.n.str() + "/" + row.d.str(), row.issue, detail::join(row.denominators)});
    }
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

/// For every odd x_m <= xm_max, computes y = gcd(sigma_{m-1}, prod) directly
/// and checks v_p(y) against [v_p(P) - V_p, v_p(P) + V_p] at each prime p
/// dividing the prefix product P, plus v_p(y) = 0 at any other prime of y.
inline ScanReport scan_gcd_bounds(const std::vector<OddInt>& prefix, const Integer& xm_max,
                                  std::size_t jobs = 1) {
  if (prefix.empty()) throw std::invalid_argument("gcd scan needs a nonempty prefix");
  if (!is_greedy_sequence(prefix)) throw std::invalid_argument("prefix is not a greedy sequence");
  if (xm_max < 1 || !is_odd(xm_max)) throw std::invalid_argument("xm_max must be odd positive");
  const auto start = std::chrono::steady_clock::now();
  jobs = std::max<std::size_t>(jobs, 1);

  const Integer prefix_product = product<OddInt>(std::span<const OddInt>(prefix));
  const std::vector<Integer> primes = prime_divisors(prefix_product);
  std::vector<std::pair<long, long>> bounds;
  for (const auto& p : primes) {
    unsigned big = 0;
    for (const auto& x : prefix) big = std::max(big, vp(p, x.value()));
    const long total = vp(p, prefix_product);
    bounds.emplace_back(total - static_cast<long>(big), total + static_cast<long>(big));
  }

  std::vector<std::vector<GcdRow>> parts(jobs);
  detail::run_partitioned(jobs, [&](std::size_t worker, std::size_t stride) {
    std::vector<Integer> xs = to_integers(prefix);
    xs.emplace_back(0);
    std::size_t index = 0;
    for (Integer xm = 1; xm <= xm_max; xm += 2, ++index) {
      if (index % stride != worker) continue;
      xs.back() = xm;
      const Integer y = gcd(sigma(static_cast<long>(xs.size()) - 1, xs), prefix_product * xm);
      Integer rest = y;
      for (std::size_t k = 0; k < primes.size(); ++k) {
        const long v = vp(primes[k], y);
        rest /= ipow(primes[k], static_cast<unsigned>(v));
        GcdRow row{xm, y, primes[k], v, bounds[k].first, bounds[k].second, {}};
        if (v < row.lower || v > row.upper) row.issue = "valuation outside bounds";
        parts[worker].push_back(std::move(row));
      }
      if (rest != 1) {
        for (const auto& p : prime_divisors(rest)) {
          parts[worker].push_back(GcdRow{xm, y, p, static_cast<long>(vp(p, y)), 0, 0,
                                         "prime of y not dividing the prefix"});
        }
      }
    }
  });

  ScanReport report;
  report.mode = "gcd";
  for (auto& part : parts) {
    for (auto& row : part) report.gcd_rows.push_back(std::move(row));
  }
  std::sort(report.gcd_rows.begin(), report.gcd_rows.end(), [](const GcdRow& a, const GcdRow& b) {
    return a.xm != b.xm ? a.xm < b.xm : a.p < b.p;
  });

  for (std::size_t k = 0; k < primes.size(); ++k) {
    report.primes.push_back({primes[k], bounds[k].first, bounds[k].second, false, false, {}});
  }
  for (const auto& row : report.gcd_rows) {
    ++report.claims_checked;
    auto it = std::find_if(report.primes.begin(), report.primes.end(),
                           [&](const PrimeSummary& s) { return s.p == row.p; });
    if (it != report.primes.end()) {
      ++it->histogram[row.valuation];
      if (row.valuation == it->lower) it->lower_attained = true;
      if (row.valuation == it->upper) it->upper_attained = true;
    }
    if (!row.issue.empty()) {
      report.counterexamples.push_back({"x_m=" + row.xm.str() + " p=" + row.p.str(),
                                        "v_p(y) in [" + std::to_string(row.lower) + ", " +
                                            std::to_string(row.upper) + "]",
                                        "v_p(y)=" + std::to_string(row.valuation) + " with y=" +
                                            row.y.str()});
    }
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace oddgreedy
