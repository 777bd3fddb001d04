#pragma once

// Comparisons between the closed-form families and brute-force results.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oddgreedy/greedy.hpp"
#include "oddgreedy/length2.hpp"
#include "oddgreedy/oracle.hpp"
#include "oddgreedy/prefix_families.hpp"

namespace oddgreedy {

struct Length2Hit {
  Integer r;
  Integer t;
};

/// The (r, t) with d = n M (1 + 2t) - r among the given families, if any.
inline std::optional<Length2Hit> length2_membership(const std::vector<Length2Family>& families,
                                                    const Integer& d) {
  for (const auto& f : families) {
    const Integer& r = f.witness.r.value();
    const Integer step = f.family.den_coeff;  // 2 n M
    const Integer shifted = d - f.family.den_const;
    if (shifted >= 0 && shifted % step == 0) return Length2Hit{r, shifted / step};
  }
  return std::nullopt;
}

/// Marks every row with even numerator whose "length is 2" verdict disagrees
/// with membership in the reduced length-2 families. Returns the number of
/// rows compared.
inline std::size_t apply_length2_crosscheck(ScanReport& report) {
  std::size_t compared = 0;
  std::optional<Integer> cached_n;
  std::vector<Length2Family> families;
  for (auto& row : report.length_rows) {
    if (is_odd(row.n) || row.status != ExpansionStatus::Terminated) continue;
    if (!cached_n || *cached_n != row.n) {
      families = length2_families(row.n, true);
      cached_n = row.n;
    }
    ++compared;
    const bool predicted = length2_membership(families, row.d).has_value();
    const bool observed = row.length() == 2;
    if (predicted == observed) continue;
    std::string expected = predicted ? "length 2 (member of a reduced family)"
                                     : "not length 2 (no reduced family contains it)";
    if (row.issue.empty()) row.issue = expected;
    report.counterexamples.push_back(
        {row.n.str() + "/" + row.d.str(), expected, detail::join(row.denominators)});
  }
  report.claims_checked += compared;
  return compared;
}

/// For odd x_m <= xm_max: prefix + [x_m] is greedy (by the criterion and by
/// actually re-expanding) exactly when x_m >= b.
inline std::vector<Counterexample> check_prefix_completeness(const std::vector<OddInt>& prefix,
                                                             const Integer& xm_max) {
  const OddInt b = threshold_b(prefix);
  std::vector<Counterexample> out;
  std::vector<OddInt> xs = prefix;
  xs.emplace_back(1);
  for (Integer xm = 1; xm <= xm_max; xm += 2) {
    xs.back() = OddInt{xm};
    const bool predicted = xm >= b.value();
    const bool by_criterion = is_greedy_sequence(xs);
    const Expansion e = odd_greedy_expand(sum_of_reciprocals(xs), StepCap{xs.size() + 1});
    const bool by_expansion = e.terminated() && e.denominators == xs;
    if (predicted == by_criterion && predicted == by_expansion) continue;
    std::string subject;
    for (const auto& x : xs) subject += (subject.empty() ? "" : ",") + x.value().str();
    out.push_back({"[" + subject + "]", predicted ? "greedy sequence" : "not a greedy sequence",
                   std::string("criterion=") + (by_criterion ? "true" : "false") +
                       " expansion=" + detail::join(to_integers(e.denominators))});
  }
  return out;
}

}  // namespace oddgreedy
