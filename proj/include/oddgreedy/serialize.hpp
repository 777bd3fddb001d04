#pragma once

// Machine-readable records. Every integer is written as a decimal string so
// nothing is truncated to 64 bits on the way through a JSON parser.

#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "oddgreedy/family.hpp"
#include "oddgreedy/greedy.hpp"
#include "oddgreedy/length2.hpp"
#include "oddgreedy/oracle.hpp"
#include "oddgreedy/prefix_families.hpp"
#include "oddgreedy/two_step.hpp"

namespace oddgreedy {

inline constexpr const char* kSchema = "odd-greedy/1";

using json = nlohmann::json;

namespace io {

inline std::string dec(const Integer& v) { return v.str(); }
template <typename T>
  requires std::is_integral_v<T>
std::string dec(T v) {
  return std::to_string(v);
}
inline Integer integer(const json& j) { return Integer{j.get<std::string>()}; }
inline std::size_t count(const json& j) { return std::stoull(j.get<std::string>()); }
inline long signed_count(const json& j) { return std::stol(j.get<std::string>()); }

inline json fraction(const Fraction& f) { return json{{"num", dec(f.num())}, {"den", dec(f.den())}}; }
inline Fraction fraction_from(const json& j) { return Fraction{integer(j.at("num")), integer(j.at("den"))}; }

inline json odd_list(const std::vector<OddInt>& xs) {
  json a = json::array();
  for (const auto& x : xs) a.push_back(dec(x.value()));
  return a;
}
inline std::vector<OddInt> odd_list_from(const json& j) {
  std::vector<OddInt> out;
  for (const auto& e : j) out.emplace_back(integer(e));
  return out;
}
inline json int_list(const std::vector<Integer>& xs) {
  json a = json::array();
  for (const auto& x : xs) a.push_back(dec(x));
  return a;
}
inline std::vector<Integer> int_list_from(const json& j) {
  std::vector<Integer> out;
  for (const auto& e : j) out.push_back(integer(e));
  return out;
}

}  // namespace io

/// Envelope shared by every command.
inline json make_record(const std::string& command, json inputs, json results) {
  return json{{"schema", kSchema},
              {"command", command},
              {"inputs", std::move(inputs)},
              {"results", std::move(results)}};
}

/// Family as coefficients, text form, and members at param = 0..sample_count-1.
inline json to_json(const AffineFamily& f, int sample_count = 6) {
  json members = json::array();
  for (int t = 0; t < sample_count; ++t) {
    members.push_back({{f.param, io::dec(t)}, {"value", io::fraction(family_member(f, t))}});
  }
  return json{{"A", io::dec(f.num_const)}, {"B", io::dec(f.num_coeff)},
              {"C", io::dec(f.den_const)}, {"D", io::dec(f.den_coeff)},
              {"param", f.param},           {"text", to_string(f)},
              {"members", members}};
}

inline AffineFamily affine_family_from_json(const json& j) {
  return AffineFamily{io::integer(j.at("A")), io::integer(j.at("B")), io::integer(j.at("C")),
                      io::integer(j.at("D")), j.at("param").get<std::string>()};
}

inline json to_json(const Expansion& e) {
  json j{{"denominators", io::odd_list(e.denominators)},
         {"status", to_string(e.status)},
         {"length", io::dec(e.length())}};
  if (!e.remainders.empty()) {
    json trace = json::array();
    for (const auto& r : e.remainders) trace.push_back(io::fraction(r));
    j["remainders"] = trace;
  }
  return j;
}

inline Expansion expansion_from_json(const json& j) {
  Expansion e;
  e.denominators = io::odd_list_from(j.at("denominators"));
  e.status = j.at("status").get<std::string>() == "terminated" ? ExpansionStatus::Terminated
                                                               : ExpansionStatus::StepCapReached;
  if (j.contains("remainders")) {
    for (const auto& r : j.at("remainders")) e.remainders.push_back(io::fraction_from(r));
  }
  return e;
}

inline json to_json(const Length2Family& f) {
  json exps = json::array();
  for (const auto& pp : f.witness.exponents) {
    exps.push_back({{"p", io::dec(pp.prime())}, {"a", io::dec(pp.exponent())}});
  }
  return json{{"r", io::dec(f.witness.r.value())},
              {"M", io::dec(f.witness.multiplier())},
              {"exponents", exps},
              {"family", to_json(f.family)}};
}

inline json to_json(const PrefixFamilyResult& f) {
  return json{{"prefix", io::odd_list(f.prefix)},
              {"b", io::dec(f.b.value())},
              {"family", to_json(f.family)}};
}

inline json to_json(const BiFamily& f) {
  const XmPolynomial poly = f.xm_polynomial();
  json members = json::array();
  for (int t1 = 0; t1 < 3; ++t1) {
    for (int t2 = 0; t2 < 3; ++t2) {
      const BiFamilyMember m = bi_family_member(f, t1, t2);
      members.push_back({{"t1", io::dec(t1)},
                         {"t2", io::dec(t2)},
                         {"denominators", io::odd_list(m.denominators)},
                         {"value", io::fraction(m.value)}});
    }
  }
  return json{{"prefix", io::odd_list(f.prefix)},
              {"c1", io::dec(f.c1)},
              {"b", io::dec(f.b.value())},
              {"c2", io::dec(f.c2)},
              {"x_penultimate", {{"const", io::dec(f.b.value())}, {"t1", "2"}}},
              {"x_last",
               {{"const", io::dec(poly.constant)},
                {"t1", io::dec(poly.t1)},
                {"t1^2", io::dec(poly.t1_squared)},
                {"t2", io::dec(poly.t2)}}},
              {"members", members}};
}

inline BiFamily bi_family_from_json(const json& j) {
  return BiFamily{io::odd_list_from(j.at("prefix")), io::integer(j.at("c1")),
                  OddInt{io::integer(j.at("b"))}, io::integer(j.at("c2"))};
}

// ---- scan reports -------------------------------------------------------

inline json to_json(const LengthRow& r) {
  return json{{"n", io::dec(r.n)},
              {"d", io::dec(r.d)},
              {"length", io::dec(r.length())},
              {"status", to_string(r.status)},
              {"denominators", io::int_list(r.denominators)},
              {"issue", r.issue}};
}

inline json to_json(const GcdRow& r) {
  return json{{"xm", io::dec(r.xm)},       {"y", io::dec(r.y)},
              {"p", io::dec(r.p)},         {"vp", io::dec(r.valuation)},
              {"lower", io::dec(r.lower)}, {"upper", io::dec(r.upper)},
              {"issue", r.issue}};
}

inline json to_json(const ScanReport& s) {
  json counts = json::object();
  for (const auto& [len, c] : s.length_counts) counts[io::dec(len)] = io::dec(c);
  json cex = json::array();
  for (const auto& c : s.counterexamples) {
    cex.push_back({{"subject", c.subject}, {"expected", c.expected}, {"observed", c.observed}});
  }
  json primes = json::array();
  for (const auto& p : s.primes) {
    json hist = json::object();
    for (const auto& [v, c] : p.histogram) hist[io::dec(v)] = io::dec(c);
    primes.push_back({{"p", io::dec(p.p)},
                      {"lower", io::dec(p.lower)},
                      {"upper", io::dec(p.upper)},
                      {"lower_attained", p.lower_attained},
                      {"upper_attained", p.upper_attained},
                      {"histogram", hist}});
  }
  json rows = json::array();
  for (const auto& r : s.length_rows) rows.push_back(to_json(r));
  for (const auto& r : s.gcd_rows) rows.push_back(to_json(r));
  return json{{"mode", s.mode},
              {"claims_checked", io::dec(s.claims_checked)},
              {"counterexamples", cex},
              {"length_counts", counts},
              {"cap_hits", io::dec(s.cap_hits)},
              {"expect_length_hits", io::dec(s.expect_length_hits)},
              {"wall_seconds", s.wall_seconds},
              {"primes", primes},
              {"rows", rows}};
}

inline ScanReport scan_report_from_json(const json& j) {
  ScanReport s;
  s.mode = j.at("mode").get<std::string>();
  s.claims_checked = io::count(j.at("claims_checked"));
  for (const auto& c : j.at("counterexamples")) {
    s.counterexamples.push_back({c.at("subject").get<std::string>(),
                                 c.at("expected").get<std::string>(),
                                 c.at("observed").get<std::string>()});
  }
  for (const auto& [len, c] : j.at("length_counts").items()) {
    s.length_counts[std::stoull(len)] = io::count(c);
  }
  s.cap_hits = io::count(j.at("cap_hits"));
  s.expect_length_hits = io::count(j.at("expect_length_hits"));
  s.wall_seconds = j.at("wall_seconds").get<double>();
  for (const auto& p : j.at("primes")) {
    PrimeSummary ps{io::integer(p.at("p")), io::signed_count(p.at("lower")),
                    io::signed_count(p.at("upper")), p.at("lower_attained").get<bool>(),
                    p.at("upper_attained").get<bool>(), {}};
    for (const auto& [v, c] : p.at("histogram").items()) ps.histogram[std::stol(v)] = io::count(c);
    s.primes.push_back(std::move(ps));
  }
  for (const auto& r : j.at("rows")) {
    if (s.mode == "lengths") {
      s.length_rows.push_back(LengthRow{io::integer(r.at("n")), io::integer(r.at("d")),
                                        io::int_list_from(r.at("denominators")),
                                        r.at("status").get<std::string>() == "terminated"
                                            ? ExpansionStatus::Terminated
                                            : ExpansionStatus::StepCapReached,
                                        r.at("issue").get<std::string>()});
    } else {
      s.gcd_rows.push_back(GcdRow{io::integer(r.at("xm")), io::integer(r.at("y")),
                                  io::integer(r.at("p")), io::signed_count(r.at("vp")),
                                  io::signed_count(r.at("lower")),
                                  io::signed_count(r.at("upper")),
                                  r.at("issue").get<std::string>()});
    }
  }
  return s;
}

/// Column names of the CSV export; identical to the keys of each JSON row.
inline std::vector<std::string> csv_columns(const ScanReport& s) {
  if (s.mode == "lengths") return {"n", "d", "length", "status", "denominators", "issue"};
  return {"xm", "y", "p", "vp", "lower", "upper", "issue"};
}

namespace io {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string csv_cell(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  // lists of integers are space separated inside one cell
  std::string s;
  for (const auto& e : v) {
    if (!s.empty()) s += ' ';
    s += e.get<std::string>();
  }
  return s;
}

}  // namespace io

/// Header row plus one line per scan row.
inline std::string to_csv(const ScanReport& s) {
  const auto columns = csv_columns(s);
  std::ostringstream out;
  for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
  out << '\n';
  auto emit = [&](const json& row) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      out << (i ? "," : "") << io::csv_field(io::csv_cell(row.at(columns[i])));
    }
    out << '\n';
  };
  for (const auto& r : s.length_rows) emit(to_json(r));
  for (const auto& r : s.gcd_rows) emit(to_json(r));
  return out.str();
}

}  // namespace oddgreedy
