#ifndef VZHU_REPORT_HPP
#define VZHU_REPORT_HPP

#include <json.hpp>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "vzhu/rational.hpp"
#include "vzhu/series.hpp"

namespace vzhu {

using Json = nlohmann::ordered_json;

struct Check {
  std::string name;
  std::size_t samples = 0;
  std::size_t failures = 0;
  // Lexicographically smallest failure witness, so the report does not
  // depend on evaluation order.
  std::optional<std::string> first_failure;

  void record(bool ok, const std::string& witness);
  void fail(const std::string& witness) { record(false, witness); }
  void pass() { record(true, ""); }
};

struct Provenance {
  Rational D = 0;
  Rational D_gen = 0;
  bool stabilized = false;
};

struct VerificationReport {
  std::string command;
  // deque: references from check() stay valid as checks are added.
  std::deque<Check> checks;
  std::optional<Provenance> provenance;
  Json data = Json::object();
  std::optional<double> timing_ms;

  bool passed() const;
  Check& check(const std::string& name);
  // Appends other's checks with "prefix." names and merges its data under prefix.
  void absorb(const VerificationReport& other, const std::string& prefix);
};

Json to_json(const VerificationReport& r);
// Canonical serialization: two-space indent, newline-terminated.
std::string emit_report(const VerificationReport& r);
std::string emit_json(const Json& j);

Json rational_json(const Rational& r);
// {"valuation": v, "order": T, "coeffs": ["p/q", ...]}; order is "exact" for
// Laurent polynomials.
Json series_json(const LaurentSeries& s);

}  // namespace vzhu

#endif  // VZHU_REPORT_HPP
