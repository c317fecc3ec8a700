#include "vzhu/report.hpp"

#include <algorithm>

namespace vzhu {

void Check::record(bool ok, const std::string& witness) {
  ++samples;
  if (ok) return;
  ++failures;
  if (!first_failure || witness < *first_failure) first_failure = witness;
}

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.failures == 0; });
}

Check& VerificationReport::check(const std::string& name) {
  for (auto& c : checks)
    if (c.name == name) return c;
  checks.push_back(Check{name, 0, 0, std::nullopt});
  return checks.back();
}

void VerificationReport::absorb(const VerificationReport& other, const std::string& prefix) {
  for (const Check& c : other.checks) {
    Check copy = c;
    copy.name = prefix + "." + c.name;
    checks.push_back(std::move(copy));
  }
  if (!other.data.empty()) data[prefix] = other.data;
  if (other.provenance && !provenance) provenance = other.provenance;
}

Json rational_json(const Rational& r) { return to_string(r); }

Json to_json(const VerificationReport& r) {
  Json j;
  j["command"] = r.command;
  j["status"] = r.passed() ? "pass" : "fail";
  Json checks = Json::array();
  for (const Check& c : r.checks) {
    Json cj;
    cj["name"] = c.name;
    cj["samples"] = c.samples;
    cj["failures"] = c.failures;
    cj["first_failure"] = c.first_failure ? Json(*c.first_failure) : Json(nullptr);
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  if (r.provenance) {
    Json p;
    p["D"] = rational_json(r.provenance->D);
    p["D_gen"] = rational_json(r.provenance->D_gen);
    p["stabilized"] = r.provenance->stabilized;
    j["provenance"] = std::move(p);
  }
  if (!r.data.empty()) j["data"] = r.data;
  if (r.timing_ms) j["timing_ms"] = *r.timing_ms;
  return j;
}

std::string emit_json(const Json& j) { return j.dump(2) + "\n"; }

std::string emit_report(const VerificationReport& r) { return emit_json(to_json(r)); }

Json series_json(const LaurentSeries& s) {
  Json j;
  j["valuation"] = s.is_zero() ? Json(nullptr) : Json(s.valuation());
  j["order"] = s.is_exact() ? Json("exact") : Json(s.order());
  Json cs = Json::array();
  int top = s.is_exact() ? s.last_stored() : s.order();
  if (!s.is_zero())
    for (int e = s.valuation(); e <= top; ++e) cs.push_back(to_string(s.coeff(e)));
  j["coeffs"] = std::move(cs);
  return j;
}

}  // namespace vzhu
