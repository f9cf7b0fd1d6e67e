#ifndef PSU3_REPORT_IO_HPP_
#define PSU3_REPORT_IO_HPP_

/**
 * @file report_io.hpp
 * @brief JSON and plain-text rendering of case reports.
 *
 * JSON uses insertion-ordered objects so the output is byte-stable. Integers
 * that fit in 64 bits are numbers; larger ones are decimal strings.
 */

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "psu3/case_engine.hpp"

namespace psu3 {

using Json = nlohmann::ordered_json;

inline Json big_json(const BigInt& v) {
  if (v >= 0 && fits_u64(v)) return to_u64(v);
  return v.str();
}

inline Json params_json(const ParamList& params) {
  Json out = Json::object();
  for (const auto& [k, v] : params) out[k] = v;
  return out;
}

inline Json elimination_json(const Elimination& e) {
  Json out;
  out["reason"] = reason_name(e.reason);
  out["detail"] = e.detail;
  if (!e.witness_primes.empty()) out["witness_primes"] = e.witness_primes;
  if (e.witness_order) out["witness_order"] = big_json(*e.witness_order);
  if (e.witness_edge) out["witness_edge"] = {e.witness_edge->first, e.witness_edge->second};
  return out;
}

inline Json near_miss_json(const NearMiss& nm) {
  Json out;
  out["q"] = nm.q;
  out["d"] = nm.d;
  out["m"] = big_json(nm.m);
  out["group"] = nm.group.name();
  out["family"] = std::string(family_name(nm.group.family));
  out["branch"] = nm.branch;
  out["params"] = params_json(nm.params);
  if (!nm.component_label.empty()) out["component_label"] = nm.component_label;
  out["component"] = big_json(nm.component);
  out["reason"] = nm.eliminated() ? Json(reason_name(nm.primary()->reason)) : Json(nullptr);
  Json reasons = Json::array();
  for (const auto& e : nm.reasons) reasons.push_back(elimination_json(e));
  out["reasons"] = reasons;
  out["flags"] = nm.flags;
  return out;
}

inline Json case_report_json(const CaseReport& r) {
  Json out;
  out["case"] = r.case_id;
  out["title"] = r.title;
  Json ranges;
  ranges["q"] = {{"min", r.q_min}, {"max", r.q_max}};
  ranges["aux_max"] = r.aux_max ? Json(*r.aux_max) : Json(nullptr);
  Json aux = Json::array();
  for (const auto& g : r.ranges) {
    aux.push_back({{"family", g.family}, {"parameter", g.parameter}, {"min", g.min}, {"max", g.max}, {"bound", g.bound}});
  }
  ranges["auxiliary"] = aux;
  out["ranges"] = ranges;
  out["instances"] = r.instances;
  out["candidates"] = r.candidates;
  Json branches = Json::array();
  for (const auto& b : r.branches) {
    branches.push_back({{"d", b.d},
                        {"q_count", b.q_count},
                        {"candidates", b.candidates},
                        {"near_misses", b.near_misses},
                        {"targets", b.targets}});
  }
  out["branches"] = branches;
  Json nms = Json::array();
  for (const auto& nm : r.near_misses) nms.push_back(near_miss_json(nm));
  out["near_misses"] = nms;
  Json targets = Json::array();
  for (const auto& t : r.targets) targets.push_back({{"q", t.q}, {"group", t.group.name()}, {"branch", t.branch}});
  out["targets"] = targets;
  if (!r.checks.empty()) {
    Json checks = Json::array();
    for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    out["checks"] = checks;
  }
  out["notes"] = r.notes;
  out["verdict"] = verdict_name(r.verdict);
  out["survivor"] = r.survivor ? near_miss_json(r.near_misses[*r.survivor]) : Json(nullptr);
  return out;
}

/// A single versioned document holding one or more reports.
inline Json reports_document(const std::vector<CaseReport>& reports) {
  Json out;
  out["version"] = kReportVersion;
  Json arr = Json::array();
  for (const auto& r : reports) arr.push_back(case_report_json(r));
  out["reports"] = arr;
  return out;
}

inline std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

inline std::string params_text(const ParamList& params) {
  std::string out;
  for (const auto& [k, v] : params) {
    if (!out.empty()) out += ", ";
    out += k + "=" + std::to_string(v);
  }
  return out;
}

inline std::string case_report_text(const CaseReport& r) {
  std::ostringstream os;
  os << "case " << r.case_id << ": " << r.title << "\n";
  os << "  q range: " << r.q_min << ".." << r.q_max;
  if (r.aux_max) os << ", aux_max " << *r.aux_max;
  os << "\n";
  for (const auto& g : r.ranges) {
    os << "  " << g.family << ": " << g.parameter << " in " << g.min << ".." << g.max << " (" << g.bound << ")\n";
  }
  os << "  instances " << r.instances << ", candidates " << r.candidates << "\n";
  for (const auto& b : r.branches) {
    os << "  d=" << b.d << ": " << b.q_count << " values of q, " << b.near_misses << " near-misses, " << b.targets
       << " targets\n";
  }
  for (const auto& c : r.checks) os << "  [" << (c.passed ? "ok" : "FAIL") << "] " << c.name << ": " << c.detail << "\n";
  for (const auto& nm : r.near_misses) {
    os << "  q=" << nm.q << " d=" << nm.d << " " << nm.group.name();
    if (!nm.params.empty()) os << " (" << params_text(nm.params) << ")";
    if (!nm.component_label.empty()) os << " " << nm.component_label;
    os << " component " << nm.component.str() << ": ";
    if (nm.eliminated()) {
      os << reason_name(nm.primary()->reason) << " - " << nm.primary()->detail;
    } else {
      os << "SURVIVOR";
    }
    os << "\n";
    for (const auto& f : nm.flags) os << "      flag: " << f << "\n";
  }
  for (const auto& n : r.notes) os << "  note: " << n << "\n";
  os << "  verdict: " << verdict_name(r.verdict) << "\n";
  return os.str();
}

}  // namespace psu3

#endif  // PSU3_REPORT_IO_HPP_
