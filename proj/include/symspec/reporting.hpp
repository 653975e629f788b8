#pragma once

#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "symspec/catalog.hpp"
#include "symspec/diagrams.hpp"
#include "symspec/eigenfunctions.hpp"
#include "symspec/spectrum.hpp"

namespace symspec {

using nlohmann::json;

enum class OutputFormat { Human, Json, Csv };

inline OutputFormat format_from_name(const std::string& s) {
  if (s == "human" || s == "table") return OutputFormat::Human;
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  throw std::invalid_argument("unknown output format '" + s + "' (expected human, json or csv)");
}

constexpr int kSchemaVersion = 1;

namespace detail {

inline json rational_json(const Rational& r) {
  return json{{"exact", to_string(r)}, {"decimal", to_double(r)}};
}

}  // namespace detail

// ---------------------------------------------------------------------------
// spectrum
// ---------------------------------------------------------------------------

inline json spectrum_payload(const SymmetricSpaceDescriptor& space, long k_max) {
  json rows = json::array();
  bool has_closed = (space.id == "S^n" || space.id == "CP^n" || space.id == "HP^n");
  for (const auto& line : spectral_lines(space, k_max)) {
    json row;
    row["k"] = line.k;
    row["energy"] = detail::rational_json(line.energy);
    row["eigenvalue"] = detail::rational_json(line.eigenvalue);
    row["multiplicity_weyl"] = line.multiplicity.get_str();
    if (has_closed) row["multiplicity_closed"] = multiplicity_closed(space, line.k).get_str();
    json coeffs = json::array();
    for (long c : line.weight.coeffs) coeffs.push_back(c);
    row["weight_coeffs"] = coeffs;
    rows.push_back(std::move(row));
  }
  json out;
  out["schema_version"] = kSchemaVersion;
  out["command"] = "spectrum";
  out["space"] = space.id;
  out["n"] = space.n;
  out["N_M"] = space.N_M;
  out["sigma"] = to_string(space.sigma);
  out["k_max"] = k_max;
  out["rows"] = std::move(rows);
  return out;
}

inline std::string render_spectrum_human(const json& payload) {
  std::ostringstream out;
  out << "space " << payload["space"].get<std::string>();
  if (payload["n"].get<int>() > 0) out << " (n = " << payload["n"].get<int>() << ")";
  out << ", N_M = " << payload["N_M"].get<long>() << ", sigma = " << payload["sigma"].get<std::string>()
      << "\n";
  out << std::left << std::setw(4) << "k" << std::setw(14) << "energy" << std::setw(14) << "eigenvalue"
      << std::setw(14) << "mult(weyl)" << std::setw(14) << "mult(closed)" << "weight\n";
  for (const auto& row : payload["rows"]) {
    out << std::left << std::setw(4) << row["k"].get<long>() << std::setw(14)
        << row["energy"]["exact"].get<std::string>() << std::setw(14)
        << row["eigenvalue"]["exact"].get<std::string>() << std::setw(14)
        << row["multiplicity_weyl"].get<std::string>() << std::setw(14)
        << (row.contains("multiplicity_closed") ? row["multiplicity_closed"].get<std::string>() : "-");
    out << "[";
    bool first = true;
    for (const auto& c : row["weight_coeffs"]) {
      out << (first ? "" : ",") << c.get<long>();
      first = false;
    }
    out << "]\n";
  }
  return out.str();
}

inline std::string render_spectrum_csv(const json& payload) {
  std::ostringstream out;
  out << "k,energy,eigenvalue,multiplicity_weyl,multiplicity_closed\n";
  for (const auto& row : payload["rows"]) {
    out << row["k"].get<long>() << "," << row["energy"]["exact"].get<std::string>() << ","
        << row["eigenvalue"]["exact"].get<std::string>() << ","
        << row["multiplicity_weyl"].get<std::string>() << ","
        << (row.contains("multiplicity_closed") ? row["multiplicity_closed"].get<std::string>() : "")
        << "\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// splitting
// ---------------------------------------------------------------------------

inline json splitting_payload(long Q) {
  SplittingSolution sol = splitting_count(Q);
  SymmetricSpaceDescriptor su3 = lookup("SU3/SO3");
  json pairs = json::array();
  Integer total(0);
  for (const auto& [k1, k2] : sol.pairs) {
    // weight k1 a1 + k2 a2 = (2k1 - k2) L1 + (2k2 - k1) L2
    Weight w = weight_from_coeffs(su3.group(), {2 * k1 - k2, 2 * k2 - k1});
    Integer dim = weyl_dim(su3.group(), w);
    total += dim;
    json entry;
    entry["k1"] = k1;
    entry["k2"] = k2;
    entry["weyl_dim"] = dim.get_str();
    auto eig = su3_eigenvalue(k1, k2);
    entry["norm_value"] = eig.norm_value.get_str();
    entry["eigenvalue"] = to_string(eig.eigenvalue);
    pairs.push_back(std::move(entry));
  }
  json out;
  out["schema_version"] = kSchemaVersion;
  out["command"] = "splitting";
  out["Q"] = Q;
  out["count"] = sol.pairs.size();
  out["pairs"] = std::move(pairs);
  out["total_dimension"] = total.get_str();
  return out;
}

inline std::string render_splitting_human(const json& payload) {
  std::ostringstream out;
  out << "Q = " << payload["Q"].get<long>() << ": " << payload["count"].get<size_t>() << " pair(s)\n";
  for (const auto& p : payload["pairs"]) {
    out << "  (k1,k2) = (" << p["k1"].get<long>() << "," << p["k2"].get<long>() << ")"
        << "  dim = " << p["weyl_dim"].get<std::string>()
        << "  eigenvalue = " << p["eigenvalue"].get<std::string>() << "\n";
  }
  out << "total eigenspace dimension = " << payload["total_dimension"].get<std::string>() << "\n";
  return out.str();
}

inline std::string render_splitting_csv(const json& payload) {
  std::ostringstream out;
  out << "k1,k2,weyl_dim,norm_value,eigenvalue\n";
  for (const auto& p : payload["pairs"]) {
    out << p["k1"].get<long>() << "," << p["k2"].get<long>() << "," << p["weyl_dim"].get<std::string>()
        << "," << p["norm_value"].get<std::string>() << "," << p["eigenvalue"].get<std::string>() << "\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

inline json verify_payload(const VerificationReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks)
    checks.push_back(json{{"name", c.name}, {"status", c.passed ? "pass" : "fail"}, {"detail", c.detail}});
  json out;
  out["schema_version"] = kSchemaVersion;
  out["command"] = "verify";
  out["space"] = report.space_id;
  out["level"] = report.level;
  out["checks"] = std::move(checks);
  out["passed"] = report.all_passed();
  return out;
}

inline std::string render_verify_human(const json& payload) {
  std::ostringstream out;
  out << "verify " << payload["space"].get<std::string>() << " " << payload["level"].get<std::string>()
      << "\n";
  for (const auto& c : payload["checks"]) {
    out << "  [" << c["status"].get<std::string>() << "] " << std::left << std::setw(32)
        << c["name"].get<std::string>() << " " << c["detail"].get<std::string>() << "\n";
  }
  out << (payload["passed"].get<bool>() ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
  return out.str();
}

inline std::string render_verify_csv(const json& payload) {
  std::ostringstream out;
  out << "name,status,detail\n";
  for (const auto& c : payload["checks"]) {
    std::string detail = c["detail"].get<std::string>();
    for (auto& ch : detail)
      if (ch == ',') ch = ';';
    out << c["name"].get<std::string>() << "," << c["status"].get<std::string>() << "," << detail << "\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// diagram
// ---------------------------------------------------------------------------

inline json diagram_payload(const std::string& target, const SatakeDiagram& sd) {
  PaintedDynkin pd = satake_to_painted(sd);
  json painting = json::array();
  for (int i = 0; i < sd.rank; ++i) painting.push_back(sd.white[i] ? "white" : "black");
  json arrows = json::array();
  for (const auto& [a, b] : sd.arrows) arrows.push_back(json::array({a + 1, b + 1}));
  json out;
  out["schema_version"] = kSchemaVersion;
  out["command"] = "diagram";
  out["target"] = target;
  out["family"] = family_name(sd.family);
  out["rank"] = sd.rank;
  out["painting"] = std::move(painting);
  out["arrows"] = std::move(arrows);
  out["second_betti"] = second_betti(sd);
  out["satake_ascii"] = render_ascii(sd);
  out["painted_ascii"] = render_ascii(pd);
  return out;
}

inline std::string render_diagram_human(const json& payload) {
  std::ostringstream out;
  out << "target: " << payload["target"].get<std::string>() << "\n";
  out << "satake diagram:\n  " << payload["satake_ascii"].get<std::string>() << "\n";
  out << "painted Dynkin diagram (arrows deleted):\n  " << payload["painted_ascii"].get<std::string>()
      << "\n";
  out << "b2 = " << payload["second_betti"].get<int>() << "\n";
  return out.str();
}

}  // namespace symspec
