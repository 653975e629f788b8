#pragma once

#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "symspec/diagrams.hpp"
#include "symspec/rational.hpp"
#include "symspec/root_system.hpp"

namespace symspec {

/// How level indices map to dominant highest weights of the group.
enum class HWRule {
  Sphere,   // k times the ambient vector e_1 of B_m / D_m
  CPn,      // k (L_1 + L_n) of A_n
  HPn,      // k L_2 of C_{n+1}
  CaP2,     // k times the minimal fundamental weight of F_4 (dimension 26)
  SU3SO3,   // (k1, k2) -> 2 k2 L_1 + 2 k1 L_2 of A_2
  Linear,   // k times a fixed nonnegative combination of fundamental weights
};

inline std::string hw_rule_name(HWRule r) {
  switch (r) {
    case HWRule::Sphere: return "sphere";
    case HWRule::CPn: return "cpn";
    case HWRule::HPn: return "hpn";
    case HWRule::CaP2: return "cap2";
    case HWRule::SU3SO3: return "su3so3";
    case HWRule::Linear: return "linear";
  }
  return "?";
}

inline HWRule hw_rule_from_name(const std::string& s) {
  if (s == "sphere") return HWRule::Sphere;
  if (s == "cpn") return HWRule::CPn;
  if (s == "hpn") return HWRule::HPn;
  if (s == "cap2") return HWRule::CaP2;
  if (s == "su3so3") return HWRule::SU3SO3;
  if (s == "linear") return HWRule::Linear;
  throw std::invalid_argument("unknown highest-weight rule '" + s + "'");
}

/// Catalog record for one symmetric space.
///
/// The stored Satake painting is normalized so that its white-vertex count
/// equals the rank of the weight lattice driving the spectrum (one node per
/// restricted fundamental weight). For the complex projective family the
/// faithful two-white-node su(n,1) diagram with its arrow is available via
/// grassmannian_satake(1, n).
struct SymmetricSpaceDescriptor {
  std::string id;
  int n = 0;  // family parameter; 0 when the space takes none
  Family group_family;
  int group_rank = 0;
  Family restricted_family;
  int restricted_rank = 0;
  SatakeDiagram satake;
  long N_M = 1;        // first Chern coefficient of the quantization space
  Rational sigma = 1;  // metric rescaling between quantized and unit-metric spectra
  HWRule hw_rule = HWRule::Linear;
  std::vector<long> hw_linear_coeffs;  // only for HWRule::Linear

  std::shared_ptr<const RootSystem> group_rs;
  std::shared_ptr<const RootSystem> restricted_rs;

  int rank() const { return restricted_rank; }
  const RootSystem& group() const { return *group_rs; }
  const RootSystem& restricted() const { return *restricted_rs; }

  /// Highest weight of the level-k eigenspace (rank-one rules).
  Weight highest_weight(long k) const;
  /// Highest weight for the rank-two SU(3)/SO(3) grid.
  Weight highest_weight(long k1, long k2) const;

  bool operator==(const SymmetricSpaceDescriptor& o) const {
    return id == o.id && n == o.n && group_family == o.group_family && group_rank == o.group_rank &&
           restricted_family == o.restricted_family && restricted_rank == o.restricted_rank &&
           satake == o.satake && N_M == o.N_M && sigma == o.sigma && hw_rule == o.hw_rule &&
           hw_linear_coeffs == o.hw_linear_coeffs;
  }
};

namespace detail {

inline int cap2_fundamental_index(const RootSystem& group) {
  // The level-1 eigenspace of the Cayley plane is the 26-dimensional
  // fundamental representation; select the matching fundamental weight.
  int found = -1;
  for (int i = 0; i < group.rank; ++i) {
    std::vector<long> c(group.rank, 0);
    c[i] = 1;
    if (weyl_dim(group, weight_from_coeffs(group, c)) == 26) {
      if (found >= 0)
        throw std::invalid_argument("cap2 rule: ambiguous 26-dimensional fundamental weight");
      found = i;
    }
  }
  if (found < 0)
    throw std::invalid_argument("cap2 rule: group has no 26-dimensional fundamental representation");
  return found;
}

inline void validate_descriptor(const SymmetricSpaceDescriptor& d) {
  if (d.N_M < 1) throw std::invalid_argument("descriptor: N_M must be >= 1");
  if (sgn(d.sigma) <= 0) throw std::invalid_argument("descriptor: sigma must be positive");
  if (d.restricted_rank < 1) throw std::invalid_argument("descriptor: restricted rank must be >= 1");
  if (d.satake.rank != d.group_rank)
    throw std::invalid_argument("descriptor: diagram node count must equal the group rank");
  if (d.hw_rule == HWRule::Linear) {
    if (d.hw_linear_coeffs.empty())
      throw std::invalid_argument("descriptor: linear highest-weight rule needs coefficients");
    if (static_cast<int>(d.hw_linear_coeffs.size()) != d.group_rank)
      throw std::invalid_argument("descriptor: highest-weight coefficients must match the group rank");
  } else if (!d.hw_linear_coeffs.empty()) {
    throw std::invalid_argument("descriptor: highest_weight_coeffs only valid for rule 'linear'");
  }
  // Dominance gate at level 1; throws if the rule is not dominant integral.
  if (d.hw_rule == HWRule::SU3SO3) {
    Weight w = d.highest_weight(1, 1);
    if (!is_dominant(w)) throw std::invalid_argument("descriptor: highest-weight rule not dominant");
  } else {
    Weight w = d.highest_weight(1);
    if (!is_dominant(w)) throw std::invalid_argument("descriptor: highest-weight rule not dominant");
  }
}

inline SymmetricSpaceDescriptor finish(SymmetricSpaceDescriptor d) {
  d.group_rs = std::make_shared<const RootSystem>(build_root_system(d.group_family, d.group_rank));
  d.restricted_rs =
      std::make_shared<const RootSystem>(build_root_system(d.restricted_family, d.restricted_rank));
  validate_descriptor(d);
  return d;
}

}  // namespace detail

inline Weight SymmetricSpaceDescriptor::highest_weight(long k) const {
  if (k < 0) throw std::invalid_argument("highest_weight: level must be >= 0");
  const RootSystem& g = group();
  switch (hw_rule) {
    case HWRule::Sphere: {
      RationalVec v(g.ambient_dim(), Rational(0));
      v[0] = k;
      return weight_from_ambient(g, std::move(v));
    }
    case HWRule::CPn: {
      std::vector<long> c(g.rank, 0);
      c[0] += k;
      c[g.rank - 1] += k;  // n = 1 collapses to 2k L_1
      return weight_from_coeffs(g, std::move(c));
    }
    case HWRule::HPn: {
      if (g.rank < 2) throw std::invalid_argument("hpn rule requires group rank >= 2");
      std::vector<long> c(g.rank, 0);
      c[1] = k;
      return weight_from_coeffs(g, std::move(c));
    }
    case HWRule::CaP2: {
      std::vector<long> c(g.rank, 0);
      c[detail::cap2_fundamental_index(g)] = k;
      return weight_from_coeffs(g, std::move(c));
    }
    case HWRule::Linear: {
      std::vector<long> c(hw_linear_coeffs);
      for (auto& x : c) x *= k;
      return weight_from_coeffs(g, std::move(c));
    }
    case HWRule::SU3SO3:
      throw std::invalid_argument("highest_weight: " + id + " is indexed by a pair (k1, k2)");
  }
  throw std::logic_error("highest_weight: unhandled rule");
}

inline Weight SymmetricSpaceDescriptor::highest_weight(long k1, long k2) const {
  if (hw_rule != HWRule::SU3SO3)
    throw std::invalid_argument("highest_weight(k1,k2): only valid for SU3/SO3");
  if (k1 < 0 || k2 < 0) throw std::invalid_argument("highest_weight: levels must be >= 0");
  // The (p,q) = (k1,k2) family carries highest weight 2 k2 L_1 + 2 k1 L_2.
  return weight_from_coeffs(group(), {2 * k2, 2 * k1});
}

/// Embedded catalog. Knows "S^n", "CP^n", "HP^n", "CaP2", "SU3/SO3".
inline SymmetricSpaceDescriptor lookup(const std::string& id, int n = 0) {
  SymmetricSpaceDescriptor d;
  d.id = id;
  d.n = n;
  if (id == "S^n") {
    if (n < 2) throw std::invalid_argument("S^n requires n >= 2");
    bool odd = (n % 2) != 0;
    int m = odd ? (n + 1) / 2 : n / 2;
    d.group_family = odd ? Family::D : Family::B;
    d.group_rank = m;
    d.restricted_family = Family::A;
    d.restricted_rank = 1;
    std::vector<bool> white(m, false);
    white[0] = true;
    d.satake = make_satake(d.group_family, m, std::move(white), {});
    d.N_M = n - 1;
    d.sigma = 4;
    d.hw_rule = HWRule::Sphere;
  } else if (id == "CP^n") {
    if (n < 1) throw std::invalid_argument("CP^n requires n >= 1");
    d.group_family = Family::A;
    d.group_rank = n;
    d.restricted_family = Family::A;
    d.restricted_rank = 1;
    std::vector<bool> white(n, false);
    white[0] = true;
    d.satake = make_satake(Family::A, n, std::move(white), {});
    d.N_M = n;
    d.sigma = 1;
    d.hw_rule = HWRule::CPn;
  } else if (id == "HP^n") {
    if (n < 1) throw std::invalid_argument("HP^n requires n >= 1");
    d.group_family = Family::C;
    d.group_rank = n + 1;
    d.restricted_family = Family::A;
    d.restricted_rank = 1;
    std::vector<bool> white(n + 1, false);
    white[1] = true;
    d.satake = make_satake(Family::C, n + 1, std::move(white), {});
    d.N_M = 2 * n + 1;
    d.sigma = 1;
    d.hw_rule = HWRule::HPn;
  } else if (id == "CaP2") {
    if (n != 0) throw std::invalid_argument("CaP2 takes no parameter n");
    d.group_family = Family::F4;
    d.group_rank = 4;
    d.restricted_family = Family::A;
    d.restricted_rank = 1;
    std::vector<bool> white(4, false);
    white[3] = true;
    d.satake = make_satake(Family::F4, 4, std::move(white), {});
    d.N_M = 11;
    d.sigma = 1;
    d.hw_rule = HWRule::CaP2;
  } else if (id == "SU3/SO3") {
    if (n != 0) throw std::invalid_argument("SU3/SO3 takes no parameter n");
    d.group_family = Family::A;
    d.group_rank = 2;
    d.restricted_family = Family::A;
    d.restricted_rank = 2;
    d.satake = make_satake(Family::A, 2, {true, true}, {});
    d.N_M = 2;  // c_1 of the full flag is 2(theta_1 + theta_2)
    d.sigma = 1;
    d.hw_rule = HWRule::SU3SO3;
  } else {
    throw std::invalid_argument("unknown space id '" + id + "'");
  }
  return detail::finish(std::move(d));
}

// ---------------------------------------------------------------------------
// Descriptor text format, schema_version 1. See docs/descriptor_format.md.
// ---------------------------------------------------------------------------

namespace detail {

struct DescriptorParser {
  std::vector<std::pair<std::string, std::string>> entries;  // key, raw value
  std::vector<int> lines;

  static std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
  }

  void parse_lines(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      std::string t = trim(line);
      if (t.empty() || t[0] == '#') continue;
      size_t eq = t.find('=');
      if (eq == std::string::npos)
        throw std::invalid_argument("descriptor line " + std::to_string(lineno) +
                                    ": expected 'key = value'");
      std::string key = trim(t.substr(0, eq));
      std::string value = trim(t.substr(eq + 1));
      for (const auto& [k, v] : entries)
        if (k == key)
          throw std::invalid_argument("descriptor line " + std::to_string(lineno) +
                                      ": duplicate key '" + key + "'");
      entries.emplace_back(key, value);
      lines.push_back(lineno);
    }
  }

  std::optional<std::string> get(const std::string& key) const {
    for (const auto& [k, v] : entries)
      if (k == key) return v;
    return std::nullopt;
  }

  std::string require(const std::string& key) const {
    auto v = get(key);
    if (!v) throw std::invalid_argument("descriptor: missing required key '" + key + "'");
    return *v;
  }

  static long to_long(const std::string& key, const std::string& v) {
    try {
      size_t pos = 0;
      long x = std::stol(v, &pos);
      if (pos != v.size()) throw std::invalid_argument("");
      return x;
    } catch (...) {
      throw std::invalid_argument("descriptor: key '" + key + "' is not an integer: '" + v + "'");
    }
  }

  static Rational to_rational(const std::string& key, const std::string& v) {
    try {
      Rational r(v);
      r.canonicalize();
      return r;
    } catch (...) {
      throw std::invalid_argument("descriptor: key '" + key + "' is not a rational: '" + v + "'");
    }
  }

  /// "[a, b, c]" -> items; empty list allowed.
  static std::vector<std::string> to_list(const std::string& key, const std::string& v) {
    if (v.size() < 2 || v.front() != '[' || v.back() != ']')
      throw std::invalid_argument("descriptor: key '" + key + "' must be a bracketed list");
    std::string body = v.substr(1, v.size() - 2);
    std::vector<std::string> items;
    std::string cur;
    int depth = 0;
    for (char c : body) {
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (c == ',' && depth == 0) {
        items.push_back(trim(cur));
        cur.clear();
      } else {
        cur += c;
      }
    }
    std::string last = trim(cur);
    if (!last.empty()) items.push_back(last);
    return items;
  }
};

inline const std::vector<std::string>& descriptor_keys() {
  static const std::vector<std::string> keys = {
      "schema_version", "id",  "n",   "group_family",       "group_rank",
      "restricted_family",     "restricted_rank",           "N_M",
      "sigma",          "satake_painting",                  "satake_arrows",
      "highest_weight_rule",   "highest_weight_coeffs"};
  return keys;
}

}  // namespace detail

/// Parse and validate a descriptor document. Rejects unknown keys and any
/// invariant violation, with field-level diagnostics.
inline SymmetricSpaceDescriptor load_descriptor(const std::string& text) {
  detail::DescriptorParser p;
  p.parse_lines(text);

  const auto& known = detail::descriptor_keys();
  for (size_t i = 0; i < p.entries.size(); ++i) {
    const std::string& key = p.entries[i].first;
    if (std::find(known.begin(), known.end(), key) == known.end())
      throw std::invalid_argument("descriptor line " + std::to_string(p.lines[i]) +
                                  ": unknown key '" + key + "'");
  }

  long version = detail::DescriptorParser::to_long("schema_version", p.require("schema_version"));
  if (version != 1)
    throw std::invalid_argument("descriptor: unsupported schema_version " + std::to_string(version));

  SymmetricSpaceDescriptor d;
  d.id = p.require("id");
  d.n = static_cast<int>(detail::DescriptorParser::to_long("n", p.get("n").value_or("0")));
  d.group_family = family_from_name(p.require("group_family"));
  d.group_rank = static_cast<int>(detail::DescriptorParser::to_long("group_rank", p.require("group_rank")));
  d.restricted_family = family_from_name(p.require("restricted_family"));
  d.restricted_rank =
      static_cast<int>(detail::DescriptorParser::to_long("restricted_rank", p.require("restricted_rank")));
  d.N_M = detail::DescriptorParser::to_long("N_M", p.require("N_M"));
  d.sigma = detail::DescriptorParser::to_rational("sigma", p.require("sigma"));

  auto painting_items = detail::DescriptorParser::to_list("satake_painting", p.require("satake_painting"));
  std::vector<bool> white;
  for (const auto& it : painting_items) {
    if (it == "white") {
      white.push_back(true);
    } else if (it == "black") {
      white.push_back(false);
    } else {
      throw std::invalid_argument("descriptor: satake_painting entries must be 'white' or 'black'");
    }
  }
  std::vector<std::pair<int, int>> arrows;
  for (const auto& it : detail::DescriptorParser::to_list("satake_arrows", p.get("satake_arrows").value_or("[]"))) {
    if (it.size() < 5 || it.front() != '(' || it.back() != ')')
      throw std::invalid_argument("descriptor: satake_arrows entries must look like (i,j)");
    std::string body = it.substr(1, it.size() - 2);
    size_t comma = body.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("descriptor: satake_arrows entries must look like (i,j)");
    long a = detail::DescriptorParser::to_long("satake_arrows", detail::DescriptorParser::trim(body.substr(0, comma)));
    long b = detail::DescriptorParser::to_long("satake_arrows", detail::DescriptorParser::trim(body.substr(comma + 1)));
    arrows.emplace_back(static_cast<int>(a - 1), static_cast<int>(b - 1));  // file uses 1-based nodes
  }
  const int painted_rank = static_cast<int>(white.size());
  d.satake = make_satake(d.group_family, painted_rank, std::move(white), std::move(arrows));

  d.hw_rule = hw_rule_from_name(p.require("highest_weight_rule"));
  for (const auto& it :
       detail::DescriptorParser::to_list("highest_weight_coeffs", p.get("highest_weight_coeffs").value_or("[]")))
    d.hw_linear_coeffs.push_back(detail::DescriptorParser::to_long("highest_weight_coeffs", it));

  return detail::finish(std::move(d));
}

/// Deterministic inverse of load_descriptor.
inline std::string serialize(const SymmetricSpaceDescriptor& d) {
  std::ostringstream out;
  out << "schema_version = 1\n";
  out << "id = " << d.id << "\n";
  out << "n = " << d.n << "\n";
  out << "group_family = " << family_name(d.group_family) << "\n";
  out << "group_rank = " << d.group_rank << "\n";
  out << "restricted_family = " << family_name(d.restricted_family) << "\n";
  out << "restricted_rank = " << d.restricted_rank << "\n";
  out << "N_M = " << d.N_M << "\n";
  out << "sigma = " << to_string(d.sigma) << "\n";
  out << "satake_painting = [";
  for (int i = 0; i < d.satake.rank; ++i) out << (i ? ", " : "") << (d.satake.white[i] ? "white" : "black");
  out << "]\n";
  out << "satake_arrows = [";
  for (size_t i = 0; i < d.satake.arrows.size(); ++i)
    out << (i ? ", " : "") << "(" << (d.satake.arrows[i].first + 1) << "," << (d.satake.arrows[i].second + 1)
        << ")";
  out << "]\n";
  out << "highest_weight_rule = " << hw_rule_name(d.hw_rule) << "\n";
  out << "highest_weight_coeffs = [";
  for (size_t i = 0; i < d.hw_linear_coeffs.size(); ++i) out << (i ? ", " : "") << d.hw_linear_coeffs[i];
  out << "]\n";
  return out.str();
}

}  // namespace symspec
