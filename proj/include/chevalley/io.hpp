// Copyright 2026 The Chevalley Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON and CSV forms of a bracket table. The JSON writer is canonical:
// sorted keys, two-space indent, each innermost array on one line, LF only.

#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "chevalley/bracket_table.hpp"
#include "chevalley/cartan.hpp"
#include "chevalley/errors.hpp"
#include "chevalley/folding.hpp"
#include "chevalley/root_system.hpp"

namespace chevalley {

inline constexpr int kSchemaVersion = 1;

/// Automorphism data with 1-based node labels.
struct AutomorphismInfo {
  int order = 1;
  std::vector<int> perm;
  std::vector<std::vector<int>> orbits;
  friend bool operator==(const AutomorphismInfo&, const AutomorphismInfo&) = default;
};

struct Provenance {
  std::string method = "inductive";  ///< inductive | closed_form | folded
  std::string parent;                ///< parent type, folded tables only
  std::optional<AutomorphismInfo> automorphism;
  friend bool operator==(const Provenance&, const Provenance&) = default;
};

inline AutomorphismInfo describe(const DiagramAutomorphism& aut) {
  AutomorphismInfo info;
  info.order = aut.order();
  for (int j : aut.perm()) info.perm.push_back(j + 1);
  for (const auto& o : aut.orbits()) {
    info.orbits.emplace_back();
    for (int j : o) info.orbits.back().push_back(j + 1);
  }
  return info;
}

inline Provenance folded_provenance(const FoldedSystem& fs) {
  return Provenance{"folded", fs.parent()->cartan().label(), describe(fs.automorphism())};
}

struct TableDocument {
  int schema_version = kSchemaVersion;
  std::string type;
  int rank = 0;
  std::vector<std::vector<int>> cartan_matrix;
  std::vector<int> epsilon;
  std::vector<std::vector<int>> roots;
  /// (a, b, sum, N) for a < b with roots[a] + roots[b] = roots[sum].
  std::vector<std::array<int, 4>> constants;
  /// cartan_action[i][a] = alpha_a(h_i).
  std::vector<std::vector<int>> cartan_action;
  /// opposite[a] = h_alpha in h_i coordinates; [e_a, e_{-a}] = (-1)^{ht} h_alpha.
  std::vector<std::vector<int>> opposite;
  Provenance provenance;
  friend bool operator==(const TableDocument&, const TableDocument&) = default;
};

inline TableDocument make_document(const BracketTable& t, Provenance provenance = {}) {
  const RootSystem& rs = t.roots();
  TableDocument doc;
  doc.type = rs.cartan().label();
  doc.rank = rs.rank();
  doc.cartan_matrix = rs.cartan().rows();
  doc.epsilon = t.epsilon().values();
  for (const auto& r : rs.roots()) doc.roots.push_back(r.coeffs);
  for (std::size_t a = 0; a < rs.size(); ++a) {
    for (std::size_t b = a + 1; b < rs.size(); ++b) {
      const auto s = rs.sum(a, b);
      if (s == RootSystem::kNone) continue;
      doc.constants.push_back({static_cast<int>(a), static_cast<int>(b), static_cast<int>(s), t.constant(a, b)});
    }
  }
  doc.cartan_action.assign(rs.rank(), std::vector<int>(rs.size(), 0));
  for (int i = 0; i < rs.rank(); ++i)
    for (std::size_t a = 0; a < rs.size(); ++a) doc.cartan_action[i][a] = t.cartan_action(i, a);
  for (std::size_t a = 0; a < rs.size(); ++a) doc.opposite.push_back(t.opposite(a).coords);
  doc.provenance = std::move(provenance);
  return doc;
}

inline nlohmann::json to_json(const TableDocument& doc) {
  nlohmann::json prov = {{"method", doc.provenance.method}};
  if (!doc.provenance.parent.empty()) prov["parent"] = doc.provenance.parent;
  if (doc.provenance.automorphism) {
    const auto& a = *doc.provenance.automorphism;
    prov["automorphism"] = {{"order", a.order}, {"perm", a.perm}, {"orbits", a.orbits}};
  }
  return nlohmann::json{{"schema_version", doc.schema_version},
                        {"type", doc.type},
                        {"rank", doc.rank},
                        {"cartan_matrix", doc.cartan_matrix},
                        {"epsilon", doc.epsilon},
                        {"roots", doc.roots},
                        {"constants", doc.constants},
                        {"cartan_action", doc.cartan_action},
                        {"opposite", doc.opposite},
                        {"provenance", prov}};
}

namespace detail {

inline bool is_container(const nlohmann::json& j) { return j.is_array() || j.is_object(); }

inline void write_canonical(std::ostream& os, const nlohmann::json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  const std::string close(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    if (j.empty()) {
      os << "{}";
      return;
    }
    os << "{\n";
    bool first = true;
    for (const auto& [key, value] : j.items()) {  // nlohmann::json keeps keys sorted
      if (!first) os << ",\n";
      first = false;
      os << pad << nlohmann::json(key).dump() << ": ";
      write_canonical(os, value, indent + 2);
    }
    os << "\n" << close << "}";
  } else if (j.is_array() && std::any_of(j.begin(), j.end(), is_container)) {
    os << "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      os << pad;
      write_canonical(os, j[i], indent + 2);
      os << (i + 1 < j.size() ? ",\n" : "\n");
    }
    os << close << "]";
  } else if (j.is_array()) {
    os << "[";
    for (std::size_t i = 0; i < j.size(); ++i) os << (i ? ", " : "") << j[i].dump();
    os << "]";
  } else {
    os << j.dump();
  }
}

template <class T>
T field(const nlohmann::json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw FormatError(std::string("field '") + key + "' has the wrong shape");
  }
}

}  // namespace detail

/// Canonical text of a document; byte-identical for equal documents.
inline std::string serialize(const TableDocument& doc) {
  std::ostringstream os;
  detail::write_canonical(os, to_json(doc), 0);
  os << "\n";
  return os.str();
}

inline TableDocument from_json(const nlohmann::json& j) {
  TableDocument doc;
  doc.schema_version = detail::field<int>(j, "schema_version");
  if (doc.schema_version != kSchemaVersion) {
    throw FormatError("unsupported schema_version " + std::to_string(doc.schema_version));
  }
  doc.type = detail::field<std::string>(j, "type");
  doc.rank = detail::field<int>(j, "rank");
  doc.cartan_matrix = detail::field<std::vector<std::vector<int>>>(j, "cartan_matrix");
  doc.epsilon = detail::field<std::vector<int>>(j, "epsilon");
  doc.roots = detail::field<std::vector<std::vector<int>>>(j, "roots");
  doc.constants = detail::field<std::vector<std::array<int, 4>>>(j, "constants");
  doc.cartan_action = detail::field<std::vector<std::vector<int>>>(j, "cartan_action");
  doc.opposite = detail::field<std::vector<std::vector<int>>>(j, "opposite");
  const auto prov = detail::field<nlohmann::json>(j, "provenance");
  doc.provenance.method = detail::field<std::string>(prov, "method");
  if (prov.contains("parent")) doc.provenance.parent = detail::field<std::string>(prov, "parent");
  if (prov.contains("automorphism")) {
    const auto a = detail::field<nlohmann::json>(prov, "automorphism");
    doc.provenance.automorphism =
        AutomorphismInfo{detail::field<int>(a, "order"), detail::field<std::vector<int>>(a, "perm"),
                         detail::field<std::vector<std::vector<int>>>(a, "orbits")};
  }
  return doc;
}

inline TableDocument parse_document(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
  return from_json(j);
}

/// Rebuilds the table, checking the document against the regenerated root
/// system: same matrix, same root order, every root-sum pair exactly once,
/// consistent Cartan actions.
inline BracketTable to_table(const TableDocument& doc) {
  CartanType type;
  try {
    type = CartanType::parse(doc.type);
  } catch (const IllegalType& e) {
    throw FormatError(e.what());
  }
  const CartanMatrix cm = build_cartan(type);
  if (doc.rank != cm.rank()) throw FormatError("rank does not match type " + doc.type);
  if (doc.cartan_matrix != cm.rows()) throw FormatError("cartan_matrix does not match type " + doc.type);
  const auto rsp = generate_roots(cm);
  const RootSystem& rs = *rsp;
  if (doc.roots.size() != rs.size()) throw FormatError("wrong number of roots");
  for (std::size_t a = 0; a < rs.size(); ++a) {
    if (doc.roots[a] != rs.root(a).coeffs) throw FormatError("roots are not in canonical order");
  }
  if (static_cast<int>(doc.epsilon.size()) != cm.rank()) throw FormatError("epsilon has wrong size");
  SignFunction eps;
  try {
    eps = SignFunction(doc.epsilon);
  } catch (const InvalidEpsilon& e) {
    throw FormatError(e.what());
  }

  const std::size_t r = rs.size();
  std::vector<int> N(r * r, 0);
  std::vector<bool> seen(r * r, false);
  for (const auto& [a, b, s, n] : doc.constants) {
    if (a < 0 || b < 0 || s < 0 || static_cast<std::size_t>(std::max({a, b, s})) >= r) {
      throw FormatError("constant index out of range");
    }
    if (a >= b) throw FormatError("constants must be listed with a < b");
    if (rs.sum(a, b) != s) throw FormatError("sum index does not match roots[a] + roots[b]");
    if (seen[a * r + b]) throw FormatError("duplicate constant entry");
    seen[a * r + b] = true;
    N[a * r + b] = n;
    N[b * r + a] = -n;
  }
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = a + 1; b < r; ++b)
      if (rs.sum(a, b) != RootSystem::kNone && !seen[a * r + b]) throw FormatError("missing constant entry");

  if (doc.cartan_action.size() != static_cast<std::size_t>(cm.rank())) throw FormatError("cartan_action has wrong size");
  for (int i = 0; i < cm.rank(); ++i) {
    if (doc.cartan_action[i].size() != r) throw FormatError("cartan_action has wrong size");
    for (std::size_t a = 0; a < r; ++a)
      if (doc.cartan_action[i][a] != rs.simple_pairing(i, a)) throw FormatError("cartan_action is inconsistent");
  }
  if (doc.opposite.size() != r) throw FormatError("opposite has wrong size");
  std::vector<std::vector<int>> H(r);
  for (std::size_t a = 0; a < r; ++a) {
    H[a] = doc.opposite[a];
    if (rs.height(a) % 2 != 0)
      for (int& c : H[a]) c = -c;
  }
  return BracketTable(rsp, eps, std::move(N), std::move(H));
}

/// Rows "alpha,beta,sum,N" for every stored constant.
inline std::string csv_export(const TableDocument& doc) {
  auto compact = [&](int idx) { return Root{doc.roots.at(static_cast<std::size_t>(idx))}.compact(); };
  std::string out = "alpha,beta,sum,N\n";
  for (const auto& [a, b, s, n] : doc.constants) {
    out += compact(a) + "," + compact(b) + "," + compact(s) + "," + std::to_string(n) + "\n";
  }
  return out;
}

}  // namespace chevalley
