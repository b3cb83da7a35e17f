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

// Cartan matrices of finite type, sign functions on the Dynkin diagram and
// diagram automorphisms used for folding.
//
// Node numbering follows the Bourbaki-style tables: E-series have the branch
// node 2 attached to node 4, D_n has nodes 1 and 2 both attached to node 3.
// Internally nodes are 0-based; labels and serialized data are 1-based.

#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstddef>
#include <numeric>
#include <queue>
#include <string>
#include <string_view>
#include <vector>

#include "chevalley/errors.hpp"

namespace chevalley {

enum class Family { A, B, C, D, E, F, G };

inline char family_letter(Family f) { return static_cast<char>('A' + static_cast<int>(f)); }

struct CartanType {
  Family family = Family::A;
  int rank = 1;

  bool is_legal() const {
    switch (family) {
      case Family::A: return rank >= 1;
      case Family::B:
      case Family::C: return rank >= 2;
      case Family::D: return rank >= 3;
      case Family::E: return rank >= 6 && rank <= 8;
      case Family::F: return rank == 4;
      case Family::G: return rank == 2;
    }
    return false;
  }

  bool is_simply_laced() const {
    return family == Family::A || family == Family::D || family == Family::E;
  }

  std::string label() const { return family_letter(family) + std::to_string(rank); }

  /// Parses labels such as "E8" or "d4" (case-insensitive). Throws IllegalType
  /// for malformed labels and for ranks outside the finite-type range.
  static CartanType parse(std::string_view text) {
    if (text.size() < 2) throw IllegalType("cannot parse type label '" + std::string(text) + "'");
    const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
    if (letter < 'A' || letter > 'G') {
      throw IllegalType("unknown family in '" + std::string(text) + "'");
    }
    int rank = 0;
    const auto digits = text.substr(1);
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
      throw IllegalType("cannot parse rank in '" + std::string(text) + "'");
    }
    CartanType t{static_cast<Family>(letter - 'A'), rank};
    if (!t.is_legal()) throw IllegalType(t.label() + " is not a finite type");
    return t;
  }

  friend bool operator==(const CartanType&, const CartanType&) = default;
};

/// Integer matrix a_ij = alpha_j(h_i). Rows index the co-root h_i.
class CartanMatrix {
 public:
  CartanMatrix(CartanType type, std::vector<std::vector<int>> rows)
      : type_(type), rows_(std::move(rows)) {
    validate();
  }

  const CartanType& type() const { return type_; }
  std::string label() const { return type_.label(); }
  int rank() const { return static_cast<int>(rows_.size()); }
  int operator()(int i, int j) const { return rows_[i][j]; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }

  bool simply_laced() const {
    for (int i = 0; i < rank(); ++i)
      for (int j = 0; j < rank(); ++j)
        if (i != j && rows_[i][j] != 0 && rows_[i][j] != -1) return false;
    return true;
  }

  bool symmetric() const {
    for (int i = 0; i < rank(); ++i)
      for (int j = 0; j < i; ++j)
        if (rows_[i][j] != rows_[j][i]) return false;
    return true;
  }

  std::vector<int> neighbours(int i) const {
    std::vector<int> out;
    for (int j = 0; j < rank(); ++j)
      if (j != i && rows_[i][j] != 0) out.push_back(j);
    return out;
  }

  friend bool operator==(const CartanMatrix&, const CartanMatrix&) = default;

 private:
  void validate() const {
    const int n = rank();
    if (n == 0) throw InvalidCartanMatrix("empty matrix");
    for (const auto& row : rows_) {
      if (static_cast<int>(row.size()) != n) throw InvalidCartanMatrix("matrix is not square");
    }
    if (type_.rank != n) {
      throw InvalidCartanMatrix("rank " + std::to_string(n) + " does not match label " + label());
    }
    for (int i = 0; i < n; ++i) {
      if (rows_[i][i] != 2) throw InvalidCartanMatrix("diagonal entry is not 2");
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        const int a = rows_[i][j];
        const int b = rows_[j][i];
        if (a > 0) throw InvalidCartanMatrix("positive off-diagonal entry");
        if ((a == 0) != (b == 0)) throw InvalidCartanMatrix("a_ij = 0 but a_ji != 0");
        if (a != 0) {
          const int lo = std::max(a, b);
          const int hi = std::min(a, b);
          if (lo != -1 || hi < -3) throw InvalidCartanMatrix("off-diagonal pair not of finite type");
        }
      }
    }
    // Connectedness.
    std::vector<bool> seen(n, false);
    std::queue<int> todo;
    todo.push(0);
    seen[0] = true;
    int count = 1;
    while (!todo.empty()) {
      const int i = todo.front();
      todo.pop();
      for (int j : neighbours(i)) {
        if (!seen[j]) {
          seen[j] = true;
          ++count;
          todo.push(j);
        }
      }
    }
    if (count != n) throw InvalidCartanMatrix("diagram is not connected");
  }

  CartanType type_;
  std::vector<std::vector<int>> rows_;
};

namespace detail {
inline void add_edge(std::vector<std::vector<int>>& m, int i, int j) {
  m[i - 1][j - 1] = -1;
  m[j - 1][i - 1] = -1;
}
// a_ij = -1, a_ji = -mult: the arrow points towards j.
inline void add_arrow(std::vector<std::vector<int>>& m, int i, int j, int mult) {
  m[i - 1][j - 1] = -1;
  m[j - 1][i - 1] = -mult;
}
}  // namespace detail

inline CartanMatrix build_cartan(CartanType type) {
  if (!type.is_legal()) throw IllegalType(type.label() + " is not a finite type");
  const int n = type.rank;
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 2;
  switch (type.family) {
    case Family::A:
      for (int i = 1; i < n; ++i) detail::add_edge(m, i, i + 1);
      break;
    case Family::B:
      detail::add_arrow(m, 2, 1, 2);
      for (int i = 2; i < n; ++i) detail::add_edge(m, i, i + 1);
      break;
    case Family::C:
      detail::add_arrow(m, 1, 2, 2);
      for (int i = 2; i < n; ++i) detail::add_edge(m, i, i + 1);
      break;
    case Family::D:
      detail::add_edge(m, 1, 3);
      detail::add_edge(m, 2, 3);
      for (int i = 3; i < n; ++i) detail::add_edge(m, i, i + 1);
      break;
    case Family::E:
      detail::add_edge(m, 1, 3);
      detail::add_edge(m, 2, 4);
      for (int i = 3; i < n; ++i) detail::add_edge(m, i, i + 1);
      break;
    case Family::F:
      detail::add_edge(m, 1, 2);
      detail::add_arrow(m, 2, 3, 2);
      detail::add_edge(m, 3, 4);
      break;
    case Family::G:
      detail::add_arrow(m, 1, 2, 3);
      break;
  }
  return CartanMatrix(type, std::move(m));
}

inline CartanMatrix build_cartan(Family family, int rank) { return build_cartan(CartanType{family, rank}); }

/// A function I -> {+1, -1}. Whether it is a proper 2-coloring of a given
/// diagram is checked separately, so corrupted functions can be represented.
class SignFunction {
 public:
  SignFunction() = default;
  explicit SignFunction(std::vector<int> values) : values_(std::move(values)) {
    for (int v : values_) {
      if (v != 1 && v != -1) throw InvalidEpsilon("sign values must be +1 or -1");
    }
  }

  int operator()(int node) const { return values_[node]; }
  std::size_t size() const { return values_.size(); }
  const std::vector<int>& values() const { return values_; }

  bool is_coloring_of(const CartanMatrix& cm) const {
    if (static_cast<int>(values_.size()) != cm.rank()) return false;
    for (int i = 0; i < cm.rank(); ++i)
      for (int j : cm.neighbours(i))
        if (values_[i] != -values_[j]) return false;
    return true;
  }

  void require_coloring_of(const CartanMatrix& cm) const {
    if (!is_coloring_of(cm)) {
      throw InvalidEpsilon("sign function is not a proper 2-coloring of " + cm.label());
    }
  }

  friend bool operator==(const SignFunction&, const SignFunction&) = default;

 private:
  std::vector<int> values_;
};

inline SignFunction flip(const SignFunction& eps) {
  auto v = eps.values();
  for (int& x : v) x = -x;
  return SignFunction(std::move(v));
}

/// The proper 2-coloring with `value` at `anchor` (0-based).
inline SignFunction coloring_from(const CartanMatrix& cm, int anchor, int value) {
  std::vector<int> v(cm.rank(), 0);
  v[anchor] = value;
  std::queue<int> todo;
  todo.push(anchor);
  while (!todo.empty()) {
    const int i = todo.front();
    todo.pop();
    for (int j : cm.neighbours(i)) {
      if (v[j] == 0) {
        v[j] = -v[i];
        todo.push(j);
      }
    }
  }
  return SignFunction(std::move(v));
}

/// The sign function drawn in the standard Dynkin table for each type.
inline SignFunction default_epsilon(const CartanMatrix& cm) {
  switch (cm.type().family) {
    case Family::A:
    case Family::B:
    case Family::D:
    case Family::E:
      return coloring_from(cm, 0, +1);
    case Family::C:
      return coloring_from(cm, cm.rank() - 1, +1);
    case Family::F:
    case Family::G:
      return coloring_from(cm, 0, -1);
  }
  return coloring_from(cm, 0, +1);
}

/// A permutation i -> i' of the nodes together with an ordered listing of
/// its orbits. The first element of each orbit is its representative.
class DiagramAutomorphism {
 public:
  DiagramAutomorphism() = default;

  /// `perm` is 0-based. Orbits are listed by their smallest node.
  explicit DiagramAutomorphism(std::vector<int> perm) : perm_(std::move(perm)) {
    check_bijection();
    std::vector<bool> seen(perm_.size(), false);
    for (int i = 0; i < size(); ++i) {
      if (seen[i]) continue;
      std::vector<int> orbit;
      for (int j = i; !seen[j]; j = perm_[j]) {
        seen[j] = true;
        orbit.push_back(j);
      }
      orbits_.push_back(std::move(orbit));
    }
    compute_order();
  }

  /// Orbits given explicitly (0-based); they must be exactly the cycles of perm.
  DiagramAutomorphism(std::vector<int> perm, std::vector<std::vector<int>> orbits)
      : perm_(std::move(perm)), orbits_(std::move(orbits)) {
    check_bijection();
    std::vector<int> owner(perm_.size(), -1);
    for (std::size_t k = 0; k < orbits_.size(); ++k) {
      for (int i : orbits_[k]) {
        if (i < 0 || i >= size() || owner[i] != -1) {
          throw FoldingPreconditionViolated("orbit listing is not a partition of the nodes");
        }
        owner[i] = static_cast<int>(k);
      }
    }
    for (int i = 0; i < size(); ++i) {
      if (owner[i] == -1 || owner[perm_[i]] != owner[i]) {
        throw FoldingPreconditionViolated("orbit listing does not match the permutation");
      }
    }
    for (const auto& orbit : orbits_) {
      int steps = 0;
      int j = orbit.front();
      do {
        j = perm_[j];
        ++steps;
      } while (j != orbit.front());
      if (steps != static_cast<int>(orbit.size())) {
        throw FoldingPreconditionViolated("orbit listing merges several cycles");
      }
    }
    compute_order();
  }

  int size() const { return static_cast<int>(perm_.size()); }
  int operator()(int node) const { return perm_[node]; }
  int order() const { return order_; }
  const std::vector<int>& perm() const { return perm_; }
  const std::vector<std::vector<int>>& orbits() const { return orbits_; }

  int orbit_size(int node) const {
    for (const auto& o : orbits_)
      if (std::find(o.begin(), o.end(), node) != o.end()) return static_cast<int>(o.size());
    return 0;
  }

  /// Condition (a): a_ij = a_{i'j'}.
  bool preserves(const CartanMatrix& cm) const {
    if (cm.rank() != size()) return false;
    for (int i = 0; i < size(); ++i)
      for (int j = 0; j < size(); ++j)
        if (cm(i, j) != cm(perm_[i], perm_[j])) return false;
    return true;
  }

  /// Condition (b): a_{ii'} = 0 whenever i' != i.
  bool separates_orbits(const CartanMatrix& cm) const {
    for (int i = 0; i < size(); ++i)
      if (perm_[i] != i && cm(i, perm_[i]) != 0) return false;
    return true;
  }

  friend bool operator==(const DiagramAutomorphism&, const DiagramAutomorphism&) = default;

 private:
  void check_bijection() const {
    std::vector<int> sorted = perm_;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < size(); ++i) {
      if (sorted[i] != i) throw FoldingPreconditionViolated("node map is not a bijection");
    }
  }

  void compute_order() {
    order_ = 1;
    for (const auto& o : orbits_) order_ = std::lcm(order_, static_cast<int>(o.size()));
  }

  std::vector<int> perm_;
  std::vector<std::vector<int>> orbits_;
  int order_ = 1;
};

/// The diagram automorphism that folds `cm`, with orbits in the standard
/// listing order. D4 admits two: `order` selects 3 (triality, the default)
/// or 2 (swap of nodes 1 and 2). Every other type ignores `order` unless it
/// contradicts the unique choice.
inline DiagramAutomorphism standard_automorphism(const CartanMatrix& cm, int order = 0) {
  const CartanType t = cm.type();
  const int n = t.rank;
  if (cm != build_cartan(t)) {
    throw NoFoldableSymmetry("matrix labelled " + t.label() + " is not the standard one");
  }
  auto reject = [&](const std::string& why) -> DiagramAutomorphism {
    throw NoFoldableSymmetry(t.label() + ": " + why);
  };
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> orbits;

  if (t.family == Family::D && n == 4 && order != 2) {
    if (order != 0 && order != 3) return reject("D4 admits automorphisms of order 2 or 3 only");
    // 1 -> 2 -> 4 -> 1, 3 fixed.
    perm = {1, 3, 2, 0};
    orbits = {{2}, {0, 1, 3}};
  } else if (t.family == Family::A) {
    if (n % 2 == 0) return reject("condition (b) fails for the symmetry of A_2n");
    if (n < 3) return reject("A1 has no non-trivial symmetry");
    const int m = (n + 1) / 2;  // A_{2m-1}
    for (int i = 1; i <= n; ++i) perm[i - 1] = 2 * m - i - 1;
    orbits.push_back({m - 1});
    for (int k = m - 1; k >= 1; --k) orbits.push_back({k - 1, 2 * m - k - 1});
  } else if (t.family == Family::D) {
    if (n < 4) return reject("the listed foldings need D_{n+1} with n >= 3");
    perm[0] = 1;
    perm[1] = 0;
    orbits.push_back({0, 1});
    for (int i = 2; i < n; ++i) orbits.push_back({i});
  } else if (t.family == Family::E && n == 6) {
    perm = {5, 1, 4, 3, 2, 0};
    orbits = {{1}, {3}, {2, 4}, {0, 5}};
  } else {
    return reject("no diagram automorphism with conditions (a) and (b)");
  }

  DiagramAutomorphism aut(std::move(perm), std::move(orbits));
  if (order != 0 && aut.order() != order) {
    return reject("no folding automorphism of order " + std::to_string(order));
  }
  return aut;
}

}  // namespace chevalley
