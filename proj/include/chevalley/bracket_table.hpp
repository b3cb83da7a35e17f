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

// Multiplication table of the basis {h_i} u {e_alpha} and its construction
// by height recursion from the canonical ladder relations
//
//   e_{alpha_i} = eps(i) e_i,   e_{-alpha_i} = -eps(i) f_i,
//   [e_i, e_alpha] = (q_{alpha_i,alpha} + 1) e_{alpha + alpha_i}.
//
// Basis indices: 0..rank-1 are h_i, rank + k is e_{root(k)}.

#pragma once

#include <cstdlib>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "chevalley/cartan.hpp"
#include "chevalley/errors.hpp"
#include "chevalley/report.hpp"
#include "chevalley/root_system.hpp"

namespace chevalley {

class BracketTable {
 public:
  /// `constants` is the dense |Phi| x |Phi| matrix of N_{a,b} (zero where
  /// root(a) + root(b) is not a root); `cartan_parts[a]` holds
  /// [e_a, e_{-a}] in h_i coordinates.
  BracketTable(RootSystemPtr rs, SignFunction eps, std::vector<int> constants,
               std::vector<std::vector<int>> cartan_parts)
      : rs_(std::move(rs)),
        eps_(std::move(eps)),
        constants_(std::move(constants)),
        cartan_parts_(std::move(cartan_parts)) {
    const std::size_t r = rs_->size();
    if (constants_.size() != r * r || cartan_parts_.size() != r) {
      throw FormatError("bracket table dimensions do not match the root system");
    }
    if (static_cast<int>(eps_.size()) != rs_->rank()) throw FormatError("sign function has wrong size");
    for (std::size_t a = 0; a < r; ++a) {
      if (static_cast<int>(cartan_parts_[a].size()) != rs_->rank()) {
        throw FormatError("Cartan part has wrong size");
      }
      for (std::size_t b = 0; b < r; ++b) {
        if (rs_->sum(a, b) == RootSystem::kNone && constants_[a * r + b] != 0) {
          throw FormatError("nonzero constant for " + rs_->root(a).compact() + " + " + rs_->root(b).compact() +
                            " which is not a root");
        }
      }
    }
  }

  const RootSystem& roots() const { return *rs_; }
  const RootSystemPtr& root_system() const { return rs_; }
  const SignFunction& epsilon() const { return eps_; }
  int rank() const { return rs_->rank(); }
  std::size_t dimension() const { return rs_->size() + static_cast<std::size_t>(rank()); }

  int constant(std::size_t a, std::size_t b) const { return constants_[a * rs_->size() + b]; }
  const std::vector<int>& constants() const { return constants_; }

  /// [e_a, e_{-a}] as stored in the table.
  const std::vector<int>& cartan_part(std::size_t a) const { return cartan_parts_[a]; }
  const std::vector<std::vector<int>>& cartan_parts() const { return cartan_parts_; }

  /// h_a read off the table via [e_a, e_{-a}] = (-1)^{ht(a)} h_a.
  CorootVector opposite(std::size_t a) const {
    CorootVector h{cartan_parts_[a]};
    if (rs_->height(a) % 2 != 0)
      for (int& c : h.coords) c = -c;
    return h;
  }

  /// alpha(h_i) for alpha = root(a).
  int cartan_action(int node, std::size_t a) const { return rs_->simple_pairing(node, a); }

  bool is_cartan(std::size_t u) const { return u < static_cast<std::size_t>(rank()); }
  std::size_t root_of(std::size_t u) const { return u - static_cast<std::size_t>(rank()); }
  std::size_t basis_of_root(std::size_t a) const { return a + static_cast<std::size_t>(rank()); }

  /// Calls emit(basis_index, coefficient) for each nonzero term of [u, v].
  template <class Emit>
  void bracket_basis(std::size_t u, std::size_t v, Emit&& emit) const {
    const bool hu = is_cartan(u);
    const bool hv = is_cartan(v);
    if (hu && hv) return;
    if (hu) {
      const int c = cartan_action(static_cast<int>(u), root_of(v));
      if (c != 0) emit(v, c);
      return;
    }
    if (hv) {
      const int c = cartan_action(static_cast<int>(v), root_of(u));
      if (c != 0) emit(u, -c);
      return;
    }
    const std::size_t a = root_of(u);
    const std::size_t b = root_of(v);
    if (b == rs_->negative(a)) {
      const auto& h = cartan_parts_[a];
      for (int i = 0; i < rank(); ++i)
        if (h[i] != 0) emit(static_cast<std::size_t>(i), h[i]);
      return;
    }
    const auto s = rs_->sum(a, b);
    if (s == RootSystem::kNone) return;
    const int n = constant(a, b);
    if (n != 0) emit(basis_of_root(static_cast<std::size_t>(s)), n);
  }

 private:
  RootSystemPtr rs_;
  SignFunction eps_;
  std::vector<int> constants_;
  std::vector<std::vector<int>> cartan_parts_;
};

/// Which simple root alpha_l to split off a positive root during recursion.
enum class SplitRule { kSmallestNode, kLargestNode };

namespace detail {

// An element of g during the recursion: Cartan coordinates plus root terms.
struct Element {
  std::vector<int> cartan;
  std::vector<std::pair<std::size_t, int>> terms;

  explicit Element(int rank) : cartan(rank, 0) {}

  void add(std::size_t root, int coeff) {
    if (coeff == 0) return;
    for (auto& [r, c] : terms) {
      if (r == root) {
        c += coeff;
        return;
      }
    }
    terms.emplace_back(root, coeff);
  }

  void subtract(const Element& other) {
    for (std::size_t i = 0; i < cartan.size(); ++i) cartan[i] -= other.cartan[i];
    for (const auto& [r, c] : other.terms) add(r, -c);
  }

  bool cartan_zero() const {
    for (int c : cartan)
      if (c != 0) return false;
    return true;
  }
  std::vector<std::pair<std::size_t, int>> nonzero_terms() const {
    std::vector<std::pair<std::size_t, int>> out;
    for (const auto& t : terms)
      if (t.second != 0) out.push_back(t);
    return out;
  }
};

}  // namespace detail

/// Builds the eps-canonical table by induction on the height of the first
/// argument. For positive alpha with alpha - alpha_l = gamma in Phi+,
///   N_{alpha_l,gamma} [e_alpha, x] = [e_{alpha_l}, [e_gamma, x]] - [e_gamma, [e_{alpha_l}, x]]
/// for every basis vector x = e_beta; the case beta = -alpha produces the
/// Cartan part [e_alpha, e_{-alpha}]. Negative first arguments follow from
/// N_{-alpha,-beta} = -N_{alpha,beta}.
inline BracketTable build_inductive(const RootSystemPtr& rsp, const SignFunction& eps,
                                    SplitRule rule = SplitRule::kSmallestNode) {
  const RootSystem& rs = *rsp;
  eps.require_coloring_of(rs.cartan());
  const int n = rs.rank();
  const std::size_t r = rs.size();
  const std::size_t positives = rs.positive_count();
  std::vector<int> N(r * r, 0);
  std::vector<std::vector<int>> H(r, std::vector<int>(n, 0));
  auto at = [&](std::size_t a, std::size_t b) -> int& { return N[a * r + b]; };

  auto chevalley_value = [&](std::size_t a, std::size_t b) { return rs.string_lengths(a, b).q + 1; };

  for (int i = 0; i < n; ++i) {
    const std::size_t a = rs.simple(i);
    H[a][i] = -1;
    for (std::size_t b = 0; b < r; ++b) {
      if (rs.sum(a, b) != RootSystem::kNone) at(a, b) = eps(i) * chevalley_value(a, b);
    }
  }

  // [e_x, y] for a root x whose row is already complete.
  auto bracket_root = [&](std::size_t x, const detail::Element& y) {
    detail::Element out(n);
    const int v = rs.evaluate(x, y.cartan);
    out.add(x, -v);
    for (const auto& [b, c] : y.terms) {
      if (c == 0) continue;
      if (b == rs.negative(x)) {
        for (int i = 0; i < n; ++i) out.cartan[i] += c * H[x][i];
      } else if (const auto s = rs.sum(x, b); s != RootSystem::kNone) {
        out.add(static_cast<std::size_t>(s), c * at(x, b));
      }
    }
    return out;
  };

  for (std::size_t a = static_cast<std::size_t>(n); a < positives; ++a) {
    int split = -1;
    for (int l = 0; l < n; ++l) {
      const auto g = rs.sum(a, rs.negative(rs.simple(l)));
      if (g != RootSystem::kNone && rs.is_positive(static_cast<std::size_t>(g))) {
        split = l;
        if (rule == SplitRule::kSmallestNode) break;
      }
    }
    if (split < 0) throw InternalInconsistency("no simple root splits off " + rs.root(a).compact());
    const std::size_t l = rs.simple(split);
    const auto g = static_cast<std::size_t>(rs.sum(a, rs.negative(l)));
    const int c = at(l, g);

    for (std::size_t b = 0; b < r; ++b) {
      if (b == a) continue;
      detail::Element eb(n);
      eb.add(b, 1);
      detail::Element value = bracket_root(l, bracket_root(g, eb));
      value.subtract(bracket_root(g, bracket_root(l, eb)));
      const auto terms = value.nonzero_terms();
      const std::string where = "[e_" + rs.root(a).compact() + ", e_" + rs.root(b).compact() + "]";

      if (b == rs.negative(a)) {
        if (!terms.empty()) throw InternalInconsistency(where + " has root components");
        for (int i = 0; i < n; ++i) {
          if (value.cartan[i] % c != 0) throw InternalInconsistency(where + " is not integral");
          H[a][i] = value.cartan[i] / c;
        }
        continue;
      }
      const auto s = rs.sum(a, b);
      if (s == RootSystem::kNone) {
        if (!terms.empty() || !value.cartan_zero()) throw InternalInconsistency(where + " should vanish");
        continue;
      }
      if (!value.cartan_zero() || terms.size() != 1 || terms[0].first != static_cast<std::size_t>(s)) {
        throw InternalInconsistency(where + " is not a multiple of e_" + rs.root(static_cast<std::size_t>(s)).compact());
      }
      const int k = terms[0].second;
      if (k % c != 0) throw InternalInconsistency(where + " is not integral");
      at(a, b) = k / c;
      if (std::abs(at(a, b)) != chevalley_value(a, b)) {
        throw InternalInconsistency(where + " violates |N| = q + 1");
      }
    }
  }

  for (std::size_t a = 0; a < positives; ++a) {
    const std::size_t na = rs.negative(a);
    for (std::size_t b = 0; b < r; ++b) at(na, rs.negative(b)) = -at(a, b);
    for (int i = 0; i < n; ++i) H[na][i] = -H[a][i];
  }
  return BracketTable(rsp, eps, std::move(N), std::move(H));
}

/// The table for -eps: every e_alpha changes sign, so every N changes sign
/// while the Cartan parts stay the same.
inline BracketTable flip_epsilon_table(const BracketTable& t) {
  auto constants = t.constants();
  for (int& c : constants) c = -c;
  return BracketTable(t.root_system(), flip(t.epsilon()), std::move(constants), t.cartan_parts());
}

/// Checks N_{-alpha,-beta} = -N_{alpha,beta} for every pair with a root sum.
inline VerificationReport omega_check(const BracketTable& t) {
  VerificationReport report{"omega"};
  const RootSystem& rs = t.roots();
  for (std::size_t a = 0; a < rs.size(); ++a) {
    for (std::size_t b = 0; b < rs.size(); ++b) {
      if (rs.sum(a, b) == RootSystem::kNone) continue;
      ++report.checked;
      const int lhs = t.constant(rs.negative(a), rs.negative(b));
      if (lhs != -t.constant(a, b)) {
        report.fail("N(" + rs.root(rs.negative(a)).compact() + ", " + rs.root(rs.negative(b)).compact() + ")",
                    std::to_string(-t.constant(a, b)), std::to_string(lhs));
      }
    }
  }
  return report;
}

}  // namespace chevalley
