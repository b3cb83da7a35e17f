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

// Root systems generated from a Cartan matrix by height induction.
//
// Roots are integer vectors over the simple roots. A RootSystem stores every
// root once, positives first sorted by (height, coefficients descending) so
// that the simple roots appear in node order, followed by the negatives in
// the same order: index positive_count() + k holds -root(k).

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "chevalley/cartan.hpp"
#include "chevalley/errors.hpp"

namespace chevalley {

struct Root {
  std::vector<int> coeffs;

  int height() const { return std::accumulate(coeffs.begin(), coeffs.end(), 0); }

  /// +1 for positive roots, -1 for negative ones; read off the first nonzero
  /// coefficient since all coefficients share one sign.
  int sign() const {
    for (int c : coeffs)
      if (c != 0) return c > 0 ? 1 : -1;
    return 0;
  }
  bool is_positive() const { return sign() > 0; }
  std::size_t rank() const { return coeffs.size(); }

  /// Compact notation "1110", "-0110".
  std::string compact() const {
    std::string s = sign() < 0 ? "-" : "";
    for (int c : coeffs) s += std::to_string(c < 0 ? -c : c);
    return s;
  }

  Root operator-() const {
    Root r = *this;
    for (int& c : r.coeffs) c = -c;
    return r;
  }
  friend Root operator+(const Root& a, const Root& b) {
    Root r = a;
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
    return r;
  }
  friend Root operator-(const Root& a, const Root& b) { return a + (-b); }
  friend Root operator*(int k, const Root& a) {
    Root r = a;
    for (int& c : r.coeffs) c *= k;
    return r;
  }
  friend auto operator<=>(const Root&, const Root&) = default;
  friend bool operator==(const Root&, const Root&) = default;

  static Root simple(int rank, int node) {
    Root r{std::vector<int>(rank, 0)};
    r.coeffs[node] = 1;
    return r;
  }
};

/// Coordinates of a co-root h_alpha = sum_i c_i h_i.
struct CorootVector {
  std::vector<int> coords;
  friend bool operator==(const CorootVector&, const CorootVector&) = default;
};

struct StringLengths {
  int p = 0;  ///< max{i >= 0 : beta + i alpha in Phi}
  int q = 0;  ///< max{i >= 0 : beta - i alpha in Phi}
};

class RootSystem {
 public:
  static constexpr std::int32_t kNone = -1;

  explicit RootSystem(CartanMatrix cm) : cartan_(std::move(cm)) {
    generate();
    index_sums();
    compute_symmetrizer();
    compute_coroots();
  }

  const CartanMatrix& cartan() const { return cartan_; }
  int rank() const { return cartan_.rank(); }
  std::size_t size() const { return roots_.size(); }
  std::size_t positive_count() const { return positive_count_; }
  const std::vector<Root>& roots() const { return roots_; }
  const Root& root(std::size_t idx) const { return roots_[idx]; }
  int height(std::size_t idx) const { return heights_[idx]; }
  bool is_positive(std::size_t idx) const { return idx < positive_count_; }

  std::optional<std::size_t> find(const Root& r) const {
    auto it = index_.find(r.coeffs);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  bool contains(const Root& r) const { return index_.count(r.coeffs) != 0; }

  std::size_t index_of(const Root& r) const {
    auto idx = find(r);
    if (!idx) throw NotARoot(r.compact() + " is not a root of " + cartan_.label());
    return *idx;
  }

  /// Index of alpha_i for node i (0-based).
  std::size_t simple(int node) const { return static_cast<std::size_t>(node); }

  std::size_t negative(std::size_t idx) const {
    return idx < positive_count_ ? idx + positive_count_ : idx - positive_count_;
  }

  /// Index of root(a) + root(b), or kNone when the sum is not a root.
  std::int32_t sum(std::size_t a, std::size_t b) const { return sums_[a * size() + b]; }

  /// alpha(h_i) = <alpha_i, alpha> = sum_j a_ij n_j.
  int simple_pairing(int node, std::size_t idx) const { return simple_pairing_[node * size() + idx]; }

  /// Minimal positive integers s with s_i a_ij = s_j a_ji.
  const std::vector<int>& symmetrizer() const { return symmetrizer_; }

  const CorootVector& coroot(std::size_t idx) const { return coroots_[idx]; }

  /// <alpha, beta> = beta(h_alpha).
  int pairing(std::size_t a, std::size_t b) const {
    int value = 0;
    const auto& c = coroots_[a].coords;
    for (int i = 0; i < rank(); ++i) value += c[i] * simple_pairing(i, b);
    return value;
  }

  /// Value of root(idx) on a Cartan element given in h_i coordinates.
  int evaluate(std::size_t idx, const std::vector<int>& h) const {
    int value = 0;
    for (int i = 0; i < rank(); ++i) value += h[i] * simple_pairing(i, idx);
    return value;
  }

  /// Lengths of the alpha-string through beta. The chain is checked to be
  /// unbroken and to satisfy q - p = <alpha, beta>.
  StringLengths string_lengths(std::size_t a, std::size_t b) const {
    if (a == b || a == negative(b)) {
      throw DegeneratePair("string through " + roots_[b].compact() + " along itself");
    }
    StringLengths s;
    std::size_t cur = b;
    while (true) {
      const auto next = sum(a, cur);
      if (next == kNone) break;
      cur = static_cast<std::size_t>(next);
      ++s.p;
    }
    cur = b;
    const std::size_t minus_a = negative(a);
    while (true) {
      const auto next = sum(minus_a, cur);
      if (next == kNone) break;
      cur = static_cast<std::size_t>(next);
      ++s.q;
    }
    if (s.q - s.p != pairing(a, b)) {
      throw InternalInconsistency("string through " + roots_[b].compact() + " along " +
                                  roots_[a].compact() + " contradicts the pairing");
    }
    return s;
  }

 private:
  void generate() {
    const int n = rank();
    std::set<std::vector<int>> known;
    std::vector<std::vector<Root>> levels(1);
    for (int i = 0; i < n; ++i) {
      levels[0].push_back(Root::simple(n, i));
      known.insert(levels[0].back().coeffs);
    }
    auto pair_simple = [&](int i, const Root& r) {
      int v = 0;
      for (int j = 0; j < n; ++j) v += cartan_(i, j) * r.coeffs[j];
      return v;
    };
    while (!levels.back().empty()) {
      std::set<std::vector<int>> next;
      for (const Root& beta : levels.back()) {
        for (int i = 0; i < n; ++i) {
          if (beta == Root::simple(n, i)) continue;
          int q = 0;
          Root cur = beta;
          while (true) {
            cur.coeffs[i] -= 1;
            if (!known.count(cur.coeffs)) break;
            ++q;
          }
          const int p = q - pair_simple(i, beta);
          if (p > 0) {
            Root up = beta;
            up.coeffs[i] += 1;
            next.insert(up.coeffs);
          }
        }
      }
      std::vector<Root> level;
      for (const auto& c : next) {
        level.push_back(Root{c});
        known.insert(c);
      }
      levels.push_back(std::move(level));
    }

    std::vector<Root> positives;
    for (auto& level : levels) {
      std::sort(level.begin(), level.end(), [](const Root& x, const Root& y) { return x > y; });
      for (auto& r : level) positives.push_back(r);
    }
    positive_count_ = positives.size();
    roots_ = positives;
    for (const auto& r : positives) roots_.push_back(-r);
    for (std::size_t k = 0; k < roots_.size(); ++k) {
      index_.emplace(roots_[k].coeffs, k);
      heights_.push_back(roots_[k].height());
    }
    simple_pairing_.assign(static_cast<std::size_t>(n) * size(), 0);
    for (int i = 0; i < n; ++i)
      for (std::size_t k = 0; k < size(); ++k) simple_pairing_[i * size() + k] = pair_simple(i, roots_[k]);
  }

  void index_sums() {
    const std::size_t r = size();
    sums_.assign(r * r, kNone);
    for (std::size_t a = 0; a < r; ++a) {
      for (std::size_t b = 0; b < r; ++b) {
        if (auto s = find(roots_[a] + roots_[b])) sums_[a * r + b] = static_cast<std::int32_t>(*s);
      }
    }
  }

  void compute_symmetrizer() {
    // Propagate s_j = s_i a_ij / a_ji as fractions num/den along the diagram.
    const int n = rank();
    std::vector<long> num(n, 0), den(n, 1);
    num[0] = 1;
    std::vector<int> todo{0};
    while (!todo.empty()) {
      const int i = todo.back();
      todo.pop_back();
      for (int j : cartan_.neighbours(i)) {
        if (num[j] != 0) continue;
        num[j] = num[i] * cartan_(i, j);
        den[j] = den[i] * cartan_(j, i);
        const long g = std::gcd(num[j], den[j]);
        num[j] /= g;
        den[j] /= g;
        if (den[j] < 0) {
          num[j] = -num[j];
          den[j] = -den[j];
        }
        todo.push_back(j);
      }
    }
    long l = 1;
    for (int i = 0; i < n; ++i) l = std::lcm(l, den[i]);
    long g = 0;
    for (int i = 0; i < n; ++i) g = std::gcd(g, num[i] * (l / den[i]));
    symmetrizer_.resize(n);
    for (int i = 0; i < n; ++i) symmetrizer_[i] = static_cast<int>(num[i] * (l / den[i]) / g);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (symmetrizer_[i] * cartan_(i, j) != symmetrizer_[j] * cartan_(j, i)) {
          throw InternalInconsistency("Cartan matrix is not symmetrizable");
        }
  }

  void compute_coroots() {
    // c_i = s_i n_i / s_alpha with s_alpha = (alpha, alpha) = sum s_i a_ij n_i n_j / 2.
    const int n = rank();
    coroots_.reserve(size());
    for (const Root& r : roots_) {
      long twice_norm = 0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) twice_norm += static_cast<long>(symmetrizer_[i]) * cartan_(i, j) * r.coeffs[i] * r.coeffs[j];
      if (twice_norm <= 0 || twice_norm % 2 != 0) throw InternalInconsistency("odd or non-positive root norm");
      const long norm = twice_norm / 2;
      CorootVector c{std::vector<int>(n, 0)};
      for (int i = 0; i < n; ++i) {
        const long v = static_cast<long>(symmetrizer_[i]) * r.coeffs[i];
        if (v % norm != 0) throw InternalInconsistency("non-integral co-root for " + r.compact());
        c.coords[i] = static_cast<int>(v / norm);
      }
      coroots_.push_back(std::move(c));
    }
    for (std::size_t k = 0; k < size(); ++k) {
      if (evaluate(k, coroots_[k].coords) != 2) {
        throw InternalInconsistency("alpha(h_alpha) != 2 for " + roots_[k].compact());
      }
    }
  }

  CartanMatrix cartan_;
  std::vector<Root> roots_;
  std::vector<int> heights_;
  std::map<std::vector<int>, std::size_t> index_;
  std::size_t positive_count_ = 0;
  std::vector<std::int32_t> sums_;
  std::vector<int> simple_pairing_;
  std::vector<int> symmetrizer_;
  std::vector<CorootVector> coroots_;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

inline RootSystemPtr generate_roots(const CartanMatrix& cm) { return std::make_shared<const RootSystem>(cm); }

inline StringLengths string_lengths(const RootSystem& rs, const Root& alpha, const Root& beta) {
  return rs.string_lengths(rs.index_of(alpha), rs.index_of(beta));
}

inline int pairing(const RootSystem& rs, const Root& alpha, const Root& beta) {
  return rs.pairing(rs.index_of(alpha), rs.index_of(beta));
}

inline CorootVector coroot(const RootSystem& rs, const Root& alpha) { return rs.coroot(rs.index_of(alpha)); }

}  // namespace chevalley
