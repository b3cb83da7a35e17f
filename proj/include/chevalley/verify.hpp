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

// Independent audits of a bracket table: Jacobi identity, Chevalley bound,
// the canonical defining relations, differential comparison of two tables
// and the matrix model of sl_n.

#pragma once

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "chevalley/bracket_table.hpp"
#include "chevalley/cartan.hpp"
#include "chevalley/errors.hpp"
#include "chevalley/report.hpp"
#include "chevalley/root_system.hpp"

namespace chevalley {

namespace detail {

inline std::string basis_name(const BracketTable& t, std::size_t u) {
  if (t.is_cartan(u)) return "h_" + std::to_string(u + 1);
  return "e_" + t.roots().root(t.root_of(u)).compact();
}

/// All brackets of basis pairs as sparse lists, [u, v] at u * dim + v.
struct SparseBrackets {
  std::size_t dim = 0;
  std::vector<std::size_t> start;
  std::vector<std::pair<std::size_t, int>> terms;

  explicit SparseBrackets(const BracketTable& t) : dim(t.dimension()) {
    start.reserve(dim * dim + 1);
    for (std::size_t u = 0; u < dim; ++u) {
      for (std::size_t v = 0; v < dim; ++v) {
        start.push_back(terms.size());
        t.bracket_basis(u, v, [&](std::size_t w, int c) { terms.emplace_back(w, c); });
      }
    }
    start.push_back(terms.size());
  }

  template <class F>
  void each(std::size_t u, std::size_t v, F&& f) const {
    const std::size_t k = u * dim + v;
    for (std::size_t i = start[k]; i < start[k + 1]; ++i) f(terms[i].first, terms[i].second);
  }
};

inline unsigned worker_count(unsigned requested, std::size_t work) {
  unsigned n = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(work, 1)));
}

}  // namespace detail

/// [u, v] = -[v, u] and [u, u] = 0 on the whole basis.
inline VerificationReport antisymmetry_check(const BracketTable& t) {
  VerificationReport report{"antisymmetry"};
  const RootSystem& rs = t.roots();
  for (std::size_t a = 0; a < rs.size(); ++a) {
    for (std::size_t b = 0; b < rs.size(); ++b) {
      if (rs.sum(a, b) == RootSystem::kNone) continue;
      ++report.checked;
      if (t.constant(b, a) != -t.constant(a, b)) {
        report.fail("N(" + rs.root(b).compact() + ", " + rs.root(a).compact() + ")",
                    std::to_string(-t.constant(a, b)), std::to_string(t.constant(b, a)));
      }
    }
    ++report.checked;
    std::vector<int> minus = t.cartan_part(rs.negative(a));
    for (int& c : minus) c = -c;
    if (minus != t.cartan_part(a)) {
      report.fail("[e_" + rs.root(a).compact() + ", e_" + rs.root(rs.negative(a)).compact() + "]",
                  "minus the opposite bracket", "different");
    }
  }
  return report;
}

/// [x,[y,z]] + [y,[z,x]] + [z,[x,y]] = 0 for every ordered triple of basis
/// vectors. The sweep is split over x between `threads` workers (0 = all cores).
inline VerificationReport jacobi_sweep(const BracketTable& t, unsigned threads = 0) {
  const detail::SparseBrackets br(t);
  const std::size_t dim = br.dim;
  const unsigned workers = detail::worker_count(threads, dim);
  std::vector<VerificationReport> parts(workers, VerificationReport{"jacobi"});

  auto run = [&](unsigned w) {
    VerificationReport& rep = parts[w];
    std::vector<long> acc(dim, 0);
    std::vector<std::size_t> touched;
    auto add_nested = [&](std::size_t x, std::size_t y, std::size_t z) {
      br.each(y, z, [&](std::size_t m, int c1) {
        br.each(x, m, [&](std::size_t k, int c2) {
          if (acc[k] == 0) touched.push_back(k);
          acc[k] += static_cast<long>(c1) * c2;
        });
      });
    };
    for (std::size_t x = w; x < dim; x += workers) {
      for (std::size_t y = 0; y < dim; ++y) {
        for (std::size_t z = 0; z < dim; ++z) {
          ++rep.checked;
          add_nested(x, y, z);
          add_nested(y, z, x);
          add_nested(z, x, y);
          bool zero = true;
          for (std::size_t k : touched) {
            if (acc[k] != 0) zero = false;
            acc[k] = 0;
          }
          touched.clear();
          if (!zero) {
            rep.fail("(" + detail::basis_name(t, x) + ", " + detail::basis_name(t, y) + ", " +
                         detail::basis_name(t, z) + ")",
                     "0", "nonzero");
          }
        }
      }
    }
  };

  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& th : pool) th.join();
  }
  VerificationReport report{"jacobi"};
  for (const auto& p : parts) report.merge(p);
  return report;
}

/// |N_{alpha,beta}| = q + 1 for every pair with a root sum, and the Cartan part
/// of [e_alpha, e_{-alpha}] read back as h_alpha equals the co-root.
inline VerificationReport chevalley_audit(const BracketTable& t) {
  VerificationReport report{"chevalley"};
  const RootSystem& rs = t.roots();
  for (std::size_t a = 0; a < rs.size(); ++a) {
    for (std::size_t b = 0; b < rs.size(); ++b) {
      if (rs.sum(a, b) == RootSystem::kNone) continue;
      ++report.checked;
      const int bound = rs.string_lengths(a, b).q + 1;
      if (std::abs(t.constant(a, b)) != bound) {
        report.fail("|N(" + rs.root(a).compact() + ", " + rs.root(b).compact() + ")|", std::to_string(bound),
                    std::to_string(std::abs(t.constant(a, b))));
      }
    }
    ++report.checked;
    if (t.opposite(a) != rs.coroot(a)) report.fail("h_" + rs.root(a).compact(), "the co-root", "different");
  }
  return report;
}

/// The defining relations of the canonical basis, with e_i = eps(i) e_{alpha_i}
/// and f_i = -eps(i) e_{-alpha_i}:
///   [e_i, e_alpha] = (q + 1) e_{alpha + alpha_i},  [f_i, e_alpha] = (p + 1) e_{alpha - alpha_i},
///   [e_alpha, e_{-alpha}] = (-1)^{ht(alpha)} h_alpha.
inline VerificationReport canonical_relations(const BracketTable& t) {
  VerificationReport report{"canonical"};
  const RootSystem& rs = t.roots();
  const SignFunction& eps = t.epsilon();
  for (int i = 0; i < rs.rank(); ++i) {
    const std::size_t up = rs.simple(i);
    const std::size_t down = rs.negative(up);
    for (std::size_t a = 0; a < rs.size(); ++a) {
      const std::string suffix = std::to_string(i + 1) + ", e_" + rs.root(a).compact() + "]";
      if (rs.sum(up, a) != RootSystem::kNone) {
        ++report.checked;
        const int want = rs.string_lengths(up, a).q + 1;
        const int got = eps(i) * t.constant(up, a);
        if (got != want) report.fail("[e_" + suffix, std::to_string(want), std::to_string(got));
      }
      if (rs.sum(down, a) != RootSystem::kNone) {
        ++report.checked;
        const int want = rs.string_lengths(up, a).p + 1;
        const int got = -eps(i) * t.constant(down, a);
        if (got != want) report.fail("[f_" + suffix, std::to_string(want), std::to_string(got));
      }
    }
  }
  for (std::size_t a = 0; a < rs.size(); ++a) {
    ++report.checked;
    std::vector<int> want = rs.coroot(a).coords;
    if (rs.height(a) % 2 != 0)
      for (int& c : want) c = -c;
    if (t.cartan_part(a) != want) {
      report.fail("[e_" + rs.root(a).compact() + ", e_" + rs.root(rs.negative(a)).compact() + "]",
                  "(-1)^ht h_alpha", "different");
    }
  }
  return report;
}

/// Identification of two tables' bases: root a of the first table goes to
/// root index[a] of the second with e1_a = sign[a] * e2_{index[a]}; the h_i
/// are identified node by node.
struct BasisMap {
  std::vector<std::size_t> index;
  std::vector<int> sign;
};

/// Matches roots by coefficient vector; `global_sign` scales every e_alpha.
inline BasisMap coordinate_map(const RootSystem& from, const RootSystem& to, int global_sign = 1) {
  if (from.size() != to.size() || from.rank() != to.rank()) {
    throw IncompatibleTables("root systems " + from.cartan().label() + " and " + to.cartan().label() + " differ");
  }
  BasisMap m;
  for (const auto& r : from.roots()) {
    const auto idx = to.find(r);
    if (!idx) throw IncompatibleTables("root " + r.compact() + " is missing from the second table");
    m.index.push_back(*idx);
    m.sign.push_back(global_sign);
  }
  return m;
}

/// Compares every constant and Cartan part of t2 against t1 transported by
/// `map`: N2(a', b') = N1(a, b) s_a s_b s_{a+b} and [e2_{a'}, e2_{-a'}] =
/// s_a s_{-a} [e1_a, e1_{-a}].
inline VerificationReport differential(const BracketTable& t1, const BracketTable& t2, const BasisMap& map) {
  const RootSystem& r1 = t1.roots();
  const RootSystem& r2 = t2.roots();
  if (r1.size() != r2.size() || r1.rank() != r2.rank() || map.index.size() != r1.size() ||
      map.sign.size() != r1.size()) {
    throw IncompatibleTables("tables have different dimensions");
  }
  std::vector<bool> hit(r2.size(), false);
  for (std::size_t a = 0; a < r1.size(); ++a) {
    if (map.index[a] >= r2.size() || hit[map.index[a]]) throw IncompatibleTables("root map is not a bijection");
    if (map.sign[a] != 1 && map.sign[a] != -1) throw IncompatibleTables("basis signs must be +1 or -1");
    hit[map.index[a]] = true;
  }
  for (std::size_t a = 0; a < r1.size(); ++a) {
    if (map.index[r1.negative(a)] != r2.negative(map.index[a])) {
      throw IncompatibleTables("root map does not commute with negation");
    }
    for (std::size_t b = 0; b < r1.size(); ++b) {
      const auto s1 = r1.sum(a, b);
      const auto s2 = r2.sum(map.index[a], map.index[b]);
      const bool ok = s1 == RootSystem::kNone ? s2 == RootSystem::kNone
                                              : s2 != RootSystem::kNone &&
                                                    static_cast<std::size_t>(s2) == map.index[s1];
      if (!ok) throw IncompatibleTables("root map does not preserve sums");
    }
  }

  VerificationReport report{"differential"};
  for (std::size_t a = 0; a < r1.size(); ++a) {
    for (std::size_t b = 0; b < r1.size(); ++b) {
      const auto s = r1.sum(a, b);
      if (s == RootSystem::kNone) continue;
      ++report.checked;
      const int want = t1.constant(a, b) * map.sign[a] * map.sign[b] * map.sign[s];
      const int got = t2.constant(map.index[a], map.index[b]);
      if (want != got) {
        report.fail("N(" + r2.root(map.index[a]).compact() + ", " + r2.root(map.index[b]).compact() + ")",
                    std::to_string(want), std::to_string(got));
      }
    }
    ++report.checked;
    std::vector<int> want = t1.cartan_part(a);
    for (int& c : want) c *= map.sign[a] * map.sign[r1.negative(a)];
    if (t2.cartan_part(map.index[a]) != want) {
      report.fail("[e_" + r2.root(map.index[a]).compact() + ", e_-]", "transported Cartan part", "different");
    }
  }
  return report;
}

inline VerificationReport differential(const BracketTable& t1, const BracketTable& t2) {
  return differential(t1, t2, coordinate_map(t1.roots(), t2.roots()));
}

/// The matrix model of sl_n for a type A_{n-1} table: alpha = delta_i - delta_j
/// acts as e_alpha = -(-1)^{ht(alpha)} eps(i) E_ij, h_i = E_ii - E_{i+1,i+1}.
/// eps is extended to the extra index n by eps(n) = -eps(n-1).
class SlnModel {
 public:
  SlnModel(int n, const SignFunction& eps) : n_(n) {
    if (n < 2) throw IllegalType("sl_n needs n >= 2");
    if (static_cast<int>(eps.size()) != n - 1) throw InvalidEpsilon("sign function must have n - 1 values");
    ext_ = eps.values();
    ext_.push_back(-ext_.back());
  }

  int n() const { return n_; }

  /// The root delta_i - delta_j (0-based, i != j) in simple-root coordinates.
  Root root(int i, int j) const {
    Root r{std::vector<int>(n_ - 1, 0)};
    for (int k = std::min(i, j); k < std::max(i, j); ++k) r.coeffs[k] = i < j ? 1 : -1;
    return r;
  }

  /// Scalar s with e_alpha = s E_ij.
  int scale(int i, int j) const {
    const int ht = j - i;
    return -(ht % 2 == 0 ? 1 : -1) * ext_[i];
  }

  using Matrix = std::vector<long>;

  Matrix root_vector(int i, int j) const {
    Matrix m(static_cast<std::size_t>(n_ * n_), 0);
    m[i * n_ + j] = scale(i, j);
    return m;
  }
  Matrix cartan(int k) const {
    Matrix m(static_cast<std::size_t>(n_ * n_), 0);
    m[k * n_ + k] = 1;
    m[(k + 1) * n_ + k + 1] = -1;
    return m;
  }

  Matrix commutator(const Matrix& x, const Matrix& y) const {
    Matrix out(x.size(), 0);
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < n_; ++k) {
        const long xik = x[i * n_ + k];
        const long yik = y[i * n_ + k];
        for (int j = 0; j < n_; ++j) {
          out[i * n_ + j] += xik * y[k * n_ + j] - yik * x[k * n_ + j];
        }
      }
    return out;
  }

 private:
  int n_;
  std::vector<int> ext_;
};

/// Compares every basis bracket of an A_{n-1} table with the matrix commutator,
/// and checks N(delta_i - delta_j, delta_j - delta_k) = -eps(j) directly.
inline VerificationReport sl_n_oracle(const BracketTable& t) {
  const RootSystem& rs = t.roots();
  const CartanMatrix& cm = rs.cartan();
  if (cm.type().family != Family::A) throw IllegalType("the sl_n model needs a type A table, got " + cm.label());
  const int n = cm.rank() + 1;
  const SlnModel model(n, t.epsilon());
  VerificationReport report{"slN"};

  // Basis matrices in table order, plus each root's matrix position.
  const std::size_t dim = t.dimension();
  std::vector<SlnModel::Matrix> basis(dim);
  std::vector<std::pair<int, int>> pos(rs.size());
  for (int k = 0; k < n - 1; ++k) basis[k] = model.cartan(k);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const std::size_t a = rs.index_of(model.root(i, j));
      pos[a] = {i, j};
      basis[t.basis_of_root(a)] = model.root_vector(i, j);
    }

  // Coordinates of a traceless matrix in the table basis, or empty if it has
  // a nonzero trace.
  auto decompose = [&](const SlnModel::Matrix& m, std::vector<long>& coords) {
    coords.assign(dim, 0);
    long running = 0;
    for (int k = 0; k < n; ++k) {
      running += m[k * n + k];
      if (k < n - 1) coords[k] = running;
    }
    if (running != 0) return false;
    for (std::size_t a = 0; a < rs.size(); ++a) {
      const auto [i, j] = pos[a];
      const long v = m[i * n + j];
      const int s = model.scale(i, j);
      if (v % s != 0) return false;
      coords[t.basis_of_root(a)] = v / s;
    }
    return true;
  };

  std::vector<long> want;
  std::vector<long> got(dim, 0);
  for (std::size_t u = 0; u < dim; ++u) {
    for (std::size_t v = 0; v < dim; ++v) {
      ++report.checked;
      std::fill(got.begin(), got.end(), 0);
      t.bracket_basis(u, v, [&](std::size_t w, int c) { got[w] += c; });
      const std::string where = "[" + detail::basis_name(t, u) + ", " + detail::basis_name(t, v) + "]";
      if (!decompose(model.commutator(basis[u], basis[v]), want)) {
        report.fail(where, "a traceless matrix", "trace or scaling mismatch");
      } else if (want != got) {
        report.fail(where, "the matrix commutator", "different");
      }
    }
  }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (i == j || j == k || i == k) continue;
        ++report.checked;
        const std::size_t a = rs.index_of(model.root(i, j));
        const std::size_t b = rs.index_of(model.root(j, k));
        const int want_n = j < n - 1 ? -t.epsilon()(j) : t.epsilon()(n - 2);
        if (t.constant(a, b) != want_n) {
          report.fail("N(" + rs.root(a).compact() + ", " + rs.root(b).compact() + ") = -eps(" +
                          std::to_string(j + 1) + ")",
                      std::to_string(want_n), std::to_string(t.constant(a, b)));
        }
      }
  return report;
}

inline VerificationReport sl_n_oracle(int n, const SignFunction& eps) {
  if (n < 2) throw IllegalType("sl_n needs n >= 2");
  return sl_n_oracle(build_inductive(generate_roots(build_cartan(Family::A, n - 1)), eps));
}

/// Copy of `t` with N(a, b) replaced; for negative controls.
inline BracketTable with_constant(const BracketTable& t, std::size_t a, std::size_t b, int value) {
  auto constants = t.constants();
  constants[a * t.roots().size() + b] = value;
  return BracketTable(t.root_system(), t.epsilon(), std::move(constants), t.cartan_parts());
}

/// Copy of `t` with the Cartan part of [e_a, e_{-a}] replaced.
inline BracketTable with_cartan_part(const BracketTable& t, std::size_t a, std::vector<int> value) {
  auto parts = t.cartan_parts();
  parts[a] = std::move(value);
  return BracketTable(t.root_system(), t.epsilon(), t.constants(), std::move(parts));
}

}  // namespace chevalley
