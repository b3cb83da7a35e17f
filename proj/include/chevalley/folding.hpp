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

// Folding a simply-laced system along a diagram automorphism i -> i'.
//
// The fixed subalgebra has Chevalley generators given by orbit sums over the
// node orbits, Cartan matrix
//
//   a~_ij = d_i a_ij  if d_i > d_j = 1,   a~_ij = a_ij  otherwise,
//
// and basis vectors e~_alpha = sum of e_beta over the orbit of alpha. Two
// parent roots restrict to the same folded root iff they share an orbit.
// Folded constants are eta(alpha, beta) (q~ + 1) for representatives with
// alpha + beta in Phi.

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "chevalley/bracket_table.hpp"
#include "chevalley/cartan.hpp"
#include "chevalley/closed_form.hpp"
#include "chevalley/errors.hpp"
#include "chevalley/report.hpp"
#include "chevalley/root_system.hpp"

namespace chevalley {

/// alpha' for alpha = sum n_j alpha_j is sum n_j alpha_{j'}.
inline Root apply_automorphism(const DiagramAutomorphism& aut, const Root& r) {
  Root out{std::vector<int>(r.coeffs.size(), 0)};
  for (std::size_t j = 0; j < r.coeffs.size(); ++j) out.coeffs[aut(static_cast<int>(j))] = r.coeffs[j];
  return out;
}

/// Permutation alpha -> alpha' of root indices.
inline std::vector<std::size_t> root_permutation(const RootSystem& rs, const DiagramAutomorphism& aut) {
  std::vector<std::size_t> image(rs.size());
  for (std::size_t a = 0; a < rs.size(); ++a) image[a] = rs.index_of(apply_automorphism(aut, rs.root(a)));
  return image;
}

/// Orbits of alpha -> alpha', each listed as (alpha, alpha', alpha'', ...)
/// starting from its smallest index; orbit_index[a] locates root a.
struct RootOrbits {
  std::vector<std::vector<std::size_t>> orbits;
  std::vector<std::size_t> orbit_index;
};

inline RootOrbits root_orbits(const RootSystem& rs, const DiagramAutomorphism& aut) {
  const auto image = root_permutation(rs, aut);
  RootOrbits out;
  out.orbit_index.assign(rs.size(), static_cast<std::size_t>(-1));
  for (std::size_t a = 0; a < rs.size(); ++a) {
    if (out.orbit_index[a] != static_cast<std::size_t>(-1)) continue;
    std::vector<std::size_t> orbit;
    for (std::size_t x = a; out.orbit_index[x] == static_cast<std::size_t>(-1); x = image[x]) {
      out.orbit_index[x] = out.orbits.size();
      orbit.push_back(x);
    }
    out.orbits.push_back(std::move(orbit));
  }
  return out;
}

/// The type whose standard matrix equals `rows` exactly, if any.
inline std::optional<CartanType> identify_cartan(const std::vector<std::vector<int>>& rows) {
  const int n = static_cast<int>(rows.size());
  for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G}) {
    CartanType t{f, n};
    if (t.is_legal() && build_cartan(t).rows() == rows) return t;
  }
  return std::nullopt;
}

class FoldedSystem {
 public:
  const RootSystemPtr& parent() const { return parent_; }
  const SignFunction& parent_epsilon() const { return eps_; }
  const DiagramAutomorphism& automorphism() const { return aut_; }
  int order() const { return aut_.order(); }

  /// Parent nodes (0-based) representing the node orbits, in listing order.
  const std::vector<int>& representatives() const { return reps_; }
  const CartanMatrix& folded_cartan() const { return folded_rs_->cartan(); }
  const RootSystemPtr& folded_roots() const { return folded_rs_; }
  const SignFunction& folded_epsilon() const { return folded_eps_; }

  const RootOrbits& orbits() const { return orbits_; }
  const std::vector<std::size_t>& orbit_of(std::size_t parent_root) const {
    return orbits_.orbits[orbits_.orbit_index[parent_root]];
  }
  std::size_t image(std::size_t parent_root) const { return image_[parent_root]; }

  /// Coordinates of the restriction over the folded simple roots.
  Root restrict_root(const Root& alpha) const {
    Root out{std::vector<int>(reps_.size(), 0)};
    for (std::size_t k = 0; k < node_orbits().size(); ++k)
      for (int j : node_orbits()[k]) out.coeffs[k] += alpha.coeffs[j];
    return out;
  }
  std::size_t restrict_index(std::size_t parent_root) const { return restriction_[parent_root]; }

  /// Parent roots restricting to folded root `idx`, listed as (alpha, alpha', alpha'').
  const std::vector<std::size_t>& preimage(std::size_t idx) const { return preimage_[idx]; }

  /// sum over the orbit of h_beta, in parent h_j coordinates.
  std::vector<int> orbit_coroot_parent(std::size_t folded_idx) const {
    std::vector<int> h(parent_->rank(), 0);
    for (std::size_t b : preimage(folded_idx)) {
      const auto& c = parent_->coroot(b).coords;
      for (std::size_t i = 0; i < h.size(); ++i) h[i] += c[i];
    }
    return h;
  }

  /// The orbit-sum co-root over {h~_i}. Throws if the parent coefficients
  /// are not constant on a node orbit.
  CorootVector folded_coroot(std::size_t folded_idx) const {
    const auto h = orbit_coroot_parent(folded_idx);
    CorootVector out{std::vector<int>(reps_.size(), 0)};
    for (std::size_t k = 0; k < node_orbits().size(); ++k) {
      const int c = h[node_orbits()[k].front()];
      for (int j : node_orbits()[k]) {
        if (h[j] != c) throw InternalInconsistency("orbit co-root is not constant on a node orbit");
      }
      out.coords[k] = c;
    }
    return out;
  }

  /// Parent Cartan element sum_k c_k h~_k in h_j coordinates.
  std::vector<int> lift_cartan(const std::vector<int>& folded) const {
    std::vector<int> h(parent_->rank(), 0);
    for (std::size_t k = 0; k < node_orbits().size(); ++k)
      for (int j : node_orbits()[k]) h[j] += folded[k];
    return h;
  }

  const std::vector<std::vector<int>>& node_orbits() const { return aut_.orbits(); }

 private:
  friend FoldedSystem fold(const RootSystemPtr&, const SignFunction&, const DiagramAutomorphism&);
  FoldedSystem() = default;

  RootSystemPtr parent_;
  SignFunction eps_;
  DiagramAutomorphism aut_;
  std::vector<int> reps_;
  RootSystemPtr folded_rs_;
  SignFunction folded_eps_;
  RootOrbits orbits_;
  std::vector<std::size_t> image_;
  std::vector<std::size_t> restriction_;
  std::vector<std::vector<std::size_t>> preimage_;
};

inline FoldedSystem fold(const RootSystemPtr& rsp, const SignFunction& eps, const DiagramAutomorphism& aut) {
  const RootSystem& rs = *rsp;
  const CartanMatrix& cm = rs.cartan();
  if (!cm.simply_laced()) throw FoldingPreconditionViolated(cm.label() + " is not simply laced");
  if (aut.size() != cm.rank()) throw FoldingPreconditionViolated("automorphism has the wrong size");
  if (!aut.preserves(cm)) throw FoldingPreconditionViolated("condition (a) a_ij = a_i'j' fails");
  if (!aut.separates_orbits(cm)) throw FoldingPreconditionViolated("condition (b) a_ii' = 0 fails");
  if (!eps.is_coloring_of(cm)) throw FoldingPreconditionViolated("sign function is not a 2-coloring");
  for (int i = 0; i < cm.rank(); ++i) {
    if (eps(i) != eps(aut(i))) throw FoldingPreconditionViolated("sign function is not constant on orbits");
  }

  FoldedSystem fs;
  fs.parent_ = rsp;
  fs.eps_ = eps;
  fs.aut_ = aut;
  const auto& node_orbits = aut.orbits();
  const int m = static_cast<int>(node_orbits.size());
  std::vector<int> eps_values;
  for (const auto& o : node_orbits) {
    fs.reps_.push_back(o.front());
    eps_values.push_back(eps(o.front()));
  }

  std::vector<std::vector<int>> rows(m, std::vector<int>(m, 0));
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      const int i = fs.reps_[x];
      const int j = fs.reps_[y];
      const int di = static_cast<int>(node_orbits[x].size());
      const int dj = static_cast<int>(node_orbits[y].size());
      rows[x][y] = (di > dj && dj == 1) ? di * cm(i, j) : cm(i, j);
    }
  }
  const auto type = identify_cartan(rows);
  if (!type) {
    throw FoldingPreconditionViolated("folded matrix is not a standard Cartan matrix in the listed orbit order");
  }
  fs.folded_rs_ = generate_roots(CartanMatrix(*type, rows));
  fs.folded_eps_ = SignFunction(std::move(eps_values));

  fs.image_ = root_permutation(rs, aut);
  fs.orbits_ = root_orbits(rs, aut);
  const RootSystem& folded = *fs.folded_rs_;
  fs.restriction_.resize(rs.size());
  fs.preimage_.assign(folded.size(), {});
  for (std::size_t a = 0; a < rs.size(); ++a) {
    const auto idx = folded.find(fs.restrict_root(rs.root(a)));
    if (!idx) {
      throw InternalInconsistency("restriction of " + rs.root(a).compact() + " is not a folded root");
    }
    fs.restriction_[a] = *idx;
  }
  for (const auto& orbit : fs.orbits_.orbits) {
    const std::size_t target = fs.restriction_[orbit.front()];
    for (std::size_t a : orbit) {
      if (fs.restriction_[a] != target) throw InternalInconsistency("an orbit restricts to two roots");
    }
    if (!fs.preimage_[target].empty()) throw InternalInconsistency("two orbits share a restriction");
    fs.preimage_[target] = orbit;
  }
  for (std::size_t k = 0; k < folded.size(); ++k) {
    if (fs.preimage_[k].empty()) {
      throw InternalInconsistency("folded root " + folded.root(k).compact() + " has no preimage");
    }
  }
  return fs;
}

inline FoldedSystem fold(const RootSystemPtr& rsp, const SignFunction& eps) {
  return fold(rsp, eps, standard_automorphism(rsp->cartan()));
}

/// The three routes to q~ for one folded pair.
struct FoldedStringLength {
  std::size_t alpha = 0;     ///< parent representative
  std::size_t beta = 0;      ///< parent representative with alpha + beta in Phi
  int by_count = 0;          ///< |{(a0,b0) in S : a0 + b0 = alpha + beta}| - 1
  std::optional<int> by_case;  ///< case analysis; empty for the d = 3 case it does not cover
  int by_definition = 0;     ///< max{m : beta~ - m alpha~ folded root}
};

/// Chooses representatives for folded roots A, B with A + B a folded root:
/// alpha = first of A's orbit, beta tried as beta, beta', beta''.
inline FoldedStringLength folded_string_length(const FoldedSystem& fs, std::size_t A, std::size_t B) {
  const RootSystem& rs = *fs.parent();
  const RootSystem& folded = *fs.folded_roots();
  if (folded.sum(A, B) == RootSystem::kNone) {
    throw NotARoot(folded.root(A).compact() + " + " + folded.root(B).compact() + " is not a folded root");
  }
  FoldedStringLength out;
  out.alpha = fs.preimage(A).front();
  bool found = false;
  for (std::size_t b : fs.preimage(B)) {
    if (rs.sum(out.alpha, b) != RootSystem::kNone) {
      out.beta = b;
      found = true;
      break;
    }
  }
  if (!found) {
    throw RepresentativeNotFound("no beta in the orbit of " + rs.root(fs.preimage(B).front()).compact() +
                                 " with " + rs.root(out.alpha).compact() + " + beta in Phi");
  }
  const auto target = rs.sum(out.alpha, out.beta);
  int count = 0;
  for (std::size_t a0 : fs.orbit_of(out.alpha))
    for (std::size_t b0 : fs.orbit_of(out.beta))
      if (rs.sum(a0, b0) == target) ++count;
  out.by_count = count - 1;

  const std::size_t a1 = fs.image(out.alpha);
  const std::size_t b1 = fs.image(out.beta);
  if (a1 == out.alpha || b1 == out.beta) {
    out.by_case = 0;
  } else if (rs.sum(a1, b1) == target) {
    out.by_case = fs.order() - 1;
  } else if (fs.order() == 2) {
    out.by_case = 0;
  }
  out.by_definition = folded.string_lengths(A, B).q;
  return out;
}

/// Folded table: N~ = eta(alpha, beta) (q~ + 1) with q~ by orbit-pair count,
/// which must agree with the folded string length and, where it applies,
/// the case analysis. The Cartan part is (-1)^{ht} times the orbit-sum co-root.
inline BracketTable folded_table(const FoldedSystem& fs) {
  const RootSystem& rs = *fs.parent();
  const RootSystem& folded = *fs.folded_roots();
  const std::size_t r = folded.size();
  std::vector<int> N(r * r, 0);
  std::vector<std::vector<int>> H(r);
  for (std::size_t A = 0; A < r; ++A) {
    for (std::size_t B = 0; B < r; ++B) {
      if (folded.sum(A, B) == RootSystem::kNone) continue;
      const auto q = folded_string_length(fs, A, B);
      if (q.by_count != q.by_definition || (q.by_case && *q.by_case != q.by_count)) {
        throw InternalInconsistency("folded string lengths disagree for " + folded.root(A).compact() + ", " +
                                    folded.root(B).compact());
      }
      N[A * r + B] = eta_hat(rs, fs.parent_epsilon(), q.alpha, q.beta) * (q.by_count + 1);
    }
    H[A] = fs.folded_coroot(A).coords;
    if (folded.height(A) % 2 != 0)
      for (int& c : H[A]) c = -c;
  }
  return BracketTable(fs.folded_roots(), fs.folded_epsilon(), std::move(N), std::move(H));
}

/// Compares the three routes to q~ over every folded pair with a root sum.
inline VerificationReport q_tilde_check(const FoldedSystem& fs) {
  VerificationReport report{"q-tilde"};
  const RootSystem& folded = *fs.folded_roots();
  for (std::size_t A = 0; A < folded.size(); ++A) {
    for (std::size_t B = 0; B < folded.size(); ++B) {
      if (folded.sum(A, B) == RootSystem::kNone) continue;
      ++report.checked;
      const auto q = folded_string_length(fs, A, B);
      const std::string where = folded.root(A).compact() + ", " + folded.root(B).compact();
      if (q.by_count != q.by_definition) {
        report.fail(where + " count vs string", std::to_string(q.by_definition), std::to_string(q.by_count));
      }
      if (q.by_case && *q.by_case != q.by_count) {
        report.fail(where + " count vs case", std::to_string(*q.by_case), std::to_string(q.by_count));
      }
    }
  }
  return report;
}

/// N_{alpha',beta'} = N_{alpha,beta} and tau(h_alpha) = h_{alpha'} on a parent table.
inline VerificationReport tau_check(const DiagramAutomorphism& aut, const BracketTable& table) {
  VerificationReport report{"tau"};
  const RootSystem& rs = table.roots();
  const auto image = root_permutation(rs, aut);
  for (std::size_t a = 0; a < rs.size(); ++a) {
    for (std::size_t b = 0; b < rs.size(); ++b) {
      if (rs.sum(a, b) == RootSystem::kNone) continue;
      ++report.checked;
      const int lhs = table.constant(image[a], image[b]);
      if (lhs != table.constant(a, b)) {
        report.fail("N(" + rs.root(image[a]).compact() + ", " + rs.root(image[b]).compact() + ")",
                    std::to_string(table.constant(a, b)), std::to_string(lhs));
      }
    }
    ++report.checked;
    std::vector<int> moved(rs.rank(), 0);
    for (int i = 0; i < rs.rank(); ++i) moved[aut(i)] = table.cartan_part(a)[i];
    if (moved != table.cartan_part(image[a])) {
      report.fail("[e, e_-] at " + rs.root(image[a]).compact(), "tau-image of the Cartan part", "different");
    }
  }
  return report;
}

/// For every alpha + beta in Phi, eta is constant on S(alpha, beta).
inline VerificationReport orbit_eta_check(const RootSystem& rs, const SignFunction& eps,
                                        const DiagramAutomorphism& aut) {
  VerificationReport report{"orbit_eta"};
  const auto orbits = root_orbits(rs, aut);
  for (std::size_t a = 0; a < rs.size(); ++a) {
    for (std::size_t b = 0; b < rs.size(); ++b) {
      if (rs.sum(a, b) == RootSystem::kNone) continue;
      const int e = eta_hat(rs, eps, a, b);
      for (std::size_t a0 : orbits.orbits[orbits.orbit_index[a]]) {
        for (std::size_t b0 : orbits.orbits[orbits.orbit_index[b]]) {
          if (rs.sum(a0, b0) == RootSystem::kNone) continue;
          ++report.checked;
          const int e0 = eta_hat(rs, eps, a0, b0);
          if (e0 != e) {
            report.fail("eta(" + rs.root(a0).compact() + ", " + rs.root(b0).compact() + ") in S(" +
                            rs.root(a).compact() + ", " + rs.root(b).compact() + ")",
                        std::to_string(e), std::to_string(e0));
          }
        }
      }
    }
  }
  return report;
}

/// Structural facts of the folding: orbit sizes in {1, d}; alpha +- alpha'
/// and alpha +- alpha'' not roots for alpha != alpha'; orbit-sum co-roots
/// constant on node orbits, satisfy alpha~(h~_alpha) = 2 and equal the
/// co-roots of the folded Cartan matrix.
inline VerificationReport folding_structure_check(const FoldedSystem& fs) {
  VerificationReport report{"folding-structure"};
  const RootSystem& rs = *fs.parent();
  const RootSystem& folded = *fs.folded_roots();
  for (const auto& orbit : fs.orbits().orbits) {
    ++report.checked;
    if (orbit.size() != 1 && static_cast<int>(orbit.size()) != fs.order()) {
      report.fail("orbit of " + rs.root(orbit.front()).compact(), "size 1 or d", std::to_string(orbit.size()));
    }
    for (std::size_t x = 0; x < orbit.size(); ++x) {
      for (std::size_t y = 0; y < orbit.size(); ++y) {
        if (x == y) continue;
        ++report.checked;
        if (rs.sum(orbit[x], orbit[y]) != RootSystem::kNone ||
            rs.sum(orbit[x], rs.negative(orbit[y])) != RootSystem::kNone) {
          report.fail(rs.root(orbit[x]).compact() + " +- " + rs.root(orbit[y]).compact(), "not a root", "a root");
        }
      }
    }
  }
  for (std::size_t A = 0; A < folded.size(); ++A) {
    ++report.checked;
    try {
      const auto h = fs.folded_coroot(A);
      const int value = folded.evaluate(A, h.coords);
      if (value != 2) report.fail("alpha~(h~) at " + folded.root(A).compact(), "2", std::to_string(value));
      if (h != folded.coroot(A)) {
        report.fail("orbit co-root at " + folded.root(A).compact(), "co-root of the folded matrix", "different");
      }
    } catch (const InternalInconsistency& e) {
      report.fail("orbit co-root at " + folded.root(A).compact(), "constant on node orbits", e.what());
    }
  }
  return report;
}

/// Computes [e~_A, e~_B] from orbit sums in a parent table and checks that
/// it equals the folded table's value: a multiple of e~_{A+B} with all
/// coefficients equal (no cancellation), the folded Cartan part when
/// B = -A, and zero otherwise.
inline VerificationReport orbit_sum_check(const FoldedSystem& fs, const BracketTable& parent,
                                          const BracketTable& folded_tab) {
  VerificationReport report{"orbit-sum"};
  const RootSystem& rs = *fs.parent();
  const RootSystem& folded = *fs.folded_roots();
  for (std::size_t A = 0; A < folded.size(); ++A) {
    for (std::size_t B = 0; B < folded.size(); ++B) {
      if (A == B) continue;
      ++report.checked;
      std::map<std::size_t, int> roots;
      std::vector<int> cartan(rs.rank(), 0);
      for (std::size_t a0 : fs.preimage(A)) {
        for (std::size_t b0 : fs.preimage(B)) {
          parent.bracket_basis(parent.basis_of_root(a0), parent.basis_of_root(b0), [&](std::size_t u, int c) {
            if (parent.is_cartan(u)) {
              cartan[u] += c;
            } else {
              roots[parent.root_of(u)] += c;
            }
          });
        }
      }
      std::erase_if(roots, [](const auto& kv) { return kv.second == 0; });
      const std::string where = "[e~_" + folded.root(A).compact() + ", e~_" + folded.root(B).compact() + "]";
      std::map<std::size_t, int> expected_roots;
      std::vector<int> expected_cartan(rs.rank(), 0);
      if (B == folded.negative(A)) {
        expected_cartan = fs.lift_cartan(folded_tab.cartan_part(A));
      } else if (const auto S = folded.sum(A, B); S != RootSystem::kNone) {
        for (std::size_t g : fs.preimage(static_cast<std::size_t>(S))) expected_roots[g] = folded_tab.constant(A, B);
      }
      if (roots != expected_roots || cartan != expected_cartan) {
        report.fail(where, "orbit sum matching the folded table", "mismatch");
      }
    }
  }
  return report;
}

}  // namespace chevalley
