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

// Closed-form structure constants for simply-laced types.
//
// For alpha = sum n_i alpha_i, beta = sum m_j alpha_j with alpha + beta a root,
//
//   eta(alpha, beta) = sgn(alpha) sgn(beta) sgn(alpha+beta) prod_{i,j} eps(i)^(a_ij n_i m_j)
//
// and the canonical constant is N_{alpha,beta} = eta(alpha, beta). Only the
// parity of each exponent matters, so everything is evaluated mod 2.

#pragma once

#include <optional>
#include <string>

#include "chevalley/bracket_table.hpp"
#include "chevalley/cartan.hpp"
#include "chevalley/errors.hpp"
#include "chevalley/report.hpp"
#include "chevalley/root_system.hpp"

namespace chevalley {

namespace detail {

inline void require_eta_domain(const RootSystem& rs, std::size_t a, std::size_t b) {
  if (!rs.cartan().simply_laced()) throw NotSimplyLaced(rs.cartan().label() + " is not simply laced");
  if (rs.sum(a, b) == RootSystem::kNone) {
    throw NotARoot(rs.root(a).compact() + " + " + rs.root(b).compact() + " is not a root");
  }
}

inline int sign_prefactor(const RootSystem& rs, std::size_t a, std::size_t b) {
  const auto s = static_cast<std::size_t>(rs.sum(a, b));
  return rs.root(a).sign() * rs.root(b).sign() * rs.root(s).sign();
}

inline int parity_sign(long exponent) { return (exponent % 2 == 0) ? 1 : -1; }

}  // namespace detail

/// Exponent evaluated as the double sum over a_ij n_i m_j.
inline int eta_hat_double_sum(const RootSystem& rs, const SignFunction& eps, std::size_t a, std::size_t b) {
  detail::require_eta_domain(rs, a, b);
  const auto& n = rs.root(a).coeffs;
  const auto& m = rs.root(b).coeffs;
  long odd = 0;
  for (int i = 0; i < rs.rank(); ++i) {
    if (eps(i) == 1) continue;
    for (int j = 0; j < rs.rank(); ++j) odd += static_cast<long>(rs.cartan()(i, j)) * n[i] * m[j];
  }
  return detail::sign_prefactor(rs, a, b) * detail::parity_sign(odd);
}

/// Exponent evaluated as sum_i n_i <alpha_i, beta>.
inline int eta_hat_pairing_form(const RootSystem& rs, const SignFunction& eps, std::size_t a, std::size_t b) {
  detail::require_eta_domain(rs, a, b);
  const auto& n = rs.root(a).coeffs;
  long odd = 0;
  for (int i = 0; i < rs.rank(); ++i) {
    if (eps(i) == 1) continue;
    odd += static_cast<long>(n[i]) * rs.simple_pairing(i, b);
  }
  return detail::sign_prefactor(rs, a, b) * detail::parity_sign(odd);
}

inline int eta_hat(const RootSystem& rs, const SignFunction& eps, std::size_t a, std::size_t b) {
  const int x = eta_hat_double_sum(rs, eps, a, b);
  if (x != eta_hat_pairing_form(rs, eps, a, b)) {
    throw InternalInconsistency("the two forms of eta disagree");
  }
  return x;
}

inline int eta_hat(const RootSystem& rs, const SignFunction& eps, const Root& alpha, const Root& beta) {
  return eta_hat(rs, eps, rs.index_of(alpha), rs.index_of(beta));
}

/// eta(alpha, beta) (q + 1); q = 0 in simply-laced types, so this is +-1.
inline int closed_constant(const RootSystem& rs, const SignFunction& eps, std::size_t a, std::size_t b) {
  return eta_hat(rs, eps, a, b) * (rs.string_lengths(a, b).q + 1);
}

inline int closed_constant(const RootSystem& rs, const SignFunction& eps, const Root& alpha, const Root& beta) {
  return closed_constant(rs, eps, rs.index_of(alpha), rs.index_of(beta));
}

/// The full table from the closed formula; the Cartan part is
/// [e_alpha, e_{-alpha}] = (-1)^{ht(alpha)} h_alpha.
inline BracketTable build_closed(const RootSystemPtr& rsp, const SignFunction& eps) {
  const RootSystem& rs = *rsp;
  if (!rs.cartan().simply_laced()) throw NotSimplyLaced(rs.cartan().label() + " is not simply laced");
  const std::size_t r = rs.size();
  std::vector<int> N(r * r, 0);
  std::vector<std::vector<int>> H(r);
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = 0; b < r; ++b)
      if (rs.sum(a, b) != RootSystem::kNone) N[a * r + b] = closed_constant(rs, eps, a, b);
    H[a] = rs.coroot(a).coords;
    if (rs.height(a) % 2 != 0)
      for (int& c : H[a]) c = -c;
  }
  return BracketTable(rsp, eps, std::move(N), std::move(H));
}

/// Sweeps the configurations l, alpha, beta with alpha_l + alpha and
/// alpha_l + alpha + beta roots, alpha != +-beta, beta != +-alpha_l, and checks
///  - exactly one of alpha + beta, alpha_l + beta is a root;
///  - N_{alpha_l+alpha,beta} = N_{alpha,beta} or -N_{alpha,alpha_l+beta} accordingly
///    (on the canonical table, only when eps is a valid coloring);
///  - the same two-case identity for eta.
inline VerificationReport check_coloring(const RootSystemPtr& rsp, const SignFunction& eps) {
  const RootSystem& rs = *rsp;
  if (!rs.cartan().simply_laced()) throw NotSimplyLaced(rs.cartan().label() + " is not simply laced");
  VerificationReport report{"coloring"};
  const bool coloring = eps.is_coloring_of(rs.cartan());
  if (!coloring) report.fail("epsilon", "a proper 2-coloring", "a non-coloring sign function");
  std::optional<BracketTable> table;
  if (coloring) table.emplace(build_inductive(rsp, eps));

  const std::size_t r = rs.size();
  for (int node = 0; node < rs.rank(); ++node) {
    const std::size_t l = rs.simple(node);
    for (std::size_t a = 0; a < r; ++a) {
      const auto la = rs.sum(l, a);
      if (la == RootSystem::kNone) continue;
      for (std::size_t b = 0; b < r; ++b) {
        if (rs.sum(static_cast<std::size_t>(la), b) == RootSystem::kNone) continue;
        if (b == l || b == rs.negative(l)) continue;
        const auto ab = rs.sum(a, b);
        const auto lb = rs.sum(l, b);
        const std::string where =
            "l=" + std::to_string(node + 1) + " alpha=" + rs.root(a).compact() + " beta=" + rs.root(b).compact();

        // eta identity: requires only alpha != beta.
        if (a != b) {
          ++report.checked;
          if (ab != RootSystem::kNone || lb != RootSystem::kNone) {
            const int lhs = eta_hat(rs, eps, static_cast<std::size_t>(la), b);
            const int rhs = ab != RootSystem::kNone ? eta_hat(rs, eps, a, b)
                                                    : -eta_hat(rs, eps, a, static_cast<std::size_t>(lb));
            if (lhs != rhs) report.fail(where + " (eta)", std::to_string(rhs), std::to_string(lhs));
          }
        }
        if (b == rs.negative(a) || a == b) continue;
        ++report.checked;
        const bool one = ab != RootSystem::kNone;
        const bool two = lb != RootSystem::kNone;
        if (one == two) {
          report.fail(where, "exactly one of alpha+beta, alpha_l+beta in Phi", one ? "both" : "neither");
          continue;
        }
        if (table) {
          const int lhs = table->constant(static_cast<std::size_t>(la), b);
          const int rhs = one ? table->constant(a, b) : -table->constant(a, static_cast<std::size_t>(lb));
          if (lhs != rhs) report.fail(where + " (N)", std::to_string(rhs), std::to_string(lhs));
        }
      }
    }
  }
  return report;
}

/// eta(beta, alpha) = eta(-alpha, -beta) = -eta(alpha, beta) on all pairs.
inline VerificationReport check_eta_antisymmetry(const RootSystem& rs, const SignFunction& eps) {
  VerificationReport report{"eta-antisymmetry"};
  for (std::size_t a = 0; a < rs.size(); ++a) {
    for (std::size_t b = 0; b < rs.size(); ++b) {
      if (rs.sum(a, b) == RootSystem::kNone) continue;
      ++report.checked;
      const int e = eta_hat(rs, eps, a, b);
      const std::string where = rs.root(a).compact() + ", " + rs.root(b).compact();
      if (eta_hat(rs, eps, b, a) != -e) report.fail("eta(" + where + ") swapped", std::to_string(-e), "same");
      if (eta_hat(rs, eps, rs.negative(a), rs.negative(b)) != -e) {
        report.fail("eta(" + where + ") negated", std::to_string(-e), "same");
      }
    }
  }
  return report;
}

/// eta(alpha_i, beta) = eps(i) whenever alpha_i + beta is a root.
inline VerificationReport check_eta_simple(const RootSystem& rs, const SignFunction& eps) {
  VerificationReport report{"eta-simple"};
  for (int i = 0; i < rs.rank(); ++i) {
    for (std::size_t b = 0; b < rs.size(); ++b) {
      if (rs.sum(rs.simple(i), b) == RootSystem::kNone) continue;
      ++report.checked;
      const int e = eta_hat(rs, eps, rs.simple(i), b);
      if (e != eps(i)) {
        report.fail("eta(alpha_" + std::to_string(i + 1) + ", " + rs.root(b).compact() + ")",
                    std::to_string(eps(i)), std::to_string(e));
      }
    }
  }
  return report;
}

}  // namespace chevalley
