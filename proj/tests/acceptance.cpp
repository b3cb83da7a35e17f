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

// Acceptance gate. Prints one PASS/FAIL line per criterion; every comparison
// is exact. Exit status is nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "chevalley/chevalley.hpp"
#include "oracles.hpp"

using namespace chevalley;

namespace {

struct Outcome {
  bool ok = true;
  std::size_t checked = 0;
  std::vector<std::string> notes;

  void require(bool cond, const std::string& what) {
    ++checked;
    if (cond) return;
    ok = false;
    if (notes.size() < 5) notes.push_back(what);
  }
  void absorb(const VerificationReport& r, const std::string& label) {
    checked += r.checked;
    if (!r.passed()) {
      ok = false;
      if (notes.size() < 5) {
        std::ostringstream os;
        os << label << " " << r;
        notes.push_back(os.str());
      }
    }
  }
};

struct Case {
  CartanType type;
  bool flipped;
  std::string label() const { return type.label() + (flipped ? "(-eps)" : "(eps)"); }
};

/// Builds each desk table once.
class Tables {
 public:
  Tables() {
    for (const auto& t : oracle::desk_types()) {
      const auto rs = generate_roots(build_cartan(t));
      for (bool f : {false, true}) {
        auto eps = default_epsilon(rs->cartan());
        if (f) eps = flip(eps);
        tables_.emplace(key(t, f), build_inductive(rs, eps));
        cases_.push_back({t, f});
      }
    }
  }
  const std::vector<Case>& cases() const { return cases_; }
  const BracketTable& at(const Case& c) const { return tables_.at(key(c.type, c.flipped)); }

 private:
  static std::string key(const CartanType& t, bool f) { return t.label() + (f ? "-" : "+"); }
  std::map<std::string, BracketTable> tables_;
  std::vector<Case> cases_;
};

struct FoldCase {
  CartanType parent;
  int order;
  CartanType target;
};

const std::vector<FoldCase> kFolds = {{{Family::A, 3}, 0, {Family::C, 2}},
                                      {{Family::A, 5}, 0, {Family::C, 3}},
                                      {{Family::D, 4}, 3, {Family::G, 2}},
                                      {{Family::D, 5}, 0, {Family::B, 4}},
                                      {{Family::E, 6}, 0, {Family::F, 4}}};

// Parents used for the tau sweep: every type in the list with a folding automorphism.
const std::vector<std::pair<CartanType, int>> kAutomorphisms = {
    {{Family::A, 3}, 0}, {{Family::A, 5}, 0}, {{Family::A, 7}, 0}, {{Family::D, 4}, 3},
    {{Family::D, 4}, 2}, {{Family::D, 5}, 0}, {{Family::D, 6}, 0}, {{Family::E, 6}, 0}};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int failures = 0;

void report(int id, const std::string& title, const Outcome& o, const std::string& extra = "") {
  std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << id << ": " << title << " (" << o.checked << " checks"
            << (extra.empty() ? "" : ", " + extra) << ")\n";
  for (const auto& n : o.notes) std::cout << "      " << n << "\n";
  if (!o.ok) ++failures;
}

std::string fmt_seconds(double s) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f s", s);
  return buf;
}

// 1. Canonical defining relations for every table.
void criterion1(const Tables& tables) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  for (const auto& c : tables.cases()) o.absorb(canonical_relations(tables.at(c)), c.label());
  const double dt = seconds_since(t0);
  o.require(dt < 10.0, "runtime target of 10 s exceeded");
  report(1, "canonical-relations certificate, all types, both signs", o, fmt_seconds(dt));
}

// 2. Full Jacobi identity over the adjoint basis.
void criterion2(const Tables& tables) {
  Outcome o;
  double e8 = 0;
  for (const auto& c : tables.cases()) {
    const auto t0 = std::chrono::steady_clock::now();
    o.absorb(jacobi_sweep(tables.at(c)), c.label());
    if (c.type.label() == "E8") e8 = std::max(e8, seconds_since(t0));
  }
  o.require(e8 < 60.0, "E8 sweep exceeded 60 s");
  report(2, "Jacobi identity on every ordered basis triple", o, "E8 sweep " + fmt_seconds(e8));
}

// 3. Closed formula equals the inductive table on simply-laced types.
void criterion3(const Tables& tables) {
  Outcome o;
  for (const auto& c : tables.cases()) {
    if (!c.type.is_simply_laced()) continue;
    const auto& t = tables.at(c);
    const RootSystem& rs = t.roots();
    for (std::size_t a = 0; a < rs.size(); ++a)
      for (std::size_t b = 0; b < rs.size(); ++b) {
        if (rs.sum(a, b) == RootSystem::kNone) continue;
        o.require(closed_constant(rs, t.epsilon(), a, b) == t.constant(a, b),
                  c.label() + " N(" + rs.root(a).compact() + ", " + rs.root(b).compact() + ")");
      }
    o.absorb(differential(build_closed(t.root_system(), t.epsilon()), t), c.label());
  }
  report(3, "closed-form constants equal inductive constants", o);
}

// 4. Folded tables equal direct inductive tables; q~ by counting equals the case table.
void criterion4() {
  Outcome o;
  std::size_t case_covered = 0;
  for (const auto& f : kFolds) {
    const auto parent = generate_roots(build_cartan(f.parent));
    for (bool flipped : {false, true}) {
      auto eps = default_epsilon(parent->cartan());
      if (flipped) eps = flip(eps);
      const auto fs = fold(parent, eps, standard_automorphism(parent->cartan(), f.order));
      const std::string label = f.parent.label() + "->" + fs.folded_cartan().label() + (flipped ? "(-eps)" : "(eps)");
      o.require(fs.folded_cartan() == build_cartan(f.target), label + " folded matrix");
      const auto direct = build_inductive(generate_roots(build_cartan(f.target)), fs.folded_epsilon());
      o.absorb(differential(direct, folded_table(fs)), label);
      o.absorb(q_tilde_check(fs), label);
      const RootSystem& g = *fs.folded_roots();
      for (std::size_t A = 0; A < g.size(); ++A)
        for (std::size_t B = 0; B < g.size(); ++B)
          if (g.sum(A, B) != RootSystem::kNone && folded_string_length(fs, A, B).by_case) ++case_covered;
    }
  }
  report(4, "folded tables equal inductive tables over the folded matrix; q~ routes agree", o,
         std::to_string(case_covered) + " pairs covered by the case table");
}

// 5. Point values: D4 orbit table, eta on the six-pair set, eta(alpha_i, beta) = eps(i).
void criterion5() {
  Outcome o;
  const auto d4 = generate_roots(build_cartan(Family::D, 4));
  const auto eps = default_epsilon(d4->cartan());
  const auto fs = fold(d4, eps, standard_automorphism(d4->cartan()));

  // Orbits of positive roots with restrictions written as (coeff of alpha~_1, coeff of alpha~_3).
  const std::map<std::set<std::string>, std::pair<int, int>> expected = {
      {{"1000", "0100", "0001"}, {1, 0}}, {{"0010"}, {0, 1}}, {{"1010", "0110", "0011"}, {1, 1}},
      {{"1110", "1011", "0111"}, {2, 1}}, {{"1111"}, {3, 1}}, {{"1121"}, {3, 2}}};
  std::map<std::set<std::string>, std::pair<int, int>> got;
  for (const auto& orbit : fs.orbits().orbits) {
    if (!d4->is_positive(orbit.front())) continue;
    std::set<std::string> names;
    for (std::size_t a : orbit) names.insert(d4->root(a).compact());
    const auto r = fs.restrict_root(d4->root(orbit.front())).coeffs;  // over (alpha~_3, alpha~_1)
    got[names] = {r[1], r[0]};
  }
  o.require(got == expected, "D4 orbit table differs");
  o.require(got.size() == 6, "D4 orbit table has " + std::to_string(got.size()) + " rows");

  const auto a = d4->index_of(Root{{1, 1, 1, 0}});
  const auto b = d4->index_of(Root{{0, -1, -1, 0}});
  o.require(eta_hat(*d4, eps, a, b) == 1, "eta(1110, -0110) != +1");
  std::size_t pairs = 0;
  for (std::size_t a0 : fs.orbit_of(a))
    for (std::size_t b0 : fs.orbit_of(b))
      if (d4->sum(a0, b0) != RootSystem::kNone) {
        ++pairs;
        o.require(eta_hat(*d4, eps, a0, b0) == 1, "eta not +1 on S(1110, -0110)");
      }
  o.require(pairs == 6, "|S(1110, -0110)| = " + std::to_string(pairs));

  for (const auto& [t, order] : kAutomorphisms) {
    const auto rs = generate_roots(build_cartan(t));
    for (const auto& e : {default_epsilon(rs->cartan()), flip(default_epsilon(rs->cartan()))})
      o.absorb(orbit_eta_check(*rs, e, standard_automorphism(rs->cartan(), order)), t.label());
  }
  for (const auto& t : oracle::desk_types()) {
    if (!t.is_simply_laced()) continue;
    const auto rs = generate_roots(build_cartan(t));
    for (const auto& e : {default_epsilon(rs->cartan()), flip(default_epsilon(rs->cartan()))})
      o.absorb(check_eta_simple(*rs, e), t.label());
  }
  report(5, "D4 orbit table, eta(1110,-0110) = +1 and constant on S, eta(alpha_i, beta) = eps(i)", o);
}

// 6. sl_n matrix model.
void criterion6() {
  Outcome o;
  for (int n = 2; n <= 8; ++n) {
    const auto cm = build_cartan(Family::A, n - 1);
    for (const auto& e : {default_epsilon(cm), flip(default_epsilon(cm))})
      o.absorb(sl_n_oracle(n, e), "n=" + std::to_string(n));
  }
  report(6, "sl_n matrix commutators equal inductive tables, n = 2..8", o);
}

// 7. Symmetries: antisymmetry, omega, tau, sign flip.
void criterion7(const Tables& tables) {
  Outcome o;
  for (const auto& c : tables.cases()) {
    const auto& t = tables.at(c);
    o.absorb(antisymmetry_check(t), c.label());
    o.absorb(omega_check(t), c.label());
    if (!c.flipped) {
      const Case other{c.type, true};
      const auto& f = tables.at(other);
      o.absorb(differential(t, f, coordinate_map(t.roots(), f.roots(), -1)), c.label() + " vs -eps");
    }
  }
  for (const auto& [type, order] : kAutomorphisms) {
    for (bool flipped : {false, true}) {
      const auto& t = tables.at(Case{type, flipped});
      o.absorb(tau_check(standard_automorphism(t.roots().cartan(), order), t), type.label());
    }
  }
  report(7, "N(b,a) = -N(a,b), N(-a,-b) = -N(a,b), tau invariance, N(-eps) = -N(eps)", o);
}

// 8. Each suite flags a single injected sign flip at three sites.
void criterion8(const Tables& tables) {
  Outcome o;
  auto flip_n = [](const BracketTable& t, std::size_t a, std::size_t b) {
    return with_constant(t, a, b, -t.constant(a, b));
  };
  auto flip_h = [](const BracketTable& t, std::size_t a) {
    auto h = t.cartan_part(a);
    for (int& c : h) c = -c;
    return with_cartan_part(t, a, h);
  };
  // Three pairs with a root sum, spread over the table; the first involves a simple root.
  auto sites = [](const BracketTable& t) {
    const RootSystem& rs = t.roots();
    std::vector<std::pair<std::size_t, std::size_t>> all;
    for (std::size_t a = 0; a < rs.size(); ++a)
      for (std::size_t b = 0; b < rs.size(); ++b)
        if (rs.sum(a, b) != RootSystem::kNone) all.emplace_back(a, b);
    return std::vector<std::pair<std::size_t, std::size_t>>{all.front(), all[all.size() / 2], all.back()};
  };
  auto simple_sites = [](const BracketTable& t) {
    const RootSystem& rs = t.roots();
    std::vector<std::pair<std::size_t, std::size_t>> out;
    // One site per node first, then further sites from the last node.
    for (int pass = 0; pass < 2 && out.size() < 3; ++pass)
      for (int i = rs.rank() - 1; i >= 0 && out.size() < 3; --i)
        for (std::size_t b = rs.size(); b-- > 0;) {
          if (rs.sum(rs.simple(i), b) == RootSystem::kNone) continue;
          const std::pair<std::size_t, std::size_t> site{rs.simple(i), b};
          if (std::find(out.begin(), out.end(), site) != out.end()) continue;
          out.push_back(site);
          break;
        }
    return out;
  };
  auto expect_flag = [&](const std::string& suite, const VerificationReport& r, const std::string& site) {
    o.require(!r.passed(), suite + " missed the sign flip at " + site);
  };

  const auto& e6 = tables.at(Case{{Family::E, 6}, false});
  const auto& g2 = tables.at(Case{{Family::G, 2}, false});
  const auto& a4 = tables.at(Case{{Family::A, 4}, false});
  const auto e6_ref = build_closed(e6.root_system(), e6.epsilon());
  std::size_t suites = 0;

  for (const auto* t : {&e6, &g2}) {
    for (const auto& [a, b] : sites(*t)) {
      const std::string where = t->roots().cartan().label() + " N(" + t->roots().root(a).compact() + ", " +
                                t->roots().root(b).compact() + ")";
      const auto bad = flip_n(*t, a, b);
      expect_flag("jacobi", jacobi_sweep(bad), where);
      expect_flag("antisymmetry", antisymmetry_check(bad), where);
      expect_flag("omega", omega_check(bad), where);
      expect_flag("differential", differential(*t, bad), where);
    }
    for (const auto& [a, b] : simple_sites(*t)) {
      const std::string where = t->roots().cartan().label() + " N(alpha_" + std::to_string(a + 1) + ", " +
                                t->roots().root(b).compact() + ")";
      expect_flag("canonical", canonical_relations(flip_n(*t, a, b)), where);
    }
    const std::size_t r = t->roots().size();
    for (std::size_t a : {std::size_t{0}, r / 3, r - 1}) {
      const std::string where = t->roots().cartan().label() + " [e, e_-] at " + t->roots().root(a).compact();
      expect_flag("chevalley", chevalley_audit(flip_h(*t, a)), where);
      expect_flag("canonical", canonical_relations(flip_h(*t, a)), where);
    }
  }
  suites += 6;

  for (const auto& [a, b] : sites(a4)) {
    expect_flag("slN", sl_n_oracle(flip_n(a4, a, b)), "A4 N(" + a4.roots().root(a).compact() + ", " +
                                                            a4.roots().root(b).compact() + ")");
  }
  ++suites;

  // Folding suites on the E6 parent table.
  const auto aut = standard_automorphism(e6.roots().cartan());
  const auto fs = fold(e6.root_system(), e6.epsilon(), aut);
  const auto ft = folded_table(fs);
  for (const auto& [a, b] : sites(e6)) {
    const std::string where = "E6 N(" + e6.roots().root(a).compact() + ", " + e6.roots().root(b).compact() + ")";
    expect_flag("orbit-sum", orbit_sum_check(fs, flip_n(e6, a, b), ft), where);
    expect_flag("differential", differential(e6_ref, flip_n(e6, a, b)), where);
  }
  // tau compares N(a', b') with N(a, b), so its sites are pairs moved by tau.
  const auto image = root_permutation(e6.roots(), aut);
  std::vector<std::pair<std::size_t, std::size_t>> moved;
  for (const auto& [a, b] : sites(e6)) {
    if (image[a] != a || image[b] != b) moved.emplace_back(a, b);
  }
  for (std::size_t a = e6.roots().size(); a-- > 0 && moved.size() < 3;) {
    for (std::size_t b = 0; b < e6.roots().size() && moved.size() < 3; ++b) {
      if (e6.roots().sum(a, b) != RootSystem::kNone && (image[a] != a || image[b] != b)) moved.emplace_back(a, b);
    }
  }
  for (const auto& [a, b] : moved) {
    expect_flag("tau", tau_check(aut, flip_n(e6, a, b)),
                "E6 N(" + e6.roots().root(a).compact() + ", " + e6.roots().root(b).compact() + ")");
  }
  suites += 2;

  // Sign-function suites: flip one value of eps at three nodes. The eta
  // orbit check is blind to flips that keep eps constant on node orbits
  // (node 3 of D4 is fixed), so its sites lie on the orbit {1, 2, 4}.
  const auto d4 = generate_roots(build_cartan(Family::D, 4));
  const auto d4_aut = standard_automorphism(d4->cartan());
  auto corrupted = [&](int node) {
    auto v = default_epsilon(d4->cartan()).values();
    v[node] = -v[node];
    return SignFunction(v);
  };
  for (int node : {0, 2, 3}) {
    expect_flag("coloring", check_coloring(d4, corrupted(node)), "eps flipped at node " + std::to_string(node + 1));
  }
  for (int node : {0, 1, 3}) {
    expect_flag("orbit_eta", orbit_eta_check(*d4, corrupted(node), d4_aut), "eps flipped at node " + std::to_string(node + 1));
  }
  suites += 2;

  report(8, "negative controls: every suite flags one injected sign flip at 3 sites", o,
         std::to_string(suites) + " suites");
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  const Tables tables;
  std::cout << "built " << tables.cases().size() << " inductive tables in " << fmt_seconds(seconds_since(t0))
            << "\n";
  criterion1(tables);
  criterion2(tables);
  criterion3(tables);
  criterion4();
  criterion5();
  criterion6();
  criterion7(tables);
  criterion8(tables);
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << " in "
            << fmt_seconds(seconds_since(t0)) << "\n";
  return failures == 0 ? 0 : 1;
}
