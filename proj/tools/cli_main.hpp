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

// The chevalley command line: gen, fold, verify, show.
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "chevalley/chevalley.hpp"

namespace chevalley::cli {

inline constexpr int kOk = 0;
inline constexpr int kFailed = 1;
inline constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The ADE parent and automorphism order that fold onto `target`.
struct FoldSource {
  CartanType parent;
  int order = 0;
};

inline std::optional<FoldSource> fold_source(const CartanType& target) {
  const int n = target.rank;
  switch (target.family) {
    case Family::C:
      return FoldSource{{Family::A, 2 * n - 1}, 2};
    case Family::B:
      if (n >= 3) return FoldSource{{Family::D, n + 1}, 2};
      return std::nullopt;
    case Family::G:
      return FoldSource{{Family::D, 4}, 3};
    case Family::F:
      return FoldSource{{Family::E, 6}, 2};
    default:
      return std::nullopt;
  }
}

inline CartanType parse_type(const std::string& s) {
  try {
    return CartanType::parse(s);
  } catch (const IllegalType& e) {
    throw UsageError(e.what());
  }
}

inline SignFunction pick_epsilon(const CartanMatrix& cm, const std::string& which) {
  if (which == "default") return default_epsilon(cm);
  if (which == "flipped") return flip(default_epsilon(cm));
  throw UsageError("--epsilon must be 'default' or 'flipped'");
}

/// Folds the parent with the sign function whose folded form is `target_eps`.
inline FoldedSystem fold_onto(const FoldSource& src, const SignFunction& target_eps) {
  const auto parent = generate_roots(build_cartan(src.parent));
  const auto aut = standard_automorphism(parent->cartan(), src.order);
  const SignFunction eps = default_epsilon(parent->cartan());
  FoldedSystem fs = fold(parent, eps, aut);
  if (fs.folded_epsilon() == target_eps) return fs;
  FoldedSystem flipped = fold(parent, flip(eps), aut);
  if (flipped.folded_epsilon() == target_eps) return flipped;
  throw InternalInconsistency("no parent sign function folds onto the requested one");
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
  if (!f) throw UsageError("failed writing " + path);
}

inline std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

inline Root parse_root(const std::string& csv, int rank) {
  Root r;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      r.coeffs.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("bad root coefficient '" + item + "' in '" + csv + "'");
    }
  }
  if (static_cast<int>(r.coeffs.size()) != rank) {
    throw UsageError("root '" + csv + "' needs " + std::to_string(rank) + " coefficients");
  }
  return r;
}

inline std::vector<std::string> split_suites(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

struct GenOptions {
  std::string type;
  std::string epsilon = "default";
  std::string method;
  std::string out;
  std::string csv;
};

inline int run_gen(const GenOptions& o, std::ostream& out) {
  const CartanType type = parse_type(o.type);
  const CartanMatrix cm = build_cartan(type);
  const SignFunction eps = pick_epsilon(cm, o.epsilon);
  const auto source = fold_source(type);
  std::string method = o.method;
  if (method.empty()) method = type.is_simply_laced() ? "closed" : (source ? "fold" : "inductive");

  std::optional<TableDocument> doc;
  if (method == "inductive") {
    doc = make_document(build_inductive(generate_roots(cm), eps), Provenance{"inductive", "", std::nullopt});
  } else if (method == "closed") {
    if (!type.is_simply_laced()) throw UsageError("--method closed needs a simply-laced type, got " + type.label());
    doc = make_document(build_closed(generate_roots(cm), eps), Provenance{"closed_form", "", std::nullopt});
  } else if (method == "fold") {
    if (!source) throw UsageError(type.label() + " is not obtained by folding a standard automorphism");
    const FoldedSystem fs = fold_onto(*source, eps);
    doc = make_document(folded_table(fs), folded_provenance(fs));
  } else {
    throw UsageError("--method must be inductive, closed or fold");
  }
  write_file(o.out, serialize(*doc));
  if (!o.csv.empty()) write_file(o.csv, csv_export(*doc));
  out << "wrote " << type.label() << " (" << doc->provenance.method;
  if (!doc->provenance.parent.empty()) out << " from " << doc->provenance.parent;
  out << ", " << doc->roots.size() << " roots, " << doc->constants.size() << " constants) to " << o.out << "\n";
  return kOk;
}

struct FoldOptions {
  std::string type;
  int order = 0;
  std::string epsilon = "default";
  std::string out;
  std::string csv;
};

inline int run_fold(const FoldOptions& o, std::ostream& out) {
  const CartanType type = parse_type(o.type);
  const auto parent = generate_roots(build_cartan(type));
  if (!type.is_simply_laced()) throw UsageError("fold needs a simply-laced parent, got " + type.label());
  DiagramAutomorphism aut;
  try {
    aut = standard_automorphism(parent->cartan(), o.order);
  } catch (const NoFoldableSymmetry& e) {
    throw UsageError(e.what());
  }
  const FoldedSystem fs = fold(parent, pick_epsilon(parent->cartan(), o.epsilon), aut);
  const TableDocument doc = make_document(folded_table(fs), folded_provenance(fs));
  write_file(o.out, serialize(doc));
  if (!o.csv.empty()) write_file(o.csv, csv_export(doc));
  out << type.label() << " folds to " << fs.folded_cartan().label() << " over nodes";
  for (int i : fs.representatives()) out << " " << i + 1;
  out << "; wrote " << o.out << "\n";
  return kOk;
}

struct VerifyOptions {
  std::string in;
  std::string suites;
  unsigned threads = 0;
};

/// Tables built by a second, independent method for the same type and sign.
inline std::vector<std::pair<std::string, BracketTable>> reference_tables(const BracketTable& t) {
  const CartanType type = t.roots().cartan().type();
  const auto rsp = generate_roots(t.roots().cartan());
  std::vector<std::pair<std::string, BracketTable>> refs;
  refs.emplace_back("inductive", build_inductive(rsp, t.epsilon()));
  if (type.is_simply_laced()) {
    refs.emplace_back("closed", build_closed(rsp, t.epsilon()));
  } else if (const auto src = fold_source(type)) {
    refs.emplace_back("fold", folded_table(fold_onto(*src, t.epsilon())));
  }
  return refs;
}

inline int run_verify(const VerifyOptions& o, std::ostream& out) {
  BracketTable table = [&] {
    try {
      return to_table(parse_document(read_file(o.in)));
    } catch (const Error& e) {
      throw UsageError(o.in + ": " + e.what());
    }
  }();
  const bool type_a = table.roots().cartan().type().family == Family::A;
  std::vector<std::string> suites = split_suites(o.suites);
  if (suites.empty()) {
    suites = {"jacobi", "chevalley", "canonical", "omega", "antisymmetry", "differential"};
    if (type_a) suites.push_back("slN");
  }
  std::vector<VerificationReport> reports;
  for (const auto& s : suites) {
    if (s == "jacobi") {
      reports.push_back(jacobi_sweep(table, o.threads));
    } else if (s == "chevalley") {
      reports.push_back(chevalley_audit(table));
    } else if (s == "canonical") {
      reports.push_back(canonical_relations(table));
    } else if (s == "omega") {
      reports.push_back(omega_check(table));
    } else if (s == "antisymmetry") {
      reports.push_back(antisymmetry_check(table));
    } else if (s == "differential") {
      if (!table.epsilon().is_coloring_of(table.roots().cartan())) {
        VerificationReport r{"differential"};
        r.fail("epsilon", "a proper 2-coloring", "a non-coloring sign function");
        reports.push_back(r);
        continue;
      }
      for (const auto& [name, ref] : reference_tables(table)) {
        VerificationReport r = differential(ref, table);
        r.suite = "differential vs " + name;
        reports.push_back(std::move(r));
      }
    } else if (s == "slN") {
      if (!type_a) throw UsageError("suite slN applies to type A tables only");
      reports.push_back(sl_n_oracle(table));
    } else {
      throw UsageError("unknown suite '" + s +
                       "' (choose from jacobi, chevalley, canonical, omega, antisymmetry, differential, slN)");
    }
  }
  bool ok = true;
  for (const auto& r : reports) {
    out << r << "\n";
    ok = ok && r.passed();
  }
  return ok ? kOk : kFailed;
}

struct ShowOptions {
  std::string in;
  std::string alpha;
  std::string beta;
};

inline int run_show(const ShowOptions& o, std::ostream& out) {
  BracketTable table = [&] {
    try {
      return to_table(parse_document(read_file(o.in)));
    } catch (const Error& e) {
      throw UsageError(o.in + ": " + e.what());
    }
  }();
  const RootSystem& rs = table.roots();
  const Root alpha = parse_root(o.alpha, rs.rank());
  const Root beta = parse_root(o.beta, rs.rank());
  const auto a = rs.find(alpha);
  const auto b = rs.find(beta);
  if (!a) throw UsageError(alpha.compact() + " is not a root of " + rs.cartan().label());
  if (!b) throw UsageError(beta.compact() + " is not a root of " + rs.cartan().label());

  out << "[e_" << alpha.compact() << ", e_" << beta.compact() << "] = ";
  if (*b == *a) {
    out << "0\n";
    return kOk;
  }
  if (*b == rs.negative(*a)) {
    const auto& h = table.cartan_part(*a);
    bool first = true;
    for (int i = 0; i < rs.rank(); ++i) {
      if (h[i] == 0) continue;
      out << (first ? "" : " + ") << h[i] << " h_" << i + 1;
      first = false;
    }
    out << "\n";
    return kOk;
  }
  const auto s = rs.sum(*a, *b);
  if (s == RootSystem::kNone) {
    out << "0\n";
  } else {
    out << table.constant(*a, *b) << " e_" << rs.root(static_cast<std::size_t>(s)).compact() << "\n";
    out << "N = " << table.constant(*a, *b) << "\n";
  }
  const auto pq = rs.string_lengths(*a, *b);
  out << "q = " << pq.q << ", p = " << pq.p << "\n";
  out << "string:";
  for (int k = -pq.q; k <= pq.p; ++k) out << " " << (beta + k * alpha).compact();
  out << "\n";
  return kOk;
}

/// Entry point shared by the executable and the tests.
inline int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Chevalley bases of simple Lie algebras: generate, fold, verify and inspect bracket tables"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* g = app.add_subcommand("gen", "Build a bracket table");
  g->add_option("--type", gen.type, "Type and rank, e.g. E8")->required();
  g->add_option("--epsilon", gen.epsilon, "default | flipped");
  g->add_option("--method", gen.method, "inductive | closed | fold (default: closed for ADE, fold otherwise)");
  g->add_option("--out", gen.out, "JSON output path")->required();
  g->add_option("--csv", gen.csv, "Also write the constants as CSV");

  FoldOptions fo;
  auto* f = app.add_subcommand("fold", "Fold a simply-laced type along its standard automorphism");
  f->add_option("--type", fo.type, "A(2n-1), D(n+1) or E6")->required();
  f->add_option("--order", fo.order, "For D4: 3 (triality, default) or 2");
  f->add_option("--epsilon", fo.epsilon, "default | flipped (of the parent)");
  f->add_option("--out", fo.out, "JSON output path")->required();
  f->add_option("--csv", fo.csv, "Also write the constants as CSV");

  VerifyOptions vo;
  auto* v = app.add_subcommand("verify", "Run verification suites on a table");
  v->add_option("--in", vo.in, "JSON table")->required();
  v->add_option("--suite", vo.suites, "Comma-separated suites (default: all that apply)");
  v->add_option("--threads", vo.threads, "Worker threads for the Jacobi sweep (0 = all cores)");

  ShowOptions so;
  auto* s = app.add_subcommand("show", "Print one bracket and its root string");
  s->add_option("--in", so.in, "JSON table")->required();
  s->add_option("--alpha", so.alpha, "Root coefficients, comma separated")->required();
  s->add_option("--beta", so.beta, "Root coefficients, comma separated")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (g->parsed()) return run_gen(gen, out);
    if (f->parsed()) return run_fold(fo, out);
    if (v->parsed()) return run_verify(vo, out);
    return run_show(so, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kFailed;
  }
}

}  // namespace chevalley::cli
