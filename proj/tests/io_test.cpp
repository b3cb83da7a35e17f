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


#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "chevalley/chevalley.hpp"

using namespace chevalley;

namespace {
TableDocument closed_doc(Family f, int n) {
  const auto rs = generate_roots(build_cartan(f, n));
  return make_document(build_closed(rs, default_epsilon(rs->cartan())), Provenance{"closed_form", "", std::nullopt});
}

TableDocument g2_doc() {
  const auto rs = generate_roots(build_cartan(Family::D, 4));
  const auto fs = fold(rs, default_epsilon(rs->cartan()), standard_automorphism(rs->cartan()));
  return make_document(folded_table(fs), folded_provenance(fs));
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}
}  // namespace

TEST(Serialize, A2Counts) {
  const auto doc = closed_doc(Family::A, 2);
  EXPECT_EQ(doc.roots.size(), 6u);
  EXPECT_EQ(doc.constants.size(), 6u);
  EXPECT_EQ(doc.schema_version, 1);
  EXPECT_EQ(doc.type, "A2");
}

TEST(Serialize, RoundTrip) {
  for (const auto& doc : {closed_doc(Family::A, 2), closed_doc(Family::E, 6), g2_doc()}) {
    const std::string text = serialize(doc);
    const auto back = parse_document(text);
    EXPECT_EQ(back, doc);
    EXPECT_EQ(serialize(back), text);
    const auto t = to_table(back);
    EXPECT_EQ(make_document(t, back.provenance), doc);
  }
}

TEST(Serialize, CanonicalText) {
  const std::string text = serialize(closed_doc(Family::A, 2));
  EXPECT_EQ(text.find('\r'), std::string::npos);
  EXPECT_EQ(text.back(), '\n');
  EXPECT_NE(text.find("\"cartan_matrix\": [\n    [2, -1],\n    [-1, 2]\n  ]"), std::string::npos);
  // Keys come out sorted.
  const auto p1 = text.find("\"cartan_action\"");
  const auto p2 = text.find("\"constants\"");
  const auto p3 = text.find("\"type\"");
  EXPECT_LT(p1, p2);
  EXPECT_LT(p2, p3);
  EXPECT_EQ(serialize(closed_doc(Family::A, 2)), text);
}

TEST(Serialize, FoldedProvenance) {
  const auto doc = g2_doc();
  EXPECT_EQ(doc.provenance.method, "folded");
  EXPECT_EQ(doc.provenance.parent, "D4");
  ASSERT_TRUE(doc.provenance.automorphism.has_value());
  EXPECT_EQ(doc.provenance.automorphism->order, 3);
  EXPECT_EQ(doc.provenance.automorphism->perm, (std::vector<int>{2, 4, 3, 1}));
  EXPECT_EQ(doc.provenance.automorphism->orbits, (std::vector<std::vector<int>>{{3}, {1, 2, 4}}));
  EXPECT_NE(serialize(doc).find("\"parent\": \"D4\""), std::string::npos);
}

TEST(Csv, D4Row) {
  const std::string csv = csv_export(closed_doc(Family::D, 4));
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "alpha,beta,sum,N");
  EXPECT_NE(csv.find("\n1110,-0110,1000,1\n"), std::string::npos);
}

TEST(Parse, RejectsMalformedDocuments) {
  const auto doc = closed_doc(Family::A, 2);
  EXPECT_THROW(parse_document("{"), FormatError);
  EXPECT_THROW(parse_document("{}"), FormatError);

  auto bad_version = doc;
  bad_version.schema_version = 2;
  EXPECT_THROW(parse_document(serialize(bad_version)), FormatError);

  auto missing = doc;
  missing.constants.pop_back();
  EXPECT_THROW(to_table(missing), FormatError);

  auto duplicate = doc;
  duplicate.constants.push_back(duplicate.constants.front());
  EXPECT_THROW(to_table(duplicate), FormatError);

  auto wrong_sum = doc;
  wrong_sum.constants.front()[2] = 0;
  EXPECT_THROW(to_table(wrong_sum), FormatError);

  auto order = doc;
  std::swap(order.roots[0], order.roots[1]);
  EXPECT_THROW(to_table(order), FormatError);

  auto action = doc;
  action.cartan_action[0][0] = 0;
  EXPECT_THROW(to_table(action), FormatError);

  auto type = doc;
  type.type = "B2";
  EXPECT_THROW(to_table(type), FormatError);

  auto eps = doc;
  eps.epsilon = {1, 0};
  EXPECT_THROW(to_table(eps), FormatError);
}

TEST(Golden, A2) { EXPECT_EQ(serialize(closed_doc(Family::A, 2)), slurp(CHEVALLEY_GOLDEN_DIR "/A2.json")); }

TEST(Golden, D4) { EXPECT_EQ(serialize(closed_doc(Family::D, 4)), slurp(CHEVALLEY_GOLDEN_DIR "/D4.json")); }

TEST(Golden, G2) { EXPECT_EQ(serialize(g2_doc()), slurp(CHEVALLEY_GOLDEN_DIR "/G2.json")); }
