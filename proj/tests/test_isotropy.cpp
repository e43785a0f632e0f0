#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracle.hpp"
#include "z2cb/codelib.hpp"
#include "z2cb/isotropy.hpp"
#include "z2cb/verifier.hpp"

using namespace z2cb;

TEST(Isotropy, RemarkMatrixAnalysis) {
  const RepAnalysis a = analyze(Representation{remark_matrix()});
  EXPECT_EQ(a.r, 5);
  EXPECT_EQ(a.n, 11);
  EXPECT_EQ(a.min_codim, 4);
  EXPECT_EQ(a.witness.weight(), 4);
  EXPECT_GE(a.distinct_characters, 5);
  int total = 0;
  for (const auto& c : a.character_multiplicities) total += c.multiplicity;
  EXPECT_EQ(total, 11);
}

TEST(Isotropy, DiagonalRepresentationIsMinimal) {
  // diag(-I_2, -I_1, -I_3): three distinct characters forming a basis.
  const std::vector<std::string_view> rows = {"110000", "001000", "000111"};
  const RepAnalysis a = analyze(Representation{GenMatrix::from_strings(rows)});
  EXPECT_EQ(a.distinct_characters, 3);
  EXPECT_TRUE(a.minimal_form);
  EXPECT_EQ(a.min_codim, 1);
  ASSERT_EQ(a.character_multiplicities.size(), 3u);
  std::multiset<int> mult;
  for (const auto& c : a.character_multiplicities) mult.insert(c.multiplicity);
  EXPECT_EQ(mult, (std::multiset<int>{1, 2, 3}));
}

TEST(Isotropy, HammingIsNotMinimal) {
  const RepAnalysis a = analyze(Representation{named_code("hamming(3)")});
  EXPECT_EQ(a.distinct_characters, 7);
  EXPECT_FALSE(a.minimal_form);
  EXPECT_EQ(a.min_codim, 3);
}

TEST(Isotropy, NonEffectiveRepresentationsAreRejected) {
  const std::vector<std::string_view> dependent = {"1100", "0011", "1111"};
  for (const GenMatrix& m : {GenMatrix::from_strings(dependent), GenMatrix::empty(4)}) {
    try {
      analyze(Representation{m});
      ADD_FAILURE();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kNotEffective);
    }
    EXPECT_FALSE(Representation{m}.effective());
  }
}

TEST(Isotropy, LowWeightInvolutionAndWeight4Pair) {
  const Representation rep{remark_matrix()};
  EXPECT_FALSE(find_low_weight_involution(rep, 3).has_value());
  auto w = find_low_weight_involution(rep, 4);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->weight(), 4);
  auto pair = find_weight4_pair(rep);
  ASSERT_TRUE(pair.has_value());
  EXPECT_NE(pair->first, pair->second);
  EXPECT_LT(distance(pair->first, pair->second), 8);

  // Hamming [7,4]: all weight-4 words pairwise meet.
  EXPECT_TRUE(find_weight4_pair(Representation{named_code("hamming(3)")}).has_value());
  // Repetition code has no weight-4 word at all.
  EXPECT_FALSE(find_weight4_pair(Representation{named_code("repetition(5)")}).has_value());
}

TEST(Isotropy, JsonShape) {
  const auto j = to_json(analyze(Representation{remark_matrix()}));
  EXPECT_EQ(j.at("min_codim"), 4);
  EXPECT_EQ(j.at("r"), 5);
  EXPECT_TRUE(j.at("character_multiplicities").is_array());
}

TEST(Property, AnalysisMatchesOracleAndIsBasisInvariant) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    const int r = 1 + static_cast<int>(rng() % 6);
    const int n = r + static_cast<int>(rng() % static_cast<std::uint64_t>(21 - r));
    const GenMatrix m = oracle::random_full_rank(rng, n, r);
    const RepAnalysis a = analyze(Representation{m});
    ASSERT_GE(a.distinct_characters, r);
    ASSERT_EQ(a.min_codim, oracle::min_distance(m));

    const GenMatrix other = oracle::random_basis_change(rng, m);
    const RepAnalysis b = analyze(Representation{other});
    ASSERT_EQ(to_json(a).dump(), to_json(b).dump());
  }
}
