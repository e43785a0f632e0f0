#pragma once

// Z_2^r isotropy representations viewed as binary codes.
//
// The images of r generators under rho are the rows of a generator matrix;
// the fixed-point codimension of an involution is the Hamming weight of its
// image, and each column is one +-1 character of the representation.

#include <optional>
#include <utility>
#include <vector>

#include <json.hpp>

#include "z2cb/gf2.hpp"

namespace z2cb {

struct Representation {
  GenMatrix matrix;

  int r() const { return matrix.k(); }
  int n() const { return matrix.n(); }
  bool effective() const { return matrix.k() >= 1 && is_full_rank(matrix); }
};

struct CharacterMultiplicity {
  Gf2Word column;  // length r
  int multiplicity = 0;
};

struct RepAnalysis {
  int r = 0;
  int n = 0;
  int min_codim = 0;
  Gf2Word witness;
  int distinct_characters = 0;
  // Columns of the reduced echelon basis, sorted; invariant under a change of
  // generators.
  std::vector<CharacterMultiplicity> character_multiplicities;
  bool minimal_form = false;
};

/// Throws kNotEffective unless rep.effective().
RepAnalysis analyze(const Representation& rep);

/// A minimum-weight involution image if its weight is at most `threshold`.
/// The search runs on the reduced echelon basis, so the answer depends only
/// on the image of rho, not on the chosen generators.
std::optional<Gf2Word> find_low_weight_involution(const Representation& rep, int threshold);

/// Two distinct weight-4 images whose product has weight < 8 (overlapping
/// supports), first in sorted order; nullopt if none.
std::optional<std::pair<Gf2Word, Gf2Word>> find_weight4_pair(const Representation& rep);

/// All nonzero codewords of the given weight, sorted.
std::vector<Gf2Word> codewords_of_weight(const GenMatrix& m, int weight);

nlohmann::json to_json(const RepAnalysis& a);

}  // namespace z2cb
