#pragma once

// Named code constructions and the search that supplies constructive lower
// bounds d(n, k) >= d for table bracketing.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "z2cb/gf2.hpp"

namespace z2cb {

inline constexpr std::uint64_t kDefaultSeed = 1;
/// Lexicodes are built over a bitmap of all 2^n words.
inline constexpr int kMaxLexicodeLength = 26;
/// Longest derivation chain explored by best_known_lower_bound.
inline constexpr int kMaxDerivationSteps = 8;

/// Known names: repetition(n), parity(n), hamming(m), ext_hamming(m), rm1(m),
/// golay23, golay24, full(n). Throws kUnknownName otherwise.
GenMatrix named_code(std::string_view name);

/// Greedy lexicographic code of length n and minimum distance >= d, returned
/// as the basis picked by the greedy pass (coordinate 0 is the least
/// significant bit of the ordering).
GenMatrix lexicode(int n, int d);

/// Uniform systematic matrix [I_k | A] drawn from the stream (seed, index).
GenMatrix random_systematic(int n, int k, std::uint64_t seed, std::uint64_t index);

/// Samples up to `budget` random systematic [n, k] matrices and returns the
/// first whose minimum distance reaches target_d. Returns nullopt at once
/// when target_d exceeds combined_upper_bound(n, k).
std::optional<GenMatrix> random_search(int n, int k, int target_d, std::uint64_t budget,
                                       std::uint64_t seed = kDefaultSeed,
                                       std::uint64_t* found_index = nullptr);

/// One randomised greedy pass over parity-check columns in Z_2^r: each new
/// column avoids every sum of at most d-2 earlier columns, so any d-1 columns
/// are independent and the code they check has distance >= d. Returns the
/// checked code of length n, or nullopt if the pass gets stuck.
std::optional<GenMatrix> parity_greedy(int n, int r, int d, std::uint64_t seed,
                                       std::uint64_t attempt);

struct Derivation {
  enum class Kind { kShorten, kPuncture, kExtend, kDrop };
  Kind kind = Kind::kExtend;
  int arg = 0;  // coordinate for shorten/puncture, row for drop

  friend bool operator==(const Derivation&, const Derivation&) = default;
};

struct ConstructionRecipe {
  std::string name;
  // a named code, lexicode(n,d), random(n,k,seed,index) or
  // paritygreedy(n,r,d,seed,attempt)
  std::string base;
  std::vector<Derivation> derivations;
  int n = 0;
  int k = 0;
  int d = 0;  // claimed minimum distance

  friend bool operator==(const ConstructionRecipe&, const ConstructionRecipe&) = default;
};

/// Resolves any base name accepted in a recipe.
GenMatrix base_code(std::string_view base);
GenMatrix apply(const GenMatrix& m, const Derivation& step);
/// Replays base + derivations.
GenMatrix replay(const ConstructionRecipe& recipe);
/// True iff the replayed matrix has the claimed (n, k) and distance >= d.
bool check_recipe(const ConstructionRecipe& recipe);

/// Line-oriented text form:
///   recipe <name>
///   base <base>
///   step shorten <c> | step puncture <c> | step extend | step drop <row>
///   claimed <n> <k> <d>
std::string serialize(const ConstructionRecipe& recipe);
ConstructionRecipe parse_recipe(std::string_view text);

/// Minimum distance, by Gray-code enumeration when k is small and otherwise
/// by testing low-weight words for membership. Returns nullopt when neither
/// route fits the work budget.
std::optional<int> certified_distance(const GenMatrix& m);

struct LowerBound {
  int d = 0;
  ConstructionRecipe recipe;
};

struct SearchOptions {
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t random_budget = 3000;
  std::uint64_t greedy_attempts = 64;
};

/// Best distance found for an [n, k] code in the closure of the shipped codes
/// and lexicodes under shorten/puncture/extend/drop, plus a seeded random
/// search. Always returns a replayable witness (falls back to a trivial code).
LowerBound best_known_lower_bound(int n, int k, const SearchOptions& options = {});

}  // namespace z2cb
