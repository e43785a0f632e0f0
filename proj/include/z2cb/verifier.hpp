#pragma once

// Checks for the coding-theory claims behind the symmetry-rank bounds.
//
// Every check returns a VerificationReport whose evidence carries the
// quantities it compared, so a PASS can be replayed from the payload.

#include <cstdint>
#include <optional>
#include <vector>

#include "z2cb/gf2.hpp"
#include "z2cb/report.hpp"
#include "z2cb/tables.hpp"

namespace z2cb {

// -- lemma12: an involution of small codimension exists ---------------------

/// Part 1 (r >= (n+1)/2 + delta_J(n) forces weight <= (n+3)/4). Regimes:
/// n >= 112 analytic, 69..111 exact integers, 3..68 table. Throws
/// kOutOfRange for n < 3.
VerificationReport verify_lemma12_part1(int n, const std::vector<TableEntry>& tables);
VerificationReport verify_lemma12_part1(int n);

/// Part 2 (odd n, r >= (n+7)/4 forces weight <= (n-1)/2). Regimes: n >= 55
/// analytic, 5..54 exact integers with n = 7 settled by the table. Even n
/// where the inequality fails are outside the lemma and come back
/// INDETERMINATE. Throws kOutOfRange for n < 5.
VerificationReport verify_lemma12_part2(int n, const std::vector<TableEntry>& tables);
VerificationReport verify_lemma12_part2(int n);

/// The two-term inequality 2^(n-r) < C(n,t) + C(n,t-1) used by part 2.
bool lemma12_part2_inequality_holds(int n);
/// All n in [lo, hi] where that inequality fails.
std::vector<int> lemma12_part2_exceptions(int lo, int hi);
/// The two-term inequality used by part 1 in the mid range.
bool lemma12_part1_inequality_holds(int n);

/// Part 3: d(4,3) <= 2 and d(12,7) <= 4, from T4 and from the bounds.
VerificationReport verify_lemma12_part3(const std::vector<TableEntry>& tables);
VerificationReport verify_lemma12_part3();

// -- shortening ---------------------------------------------------------------

/// Shortens `code` at every support coordinate of `designated` (default: the
/// first nonzero row), checks that each shortened word lifts to a codeword
/// of the same weight, and compares the shortened minimum weight with
/// combined_upper_bound(n-1, k-1). Throws kInvalidArgument unless k >= 2 and
/// the designated word is a nonzero codeword.
VerificationReport verify_shortening(const GenMatrix& code,
                                     std::optional<Gf2Word> designated = std::nullopt);

/// d(n, r) <= d(n-1, r-1) across the T1 rows: each claimed lower end
/// must not exceed the upper bound (and any tabulated value) at (n-1, r-1).
VerificationReport verify_shortening_table_sweep(const std::vector<TableEntry>& tables);

// -- lemma14: a second involution of small weight ----------------------------

/// Finds a second involution of weight <= (n-1)/2 by shortening at a support
/// coordinate of iota1. Throws kOutOfRegime unless (k >= 5 and n <= 12) or
/// (k = 4 and n <= 7), and kInvalidArgument if iota1 is not a nonzero
/// codeword.
VerificationReport verify_lemma14_part1(const GenMatrix& code, const Gf2Word& iota1);

/// T3 check: d(n-1, 4) <= (n-1)/2 for n <= 12, d(n-1, 3) likewise for n <= 7.
VerificationReport verify_lemma14_part1_table(const std::vector<TableEntry>& tables);

/// [11, 5] code with a weight-4 word: conclusion (a) a word of weight <= 3,
/// or (b) two weight-4 words at distance < 8. Throws kInvalidArgument if the
/// preconditions fail.
VerificationReport verify_lemma14_part2(const GenMatrix& code);

struct ScanMode {
  enum class Kind { kSample, kExhaustive };
  Kind kind = Kind::kSample;
  std::uint64_t count = 0;  // sample only
  std::uint64_t seed = 1;   // sample only

  static ScanMode sample(std::uint64_t count, std::uint64_t seed) {
    return {Kind::kSample, count, seed};
  }
  static ScanMode exhaustive() { return {Kind::kExhaustive, 0, 0}; }
};

struct ScanCounts {
  std::uint64_t examined = 0;
  std::uint64_t with_weight4 = 0;
  std::uint64_t conclusion_a = 0;
  std::uint64_t conclusion_b = 0;
  std::uint64_t fail = 0;
  // Lowest scan index that failed and its block A; meaningful when fail > 0.
  std::uint64_t first_fail_index = 0;
  std::uint32_t first_fail_a = 0;

  ScanCounts& operator+=(const ScanCounts& other);
  friend bool operator==(const ScanCounts&, const ScanCounts&) = default;
};

/// The 30-bit block A of sample i: splitmix64 of (seed, i), masked.
std::uint32_t scan_sample_block(std::uint64_t seed, std::uint64_t i);
/// Classifies [I_5 | A] for one 30-bit A (row i of A in bits 6i..6i+5);
/// the result has examined = 1.
ScanCounts classify_systematic_11_5(std::uint32_t a);
GenMatrix systematic_11_5(std::uint32_t a);

/// Runs the classifier over every A (exhaustive) or over sampled A, split
/// into `workers` contiguous index ranges. Counts do not depend on workers.
ScanCounts scan_counts(const ScanMode& mode, int workers);
VerificationReport scan_lemma14_part2(const ScanMode& mode, int workers);

// -- the remark example ---------------------------------------------------------

/// The 5 x 11 example whose first involution has no weight-4 partner.
GenMatrix remark_matrix();
/// Four reports: the weight of iota1's image, the minimum distance, the
/// absence of a partner for iota1, and a conclusion-(b) pair elsewhere.
std::vector<VerificationReport> verify_remark_matrix();

// -- bundled tables -------------------------------------------------------------

/// One report per row of the selected table (all tables when nullopt):
/// structural columns, bracket against constructions and bounds, and the
/// claimed value against the threshold the lemmas need.
std::vector<VerificationReport> verify_tables(const std::vector<TableEntry>& tables,
                                              std::optional<TableId> which = std::nullopt);

}  // namespace z2cb
