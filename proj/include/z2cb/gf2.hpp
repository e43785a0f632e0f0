#pragma once

// Words of Z_2^n and binary generator matrices.
//
// A Gf2Word stores up to 256 coordinates in four 64-bit limbs; coordinate i
// lives in bit (i % 64) of limb (i / 64). Every bit at or above length() is
// kept at zero so that weight() is a plain popcount.

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "z2cb/error.hpp"

namespace z2cb {

class Gf2Word {
 public:
  static constexpr int kMaxLength = 256;
  static constexpr int kLimbs = 4;
  using Limbs = std::array<std::uint64_t, kLimbs>;

  Gf2Word() = default;
  explicit Gf2Word(int length);

  /// Parses a string of '0'/'1' characters, coordinate 0 first.
  static Gf2Word parse(std::string_view bits);
  static Gf2Word from_bits(std::span<const int> bits);
  /// Unit vector e_i of the given length.
  static Gf2Word unit(int length, int i);
  /// Word whose coordinate i is bit i of `value` (length <= 64).
  static Gf2Word from_uint(int length, std::uint64_t value);

  int length() const noexcept { return length_; }
  const Limbs& limbs() const noexcept { return limbs_; }

  bool get(int i) const;
  void set(int i, bool value = true);
  void flip(int i);

  int weight() const noexcept {
    return std::popcount(limbs_[0]) + std::popcount(limbs_[1]) + std::popcount(limbs_[2]) +
           std::popcount(limbs_[3]);
  }
  bool is_zero() const noexcept { return (limbs_[0] | limbs_[1] | limbs_[2] | limbs_[3]) == 0; }

  /// Number of coordinates set in both words.
  int overlap(const Gf2Word& other) const;
  /// Index of the lowest set coordinate, or -1 for the zero word.
  int first_set() const noexcept;
  std::vector<int> support() const;

  Gf2Word& operator^=(const Gf2Word& other);
  friend Gf2Word operator^(Gf2Word a, const Gf2Word& b) { return a ^= b; }

  /// Deletes coordinate `coord`; the result has length() - 1.
  Gf2Word erase(int coord) const;
  /// Appends one coordinate at the end.
  Gf2Word append(bool bit) const;
  /// Reorders coordinates: result[j] = (*this)[perm[j]].
  Gf2Word permute(std::span<const int> perm) const;

  /// Low 64 coordinates as an integer (coordinate i in bit i).
  std::uint64_t low_bits() const noexcept { return limbs_[0]; }

  std::string to_string() const;

  friend bool operator==(const Gf2Word&, const Gf2Word&) = default;
  // Orders by length, then by the integer value with coordinate 0 least significant.
  friend std::strong_ordering operator<=>(const Gf2Word& a, const Gf2Word& b);

 private:
  int length_ = 0;
  Limbs limbs_{};
};

std::ostream& operator<<(std::ostream& os, const Gf2Word& w);

/// Hamming weight: the number of nonzero coordinates.
inline int weight(const Gf2Word& w) { return w.weight(); }
/// Coordinatewise XOR; the weight of the sum is the Hamming distance.
Gf2Word add(const Gf2Word& a, const Gf2Word& b);
inline int distance(const Gf2Word& a, const Gf2Word& b) { return add(a, b).weight(); }

// A k x n binary matrix whose rows span a linear code. The rows are not
// required to be independent at construction; operations that need an
// injective encoder check the rank and throw kNotInjective.
class GenMatrix {
 public:
  GenMatrix() = default;
  GenMatrix(int n, std::vector<Gf2Word> rows);

  static GenMatrix empty(int n);
  static GenMatrix identity(int n);
  /// One '0'/'1' string per row.
  static GenMatrix from_strings(std::span<const std::string_view> rows);

  int n() const noexcept { return n_; }
  int k() const noexcept { return static_cast<int>(rows_.size()); }
  const std::vector<Gf2Word>& rows() const noexcept { return rows_; }
  const Gf2Word& row(int i) const { return rows_.at(static_cast<std::size_t>(i)); }
  /// Column `j` as a word of length k (row i -> coordinate i).
  Gf2Word column(int j) const;

  /// XOR of the rows selected by the bits of `message` (requires k <= 64).
  Gf2Word encode(std::uint64_t message) const;

  friend bool operator==(const GenMatrix&, const GenMatrix&) = default;

 private:
  int n_ = 0;
  std::vector<Gf2Word> rows_;
};

struct CodeSummary {
  int n = 0;
  int k = 0;
  std::optional<int> min_distance;
  std::vector<std::uint64_t> weight_distribution;  // A[0..n]
};

struct SystematicForm {
  GenMatrix matrix;           // [I_k | A]
  std::vector<int> permutation;  // new column j is old column permutation[j]
};

/// Row rank over GF(2).
int rank(const GenMatrix& m);
bool is_full_rank(const GenMatrix& m);
/// Throws kNotInjective unless the rows are independent.
void require_full_rank(const GenMatrix& m);

/// Visits all 2^k codewords in Gray-code order, the zero word first. Each
/// step costs one row XOR. Returns the number of codewords visited.
template <class Visitor>
std::uint64_t for_each_codeword(const GenMatrix& m, Visitor&& visit);

/// Minimum nonzero weight. Throws kEmptyCode for k = 0 and kNotInjective for
/// dependent rows.
int min_distance(const GenMatrix& m);
/// A nonzero codeword of minimum weight (the first one met in Gray order).
Gf2Word min_weight_codeword(const GenMatrix& m);
CodeSummary weight_distribution(const GenMatrix& m);
/// True iff some nonzero codeword has weight < bound; stops at the first one.
bool has_nonzero_weight_below(const GenMatrix& m, int bound);

/// The subcode vanishing at `coord`, with that coordinate deleted.
GenMatrix shorten(const GenMatrix& m, int coord);
/// Deletes `coord` from every row and keeps an independent subset of rows.
GenMatrix puncture(const GenMatrix& m, int coord);
/// Appends an overall parity coordinate.
GenMatrix extend_parity(const GenMatrix& m);
/// Keeps the first `rows` rows.
GenMatrix subcode(const GenMatrix& m, int rows);
SystematicForm systematic_form(const GenMatrix& m);
/// Reduced row echelon form with zero rows removed.
GenMatrix row_reduce(const GenMatrix& m);
/// Basis of the dual code { x : <x, r> = 0 for every row r }.
GenMatrix dual(const GenMatrix& m);

/// Text interchange format: one row per line of '0'/'1', '#' comments and
/// blank lines ignored, all rows of equal length.
GenMatrix parse_matrix(std::string_view text);
GenMatrix read_matrix(std::istream& in);
GenMatrix load_matrix(const std::string& path);
std::string format_matrix(const GenMatrix& m);

// -- implementation of the enumeration template --------------------------------

template <class Visitor>
std::uint64_t for_each_codeword(const GenMatrix& m, Visitor&& visit) {
  if (m.k() >= 64) throw Error(ErrorCode::kOutOfRange, "enumeration needs k < 64");
  Gf2Word word(m.n());
  visit(static_cast<const Gf2Word&>(word));
  std::uint64_t visited = 1;
  const std::uint64_t total = std::uint64_t{1} << m.k();
  for (std::uint64_t i = 1; i < total; ++i) {
    word ^= m.rows()[static_cast<std::size_t>(std::countr_zero(i))];
    visit(static_cast<const Gf2Word&>(word));
    ++visited;
  }
  return visited;
}

}  // namespace z2cb
