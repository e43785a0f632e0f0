#include "z2cb/gf2.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace z2cb {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kLengthMismatch: return "LENGTH_MISMATCH";
    case ErrorCode::kOutOfRange: return "OUT_OF_RANGE";
    case ErrorCode::kInvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::kEmptyCode: return "EMPTY_CODE";
    case ErrorCode::kNotInjective: return "NOT_INJECTIVE";
    case ErrorCode::kEpsilonZero: return "EPSILON_ZERO";
    case ErrorCode::kNotEffective: return "NOT_EFFECTIVE";
    case ErrorCode::kOutOfRegime: return "OUT_OF_REGIME";
    case ErrorCode::kUnknownName: return "UNKNOWN_NAME";
    case ErrorCode::kParse: return "PARSE_ERROR";
    case ErrorCode::kIo: return "IO_ERROR";
  }
  return "UNKNOWN";
}

// -- Gf2Word -------------------------------------------------------------------

Gf2Word::Gf2Word(int length) : length_(length) {
  if (length < 0 || length > kMaxLength) {
    throw Error(ErrorCode::kOutOfRange, "word length " + std::to_string(length) + " not in [0, 256]");
  }
}

Gf2Word Gf2Word::parse(std::string_view bits) {
  Gf2Word w(static_cast<int>(bits.size()));
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      w.set(static_cast<int>(i));
    } else if (bits[i] != '0') {
      throw Error(ErrorCode::kParse, "unexpected character '" + std::string(1, bits[i]) + "' in word");
    }
  }
  return w;
}

Gf2Word Gf2Word::from_bits(std::span<const int> bits) {
  Gf2Word w(static_cast<int>(bits.size()));
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != 0) w.set(static_cast<int>(i));
  }
  return w;
}

Gf2Word Gf2Word::unit(int length, int i) {
  Gf2Word w(length);
  w.set(i);
  return w;
}

Gf2Word Gf2Word::from_uint(int length, std::uint64_t value) {
  if (length > 64) throw Error(ErrorCode::kOutOfRange, "from_uint needs length <= 64");
  Gf2Word w(length);
  w.limbs_[0] = length == 64 ? value : value & ((std::uint64_t{1} << length) - 1);
  return w;
}

bool Gf2Word::get(int i) const {
  if (i < 0 || i >= length_) throw Error(ErrorCode::kOutOfRange, "coordinate " + std::to_string(i));
  return (limbs_[static_cast<std::size_t>(i / 64)] >> (i % 64)) & 1U;
}

void Gf2Word::set(int i, bool value) {
  if (i < 0 || i >= length_) throw Error(ErrorCode::kOutOfRange, "coordinate " + std::to_string(i));
  const std::uint64_t mask = std::uint64_t{1} << (i % 64);
  auto& limb = limbs_[static_cast<std::size_t>(i / 64)];
  limb = value ? (limb | mask) : (limb & ~mask);
}

void Gf2Word::flip(int i) { set(i, !get(i)); }

int Gf2Word::overlap(const Gf2Word& other) const {
  int total = 0;
  for (int l = 0; l < kLimbs; ++l) total += std::popcount(limbs_[l] & other.limbs_[l]);
  return total;
}

int Gf2Word::first_set() const noexcept {
  for (int l = 0; l < kLimbs; ++l) {
    if (limbs_[l] != 0) return l * 64 + std::countr_zero(limbs_[l]);
  }
  return -1;
}

std::vector<int> Gf2Word::support() const {
  std::vector<int> out;
  for (int l = 0; l < kLimbs; ++l) {
    for (std::uint64_t bits = limbs_[l]; bits != 0; bits &= bits - 1) {
      out.push_back(l * 64 + std::countr_zero(bits));
    }
  }
  return out;
}

Gf2Word& Gf2Word::operator^=(const Gf2Word& other) {
  if (other.length_ != length_) {
    throw Error(ErrorCode::kLengthMismatch,
                std::to_string(length_) + " vs " + std::to_string(other.length_));
  }
  for (int l = 0; l < kLimbs; ++l) limbs_[l] ^= other.limbs_[l];
  return *this;
}

Gf2Word Gf2Word::erase(int coord) const {
  if (coord < 0 || coord >= length_) {
    throw Error(ErrorCode::kOutOfRange, "coordinate " + std::to_string(coord));
  }
  Gf2Word out(length_ - 1);
  for (int i = 0, j = 0; i < length_; ++i) {
    if (i == coord) continue;
    if (get(i)) out.set(j);
    ++j;
  }
  return out;
}

Gf2Word Gf2Word::append(bool bit) const {
  Gf2Word out(length_ + 1);
  out.limbs_ = limbs_;
  if (bit) out.set(length_);
  return out;
}

Gf2Word Gf2Word::permute(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != length_) {
    throw Error(ErrorCode::kLengthMismatch, "permutation size");
  }
  Gf2Word out(length_);
  for (int j = 0; j < length_; ++j) {
    if (get(perm[static_cast<std::size_t>(j)])) out.set(j);
  }
  return out;
}

std::string Gf2Word::to_string() const {
  std::string s(static_cast<std::size_t>(length_), '0');
  for (int i = 0; i < length_; ++i) {
    if (get(i)) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

std::strong_ordering operator<=>(const Gf2Word& a, const Gf2Word& b) {
  if (auto c = a.length_ <=> b.length_; c != 0) return c;
  for (int l = Gf2Word::kLimbs - 1; l >= 0; --l) {
    if (auto c = a.limbs_[l] <=> b.limbs_[l]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Gf2Word& w) { return os << w.to_string(); }

Gf2Word add(const Gf2Word& a, const Gf2Word& b) { return a ^ b; }

// -- GenMatrix -----------------------------------------------------------------

GenMatrix::GenMatrix(int n, std::vector<Gf2Word> rows) : n_(n), rows_(std::move(rows)) {
  if (n < 0 || n > Gf2Word::kMaxLength) throw Error(ErrorCode::kOutOfRange, "code length");
  for (const auto& r : rows_) {
    if (r.length() != n) {
      throw Error(ErrorCode::kLengthMismatch,
                  "row of length " + std::to_string(r.length()) + " in matrix of length " +
                      std::to_string(n));
    }
  }
}

GenMatrix GenMatrix::empty(int n) { return GenMatrix(n, {}); }

GenMatrix GenMatrix::identity(int n) {
  std::vector<Gf2Word> rows;
  rows.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) rows.push_back(Gf2Word::unit(n, i));
  return GenMatrix(n, std::move(rows));
}

GenMatrix GenMatrix::from_strings(std::span<const std::string_view> rows) {
  if (rows.empty()) throw Error(ErrorCode::kInvalidArgument, "no rows");
  std::vector<Gf2Word> words;
  for (auto r : rows) words.push_back(Gf2Word::parse(r));
  const int n = words.front().length();
  return GenMatrix(n, std::move(words));
}

Gf2Word GenMatrix::column(int j) const {
  Gf2Word col(k());
  for (int i = 0; i < k(); ++i) {
    if (rows_[static_cast<std::size_t>(i)].get(j)) col.set(i);
  }
  return col;
}

Gf2Word GenMatrix::encode(std::uint64_t message) const {
  if (k() > 64) throw Error(ErrorCode::kOutOfRange, "encode needs k <= 64");
  Gf2Word out(n_);
  for (int i = 0; i < k(); ++i) {
    if ((message >> i) & 1U) out ^= rows_[static_cast<std::size_t>(i)];
  }
  return out;
}

// -- elimination ---------------------------------------------------------------

namespace {

struct Echelon {
  std::vector<Gf2Word> rows;  // reduced rows, one per pivot
  std::vector<int> pivots;    // pivot column per row
  std::vector<int> kept;      // indices of input rows that were independent
};

// Incremental reduction: each input row is reduced against the pivots found so
// far and kept if something survives. Rows stay fully reduced.
Echelon eliminate(const GenMatrix& m) {
  Echelon e;
  for (int i = 0; i < m.k(); ++i) {
    Gf2Word r = m.row(i);
    for (std::size_t p = 0; p < e.rows.size(); ++p) {
      if (r.get(e.pivots[p])) r ^= e.rows[p];
    }
    const int pivot = r.first_set();
    if (pivot < 0) continue;
    for (auto& other : e.rows) {
      if (other.get(pivot)) other ^= r;
    }
    e.rows.push_back(r);
    e.pivots.push_back(pivot);
    e.kept.push_back(i);
  }
  return e;
}

template <int L>
struct Packed {
  std::vector<std::array<std::uint64_t, L>> rows;
  explicit Packed(const GenMatrix& m) {
    rows.reserve(static_cast<std::size_t>(m.k()));
    for (const auto& r : m.rows()) {
      std::array<std::uint64_t, L> a{};
      for (int l = 0; l < L; ++l) a[l] = r.limbs()[static_cast<std::size_t>(l)];
      rows.push_back(a);
    }
  }
};

template <int L>
int packed_weight(const std::array<std::uint64_t, L>& a) {
  int w = 0;
  for (int l = 0; l < L; ++l) w += std::popcount(a[l]);
  return w;
}

// Gray-code walk over the packed rows; `visit(weight, index)` receives the
// weight of every nonzero codeword and the Gray index that produced it.
template <int L, class Visit>
void walk_nonzero(const GenMatrix& m, Visit&& visit) {
  Packed<L> packed(m);
  std::array<std::uint64_t, L> word{};
  const std::uint64_t total = std::uint64_t{1} << m.k();
  for (std::uint64_t i = 1; i < total; ++i) {
    const auto& r = packed.rows[static_cast<std::size_t>(std::countr_zero(i))];
    for (int l = 0; l < L; ++l) word[l] ^= r[l];
    if (!visit(packed_weight<L>(word), i)) return;
  }
}

template <class Visit>
void walk_nonzero_dispatch(const GenMatrix& m, Visit&& visit) {
  if (m.k() >= 64) throw Error(ErrorCode::kOutOfRange, "enumeration needs k < 64");
  const int limbs = (m.n() + 63) / 64;
  switch (limbs) {
    case 0:
    case 1: walk_nonzero<1>(m, visit); break;
    case 2: walk_nonzero<2>(m, visit); break;
    case 3: walk_nonzero<3>(m, visit); break;
    default: walk_nonzero<4>(m, visit); break;
  }
}

void require_nonempty_injective(const GenMatrix& m) {
  if (m.k() == 0) throw Error(ErrorCode::kEmptyCode, "code has dimension 0");
  require_full_rank(m);
}

void check_coord(const GenMatrix& m, int coord) {
  if (coord < 0 || coord >= m.n()) {
    throw Error(ErrorCode::kOutOfRange,
                "coordinate " + std::to_string(coord) + " not in [0, " + std::to_string(m.n()) + ")");
  }
}

}  // namespace

int rank(const GenMatrix& m) { return static_cast<int>(eliminate(m).rows.size()); }

bool is_full_rank(const GenMatrix& m) { return rank(m) == m.k(); }

void require_full_rank(const GenMatrix& m) {
  const int r = rank(m);
  if (r != m.k()) {
    throw Error(ErrorCode::kNotInjective,
                "rank " + std::to_string(r) + " < " + std::to_string(m.k()) + " rows");
  }
}

int min_distance(const GenMatrix& m) {
  require_nonempty_injective(m);
  int best = m.n() + 1;
  walk_nonzero_dispatch(m, [&](int w, std::uint64_t) {
    if (w < best) best = w;
    return best > 1;
  });
  return best;
}

Gf2Word min_weight_codeword(const GenMatrix& m) {
  require_nonempty_injective(m);
  int best = m.n() + 1;
  std::uint64_t best_index = 0;
  walk_nonzero_dispatch(m, [&](int w, std::uint64_t i) {
    if (w < best) {
      best = w;
      best_index = i;
    }
    return best > 1;
  });
  // Gray index i corresponds to message i ^ (i >> 1).
  return m.encode(best_index ^ (best_index >> 1));
}

CodeSummary weight_distribution(const GenMatrix& m) {
  require_nonempty_injective(m);
  CodeSummary s;
  s.n = m.n();
  s.k = m.k();
  s.weight_distribution.assign(static_cast<std::size_t>(m.n()) + 1, 0);
  s.weight_distribution[0] = 1;
  walk_nonzero_dispatch(m, [&](int w, std::uint64_t) {
    ++s.weight_distribution[static_cast<std::size_t>(w)];
    return true;
  });
  for (int i = 1; i <= m.n(); ++i) {
    if (s.weight_distribution[static_cast<std::size_t>(i)] != 0) {
      s.min_distance = i;
      break;
    }
  }
  return s;
}

bool has_nonzero_weight_below(const GenMatrix& m, int bound) {
  require_nonempty_injective(m);
  bool found = false;
  walk_nonzero_dispatch(m, [&](int w, std::uint64_t) {
    found = w < bound;
    return !found;
  });
  return found;
}

GenMatrix shorten(const GenMatrix& m, int coord) {
  check_coord(m, coord);
  if (m.k() == 0) throw Error(ErrorCode::kEmptyCode, "cannot shorten the empty code");
  std::vector<Gf2Word> rows = m.rows();
  auto pivot = std::find_if(rows.begin(), rows.end(), [&](const Gf2Word& r) { return r.get(coord); });
  if (pivot != rows.end()) {
    const Gf2Word p = *pivot;
    rows.erase(pivot);
    for (auto& r : rows) {
      if (r.get(coord)) r ^= p;
    }
  }
  std::vector<Gf2Word> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(r.erase(coord));
  return GenMatrix(m.n() - 1, std::move(out));
}

GenMatrix puncture(const GenMatrix& m, int coord) {
  check_coord(m, coord);
  std::vector<Gf2Word> cut;
  cut.reserve(static_cast<std::size_t>(m.k()));
  for (const auto& r : m.rows()) cut.push_back(r.erase(coord));
  GenMatrix punctured(m.n() - 1, std::move(cut));
  const Echelon e = eliminate(punctured);
  if (static_cast<int>(e.kept.size()) == punctured.k()) return punctured;
  std::vector<Gf2Word> basis;
  for (int i : e.kept) basis.push_back(punctured.row(i));
  return GenMatrix(punctured.n(), std::move(basis));
}

GenMatrix extend_parity(const GenMatrix& m) {
  std::vector<Gf2Word> rows;
  rows.reserve(static_cast<std::size_t>(m.k()));
  for (const auto& r : m.rows()) rows.push_back(r.append(r.weight() % 2 == 1));
  return GenMatrix(m.n() + 1, std::move(rows));
}

GenMatrix subcode(const GenMatrix& m, int keep) {
  if (keep < 0 || keep > m.k()) throw Error(ErrorCode::kOutOfRange, "subcode row count");
  return GenMatrix(m.n(), std::vector<Gf2Word>(m.rows().begin(), m.rows().begin() + keep));
}

GenMatrix row_reduce(const GenMatrix& m) {
  Echelon e = eliminate(m);
  std::vector<std::size_t> order(e.rows.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return e.pivots[a] < e.pivots[b]; });
  std::vector<Gf2Word> rows;
  for (auto i : order) rows.push_back(e.rows[i]);
  return GenMatrix(m.n(), std::move(rows));
}

GenMatrix dual(const GenMatrix& m) {
  const GenMatrix reduced = row_reduce(m);
  std::vector<int> pivots;
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.n()), false);
  for (const auto& r : reduced.rows()) {
    pivots.push_back(r.first_set());
    is_pivot[static_cast<std::size_t>(r.first_set())] = true;
  }
  // One basis vector per free column f: set f, and each pivot coordinate to
  // the entry of its row in column f.
  std::vector<Gf2Word> rows;
  for (int f = 0; f < m.n(); ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    Gf2Word v(m.n());
    v.set(f);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      if (reduced.rows()[i].get(f)) v.set(pivots[i]);
    }
    rows.push_back(v);
  }
  return GenMatrix(m.n(), std::move(rows));
}

SystematicForm systematic_form(const GenMatrix& m) {
  require_full_rank(m);
  const GenMatrix reduced = row_reduce(m);
  std::vector<int> perm;
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.n()), false);
  for (const auto& r : reduced.rows()) {
    perm.push_back(r.first_set());
    is_pivot[static_cast<std::size_t>(r.first_set())] = true;
  }
  for (int j = 0; j < m.n(); ++j) {
    if (!is_pivot[static_cast<std::size_t>(j)]) perm.push_back(j);
  }
  std::vector<Gf2Word> rows;
  for (const auto& r : reduced.rows()) rows.push_back(r.permute(perm));
  return {GenMatrix(m.n(), std::move(rows)), std::move(perm)};
}

// -- text format -----------------------------------------------------------------

GenMatrix parse_matrix(std::string_view text) {
  std::vector<Gf2Word> rows;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
      line.remove_suffix(1);
    }
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
    if (line.empty()) {
      if (end == text.size()) break;
      continue;
    }
    try {
      rows.push_back(Gf2Word::parse(line));
    } catch (const Error& e) {
      throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": " + e.detail());
    }
    if (rows.back().length() != rows.front().length()) {
      throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": row length " +
                                         std::to_string(rows.back().length()) + ", expected " +
                                         std::to_string(rows.front().length()));
    }
    if (end == text.size()) break;
  }
  if (rows.empty()) throw Error(ErrorCode::kParse, "matrix has no rows");
  const int n = rows.front().length();
  if (n == 0) throw Error(ErrorCode::kParse, "empty row");
  return GenMatrix(n, std::move(rows));
}

GenMatrix read_matrix(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix(buf.str());
}

GenMatrix load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  return read_matrix(in);
}

std::string format_matrix(const GenMatrix& m) {
  std::string out;
  for (const auto& r : m.rows()) {
    out += r.to_string();
    out += '\n';
  }
  return out;
}

}  // namespace z2cb
