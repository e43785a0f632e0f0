#include "z2cb/codelib.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <utility>

#include "z2cb/bounds.hpp"

namespace z2cb {

namespace {

struct ParsedName {
  std::string ident;
  std::vector<std::uint64_t> args;
};

ParsedName parse_name(std::string_view name) {
  ParsedName out;
  const auto open = name.find('(');
  if (open == std::string_view::npos) {
    out.ident = std::string(name);
    return out;
  }
  if (name.back() != ')') throw Error(ErrorCode::kUnknownName, std::string(name));
  out.ident = std::string(name.substr(0, open));
  std::string_view body = name.substr(open + 1, name.size() - open - 2);
  while (!body.empty()) {
    const auto comma = body.find(',');
    std::string_view tok = body.substr(0, comma);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty()) {
      throw Error(ErrorCode::kUnknownName, "bad argument in " + std::string(name));
    }
    out.args.push_back(v);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return out;
}

int int_arg(const ParsedName& p, std::size_t count, std::size_t i, int lo, int hi) {
  if (p.args.size() != count) {
    throw Error(ErrorCode::kUnknownName, p.ident + " expects " + std::to_string(count) + " arguments");
  }
  const auto v = p.args[i];
  if (v < static_cast<std::uint64_t>(lo) || v > static_cast<std::uint64_t>(hi)) {
    throw Error(ErrorCode::kOutOfRange, p.ident + " argument " + std::to_string(v) + " not in [" +
                                            std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return static_cast<int>(v);
}

// Systematic generator of the [23,12,7] Golay code built from
// g(x) = 1 + x^2 + x^4 + x^5 + x^6 + x^10 + x^11.
constexpr std::string_view kGolay23[12] = {
    "10000000000010101110001", "01000000000011111001001", "00100000000011010010101",
    "00010000000011000111011", "00001000000011001101100", "00000100000001100110110",
    "00000010000000110011011", "00000001000010110111100", "00000000100001011011110",
    "00000000010000101101111", "00000000001010111000110", "00000000000101011100011",
};

GenMatrix hamming(int m) {
  const int n = (1 << m) - 1;
  std::vector<Gf2Word> rows;
  // Positions are 1..n; data sits at the non-powers of two, parity bit b at 2^b.
  for (int pos = 1; pos <= n; ++pos) {
    if (std::has_single_bit(static_cast<unsigned>(pos))) continue;
    Gf2Word r(n);
    r.set(pos - 1);
    for (int b = 0; b < m; ++b) {
      if ((pos >> b) & 1) r.set((1 << b) - 1);
    }
    rows.push_back(r);
  }
  return GenMatrix(n, std::move(rows));
}

GenMatrix reed_muller1(int m) {
  const int n = 1 << m;
  std::vector<Gf2Word> rows;
  Gf2Word ones(n);
  for (int x = 0; x < n; ++x) ones.set(x);
  rows.push_back(ones);
  for (int i = 0; i < m; ++i) {
    Gf2Word r(n);
    for (int x = 0; x < n; ++x) {
      if ((x >> i) & 1) r.set(x);
    }
    rows.push_back(r);
  }
  return GenMatrix(n, std::move(rows));
}

// -- lexicodes ---------------------------------------------------------------

// Bitmap over all 2^n words. translate() realises x -> x ^ v on indices.
class WordBitmap {
 public:
  explicit WordBitmap(int n)
      : n_(n), words_(std::max<std::size_t>(1, (std::size_t{1} << n) / 64), 0) {}

  bool test(std::uint64_t x) const { return (words_[x >> 6] >> (x & 63)) & 1U; }
  void set(std::uint64_t x) { words_[x >> 6] |= std::uint64_t{1} << (x & 63); }

  // this |= (this translated by v)
  void merge_translate(std::uint64_t v) {
    const std::uint64_t high = v >> 6;
    const unsigned low = static_cast<unsigned>(v & 63);
    std::vector<std::uint64_t> shifted(words_.size());
    for (std::size_t w = 0; w < words_.size(); ++w) {
      shifted[w] = permute_within(words_[w ^ high], low);
    }
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= shifted[w];
  }

  // Smallest x in [from, 2^n) whose bit is clear, or 2^n.
  std::uint64_t next_clear(std::uint64_t from) const {
    const std::uint64_t limit = std::uint64_t{1} << n_;
    for (std::uint64_t x = from; x < limit;) {
      const std::uint64_t word = ~words_[x >> 6] >> (x & 63);
      if (word != 0) {
        const std::uint64_t hit = x + static_cast<std::uint64_t>(std::countr_zero(word));
        return std::min(hit, limit);
      }
      x = (x | 63) + 1;
    }
    return limit;
  }

 private:
  // Bit b of the result is bit (b ^ low) of `w`.
  static std::uint64_t permute_within(std::uint64_t w, unsigned low) {
    static constexpr std::uint64_t kMasks[6] = {
        0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
        0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL,
    };
    for (unsigned j = 0; j < 6; ++j) {
      if ((low >> j) & 1U) {
        const unsigned s = 1U << j;
        w = ((w & kMasks[j]) << s) | ((w >> s) & kMasks[j]);
      }
    }
    return w;
  }

  int n_;
  std::vector<std::uint64_t> words_;
};

GenMatrix build_lexicode(int n, int d) {
  WordBitmap covered(n);
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t x = 0; x < limit; ++x) {
    if (std::popcount(x) < d) covered.set(x);
  }
  std::vector<Gf2Word> basis;
  std::uint64_t from = 0;
  while (true) {
    const std::uint64_t next = covered.next_clear(from);
    if (next >= limit) break;
    basis.push_back(Gf2Word::from_uint(n, next));
    covered.merge_translate(next);
    from = next + 1;
  }
  return GenMatrix(n, std::move(basis));
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

GenMatrix named_code(std::string_view name) {
  const ParsedName p = parse_name(name);
  if (p.ident == "repetition") {
    const int n = int_arg(p, 1, 0, 1, Gf2Word::kMaxLength);
    Gf2Word r(n);
    for (int i = 0; i < n; ++i) r.set(i);
    return GenMatrix(n, {r});
  }
  if (p.ident == "parity") {
    const int n = int_arg(p, 1, 0, 2, Gf2Word::kMaxLength);
    std::vector<Gf2Word> rows;
    for (int i = 0; i + 1 < n; ++i) {
      Gf2Word r(n);
      r.set(i);
      r.set(n - 1);
      rows.push_back(r);
    }
    return GenMatrix(n, std::move(rows));
  }
  if (p.ident == "full") return GenMatrix::identity(int_arg(p, 1, 0, 1, Gf2Word::kMaxLength));
  if (p.ident == "hamming") return hamming(int_arg(p, 1, 0, 2, 8));
  if (p.ident == "ext_hamming") return extend_parity(hamming(int_arg(p, 1, 0, 2, 7)));
  if (p.ident == "rm1") return reed_muller1(int_arg(p, 1, 0, 1, 8));
  if (p.ident == "golay23" && p.args.empty()) return GenMatrix::from_strings(kGolay23);
  if (p.ident == "golay24" && p.args.empty()) {
    return extend_parity(GenMatrix::from_strings(kGolay23));
  }
  throw Error(ErrorCode::kUnknownName, std::string(name));
}

GenMatrix lexicode(int n, int d) {
  if (n < 1 || n > kMaxLexicodeLength) {
    throw Error(ErrorCode::kOutOfRange, "lexicode length must be in [1, 26]");
  }
  if (d < 1 || d > n) throw Error(ErrorCode::kOutOfRange, "lexicode needs 1 <= d <= n");
  static std::mutex mutex;
  static std::map<std::pair<int, int>, GenMatrix> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find({n, d}); it != cache.end()) return it->second;
  }
  GenMatrix code = build_lexicode(n, d);
  std::lock_guard lock(mutex);
  cache.emplace(std::make_pair(n, d), code);
  return code;
}

GenMatrix random_systematic(int n, int k, std::uint64_t seed, std::uint64_t index) {
  if (k < 1 || k > n) throw Error(ErrorCode::kInvalidArgument, "need 1 <= k <= n");
  std::mt19937_64 rng(splitmix64(seed ^ splitmix64(index)));
  std::vector<Gf2Word> rows;
  for (int i = 0; i < k; ++i) {
    Gf2Word r = Gf2Word::unit(n, i);
    std::uint64_t bits = 0;
    for (int j = k; j < n; ++j) {
      if ((j - k) % 64 == 0) bits = rng();
      if ((bits >> ((j - k) % 64)) & 1U) r.set(j);
    }
    rows.push_back(r);
  }
  return GenMatrix(n, std::move(rows));
}

std::optional<GenMatrix> random_search(int n, int k, int target_d, std::uint64_t budget,
                                       std::uint64_t seed, std::uint64_t* found_index) {
  if (target_d > combined_upper_bound(n, k).combined) return std::nullopt;
  for (std::uint64_t i = 0; i < budget; ++i) {
    GenMatrix m = random_systematic(n, k, seed, i);
    if (!has_nonzero_weight_below(m, target_d)) {
      if (found_index != nullptr) *found_index = i;
      return m;
    }
  }
  return std::nullopt;
}

std::optional<GenMatrix> parity_greedy(int n, int r, int d, std::uint64_t seed,
                                       std::uint64_t attempt) {
  if (r < 1 || r > 20 || n < 1 || n > Gf2Word::kMaxLength || d < 2) {
    throw Error(ErrorCode::kOutOfRange, "parity_greedy needs 1 <= r <= 20 and d >= 2");
  }
  const std::size_t size = std::size_t{1} << r;
  // layers[j][x] != 0 iff x is a sum of exactly j distinct chosen columns.
  std::vector<std::vector<std::uint8_t>> layers(static_cast<std::size_t>(d - 1),
                                                std::vector<std::uint8_t>(size, 0));
  layers[0][0] = 1;
  std::vector<std::uint8_t> forbidden(size, 0);
  forbidden[0] = 1;
  std::mt19937_64 rng(splitmix64(seed ^ splitmix64(attempt ^ 0x70617269747967ULL)));
  std::vector<std::uint32_t> columns;
  for (int c = 0; c < n; ++c) {
    std::vector<std::uint32_t> allowed;
    for (std::uint32_t x = 1; x < size; ++x) {
      if (forbidden[x] == 0) allowed.push_back(x);
    }
    if (allowed.empty()) return std::nullopt;
    const std::uint32_t col = allowed[rng() % allowed.size()];
    columns.push_back(col);
    for (int j = d - 3; j >= 0; --j) {
      auto& from = layers[static_cast<std::size_t>(j)];
      auto& to = layers[static_cast<std::size_t>(j + 1)];
      for (std::uint32_t x = 0; x < size; ++x) {
        if (from[x] != 0) to[x ^ col] = 1;
      }
    }
    for (const auto& layer : layers) {
      for (std::size_t x = 0; x < size; ++x) forbidden[x] |= layer[x];
    }
  }
  std::vector<Gf2Word> checks;
  for (int i = 0; i < r; ++i) {
    Gf2Word row(n);
    for (int j = 0; j < n; ++j) {
      if ((columns[static_cast<std::size_t>(j)] >> i) & 1U) row.set(j);
    }
    checks.push_back(row);
  }
  GenMatrix code = dual(GenMatrix(n, std::move(checks)));
  if (code.k() == 0) return std::nullopt;
  return code;
}

// -- recipes -------------------------------------------------------------------

GenMatrix base_code(std::string_view base) {
  const ParsedName p = parse_name(base);
  if (p.ident == "lexicode") {
    return lexicode(int_arg(p, 2, 0, 1, kMaxLexicodeLength), int_arg(p, 2, 1, 1, kMaxLexicodeLength));
  }
  if (p.ident == "random") {
    if (p.args.size() != 4) throw Error(ErrorCode::kUnknownName, std::string(base));
    const int n = int_arg(p, 4, 0, 1, Gf2Word::kMaxLength);
    const int k = int_arg(p, 4, 1, 1, n);
    return random_systematic(n, k, p.args[2], p.args[3]);
  }
  if (p.ident == "paritygreedy") {
    if (p.args.size() != 5) throw Error(ErrorCode::kUnknownName, std::string(base));
    const int n = int_arg(p, 5, 0, 1, Gf2Word::kMaxLength);
    const int r = int_arg(p, 5, 1, 1, 20);
    const int d = int_arg(p, 5, 2, 2, n);
    auto code = parity_greedy(n, r, d, p.args[3], p.args[4]);
    if (!code) throw Error(ErrorCode::kInvalidArgument, "greedy pass failed: " + std::string(base));
    return *code;
  }
  return named_code(base);
}

GenMatrix apply(const GenMatrix& m, const Derivation& step) {
  switch (step.kind) {
    case Derivation::Kind::kShorten: return shorten(m, step.arg);
    case Derivation::Kind::kPuncture: return puncture(m, step.arg);
    case Derivation::Kind::kExtend: return extend_parity(m);
    case Derivation::Kind::kDrop: {
      if (step.arg < 0 || step.arg >= m.k()) throw Error(ErrorCode::kOutOfRange, "drop row");
      std::vector<Gf2Word> rows = m.rows();
      rows.erase(rows.begin() + step.arg);
      return GenMatrix(m.n(), std::move(rows));
    }
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown derivation");
}

GenMatrix replay(const ConstructionRecipe& recipe) {
  GenMatrix m = base_code(recipe.base);
  for (const auto& step : recipe.derivations) m = apply(m, step);
  return m;
}

bool check_recipe(const ConstructionRecipe& recipe) {
  const GenMatrix m = replay(recipe);
  if (m.n() != recipe.n || m.k() != recipe.k || !is_full_rank(m)) return false;
  const auto d = certified_distance(m);
  return d.has_value() && *d >= recipe.d;
}

std::string serialize(const ConstructionRecipe& recipe) {
  std::ostringstream os;
  os << "recipe " << recipe.name << '\n' << "base " << recipe.base << '\n';
  for (const auto& s : recipe.derivations) {
    switch (s.kind) {
      case Derivation::Kind::kShorten: os << "step shorten " << s.arg << '\n'; break;
      case Derivation::Kind::kPuncture: os << "step puncture " << s.arg << '\n'; break;
      case Derivation::Kind::kExtend: os << "step extend\n"; break;
      case Derivation::Kind::kDrop: os << "step drop " << s.arg << '\n'; break;
    }
  }
  os << "claimed " << recipe.n << ' ' << recipe.k << ' ' << recipe.d << '\n';
  return os.str();
}

ConstructionRecipe parse_recipe(std::string_view text) {
  ConstructionRecipe r;
  std::istringstream in{std::string(text)};
  std::string line;
  bool saw_base = false;
  bool saw_claim = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    if (key == "recipe") {
      ls >> r.name;
    } else if (key == "base") {
      ls >> r.base;
      saw_base = true;
    } else if (key == "step") {
      std::string op;
      ls >> op;
      Derivation s;
      if (op == "shorten") {
        s.kind = Derivation::Kind::kShorten;
      } else if (op == "puncture") {
        s.kind = Derivation::Kind::kPuncture;
      } else if (op == "extend") {
        s.kind = Derivation::Kind::kExtend;
      } else if (op == "drop") {
        s.kind = Derivation::Kind::kDrop;
      } else {
        throw Error(ErrorCode::kParse, "unknown step '" + op + "'");
      }
      if (s.kind != Derivation::Kind::kExtend && !(ls >> s.arg)) {
        throw Error(ErrorCode::kParse, "step '" + op + "' needs an argument");
      }
      r.derivations.push_back(s);
    } else if (key == "claimed") {
      if (!(ls >> r.n >> r.k >> r.d)) throw Error(ErrorCode::kParse, "bad claimed line");
      saw_claim = true;
    } else {
      throw Error(ErrorCode::kParse, "unknown recipe key '" + key + "'");
    }
  }
  if (!saw_base || !saw_claim) throw Error(ErrorCode::kParse, "recipe needs base and claimed lines");
  return r;
}

std::optional<int> certified_distance(const GenMatrix& m) {
  if (m.k() == 0) throw Error(ErrorCode::kEmptyCode, "code has dimension 0");
  require_full_rank(m);
  if (m.k() <= 26) return min_distance(m);
  if (m.n() > 64) return std::nullopt;
  // Test every word of weight w = 1, 2, ... for membership against the
  // reduced echelon basis; the first member found is a minimum-weight word.
  const GenMatrix rref = row_reduce(m);
  std::vector<int> pivots;
  std::vector<std::uint64_t> rows;
  for (const auto& r : rref.rows()) {
    pivots.push_back(r.first_set());
    rows.push_back(r.low_bits());
  }
  auto member = [&](std::uint64_t x) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if ((x >> pivots[i]) & 1U) x ^= rows[i];
    }
    return x == 0;
  };
  constexpr std::uint64_t kBudget = std::uint64_t{1} << 22;
  std::uint64_t checked = 0;
  const int n = m.n();
  const std::uint64_t top = n == 64 ? 0 : std::uint64_t{1} << n;
  for (int w = 1; w <= n; ++w) {
    // Gosper's hack over all n-bit words of weight w.
    std::uint64_t x = w == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << w) - 1;
    while (true) {
      if (member(x)) return w;
      if (++checked > kBudget) return std::nullopt;
      const std::uint64_t c = x & (~x + 1);
      const std::uint64_t r = x + c;
      if (r == 0 || (top != 0 && r >= top)) break;
      x = (((r ^ x) >> 2) / c) | r;
      if (top != 0 && x >= top) break;
    }
  }
  return std::nullopt;
}

// -- lower-bound search -------------------------------------------------------------

namespace {

constexpr std::uint64_t kGreedyWork = std::uint64_t{1} << 22;

// (distance, -count of minimum-weight words); larger is better.
std::pair<int, std::int64_t> score(const GenMatrix& m) {
  const CodeSummary s = weight_distribution(m);
  const int d = s.min_distance.value_or(m.n() + 1);
  return {d, -static_cast<std::int64_t>(s.weight_distribution[static_cast<std::size_t>(d)])};
}

// Tries each option and keeps the best-scoring result (first wins ties). When
// the enumeration work is too large the first option is taken.
template <class Make>
std::optional<std::pair<int, GenMatrix>> pick_best(const std::vector<int>& options, int k_after,
                                                   int n_after, Make&& make) {
  if (options.empty()) return std::nullopt;
  const bool greedy =
      k_after >= 1 && k_after <= 26 &&
      (std::uint64_t{1} << k_after) * options.size() <= kGreedyWork;
  if (!greedy) return std::make_pair(options.front(), make(options.front()));
  std::optional<std::pair<int, GenMatrix>> best;
  std::pair<int, std::int64_t> best_score{-1, 0};
  for (int opt : options) {
    GenMatrix m = make(opt);
    if (m.k() != k_after || m.n() != n_after) continue;
    const auto sc = score(m);
    if (!best || sc > best_score) {
      best_score = sc;
      best = std::make_pair(opt, std::move(m));
    }
  }
  return best;
}

struct Chain {
  std::vector<Derivation> steps;
  GenMatrix matrix;
};

// Derives an [n, k] code from `base` by (extend) + shortenings + punctures +
// row drops, choosing coordinates greedily.
std::optional<Chain> derive(const GenMatrix& base, int n, int k) {
  Chain c{{}, base};
  if (c.matrix.n() == n - 1) {
    c.matrix = extend_parity(c.matrix);
    c.steps.push_back({Derivation::Kind::kExtend, 0});
  }
  const int len = c.matrix.n();
  const int dim = c.matrix.k();
  if (len < n || dim < k) return std::nullopt;
  const int shortens = std::min(dim - k, len - n);
  const int punctures = len - n - shortens;
  const int drops = dim - shortens - k;
  if (static_cast<int>(c.steps.size()) + shortens + punctures + drops > kMaxDerivationSteps) {
    return std::nullopt;
  }
  for (int s = 0; s < shortens; ++s) {
    std::vector<int> coords;
    for (int j = 0; j < c.matrix.n(); ++j) {
      if (!c.matrix.column(j).is_zero()) coords.push_back(j);
    }
    auto pick = pick_best(coords, c.matrix.k() - 1, c.matrix.n() - 1,
                          [&](int j) { return shorten(c.matrix, j); });
    if (!pick) return std::nullopt;
    c.steps.push_back({Derivation::Kind::kShorten, pick->first});
    c.matrix = std::move(pick->second);
  }
  for (int s = 0; s < punctures; ++s) {
    std::vector<int> coords(static_cast<std::size_t>(c.matrix.n()));
    for (int j = 0; j < c.matrix.n(); ++j) coords[static_cast<std::size_t>(j)] = j;
    auto pick = pick_best(coords, c.matrix.k(), c.matrix.n() - 1,
                          [&](int j) { return puncture(c.matrix, j); });
    if (!pick || pick->second.k() != c.matrix.k()) return std::nullopt;
    c.steps.push_back({Derivation::Kind::kPuncture, pick->first});
    c.matrix = std::move(pick->second);
  }
  for (int s = 0; s < drops; ++s) {
    std::vector<int> rows(static_cast<std::size_t>(c.matrix.k()));
    for (int i = 0; i < c.matrix.k(); ++i) rows[static_cast<std::size_t>(i)] = i;
    const Derivation probe{Derivation::Kind::kDrop, 0};
    auto pick = pick_best(rows, c.matrix.k() - 1, c.matrix.n(), [&](int i) {
      Derivation d = probe;
      d.arg = i;
      return apply(c.matrix, d);
    });
    if (!pick) return std::nullopt;
    c.steps.push_back({Derivation::Kind::kDrop, pick->first});
    c.matrix = std::move(pick->second);
  }
  if (c.matrix.n() != n || c.matrix.k() != k) return std::nullopt;
  return c;
}

std::string bklb_name(int n, int k) {
  return "bklb(" + std::to_string(n) + "," + std::to_string(k) + ")";
}

LowerBound fallback(int n, int k) {
  LowerBound lb;
  lb.recipe.name = bklb_name(n, k);
  lb.recipe.n = n;
  lb.recipe.k = k;
  if (k == n) {
    lb.recipe.base = "full(" + std::to_string(n) + ")";
  } else {
    // parity(k+1) padded by repeated extension: the extra columns are zero.
    lb.recipe.base = "parity(" + std::to_string(k + 1) + ")";
    for (int i = k + 1; i < n; ++i) lb.recipe.derivations.push_back({Derivation::Kind::kExtend, 0});
  }
  const auto d = certified_distance(replay(lb.recipe));
  lb.d = d.value_or(1);
  lb.recipe.d = lb.d;
  return lb;
}

std::vector<std::string> named_bases(int n, int k) {
  std::vector<std::string> out;
  auto consider = [&](const std::string& name, int len, int dim) {
    if (len >= n - 1 && dim >= k && len - n <= kMaxDerivationSteps) out.push_back(name);
  };
  consider("golay23", 23, 12);
  consider("golay24", 24, 12);
  for (int m = 1; m <= 8; ++m) consider("rm1(" + std::to_string(m) + ")", 1 << m, m + 1);
  for (int m = 2; m <= 8; ++m) {
    consider("hamming(" + std::to_string(m) + ")", (1 << m) - 1, (1 << m) - 1 - m);
  }
  for (int m = 2; m <= 7; ++m) {
    consider("ext_hamming(" + std::to_string(m) + ")", 1 << m, (1 << m) - 1 - m);
  }
  consider("repetition(" + std::to_string(n) + ")", n, 1);
  if (n >= 2) consider("parity(" + std::to_string(n) + ")", n, n - 1);
  return out;
}

}  // namespace

LowerBound best_known_lower_bound(int n, int k, const SearchOptions& options) {
  if (k < 1 || k > n || n > Gf2Word::kMaxLength) {
    throw Error(ErrorCode::kInvalidArgument,
                "need 1 <= k <= n <= 256, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  }
  const int upper = combined_upper_bound(n, k).combined;
  LowerBound best = fallback(n, k);
  if (best.d >= upper) return best;

  auto offer = [&](const std::string& base_name, const GenMatrix& base) {
    auto chain = derive(base, n, k);
    if (!chain) return;
    const auto d = certified_distance(chain->matrix);
    if (!d || *d <= best.d) return;
    best.d = *d;
    best.recipe.base = base_name;
    best.recipe.derivations = std::move(chain->steps);
    best.recipe.d = *d;
  };

  for (const auto& name : named_bases(n, k)) {
    offer(name, named_code(name));
    if (best.d >= upper) return best;
  }

  // Lexicodes, most ambitious distance first; the first hit at a distance is
  // kept since smaller targets cannot improve on it.
  for (int target = upper; target > best.d; --target) {
    for (int len = n - 1; len <= std::min(n + kMaxDerivationSteps, kMaxLexicodeLength); ++len) {
      if (len < 1 || target > len) continue;
      const std::string name =
          "lexicode(" + std::to_string(len) + "," + std::to_string(target) + ")";
      offer(name, lexicode(len, target));
      if (best.d >= target) break;
    }
    if (best.d >= target) break;
  }

  // Randomised parity-check greedy, reaching for each distance above the best.
  constexpr int kMaxGreedyRedundancy = 16;
  for (int target = upper; target > best.d; --target) {
    for (int len : {n, n - 1}) {
      const int r = len - k;
      const int want = len == n ? target : target - 1;
      if (len == n - 1 && target % 2 != 0) continue;
      if (r < 1 || r > kMaxGreedyRedundancy || want < 2 || want > len) continue;
      for (std::uint64_t a = 0; a < options.greedy_attempts && best.d < target; ++a) {
        auto code = parity_greedy(len, r, want, options.seed, a);
        if (!code) continue;
        offer("paritygreedy(" + std::to_string(len) + "," + std::to_string(r) + "," +
                  std::to_string(want) + "," + std::to_string(options.seed) + "," +
                  std::to_string(a) + ")",
              *code);
      }
      if (best.d >= target) break;
    }
    if (best.d >= target) break;
  }

  // Random systematic codes, one distance step at a time.
  constexpr int kMaxRandomDim = 12;
  while (best.d < upper && k <= kMaxRandomDim && n - k >= 1) {
    std::uint64_t index = 0;
    if (!random_search(n, k, best.d + 1, options.random_budget, options.seed, &index)) break;
    best.recipe.base = "random(" + std::to_string(n) + "," + std::to_string(k) + "," +
                       std::to_string(options.seed) + "," + std::to_string(index) + ")";
    best.recipe.derivations.clear();
    best.d = min_distance(replay(best.recipe));
    best.recipe.d = best.d;
  }
  return best;
}

}  // namespace z2cb
