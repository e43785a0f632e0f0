#include "z2cb/isotropy.hpp"

#include <algorithm>
#include <map>

namespace z2cb {

namespace {

void require_effective(const Representation& rep) {
  if (rep.matrix.k() == 0) throw Error(ErrorCode::kNotEffective, "trivial group");
  if (!is_full_rank(rep.matrix)) {
    throw Error(ErrorCode::kNotEffective, "rho is not injective (rank " +
                                              std::to_string(rank(rep.matrix)) + " < r = " +
                                              std::to_string(rep.r()) + ")");
  }
}

}  // namespace

std::vector<Gf2Word> codewords_of_weight(const GenMatrix& m, int weight) {
  std::vector<Gf2Word> out;
  for_each_codeword(m, [&](const Gf2Word& c) {
    if (!c.is_zero() && c.weight() == weight) out.push_back(c);
  });
  std::sort(out.begin(), out.end());
  return out;
}

RepAnalysis analyze(const Representation& rep) {
  require_effective(rep);
  RepAnalysis a;
  a.r = rep.r();
  a.n = rep.n();
  // Everything is read off the reduced echelon basis, which depends only on
  // the image of rho.
  const GenMatrix reduced = row_reduce(rep.matrix);
  a.witness = min_weight_codeword(reduced);
  a.min_codim = a.witness.weight();

  std::map<Gf2Word, int> counts;
  for (int j = 0; j < rep.n(); ++j) {
    Gf2Word col = reduced.column(j);
    if (!col.is_zero()) ++counts[col];
  }
  a.distinct_characters = static_cast<int>(counts.size());
  std::vector<Gf2Word> distinct;
  for (const auto& [col, mult] : counts) {
    a.character_multiplicities.push_back({col, mult});
    distinct.push_back(col);
  }
  // diag(eps_1 I_m1, ..., eps_r I_mr) up to basis change: exactly r distinct
  // characters forming a basis of the character group.
  a.minimal_form = a.distinct_characters == a.r &&
                   rank(GenMatrix(a.r, std::move(distinct))) == a.r;
  return a;
}

std::optional<Gf2Word> find_low_weight_involution(const Representation& rep, int threshold) {
  require_effective(rep);
  Gf2Word w = min_weight_codeword(row_reduce(rep.matrix));
  if (w.weight() > threshold) return std::nullopt;
  return w;
}

std::optional<std::pair<Gf2Word, Gf2Word>> find_weight4_pair(const Representation& rep) {
  require_effective(rep);
  const auto words = codewords_of_weight(rep.matrix, 4);
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      if (words[i].overlap(words[j]) > 0) return std::make_pair(words[i], words[j]);
    }
  }
  return std::nullopt;
}

nlohmann::json to_json(const RepAnalysis& a) {
  nlohmann::json mult = nlohmann::json::array();
  for (const auto& c : a.character_multiplicities) {
    mult.push_back({{"column", c.column.to_string()}, {"multiplicity", c.multiplicity}});
  }
  return {
      {"r", a.r},
      {"n", a.n},
      {"min_codim", a.min_codim},
      {"witness", a.witness.to_string()},
      {"distinct_characters", a.distinct_characters},
      {"character_multiplicities", mult},
      {"minimal_form", a.minimal_form},
  };
}

}  // namespace z2cb
