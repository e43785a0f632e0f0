#include "z2cb/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "z2cb/bounds.hpp"
#include "z2cb/codelib.hpp"
#include "z2cb/isotropy.hpp"
#include "z2cb/verifier.hpp"

namespace z2cb::cli {

namespace {

struct Context {
  std::ostream* out = nullptr;
  bool timing = false;
  bool failed = false;

  void emit(VerificationReport rep) {
    if (!timing) rep.runtime_ms = 0;
    if (rep.verdict == Verdict::kFail) failed = true;
    *out << to_json_line(rep) << '\n';
  }
};

GenMatrix read_input(const std::string& path) {
  if (path == "-") return read_matrix(std::cin);
  return load_matrix(path);
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw CLI::ValidationError("--scan", "expected LO..HI");
  try {
    const int lo = std::stoi(text.substr(0, dots));
    const int hi = std::stoi(text.substr(dots + 2));
    if (lo > hi) throw CLI::ValidationError("--scan", "LO must not exceed HI");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw CLI::ValidationError("--scan", "expected integers LO..HI");
  }
}

int default_workers() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Binary linear codes and the code-theoretic bounds behind Z_2-torus symmetry ranks",
               "z2cb"};
  app.require_subcommand(1);

  Context ctx;
  std::string output_path;
  app.add_flag("--timing", ctx.timing, "Report measured runtime_ms instead of 0");
  app.add_option("-o,--output", output_path, "Write results to this file instead of stdout");

  std::function<void()> action;

  // -- code operations --------------------------------------------------------
  std::string input = "-";
  int coord = 0;

  auto* mindist = app.add_subcommand("mindist", "Print n k d of a generator matrix");
  mindist->add_option("matrix", input, "Matrix file ('-' for stdin)");
  mindist->callback([&] {
    action = [&] {
      const GenMatrix m = read_input(input);
      *ctx.out << m.n() << ' ' << m.k() << ' ' << min_distance(m) << '\n';
    };
  });

  auto* wdist = app.add_subcommand("wdist", "Print n k and the weight distribution A_0..A_n");
  wdist->add_option("matrix", input, "Matrix file ('-' for stdin)");
  wdist->callback([&] {
    action = [&] {
      const CodeSummary s = weight_distribution(read_input(input));
      *ctx.out << s.n << ' ' << s.k << '\n';
      for (std::size_t i = 0; i < s.weight_distribution.size(); ++i) {
        *ctx.out << (i ? " " : "") << s.weight_distribution[i];
      }
      *ctx.out << '\n';
    };
  });

  auto* shorten_cmd = app.add_subcommand("shorten", "Shorten at a coordinate");
  shorten_cmd->add_option("matrix", input, "Matrix file ('-' for stdin)");
  shorten_cmd->add_option("-c,--coord", coord, "Coordinate (0-based)")->required();
  shorten_cmd->callback([&] {
    action = [&] { *ctx.out << format_matrix(shorten(read_input(input), coord)); };
  });

  auto* puncture_cmd = app.add_subcommand("puncture", "Puncture at a coordinate");
  puncture_cmd->add_option("matrix", input, "Matrix file ('-' for stdin)");
  puncture_cmd->add_option("-c,--coord", coord, "Coordinate (0-based)")->required();
  puncture_cmd->callback([&] {
    action = [&] { *ctx.out << format_matrix(puncture(read_input(input), coord)); };
  });

  int bn = 0;
  int bk = 0;
  auto* bound_cmd = app.add_subcommand("bound", "Upper bounds on d for [n, k] codes");
  bound_cmd->add_option("--n", bn, "Length")->required();
  bound_cmd->add_option("--k", bk, "Dimension")->required();
  bound_cmd->callback([&] {
    action = [&] {
      const BoundReport r = combined_upper_bound(bn, bk);
      const nlohmann::json j = {{"n", r.n},
                                {"k", r.k},
                                {"per_bound", r.per_bound},
                                {"combined", r.combined},
                                {"binding", r.binding}};
      *ctx.out << j.dump() << '\n';
    };
  });

  std::string name;
  auto* construct_cmd = app.add_subcommand(
      "construct", "Print a named code, lexicode(n,d), random(n,k,seed,index) or a recipe file");
  auto* name_opt = construct_cmd->add_option("--name", name, "Code name");
  std::string recipe_path;
  auto* recipe_opt = construct_cmd->add_option("--recipe", recipe_path, "Recipe file to replay");
  name_opt->excludes(recipe_opt);
  construct_cmd->callback([&] {
    if (name.empty() && recipe_path.empty()) {
      throw CLI::RequiredError("--name or --recipe");
    }
    action = [&] {
      if (!recipe_path.empty()) {
        std::ifstream in(recipe_path);
        if (!in) throw Error(ErrorCode::kIo, "cannot open " + recipe_path);
        std::stringstream buf;
        buf << in.rdbuf();
        const auto recipe = parse_recipe(buf.str());
        if (!check_recipe(recipe)) {
          throw Error(ErrorCode::kInvalidArgument, "recipe does not reach its claimed parameters");
        }
        *ctx.out << format_matrix(replay(recipe));
      } else {
        *ctx.out << format_matrix(base_code(name));
      }
    };
  });

  int sn = 0;
  int sk = 0;
  std::uint64_t seed = kDefaultSeed;
  auto* search_cmd =
      app.add_subcommand("search", "Best constructive lower bound on d for [n, k], as a recipe");
  search_cmd->add_option("--n", sn, "Length")->required();
  search_cmd->add_option("--k", sk, "Dimension")->required();
  search_cmd->add_option("--seed", seed, "Search seed");
  search_cmd->callback([&] {
    action = [&] {
      SearchOptions opts;
      opts.seed = seed;
      *ctx.out << serialize(best_known_lower_bound(sn, sk, opts).recipe);
    };
  });

  auto* analyze_cmd = app.add_subcommand("analyze-rep", "Analyze an isotropy representation");
  analyze_cmd->add_option("matrix", input, "Matrix file ('-' for stdin)");
  analyze_cmd->callback([&] {
    action = [&] { *ctx.out << to_json(analyze(Representation{read_input(input)})).dump() << '\n'; };
  });

  // -- verify -----------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "Emit verification reports as JSON lines");
  verify->require_subcommand(1);

  int part = 0;
  int vn = 0;
  std::string scan;
  auto* l12 = verify->add_subcommand("lemma12", "Small-codimension involution checks");
  l12->add_option("--part", part, "1, 2 or 3")->required()->check(CLI::Range(1, 3));
  auto* n_opt = l12->add_option("--n", vn, "Single dimension");
  auto* scan_opt = l12->add_option("--scan", scan, "Range LO..HI");
  n_opt->excludes(scan_opt);
  l12->callback([&] {
    if (part != 3 && !*n_opt && !*scan_opt) throw CLI::RequiredError("--n or --scan");
    const auto range = *scan_opt ? parse_range(scan) : std::pair{vn, vn};
    action = [&, range] {
      if (part == 3) {
        ctx.emit(verify_lemma12_part3());
        return;
      }
      const auto tables = load_default_tables();
      for (int n = range.first; n <= range.second; ++n) {
        ctx.emit(part == 1 ? verify_lemma12_part1(n, tables) : verify_lemma12_part2(n, tables));
      }
    };
  });

  bool exhaustive = false;
  std::uint64_t sample = 1'000'000;
  std::uint64_t vseed = 1;
  int workers = default_workers();
  std::string matrix_path;
  std::string iota1_text;
  auto* l14 = verify->add_subcommand("lemma14", "Second-involution checks");
  l14->add_option("--part", part, "1 or 2")->required()->check(CLI::Range(1, 2));
  auto* ex_opt = l14->add_flag("--exhaustive", exhaustive, "Scan all 2^30 systematic [11,5] codes");
  auto* sample_opt = l14->add_option("--sample", sample, "Number of sampled codes");
  l14->add_option("--seed", vseed, "Sample seed");
  l14->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
  l14->add_option("--matrix", matrix_path, "Check one code instead of the table or scan");
  l14->add_option("--iota1", iota1_text, "Part 1: the given involution image (default: row 0)");
  ex_opt->excludes(sample_opt);
  l14->callback([&] {
    action = [&] {
      if (!matrix_path.empty()) {
        const GenMatrix m = read_input(matrix_path);
        if (part == 1) {
          const Gf2Word iota1 = iota1_text.empty() ? m.row(0) : Gf2Word::parse(iota1_text);
          ctx.emit(verify_lemma14_part1(m, iota1));
        } else {
          ctx.emit(verify_lemma14_part2(m));
        }
      } else if (part == 1) {
        ctx.emit(verify_lemma14_part1_table(load_default_tables()));
      } else {
        const ScanMode mode = exhaustive ? ScanMode::exhaustive() : ScanMode::sample(sample, vseed);
        ctx.emit(scan_lemma14_part2(mode, workers));
      }
    };
  });

  auto* remark = verify->add_subcommand("remark-matrix", "Check the 5 x 11 remark example");
  remark->callback([&] {
    action = [&] {
      for (auto& rep : verify_remark_matrix()) ctx.emit(std::move(rep));
    };
  });

  std::string table;
  auto* tables_cmd = verify->add_subcommand("tables", "Bracket-check the minimum-weight tables");
  tables_cmd->add_option("--table", table, "T1, T2, T3 or T4 (default: all)")
      ->check(CLI::IsMember({"T1", "T2", "T3", "T4"}));
  tables_cmd->callback([&] {
    action = [&] {
      std::optional<TableId> which;
      if (!table.empty()) which = parse_table_id(table);
      for (auto& rep : verify_tables(load_default_tables(), which)) ctx.emit(std::move(rep));
    };
  });

  auto* short_cmd = verify->add_subcommand(
      "shortening", "d(n,r) <= d(n-1,r-1): table sweep, or one code with --matrix");
  std::string short_matrix;
  short_cmd->add_option("--matrix", short_matrix, "Code to shorten");
  short_cmd->callback([&] {
    action = [&] {
      if (short_matrix.empty()) {
        ctx.emit(verify_shortening_table_sweep(load_default_tables()));
      } else {
        ctx.emit(verify_shortening(read_input(short_matrix)));
      }
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    // Help requests exit 0; every other parse error is a usage error.
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  std::ofstream file;
  ctx.out = &out;
  if (!output_path.empty()) {
    file.open(output_path);
    if (!file) {
      err << "error: cannot write " << output_path << '\n';
      return kExitUsage;
    }
    ctx.out = &file;
  }

  try {
    if (action) action();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  ctx.out->flush();
  return ctx.failed ? kExitFail : kExitOk;
}

}  // namespace z2cb::cli
