#include "z2cb/tables.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "z2cb/error.hpp"

#ifndef Z2CB_DATA_DIR
#define Z2CB_DATA_DIR "data"
#endif

namespace z2cb {

std::string_view to_string(TableId id) {
  switch (id) {
    case TableId::kT1: return "T1";
    case TableId::kT2: return "T2";
    case TableId::kT3: return "T3";
    case TableId::kT4: return "T4";
  }
  return "?";
}

TableId parse_table_id(std::string_view text) {
  if (text == "T1") return TableId::kT1;
  if (text == "T2") return TableId::kT2;
  if (text == "T3") return TableId::kT3;
  if (text == "T4") return TableId::kT4;
  throw Error(ErrorCode::kParse, "unknown table id '" + std::string(text) + "'");
}

int delta_J(int n) {
  switch (n) {
    case 3: case 4: case 7: case 11: case 12: case 23: return 1;
    default: return 0;
  }
}

int expected_r(const TableEntry& e) {
  switch (e.table) {
    case TableId::kT1: return (e.n + 2) / 2 + delta_J(e.n);
    case TableId::kT2: return (e.n + 10) / 4;
    case TableId::kT3: return e.r;
    case TableId::kT4:
      if (e.n == 4) return 3;
      if (e.n == 12) return 7;
      return e.r;
  }
  return e.r;
}

int expected_threshold(const TableEntry& e) {
  switch (e.table) {
    case TableId::kT1: return (e.n + 3) / 4;
    case TableId::kT2:
    case TableId::kT3: return (e.n - 1) / 2;
    case TableId::kT4:
      if (e.n == 4) return 2;
      if (e.n == 12) return 4;
      return e.d_threshold;
  }
  return e.d_threshold;
}

std::vector<TableEntry> parse_tables(std::string_view text) {
  std::vector<TableEntry> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string id;
    if (!(fields >> id)) continue;
    TableEntry e;
    e.table = parse_table_id(id);
    std::string extra;
    if (!(fields >> e.n >> e.r >> e.d_threshold >> e.claimed_lo >> e.claimed_hi) ||
        (fields >> extra)) {
      throw Error(ErrorCode::kParse, "table line " + std::to_string(line_no) +
                                         ": expected 'table n r d_threshold lo hi'");
    }
    if (e.n < 1 || e.r < 1 || e.claimed_lo < 0 || e.claimed_lo > e.claimed_hi) {
      throw Error(ErrorCode::kParse, "table line " + std::to_string(line_no) + ": bad values");
    }
    out.push_back(e);
  }
  return out;
}

std::string serialize_tables(const std::vector<TableEntry>& entries) {
  std::ostringstream out;
  for (const auto& e : entries) {
    out << to_string(e.table) << ' ' << e.n << ' ' << e.r << ' ' << e.d_threshold << ' '
        << e.claimed_lo << ' ' << e.claimed_hi << '\n';
  }
  return out.str();
}

std::vector<TableEntry> load_tables(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open table file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_tables(buf.str());
}

std::string default_table_path() {
  if (const char* env = std::getenv("Z2CB_TABLE_PATH"); env != nullptr && *env != '\0') {
    return env;
  }
  return std::string(Z2CB_DATA_DIR) + "/appendix_tables.txt";
}

std::vector<TableEntry> load_default_tables() { return load_tables(default_table_path()); }

}  // namespace z2cb
