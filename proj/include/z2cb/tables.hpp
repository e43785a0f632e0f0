#pragma once

// Minimum-weight tables d(n, r) consumed by the lemma checks.
//
// File format: one row per line, fields `table n r d_threshold claimed_lo
// claimed_hi`, '#' starts a comment. For T3 rows, n is the ambient dimension
// and the tabulated value is d(n - 1, r).

#include <string>
#include <string_view>
#include <vector>

namespace z2cb {

enum class TableId { kT1, kT2, kT3, kT4 };

std::string_view to_string(TableId id);
/// Accepts "T1".."T4"; throws kParse otherwise.
TableId parse_table_id(std::string_view text);

struct TableEntry {
  TableId table = TableId::kT1;
  int n = 0;
  int r = 0;
  int d_threshold = 0;
  int claimed_lo = 0;
  int claimed_hi = 0;

  bool exact() const { return claimed_lo == claimed_hi; }
  /// Length of the code whose distance is tabulated.
  int code_length() const { return table == TableId::kT3 ? n - 1 : n; }

  friend bool operator==(const TableEntry&, const TableEntry&) = default;
};

/// 1 iff n is one of 3, 4, 7, 11, 12, 23.
int delta_J(int n);

/// Expected r and threshold columns for a row of the given table and n.
/// T3 rows keep their own r (3 or 4); T4 rows keep their own threshold.
int expected_r(const TableEntry& e);
int expected_threshold(const TableEntry& e);

std::vector<TableEntry> parse_tables(std::string_view text);
std::string serialize_tables(const std::vector<TableEntry>& entries);
/// Throws kIo if the file cannot be read.
std::vector<TableEntry> load_tables(const std::string& path);

/// $Z2CB_TABLE_PATH if set, else the data file shipped with the sources.
std::string default_table_path();
std::vector<TableEntry> load_default_tables();

}  // namespace z2cb
