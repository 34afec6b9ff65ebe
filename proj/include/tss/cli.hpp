#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "tss/constructions.hpp"

namespace tss {

enum class RowStatus { exact, upper_bound, gap_one, fallback, failed };
std::string to_string(RowStatus s);

struct TableRow {
  std::size_t m = 0;
  std::size_t n = 0;
  TheoremCase theorem_case = TheoremCase::fallback;
  std::int64_t phi = 0;   // closed form for the case; the generic cap for fallback rows
  std::int64_t size = 0;  // construction size, 0 when the build failed
  std::int64_t lower = 0;
  RowStatus status = RowStatus::failed;
  std::string note;  // failure detail
};

struct TableOptions {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // explicit (m,n); the ranges are ignored when set
  std::size_t m_min = 3, m_max = 0;  // a zero maximum runs up to the cap
  std::size_t n_min = 2, n_max = 0;
  std::size_t cap = 900;       // skip pairs with mn above this
  bool dispatch_only = false;  // one row per pair instead of one per applicable theorem
  unsigned threads = 0;
};

/// Rows in (m, n, preference) order, independent of the thread count.
std::vector<TableRow> build_table(const TableOptions& options);

std::string table_csv_header();
std::string to_csv(const TableRow& row);

/// Entry point behind the `tss` executable. args excludes the program name.
/// Exit codes: 0 ok, 1 refuted / not influencing / failed rows, 2 usage or
/// input error, 3 inconclusive.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace tss
