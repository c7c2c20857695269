#include "qrm/tables.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "qrm/css.hpp"
#include "qrm/reed_muller.hpp"

namespace qrm {

namespace {

void check_max_m(int max_m) {
  if (max_m < 2) throw DomainError("table needs max_m >= 2");
}

}  // namespace

std::vector<CodeTableRow> classical_code_table(int max_m) {
  check_max_m(max_m);
  std::vector<CodeTableRow> rows;
  for (int m = 2; m <= max_m; ++m)
    for (int r = m; r >= 0; --r)
      rows.push_back({m, r, rm_block_length(m), rm_dimension(r, m), rm_distance(r, m)});
  return rows;
}

std::vector<CodeTableRow> quantum_code_table(int max_m) {
  check_max_m(max_m);
  std::vector<CodeTableRow> rows;
  for (int m = 2; m <= max_m; ++m) {
    for (int r = m - 1; 2 * r >= m - 1; --r) {
      CssCode code = css_from_rm(r, m);
      rows.push_back({m, r, code.n, code.k, code.d});
    }
  }
  return rows;
}

std::string table_to_csv(const std::vector<CodeTableRow>& rows) {
  std::ostringstream out;
  out << "m,r,n,k,d\n";
  for (const CodeTableRow& row : rows)
    out << row.m << ',' << row.r << ',' << row.n << ',' << row.k << ',' << row.d << '\n';
  return out.str();
}

std::string table_to_markdown(const std::vector<CodeTableRow>& rows) {
  // Distances that actually occur, excluding the trivial d = 1 column.
  std::set<long> dists;
  std::set<long> lengths;
  std::map<std::pair<long, long>, long> cell;  // (n, d) -> k
  for (const CodeTableRow& row : rows) {
    if (row.d < 2) continue;
    dists.insert(row.d);
    lengths.insert(row.n);
    cell[{row.n, row.d}] = row.k;
  }

  std::ostringstream out;
  out << "| n \\ d |";
  for (long d : dists) out << ' ' << d << " |";
  out << '\n';
  out << "| --- |";
  for (std::size_t i = 0; i < dists.size(); ++i) out << " --- |";
  out << '\n';
  for (long n : lengths) {
    out << "| " << n << " |";
    for (long d : dists) {
      auto it = cell.find({n, d});
      if (it == cell.end())
        out << "  |";
      else
        out << ' ' << it->second << " |";
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace qrm
