#pragma once

#include <string>
#include <vector>

namespace qrm {

struct CodeTableRow {
  int m = 0;
  int r = 0;
  long n = 0;
  long k = 0;
  long d = 0;

  bool operator==(const CodeTableRow& other) const = default;
};

// Classical RM parameters (n, k, d) for 2 <= m <= max_m and every order
// 0 <= r <= m, ordered by m ascending then d ascending. max_m >= 2.
std::vector<CodeTableRow> classical_code_table(int max_m);

// Quantum [[n, k, d]] parameters for every self-dual-nested pair with
// 2 <= m <= max_m and r < m, same ordering. Rows with k = 0 are kept; they
// are valid degenerate codes.
std::vector<CodeTableRow> quantum_code_table(int max_m);

// CSV with header "m,r,n,k,d".
std::string table_to_csv(const std::vector<CodeTableRow>& rows);

// Markdown grid, one row per block length and one column per distance d >= 2,
// dimensions k in the cells; blank where no code exists.
std::string table_to_markdown(const std::vector<CodeTableRow>& rows);

}  // namespace qrm
