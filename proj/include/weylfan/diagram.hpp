#pragma once

#include <string>
#include <vector>

#include "weylfan/weyl.hpp"

namespace weylfan {

// A Young diagram inside the n x n square, given by weakly decreasing row
// lengths.  An empty row list is the distinguished zero diagram.  For type D
// every row of full length n carries a '+' or '-' label (the parity of the
// corresponding full-size subset); `labels` is empty otherwise.
struct YoungDiagram {
  std::vector<int> rows;
  std::string labels;

  bool empty() const { return rows.empty(); }
  int row_count() const { return static_cast<int>(rows.size()); }
  // rows of maximal length n (the m of the type C/D formulas)
  int full_rows(int n) const;
  int plus_labels() const;
  int minus_labels() const;

  friend bool operator==(const YoungDiagram& a, const YoungDiagram& b) {
    return a.rows == b.rows && a.labels == b.labels;
  }
};

YoungDiagram make_diagram(std::vector<int> rows, std::string labels = "");

// Lower-right corner data.  For the r-th corner at row i_r:
//   a_r = i_r - i_{r-1} - 1, b_r = lambda_{i_r} - lambda_{i_{r+1}} - 1,
//   c_r = lambda_{i_r} + i_r - n - 1,
// with i_0 = 0 and lambda beyond the last row read as 0.
struct Corner {
  int i;
  int a;
  int b;
  int c;
};

std::vector<Corner> corner_data(const YoungDiagram& lambda);

// binomial(x, y) with the convention that it vanishes unless 0 <= y <= x
long long binomial(long long x, long long y);

// The intersection-number functions.  Each expects the zero diagram or a
// diagram with exactly n rows inside the n x n square (n = row count for
// I_A, passed explicitly for the others; I_G2 fixes n = 2).
long long I_A(const YoungDiagram& lambda);
long long I_B(const YoungDiagram& lambda, int n);
long long I_C(const YoungDiagram& lambda, int n);
long long I_D(const YoungDiagram& lambda, int n);
long long I_G2(const YoungDiagram& lambda);

// true when every corner satisfies 0 <= c_r <= b_r, i.e. every step of the
// corner zigzag crosses the shifted anti-diagonal; false forces I_A = 0.
bool vanishing_predicate(const YoungDiagram& lambda);

// The diagram of the multiset D(u) ⊔ D(v) ⊔ A(w): the sorted cardinalities
// when d(u) + d(v) = d(w) and the multiset is a nested chain (type D: a
// subchain of a basic chain), the zero diagram otherwise.  Type D diagrams
// come back with their parity labels.
YoungDiagram build_lambda(const WeylElement& u, const WeylElement& v,
                          const WeylElement& w);

// "[4,4,1,1]" or "[5,5,5,1,1]+++"; "[]" for the zero diagram.
std::string format_diagram(const YoungDiagram& lambda);

}  // namespace weylfan
