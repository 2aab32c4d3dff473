#pragma once

#include <optional>
#include <vector>

#include "gentuple/errors.hpp"
#include "gentuple/ints.hpp"

namespace gentuple {

// Invariant-factor presentation of a finitely generated abelian group:
// Z_{m1} x ... x Z_{mr} x Z^s with m1 | m2 | ... | mr, each mi >= 2.
struct AbelianForm {
  std::vector<Int> torsion;
  int free_rank = 0;

  int rank() const { return (int)torsion.size() + free_rank; }
  bool is_finite() const { return free_rank == 0; }
  Int order() const;  // finite only

  void validate() const;  // divisibility chain, mi >= 2, s >= 0

  friend bool operator==(const AbelianForm&, const AbelianForm&) = default;
};

// Dense arbitrary-precision integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Int& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  IntMatrix operator*(const IntMatrix& rhs) const;
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  void add_row(std::size_t dst, std::size_t src, const Int& factor);  // row dst += factor * row src
  void add_col(std::size_t dst, std::size_t src, const Int& factor);
  void negate_row(std::size_t i);
  void negate_col(std::size_t i);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

struct SmithDecomposition {
  IntMatrix u, d, v;  // u * a * v = d, u/v unimodular, d diagonal with d1 | d2 | ...
};

// Deterministic pivoting: smallest nonzero absolute value, ties row-major.
SmithDecomposition smith_normal_form(const IntMatrix& a);

// Count of 1 <= k <= m coprime to m, with phi(1) = 1.
Int euler_phi(const Int& m);

// Closed-form number of connected components of the Nielsen graph on
// generating n-tuples; nullopt means the vertex set is empty (n < rank).
//   n >= rank+1        -> 1
//   no torsion, n=rank -> 1
//   torsion, n=rank    -> 1 if m1 = 2, else phi(m1)/2
std::optional<Int> predicted_components(const AbelianForm& a, int n);

}  // namespace gentuple
