#include "gentuple/abelian.hpp"

#include <algorithm>

namespace gentuple {

Int AbelianForm::order() const {
  if (!is_finite()) throw validation_error("abelian form is infinite");
  Int n = 1;
  for (const Int& m : torsion) n *= m;
  return n;
}

void AbelianForm::validate() const {
  if (free_rank < 0) throw validation_error("free rank must be >= 0");
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    if (torsion[i] < 2) throw validation_error("torsion coefficients must be >= 2");
    if (i > 0 && torsion[i] % torsion[i - 1] != 0)
      throw validation_error("torsion coefficients must form a divisibility chain");
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw validation_error("matrix dimension mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& aik = at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out.at(i, j) += aik * rhs.at(k, j);
    }
  return out;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::add_row(std::size_t dst, std::size_t src, const Int& factor) {
  for (std::size_t c = 0; c < cols_; ++c) at(dst, c) += factor * at(src, c);
}

void IntMatrix::add_col(std::size_t dst, std::size_t src, const Int& factor) {
  for (std::size_t r = 0; r < rows_; ++r) at(r, dst) += factor * at(r, src);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

void IntMatrix::negate_col(std::size_t i) {
  for (std::size_t r = 0; r < rows_; ++r) at(r, i) = -at(r, i);
}

namespace {

// Smallest nonzero |entry| in the trailing submatrix, row-major tie break.
bool find_pivot(const IntMatrix& d, std::size_t s, std::size_t& pr, std::size_t& pc) {
  bool found = false;
  Int best;
  for (std::size_t r = s; r < d.rows(); ++r)
    for (std::size_t c = s; c < d.cols(); ++c) {
      if (d.at(r, c) == 0) continue;
      Int v = abs_int(d.at(r, c));
      if (!found || v < best) {
        found = true;
        best = v;
        pr = r;
        pc = c;
      }
    }
  return found;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  SmithDecomposition s;
  s.u = IntMatrix::identity(a.rows());
  s.v = IntMatrix::identity(a.cols());
  s.d = a;
  IntMatrix& d = s.d;

  const std::size_t nmin = std::min(a.rows(), a.cols());
  for (std::size_t k = 0; k < nmin; ++k) {
    std::size_t pr = k, pc = k;
    if (!find_pivot(d, k, pr, pc)) break;  // trailing block is zero
    d.swap_rows(k, pr);
    s.u.swap_rows(k, pr);
    d.swap_cols(k, pc);
    s.v.swap_cols(k, pc);

    for (;;) {
      bool clean = true;
      for (std::size_t r = k + 1; r < d.rows(); ++r) {
        if (d.at(r, k) == 0) continue;
        Int q = nearest_quotient(d.at(r, k), d.at(k, k));
        if (q != 0) {
          d.add_row(r, k, -q);
          s.u.add_row(r, k, -q);
        }
        if (d.at(r, k) != 0) {
          // remainder smaller than pivot: promote it
          d.swap_rows(k, r);
          s.u.swap_rows(k, r);
          clean = false;
          break;
        }
      }
      if (!clean) continue;
      for (std::size_t c = k + 1; c < d.cols(); ++c) {
        if (d.at(k, c) == 0) continue;
        Int q = nearest_quotient(d.at(k, c), d.at(k, k));
        if (q != 0) {
          d.add_col(c, k, -q);
          s.v.add_col(c, k, -q);
        }
        if (d.at(k, c) != 0) {
          d.swap_cols(k, c);
          s.v.swap_cols(k, c);
          clean = false;
          break;
        }
      }
      if (clean) break;
    }

    if (d.at(k, k) < 0) {
      d.negate_row(k);
      s.u.negate_row(k);
    }
  }

  // Enforce the divisibility chain d1 | d2 | ...: fold any offender into the
  // earlier pivot and rediagonalise the 2x2 block.
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t k = 0; k + 1 < nmin; ++k) {
      const Int& cur = d.at(k, k);
      const Int& nxt = d.at(k + 1, k + 1);
      if (cur == 0 && nxt != 0) {  // zero pivots sink to the end
        d.swap_rows(k, k + 1);
        s.u.swap_rows(k, k + 1);
        d.swap_cols(k, k + 1);
        s.v.swap_cols(k, k + 1);
        changed = true;
        continue;
      }
      if (cur == 0 || nxt % cur == 0) continue;
      changed = true;
      // [cur 0; 0 nxt] -> gcd/lcm via one column add then a local Smith pass
      d.add_col(k, k + 1, 1);
      s.v.add_col(k, k + 1, 1);
      for (;;) {
        if (d.at(k + 1, k) != 0) {
          Int q = nearest_quotient(d.at(k + 1, k), d.at(k, k));
          if (q != 0) {
            d.add_row(k + 1, k, -q);
            s.u.add_row(k + 1, k, -q);
          }
          if (d.at(k + 1, k) != 0) {
            d.swap_rows(k, k + 1);
            s.u.swap_rows(k, k + 1);
            continue;
          }
        }
        if (d.at(k, k + 1) != 0) {
          Int q = nearest_quotient(d.at(k, k + 1), d.at(k, k));
          if (q != 0) {
            d.add_col(k + 1, k, -q);
            s.v.add_col(k + 1, k, -q);
          }
          if (d.at(k, k + 1) != 0) {
            d.swap_cols(k, k + 1);
            s.v.swap_cols(k, k + 1);
            continue;
          }
        }
        break;
      }
      if (d.at(k, k) < 0) {
        d.negate_row(k);
        s.u.negate_row(k);
      }
      if (d.at(k + 1, k + 1) < 0) {
        d.negate_row(k + 1);
        s.u.negate_row(k + 1);
      }
    }
  }
  return s;
}

Int euler_phi(const Int& m) {
  if (m < 1) throw validation_error("euler_phi requires m >= 1");
  Int n = m, result = m;
  for (Int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::optional<Int> predicted_components(const AbelianForm& a, int n) {
  a.validate();
  const int rank = a.rank();
  if (n < rank) return std::nullopt;  // no generating n-tuples at all
  if (n >= rank + 1) return Int(1);
  if (a.torsion.empty()) return Int(1);  // free of rank n
  const Int& m1 = a.torsion.front();
  if (m1 == 2) return Int(1);
  return euler_phi(m1) / 2;
}

}  // namespace gentuple
