#pragma once

// Dense integer matrices and exact lattice algorithms (Hermite and Smith
// normal forms, integer kernels). All arithmetic is checked: overflow of the
// 64-bit entries raises std::overflow_error instead of wrapping.

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace fgcert {

using IntVector = std::vector<std::int64_t>;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_columns(const std::vector<IntVector>& columns, std::size_t rows);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector row(std::size_t r) const;
  IntVector column(std::size_t c) const;
  IntMatrix transpose() const;

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntVector operator*(const IntMatrix& a, const IntVector& v);
IntMatrix scaled(const IntMatrix& a, std::int64_t k);

/// "[[1,2],[0,1]]"
std::string to_string(const IntMatrix& m);
std::string to_string(const IntVector& v);

namespace checked {
std::int64_t add(std::int64_t a, std::int64_t b);
std::int64_t sub(std::int64_t a, std::int64_t b);
std::int64_t mul(std::int64_t a, std::int64_t b);
}  // namespace checked

/// Row-style Hermite normal form of the lattice spanned by the rows of `m`:
/// zero rows are dropped, pivots are positive and strictly move right, and
/// entries above each pivot lie in [0, pivot).
IntMatrix hermite_normal_form(const IntMatrix& m);

/// Basis (as rows) of {v in Z^cols : m v = 0}. The result is always saturated.
IntMatrix integer_kernel(const IntMatrix& m);

/// Nonzero elementary divisors d1 | d2 | ... of `m`.
IntVector smith_invariants(const IntMatrix& m);

/// A full-rank sublattice of Z^n with its basis stored as rows in Hermite
/// normal form.
class Lattice {
 public:
  Lattice(std::size_t ambient_dim, const IntMatrix& generators);

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  std::size_t rank() const noexcept { return basis_.rows(); }
  const IntMatrix& basis() const noexcept { return basis_; }
  IntVector basis_vector(std::size_t i) const { return basis_.row(i); }

  /// Integer coordinates of v in the stored basis, if v lies in the lattice.
  std::optional<IntVector> coordinates(const IntVector& v) const;
  bool contains(const IntVector& v) const { return coordinates(v).has_value(); }

  /// True when the lattice equals its rational span intersected with Z^n.
  bool is_saturated() const;

  bool operator==(const Lattice&) const = default;

 private:
  std::size_t ambient_dim_;
  IntMatrix basis_;
  std::vector<std::size_t> pivots_;
};

std::string to_string(const Lattice& l);

}  // namespace fgcert
