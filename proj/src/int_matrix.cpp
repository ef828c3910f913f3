#include "fgcert/int_matrix.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace fgcert {

namespace checked {

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
  return r;
}

std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in subtraction");
  return r;
}

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
  return r;
}

}  // namespace checked

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& columns, std::size_t rows) {
  IntMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix dimension mismatch in product");
  IntMatrix m(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        m(i, j) = checked::add(m(i, j), checked::mul(aik, b(k, j)));
    }
  return m;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix dimension mismatch");
  IntMatrix m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = checked::add(a(i, j), b(i, j));
  return m;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) { return a + scaled(b, -1); }

IntVector operator*(const IntMatrix& a, const IntVector& v) {
  if (a.cols() != v.size()) throw std::invalid_argument("matrix-vector dimension mismatch");
  IntVector out(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) out[i] = checked::add(out[i], checked::mul(a(i, k), v[k]));
  return out;
}

IntMatrix scaled(const IntMatrix& a, std::int64_t k) {
  IntMatrix m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = checked::mul(a(i, j), k);
  return m;
}

std::string to_string(const IntVector& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s + "]";
}

std::string to_string(const IntMatrix& m) {
  std::string s = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) s += ',';
    s += to_string(m.row(r));
  }
  return s + "]";
}

// --- normal forms -------------------------------------------------------------

namespace {

using Rows = std::vector<IntVector>;

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// rows[dst] -= q * rows[src], applied to the paired `companion` rows as well.
void row_axpy(Rows& rows, std::size_t dst, std::size_t src, std::int64_t q, Rows* companion) {
  if (q == 0) return;
  for (std::size_t c = 0; c < rows[dst].size(); ++c)
    rows[dst][c] = checked::sub(rows[dst][c], checked::mul(q, rows[src][c]));
  if (companion) {
    auto& cm = *companion;
    for (std::size_t c = 0; c < cm[dst].size(); ++c)
      cm[dst][c] = checked::sub(cm[dst][c], checked::mul(q, cm[src][c]));
  }
}

void row_negate(Rows& rows, std::size_t r, Rows* companion) {
  for (auto& x : rows[r]) x = checked::mul(x, -1);
  if (companion)
    for (auto& x : (*companion)[r]) x = checked::mul(x, -1);
}

void row_swap(Rows& rows, std::size_t a, std::size_t b, Rows* companion) {
  std::swap(rows[a], rows[b]);
  if (companion) std::swap((*companion)[a], (*companion)[b]);
}

// Integer row echelon form in place by unimodular row operations (mirrored
// onto `companion` when given). Returns the number of nonzero rows; those rows
// come first, in Hermite normal form.
std::size_t echelonize(Rows& rows, std::size_t cols, Rows* companion) {
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows.size(); ++col) {
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t r = pivot_row; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        if (best == rows.size() || std::llabs(rows[r][col]) < std::llabs(rows[best][col])) best = r;
      }
      if (best == rows.size()) break;
      row_swap(rows, pivot_row, best, companion);
      bool done = true;
      for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        row_axpy(rows, r, pivot_row, rows[r][col] / rows[pivot_row][col], companion);
        if (rows[r][col] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[pivot_row][col] == 0) continue;
    if (rows[pivot_row][col] < 0) row_negate(rows, pivot_row, companion);
    const auto p = rows[pivot_row][col];
    for (std::size_t r = 0; r < pivot_row; ++r) row_axpy(rows, r, pivot_row, floor_div(rows[r][col], p), companion);
    ++pivot_row;
  }
  return pivot_row;
}

Rows to_rows(const IntMatrix& m) {
  Rows rows(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows[r] = m.row(r);
  return rows;
}

}  // namespace

IntMatrix hermite_normal_form(const IntMatrix& m) {
  Rows rows = to_rows(m);
  const std::size_t rank = echelonize(rows, m.cols(), nullptr);
  rows.resize(rank);
  return IntMatrix::from_rows(rows, m.cols());
}

IntMatrix integer_kernel(const IntMatrix& m) {
  // Row-reduce m^T while tracking the unimodular transform U; rows of U whose
  // image vanishes span the kernel, and unimodularity makes them a basis.
  Rows t = to_rows(m.transpose());
  Rows u = to_rows(IntMatrix::identity(m.cols()));
  const std::size_t rank = echelonize(t, m.rows(), &u);
  Rows kernel(u.begin() + static_cast<std::ptrdiff_t>(rank), u.end());
  return hermite_normal_form(IntMatrix::from_rows(kernel, m.cols()));
}

IntVector smith_invariants(const IntMatrix& m) {
  IntMatrix a = m;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  IntVector out;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      // Move the smallest nonzero entry of the trailing block to (t, t).
      std::size_t br = rows, bc = cols;
      for (std::size_t r = t; r < rows; ++r)
        for (std::size_t c = t; c < cols; ++c)
          if (a(r, c) != 0 && (br == rows || std::llabs(a(r, c)) < std::llabs(a(br, bc)))) br = r, bc = c;
      if (br == rows) return out;
      for (std::size_t c = 0; c < cols; ++c) std::swap(a(t, c), a(br, c));
      for (std::size_t r = 0; r < rows; ++r) std::swap(a(r, t), a(r, bc));
      const auto p = a(t, t);
      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        const auto q = a(r, t) / p;
        for (std::size_t c = t; c < cols; ++c) a(r, c) = checked::sub(a(r, c), checked::mul(q, a(t, c)));
        if (a(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        const auto q = a(t, c) / p;
        for (std::size_t r = t; r < rows; ++r) a(r, c) = checked::sub(a(r, c), checked::mul(q, a(r, t)));
        if (a(t, c) != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility: fold any offending row into row t and go again.
      bool divides = true;
      for (std::size_t r = t + 1; r < rows && divides; ++r)
        for (std::size_t c = t + 1; c < cols; ++c)
          if (a(r, c) % p != 0) {
            for (std::size_t cc = t; cc < cols; ++cc) a(t, cc) = checked::add(a(t, cc), a(r, cc));
            divides = false;
            break;
          }
      if (divides) break;
    }
    out.push_back(std::llabs(a(t, t)));
  }
  return out;
}

// --- Lattice -----------------------------------------------------------------

Lattice::Lattice(std::size_t ambient_dim, const IntMatrix& generators) : ambient_dim_(ambient_dim) {
  if (generators.rows() > 0 && generators.cols() != ambient_dim)
    throw std::invalid_argument("lattice generators have the wrong dimension");
  basis_ = generators.rows() ? hermite_normal_form(generators) : IntMatrix(0, ambient_dim);
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    std::size_t c = 0;
    while (basis_(r, c) == 0) ++c;
    pivots_.push_back(c);
  }
}

std::optional<IntVector> Lattice::coordinates(const IntVector& v) const {
  if (v.size() != ambient_dim_) throw std::invalid_argument("vector has the wrong dimension");
  IntVector residual = v;
  IntVector coords(rank(), 0);
  for (std::size_t i = 0; i < rank(); ++i) {
    const auto p = basis_(i, pivots_[i]);
    const auto x = residual[pivots_[i]];
    if (x % p != 0) return std::nullopt;
    coords[i] = x / p;
    for (std::size_t c = 0; c < ambient_dim_; ++c)
      residual[c] = checked::sub(residual[c], checked::mul(coords[i], basis_(i, c)));
  }
  for (auto x : residual)
    if (x != 0) return std::nullopt;
  return coords;
}

bool Lattice::is_saturated() const {
  for (auto d : smith_invariants(basis_))
    if (d != 1) return false;
  return true;
}

std::string to_string(const Lattice& l) { return to_string(l.basis()); }

}  // namespace fgcert
