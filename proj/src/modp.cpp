#include "fgcert/modp.hpp"

#include <deque>
#include <numeric>
#include <utility>
#include <stdexcept>

#include "fgcert/errors.hpp"

namespace fgcert {

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = result * base % m;
    base = base * base % m;
    exp >>= 1;
  }
  return result;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m) {
  std::int64_t old_r = static_cast<std::int64_t>(a % m), r = static_cast<std::int64_t>(m);
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
  }
  if (old_r != 1) throw PreconditionError(std::to_string(a) + " is not invertible mod " + std::to_string(m));
  const auto mm = static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(((old_s % mm) + mm) % mm);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m) {
  if (std::gcd(a, m) != 1) throw PreconditionError("element is not a unit");
  std::uint64_t x = a % m, k = 1;
  while (x != 1 % m) {
    x = x * a % m;
    ++k;
  }
  return k;
}

std::uint64_t primitive_root(std::uint64_t p) {
  if (!is_prime(p)) throw PreconditionError(std::to_string(p) + " is not prime");
  for (std::uint64_t g = 1; g < p; ++g)
    if (multiplicative_order(g, p) == p - 1) return g;
  throw PreconditionError("no primitive root found");
}

// --- ModMatrix ------------------------------------------------------------------

ModMatrix::ModMatrix(std::size_t rows, std::size_t cols, std::uint64_t modulus)
    : rows_(rows), cols_(cols), modulus_(modulus), data_(rows * cols, 0) {
  if (modulus_ < 2 || modulus_ >= (1ULL << 32)) throw std::invalid_argument("modulus out of range");
}

ModMatrix ModMatrix::identity(std::size_t n, std::uint64_t modulus) {
  ModMatrix m(n, n, modulus);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
  return m;
}

ModMatrix ModMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::uint64_t modulus) {
  const std::size_t c = rows.empty() ? 0 : rows.front().size();
  ModMatrix m(rows.size(), c, modulus);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

void ModMatrix::set(std::size_t r, std::size_t c, std::int64_t v) {
  const auto m = static_cast<std::int64_t>(modulus_);
  data_.at(r * cols_ + c) = static_cast<std::uint64_t>(((v % m) + m) % m);
}

bool ModMatrix::is_identity() const { return rows_ == cols_ && *this == identity(rows_, modulus_); }

bool ModMatrix::is_zero() const {
  for (auto v : data_)
    if (v != 0) return false;
  return true;
}

bool ModMatrix::divisible_by(std::uint64_t d) const {
  for (auto v : data_)
    if (v % d != 0) return false;
  return true;
}

ModMatrix ModMatrix::power(std::uint64_t k) const {
  ModMatrix result = identity(rows_, modulus_), base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

ModVector ModMatrix::column(std::size_t c) const {
  ModVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

namespace {

void require_same_shape(const ModMatrix& a, const ModMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.modulus() != b.modulus())
    throw std::invalid_argument("matrix shapes or moduli differ");
}

}  // namespace

ModMatrix operator*(const ModMatrix& a, const ModMatrix& b) {
  if (a.cols() != b.rows() || a.modulus() != b.modulus()) throw std::invalid_argument("matrix product mismatch");
  const auto m = a.modulus();
  ModMatrix out(a.rows(), b.cols(), m);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      std::uint64_t s = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) s = (s + a(i, k) * b(k, j)) % m;
      out.set(i, j, static_cast<std::int64_t>(s));
    }
  return out;
}

ModMatrix operator+(const ModMatrix& a, const ModMatrix& b) {
  require_same_shape(a, b);
  ModMatrix out(a.rows(), a.cols(), a.modulus());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.set(i, j, static_cast<std::int64_t>((a(i, j) + b(i, j)) % a.modulus()));
  return out;
}

ModMatrix operator-(const ModMatrix& a, const ModMatrix& b) {
  require_same_shape(a, b);
  ModMatrix out(a.rows(), a.cols(), a.modulus());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      out.set(i, j, static_cast<std::int64_t>((a(i, j) + a.modulus() - b(i, j)) % a.modulus()));
  return out;
}

ModMatrix scaled(const ModMatrix& a, std::uint64_t k) {
  ModMatrix out(a.rows(), a.cols(), a.modulus());
  k %= a.modulus();
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.set(i, j, static_cast<std::int64_t>(a(i, j) * k % a.modulus()));
  return out;
}

ModVector operator*(const ModMatrix& a, const ModVector& v) {
  if (v.size() != a.cols()) throw std::invalid_argument("vector has the wrong length");
  ModVector out(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::uint64_t s = 0;
    for (std::size_t k = 0; k < a.cols(); ++k) s = (s + a(i, k) * v[k]) % a.modulus();
    out[i] = s;
  }
  return out;
}

std::string to_string(const ModMatrix& a) {
  std::string out = "[";
  for (std::size_t i = 0; i < a.rows(); ++i) {
    out += i ? ",[" : "[";
    for (std::size_t j = 0; j < a.cols(); ++j) out += (j ? "," : "") + std::to_string(a(i, j));
    out += "]";
  }
  return out + "]";
}

ModMatrix unipotent_inverse(const ModMatrix& one_plus_a) {
  const std::size_t n = one_plus_a.rows();
  const auto m = one_plus_a.modulus();
  const ModMatrix minus_a = ModMatrix::identity(n, m) - one_plus_a;
  std::size_t bound = 1;
  for (std::uint64_t x = m; x > 1; x >>= 1) ++bound;
  bound *= n;
  ModMatrix sum = ModMatrix::identity(n, m), term = ModMatrix::identity(n, m);
  for (std::size_t j = 0; j < bound; ++j) {
    term = term * minus_a;
    if (term.is_zero()) return sum;
    sum = sum + term;
  }
  throw PreconditionError("matrix is not unipotent");
}

// --- prime field ------------------------------------------------------------------

namespace {

// Row reduction in place; returns pivot columns.
std::vector<std::size_t> row_reduce(std::vector<ModVector>& rows, std::uint64_t p, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][c] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    const auto inv = mod_inverse(rows[r][c], p);
    for (auto& v : rows[r]) v = v * inv % p;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const auto f = rows[i][c];
      for (std::size_t k = 0; k < rows[i].size(); ++k) rows[i][k] = (rows[i][k] + p - f * rows[r][k] % p) % p;
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<ModVector> rows_of(const ModMatrix& a) {
  std::vector<ModVector> rows(a.rows(), ModVector(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) rows[i][j] = a(i, j);
  return rows;
}

}  // namespace

std::size_t rank_mod_p(const ModMatrix& a) {
  auto rows = rows_of(a);
  return row_reduce(rows, a.modulus(), a.cols()).size();
}

std::optional<ModMatrix> inverse_mod_p(const ModMatrix& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("inverse needs a square matrix");
  auto rows = rows_of(a);
  for (std::size_t i = 0; i < n; ++i) {
    rows[i].resize(2 * n, 0);
    rows[i][n + i] = 1;
  }
  if (row_reduce(rows, a.modulus(), n).size() != n) return std::nullopt;
  ModMatrix inv(n, n, a.modulus());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.set(i, j, static_cast<std::int64_t>(rows[i][n + j]));
  return inv;
}

std::optional<ModVector> solve_mod_p(const ModMatrix& a, const ModVector& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("right-hand side has the wrong length");
  auto rows = rows_of(a);
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i].push_back(b[i] % a.modulus());
  const auto pivots = row_reduce(rows, a.modulus(), a.cols() + 1);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  ModVector x(a.cols(), 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = rows[r][a.cols()];
  return x;
}

ModVector Subspace::reduce(ModVector v) const {
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const auto f = v[pivots_[i]];
    if (f == 0) continue;
    for (std::size_t k = 0; k < dim_; ++k) v[k] = (v[k] + p_ - f * basis_[i][k] % p_) % p_;
  }
  return v;
}

bool Subspace::insert(const ModVector& v) {
  if (v.size() != dim_) throw std::invalid_argument("vector has the wrong dimension");
  ModVector r = reduce(v);
  std::size_t pivot = 0;
  while (pivot < dim_ && r[pivot] == 0) ++pivot;
  if (pivot == dim_) return false;
  const auto inv = mod_inverse(r[pivot], p_);
  for (auto& x : r) x = x * inv % p_;
  // Keep the basis fully reduced so that reduce() is a single pass.
  for (auto& b : basis_) {
    const auto f = b[pivot];
    if (f == 0) continue;
    for (std::size_t k = 0; k < dim_; ++k) b[k] = (b[k] + p_ - f * r[k] % p_) % p_;
  }
  basis_.push_back(std::move(r));
  pivots_.push_back(pivot);
  return true;
}

bool Subspace::contains(const ModVector& v) const {
  const ModVector r = reduce(v);
  for (auto x : r)
    if (x != 0) return false;
  return true;
}

Subspace spin(const std::vector<ModVector>& seeds, const std::vector<ModMatrix>& generators) {
  if (generators.empty()) throw std::invalid_argument("spin needs at least one generator");
  const std::size_t dim = generators.front().cols();
  const std::uint64_t p = generators.front().modulus();
  Subspace space(dim, p);
  std::deque<ModVector> queue;
  for (const auto& s : seeds)
    if (space.insert(s)) queue.push_back(s);
  while (!queue.empty()) {
    const ModVector v = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : generators) {
      ModVector w = g * v;
      if (space.insert(w)) queue.push_back(std::move(w));
    }
  }
  return space;
}

}  // namespace fgcert
