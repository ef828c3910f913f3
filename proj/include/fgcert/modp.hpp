#pragma once

// Dense matrices over Z/m, with field algorithms (elimination, spinning) for
// prime m. Entries are kept in [0, m); m must stay below 2^32 so products fit.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fgcert {

using ModVector = std::vector<std::uint64_t>;

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
/// Inverse of a modulo m; throws PreconditionError when gcd(a, m) != 1.
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m);
/// Deterministic trial division; inputs here are small.
bool is_prime(std::uint64_t n);
/// Multiplicative order of a mod m (a coprime to m).
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m);
/// Smallest primitive root of the prime p.
std::uint64_t primitive_root(std::uint64_t p);

class ModMatrix {
 public:
  ModMatrix(std::size_t rows, std::size_t cols, std::uint64_t modulus);
  static ModMatrix identity(std::size_t n, std::uint64_t modulus);
  static ModMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::uint64_t modulus);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::uint64_t modulus() const noexcept { return modulus_; }

  std::uint64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  /// Stores v mod m (v may be negative).
  void set(std::size_t r, std::size_t c, std::int64_t v);

  bool is_identity() const;
  bool is_zero() const;
  /// True when every entry is divisible by d.
  bool divisible_by(std::uint64_t d) const;
  ModMatrix power(std::uint64_t k) const;
  ModVector column(std::size_t c) const;

  bool operator==(const ModMatrix&) const = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::uint64_t modulus_;
  std::vector<std::uint64_t> data_;
};

ModMatrix operator*(const ModMatrix& a, const ModMatrix& b);
ModMatrix operator+(const ModMatrix& a, const ModMatrix& b);
ModMatrix operator-(const ModMatrix& a, const ModMatrix& b);
ModMatrix scaled(const ModMatrix& a, std::uint64_t k);
ModVector operator*(const ModMatrix& a, const ModVector& v);

std::string to_string(const ModMatrix& a);

/// Inverse of I + A when A is nilpotent (entries in a proper ideal of Z/p^k),
/// by the finite series sum (-A)^j. Throws PreconditionError if the series
/// does not terminate within `rows * log2(m) + 1` terms.
ModMatrix unipotent_inverse(const ModMatrix& one_plus_a);

// --- prime field ------------------------------------------------------------------

std::size_t rank_mod_p(const ModMatrix& a);
std::optional<ModMatrix> inverse_mod_p(const ModMatrix& a);
/// Some x with a x = b, if one exists.
std::optional<ModVector> solve_mod_p(const ModMatrix& a, const ModVector& b);

/// A subspace of F_p^n held as a reduced echelon basis.
class Subspace {
 public:
  Subspace(std::size_t dim, std::uint64_t p) : dim_(dim), p_(p) {}

  std::size_t ambient_dim() const noexcept { return dim_; }
  std::size_t dimension() const noexcept { return basis_.size(); }
  const std::vector<ModVector>& basis() const noexcept { return basis_; }

  /// Adds v to the span; returns true when the dimension grew.
  bool insert(const ModVector& v);
  bool contains(const ModVector& v) const;

 private:
  ModVector reduce(ModVector v) const;

  std::size_t dim_;
  std::uint64_t p_;
  std::vector<ModVector> basis_;
  std::vector<std::size_t> pivots_;
};

/// Smallest subspace containing the seeds and invariant under the generators.
/// Each newly added basis vector is pushed through every generator once.
Subspace spin(const std::vector<ModVector>& seeds, const std::vector<ModMatrix>& generators);

}  // namespace fgcert
