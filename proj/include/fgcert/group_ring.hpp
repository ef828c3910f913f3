#pragma once

// Sparse group rings: the integral group ring Z[F] of a free group, and the
// finite commutative ring Z/m[(Z/m)^n].

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fgcert/homs.hpp"
#include "fgcert/int_matrix.hpp"
#include "fgcert/words.hpp"

namespace fgcert {

class FreeGroupRingElement {
 public:
  /// The zero element.
  explicit FreeGroupRingElement(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}

  static FreeGroupRingElement from_word(const Word& w, std::int64_t coefficient = 1);
  static FreeGroupRingElement constant(const AlphabetPtr& alphabet, std::int64_t c);

  const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
  /// Nonzero coefficients keyed by reduced word.
  const std::map<Word, std::int64_t>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::int64_t coefficient(const Word& w) const;

  void add_term(const Word& w, std::int64_t c);

  FreeGroupRingElement& operator+=(const FreeGroupRingElement& o);
  FreeGroupRingElement& operator-=(const FreeGroupRingElement& o);
  FreeGroupRingElement operator-() const;

  /// Linear extension of an endomorphism of the free group.
  FreeGroupRingElement mapped(const FreeHom& h) const;

  friend bool operator==(const FreeGroupRingElement& a, const FreeGroupRingElement& b);

 private:
  AlphabetPtr alphabet_;
  std::map<Word, std::int64_t> terms_;
};

FreeGroupRingElement operator+(FreeGroupRingElement a, const FreeGroupRingElement& b);
FreeGroupRingElement operator-(FreeGroupRingElement a, const FreeGroupRingElement& b);
/// Noncommutative convolution product.
FreeGroupRingElement operator*(const FreeGroupRingElement& a, const FreeGroupRingElement& b);
FreeGroupRingElement operator*(const FreeGroupRingElement& a, const Word& g);
FreeGroupRingElement operator*(const Word& g, const FreeGroupRingElement& a);

/// Terms in word order, e.g. "-x^-1 + 2 y x"; zero prints as "0".
std::string to_string(const FreeGroupRingElement& a);

/// Element of Z/m[(Z/m)^n]. Group elements are exponent vectors reduced mod m,
/// stored packed as base-m integers; coefficients lie in [0, m).
class FiniteGroupRingElement {
 public:
  FiniteGroupRingElement(std::uint32_t modulus, std::uint32_t rank);

  static FiniteGroupRingElement group_element(std::uint32_t modulus, const IntVector& exponents,
                                              std::int64_t coefficient = 1);
  static FiniteGroupRingElement constant(std::uint32_t modulus, std::uint32_t rank, std::int64_t c);
  /// Image under Z[F_n] -> Z/m[(Z/m)^n].
  static FiniteGroupRingElement reduce(const FreeGroupRingElement& a, std::uint32_t modulus);

  std::uint32_t modulus() const noexcept { return modulus_; }
  std::uint32_t rank() const noexcept { return rank_; }
  const std::map<std::uint64_t, std::uint32_t>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(std::uint64_t key, std::int64_t c);
  std::uint64_t encode(const IntVector& exponents) const;
  IntVector decode(std::uint64_t key) const;

  FiniteGroupRingElement& operator+=(const FiniteGroupRingElement& o);
  FiniteGroupRingElement& operator-=(const FiniteGroupRingElement& o);
  FiniteGroupRingElement operator-() const;

  /// Group elements transformed by v -> a v (mod m), extended linearly.
  FiniteGroupRingElement mapped(const IntMatrix& a) const;

  friend bool operator==(const FiniteGroupRingElement&, const FiniteGroupRingElement&) = default;

 private:
  void require_compatible(const FiniteGroupRingElement& o) const;

  std::uint32_t modulus_;
  std::uint32_t rank_;
  std::map<std::uint64_t, std::uint32_t> terms_;
};

FiniteGroupRingElement operator+(FiniteGroupRingElement a, const FiniteGroupRingElement& b);
FiniteGroupRingElement operator-(FiniteGroupRingElement a, const FiniteGroupRingElement& b);
FiniteGroupRingElement operator*(const FiniteGroupRingElement& a, const FiniteGroupRingElement& b);

std::string to_string(const FiniteGroupRingElement& a);

/// Square matrix over a ring whose elements carry their own parameters, so
/// the zero element is supplied explicitly.
template <class R>
class RingMatrix {
 public:
  RingMatrix(std::size_t n, const R& zero) : n_(n), data_(n * n, zero) {}

  static RingMatrix identity(std::size_t n, const R& zero, const R& one) {
    RingMatrix m(n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t size() const noexcept { return n_; }
  R& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const R& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  template <class F>
  RingMatrix transformed(F&& f) const {
    RingMatrix out = *this;
    for (auto& e : out.data_) e = f(e);
    return out;
  }

  friend RingMatrix operator*(const RingMatrix& a, const RingMatrix& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("matrix size mismatch");
    RingMatrix out(a.n_, a.data_.at(0) - a.data_.at(0));
    for (std::size_t i = 0; i < a.n_; ++i)
      for (std::size_t k = 0; k < a.n_; ++k) {
        if (a(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < a.n_; ++j) out(i, j) += a(i, k) * b(k, j);
      }
    return out;
  }

  friend bool operator==(const RingMatrix& a, const RingMatrix& b) { return a.n_ == b.n_ && a.data_ == b.data_; }

 private:
  std::size_t n_;
  std::vector<R> data_;
};

using FreeRingMatrix = RingMatrix<FreeGroupRingElement>;
using FiniteRingMatrix = RingMatrix<FiniteGroupRingElement>;

}  // namespace fgcert
