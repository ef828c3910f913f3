#pragma once

// Fox coordinates and the Magnus embedding.
//
// The Fox coordinates of w in F_n are the unique w_1, ..., w_n in Z[F_n] with
//   w - 1 = sum_i (x_i - 1) w_i.
// They satisfy (uv)_i = u_i v + v_i, hence (x_j)_i = delta_ij and
// (x_j^-1)_j = -x_j^-1.

#include <cstdint>
#include <string>
#include <vector>

#include "fgcert/group_ring.hpp"
#include "fgcert/homs.hpp"
#include "fgcert/modp.hpp"
#include "fgcert/words.hpp"

namespace fgcert {

/// Coordinate i is a sum over occurrences of x_i in w: +(suffix after the
/// letter) for x_i, -(suffix starting at the letter) for x_i^-1.
std::vector<FreeGroupRingElement> fox_coordinates(const Word& w);

/// sum_i (x_i - 1) c_i, evaluated exactly in Z[F_n].
FreeGroupRingElement fox_resubstitute(const AlphabetPtr& alphabet, const std::vector<FreeGroupRingElement>& c);

/// An element (g, t) of the image of F_n in the matrices (g 0; t 1) over
/// Z/m[(Z/m)^n]: g is an exponent vector mod m, t a row of n ring elements.
/// Construction enforces sum_i (X_i - 1) t_i = g - 1.
class PhiElement {
 public:
  PhiElement(std::uint32_t modulus, IntVector top, std::vector<FiniteGroupRingElement> bottom);

  static PhiElement identity(std::uint32_t modulus, std::uint32_t rank);

  std::uint32_t modulus() const noexcept { return modulus_; }
  std::uint32_t rank() const noexcept { return static_cast<std::uint32_t>(top_.size()); }
  const IntVector& top() const noexcept { return top_; }
  const std::vector<FiniteGroupRingElement>& bottom() const noexcept { return bottom_; }

  /// (g, t)^-1 = (g^-1, -t g^-1).
  PhiElement inverse() const;

  friend bool operator==(const PhiElement&, const PhiElement&) = default;

 private:
  struct Trusted {};
  PhiElement(std::uint32_t modulus, IntVector top, std::vector<FiniteGroupRingElement> bottom, Trusted);
  friend PhiElement operator*(const PhiElement& a, const PhiElement& b);

  std::uint32_t modulus_;
  IntVector top_;
  std::vector<FiniteGroupRingElement> bottom_;
};

/// (g1, t1)(g2, t2) = (g1 g2, t1 g2 + t2).
PhiElement operator*(const PhiElement& a, const PhiElement& b);

std::string to_string(const PhiElement& a);

/// The image of w: top = exponent sums mod m, bottom = Fox coordinates reduced
/// into Z/m[(Z/m)^n].
PhiElement magnus_image(const Word& w, std::uint32_t modulus);

/// Entry (i, j) is the i-th Fox coordinate of h(x_j). For endomorphisms f, g:
///   jacobian(compose(f, g)) = jacobian(f) * f(jacobian(g)),
/// with f acting entrywise.
FreeRingMatrix jacobian(const FreeHom& h);
/// The same matrix pushed into Z/m[(Z/m)^n].
FiniteRingMatrix jacobian_mod(const FreeHom& h, std::uint32_t modulus);

/// f applied entrywise to a matrix over Z[F_n].
FreeRingMatrix apply_entrywise(const FreeHom& f, const FreeRingMatrix& m);
/// f applied entrywise through its abelianization mod m.
FiniteRingMatrix apply_entrywise(const FreeHom& f, const FiniteRingMatrix& m);

/// True when the abelianization matrix of h is the identity mod m, i.e. h acts
/// trivially on F_n / F_n' F_n^m.
bool acts_trivially_mod(const FreeHom& h, std::uint32_t modulus);

struct KaReport {
  std::uint32_t modulus = 0;
  std::size_t automorphisms = 0;
  std::size_t pairs_checked = 0;
  std::size_t inverse_checks = 0;
  std::size_t failures = 0;
  /// One entry per automorphism that is not trivial mod m (these are skipped).
  std::vector<std::string> precondition_failures;

  bool passed() const { return failures == 0 && precondition_failures.empty(); }
};

/// For automorphisms acting trivially mod m: checks
///   jacobian_mod(sigma o tau) = jacobian_mod(sigma) * jacobian_mod(tau)
/// on all ordered pairs, and jacobian_mod(sigma) * jacobian_mod(sigma^-1) = I.
KaReport ka_check(const std::vector<VerifiedAut>& auts, std::uint32_t modulus);

struct LocalCommutatorReport {
  std::uint64_t p = 0;
  unsigned k = 0;
  unsigned s = 0;
  unsigned t = 0;
  std::size_t pairs_checked = 0;
  std::size_t failures = 0;

  bool passed() const { return failures == 0; }
};

/// Over R = Z/p^k with ideals S = (p^s), T = (p^t): checks that
/// [I + A, I + B] = (I+A)(I+B)(I+A)^-1(I+B)^-1 is congruent to I mod p^(s+t)
/// for every A in `as` (entries in S) and B in `bs` (entries in T). Throws
/// std::invalid_argument when a sample lies outside its ideal.
LocalCommutatorReport local_commutator_check(std::uint64_t p, unsigned k, unsigned s, unsigned t,
                                             const std::vector<ModMatrix>& as, const std::vector<ModMatrix>& bs);

}  // namespace fgcert
