#pragma once

// Explicit congruence subgroups of F2 = <x, y>.
//
// Delta is the kernel of F2 -> (Z/2)^2 with transversal 1, x, y, xy and
// Schreier generators e1..e5. pi : Delta -> F(a, b) sends
//   e1 -> a, e2 -> 1, e3 -> b, e4 -> a^-1, e5 -> b^-1.
// Given a finite-index subgroup K of F(a, b) (as a point stabilizer) and an
// odd prime p not dividing 6 [F(a,b) : K]:
//   N = F2' F2^6  intersected with  t^-1 pi^-1(K) t  for t in {1, x, y, xy},
//   M = F2' F2^4  intersected with  N' N^p.

#include <cstdint>
#include <memory>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "fgcert/quotients.hpp"

namespace fgcert {

using BigInt = boost::multiprecision::cpp_int;

/// Delta with its generators in the order e1..e5 described above.
SchreierSystemPtr klein_system();

/// pi with target alphabet `target` (rank 2; its generators play a and b).
SubgroupHom klein_pi(const AlphabetPtr& target);

struct CongruenceInput {
  FiniteQuotient k_quotient;
  std::uint64_t p;
  /// Orbit size of the base point, i.e. the index of K.
  std::size_t n;
};

/// Validates that K acts on a rank-2 alphabet and that p is an odd prime
/// with p not dividing 6n; throws PreconditionError otherwise.
CongruenceInput make_congruence_input(FiniteQuotient k_quotient, std::uint64_t p);

/// The trivial quotient, K = F(a, b), so n = 1.
FiniteQuotient trivial_k_quotient();

class NOracle {
 public:
  explicit NOracle(const CongruenceInput& input, std::size_t max_index = kDefaultMaxIndex);

  /// Membership by the definition: exponent sums divisible by 6 and
  /// pi(t w t^-1) in K for each conjugator t.
  bool contains(const Word& w) const;
  /// pi(w) in K, for w in Delta.
  bool pi_lands_in_k(const Word& w) const;

  const SchreierSystem& schreier() const noexcept { return *system_; }
  const SchreierSystemPtr& schreier_ptr() const noexcept { return system_; }
  const SubgroupHom& pi() const noexcept { return pi_; }
  std::size_t index() const noexcept { return system_->index(); }
  std::size_t rank() const noexcept { return system_->schreier_generators().size(); }
  const std::vector<Word>& conjugators() const noexcept { return conjugators_; }
  /// The four conjugates above intersect to a normal subgroup of F2 only when
  /// K is normal in F(a, b); for a bare point stabilizer this may be false.
  bool is_normal() const noexcept { return normal_; }

 private:
  FiniteQuotient k_;
  SubgroupHom pi_;
  std::vector<Word> conjugators_;
  SchreierSystemPtr system_;
  bool normal_ = false;
};

class MOracle {
 public:
  MOracle(std::shared_ptr<const NOracle> n, std::uint64_t p) : n_(std::move(n)), p_(p) {}

  /// Exponent sums divisible by 4, w in N, and the exponent sums of w
  /// rewritten over N's Schreier generators all divisible by p.
  bool contains(const Word& w) const;

  const NOracle& n_oracle() const noexcept { return *n_; }

 private:
  std::shared_ptr<const NOracle> n_;
  std::uint64_t p_;
};

struct Certificate {
  std::size_t n = 0;
  std::uint64_t p = 0;
  std::size_t index_of_n = 0;
  std::size_t rank_of_n = 0;
  bool n_is_normal = false;
  BigInt order_f2_mod_npn;
  std::size_t image_order_in_4_torus = 0;
  BigInt order_f2_mod_m;
  BigInt bound;
  bool divides = false;

  nlohmann::ordered_json to_json() const;
};

/// Order of the subgroup of (Z/4)^2 generated by p times the exponent-sum
/// vectors of N's Schreier generators.
std::size_t image_order_in_4_torus(const NOracle& n, std::uint64_t p);

/// [F2 : N' N^p] = [F2 : N] p^rank(N); [F2 : M] multiplies in the image of
/// N' N^p in F2 / F2' F2^4; bound = 144 n^4 p^(36 n^4 + 1).
Certificate certify(const CongruenceInput& input, const NOracle& n);
Certificate certify(const CongruenceInput& input);

}  // namespace fgcert
