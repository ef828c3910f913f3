#pragma once

// Finite permutation actions of free groups, Schreier transversals and
// Reidemeister rewriting.
//
// A FiniteQuotient is a right action of a free group on {0, ..., size-1}
// given by one permutation per generator. The subgroup it describes is the
// stabilizer of point 0; its right cosets are the orbit of 0. Regular actions
// therefore describe kernels, and non-regular actions describe arbitrary
// finite-index subgroups.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include <json.hpp>

#include "fgcert/homs.hpp"
#include "fgcert/words.hpp"

namespace fgcert {

using Permutation = std::vector<std::uint32_t>;

/// Default ceiling on coset counts for all constructions in this library.
inline constexpr std::size_t kDefaultMaxIndex = 100000;

class FiniteQuotient {
 public:
  FiniteQuotient(AlphabetPtr alphabet, std::size_t size, std::vector<Permutation> images);

  const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
  std::size_t size() const noexcept { return size_; }
  const std::vector<Permutation>& images() const noexcept { return images_; }

  std::uint32_t act(std::uint32_t point, std::uint32_t gen, bool inverse) const {
    return inverse ? inverse_images_[gen][point] : images_[gen][point];
  }
  std::uint32_t act(std::uint32_t point, const Word& w) const;
  bool fixes_base(const Word& w) const { return act(0, w) == 0; }

  /// Points reachable from `from`, in breadth-first order.
  std::vector<std::uint32_t> orbit(std::uint32_t from = 0) const;

  static FiniteQuotient from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

 private:
  AlphabetPtr alphabet_;
  std::size_t size_;
  std::vector<Permutation> images_;
  std::vector<Permutation> inverse_images_;
};

/// Regular action of Z/m1 x ... x Z/mk with generator i acting as the i-th
/// unit vector; the stabilizer of 0 is the kernel of the map to the product.
FiniteQuotient abelian_quotient(const AlphabetPtr& alphabet, std::span<const std::uint32_t> moduli);

/// Action of F on Z/m^rank by translation: the kernel is F' F^m.
FiniteQuotient mod_abelianization_quotient(const AlphabetPtr& alphabet, std::uint32_t m);

struct PointedAction {
  FiniteQuotient action;
  std::uint32_t point;
};

/// The diagonal action on the orbit of (point_1, ..., point_k). Its base
/// stabilizer is the intersection of the individual point stabilizers.
/// Throws ResourceError when the orbit exceeds `max_index`.
FiniteQuotient intersect_stabilizers(std::span<const PointedAction> actions,
                                     std::size_t max_index = kDefaultMaxIndex);

enum class GeneratorOrder {
  /// (t, x) lexicographic: transversal position first, then generator.
  transversal_major,
  /// (x, t) lexicographic: generator first, then transversal position.
  generator_major,
};

/// Schreier system of the stabilizer of point 0 in a finite action.
///
/// The transversal is built by breadth-first search from the base point,
/// scanning generators in index order with the positive letter before its
/// inverse, so it is prefix-closed. Schreier generators t x (bar(t x))^-1 that
/// reduce to the identity are omitted.
class SchreierSystem {
 public:
  static std::shared_ptr<const SchreierSystem> build(
      const FiniteQuotient& quotient, GeneratorOrder order = GeneratorOrder::transversal_major,
      AlphabetPtr generator_names = nullptr, std::size_t max_index = kDefaultMaxIndex);

  const FiniteQuotient& quotient() const noexcept { return quotient_; }
  const AlphabetPtr& alphabet() const noexcept { return quotient_.alphabet(); }
  std::size_t index() const noexcept { return transversal_.size(); }
  const std::vector<Word>& transversal() const noexcept { return transversal_; }

  /// Coset reached from `coset` by the letter gen^{+-1}.
  std::uint32_t coset_step(std::uint32_t coset, std::uint32_t gen, bool inverse) const;
  /// Coset of a word (its position in the transversal).
  std::uint32_t coset_of(const Word& w) const;

  const std::vector<Word>& schreier_generators() const noexcept { return generators_; }
  const AlphabetPtr& generator_alphabet() const noexcept { return generator_alphabet_; }
  /// Schreier generator index for (coset, gen), or nullopt when it is trivial.
  std::optional<std::uint32_t> generator_at(std::uint32_t coset, std::uint32_t gen) const;

  bool contains(const Word& w) const { return coset_of(w) == 0; }

  /// Reidemeister rewriting of a subgroup element as a word in the Schreier
  /// generators. Throws PreconditionError when w is not in the subgroup.
  Word rewrite(const Word& w) const;
  /// Substitutes the Schreier generators back into a subgroup word.
  Word expand(const Word& subgroup_word) const { return expansion_(subgroup_word); }
  const FreeHom& expansion() const noexcept { return expansion_; }

 private:
  SchreierSystem(FiniteQuotient quotient, std::vector<Word> transversal,
                 std::vector<std::uint32_t> coset_of_point, std::vector<std::uint32_t> point_of_coset,
                 std::vector<Word> generators, std::vector<std::int64_t> generator_at,
                 AlphabetPtr generator_alphabet);

  FiniteQuotient quotient_;
  std::vector<Word> transversal_;
  std::vector<std::uint32_t> coset_of_point_;
  std::vector<std::uint32_t> point_of_coset_;
  std::vector<Word> generators_;
  std::vector<std::int64_t> generator_at_;  // coset * rank + gen -> index, -1 for trivial
  AlphabetPtr generator_alphabet_;
  FreeHom expansion_;
};

using SchreierSystemPtr = std::shared_ptr<const SchreierSystem>;

inline SchreierSystemPtr kernel_subgroup(const FiniteQuotient& q,
                                         GeneratorOrder order = GeneratorOrder::transversal_major) {
  return SchreierSystem::build(q, order);
}

/// index * (rank - 1) + 1.
std::size_t schreier_rank(std::size_t index, std::size_t rank);

bool is_prefix_closed(const std::vector<Word>& transversal);

/// A homomorphism from a Schreier subgroup into a free group, fixed by the
/// images of the Schreier generators and evaluated as rewrite-then-substitute.
class SubgroupHom {
 public:
  SubgroupHom(SchreierSystemPtr system, AlphabetPtr target, std::vector<Word> images);

  const SchreierSystem& system() const noexcept { return *system_; }
  const SchreierSystemPtr& system_ptr() const noexcept { return system_; }
  const FreeHom& on_generators() const noexcept { return on_generators_; }
  const AlphabetPtr& target() const noexcept { return on_generators_.codomain(); }

  Word operator()(const Word& w) const { return on_generators_(system_->rewrite(w)); }
  /// Image of a word already written in the Schreier generators.
  Word on_subgroup_word(const Word& sw) const { return on_generators_(sw); }
  /// Kernel membership via the word problem of the free target.
  bool in_kernel(const Word& w) const { return (*this)(w).is_identity(); }

 private:
  SchreierSystemPtr system_;
  FreeHom on_generators_;
};

/// Right action of the ambient free group on the cosets of h^-1(Stab(0)),
/// where Stab(0) is the base stabilizer of `target` (an action of h's target
/// group). Points are pairs (coset of the Schreier subgroup, point of target).
FiniteQuotient preimage_action(const SubgroupHom& h, const FiniteQuotient& target);

/// Built-in quotients.
/// F2 = <x, y> -> (Z/2)^2, points encoded as a + 2b.
FiniteQuotient klein_quotient();
/// F3 = <x, y, z> -> C2 with x -> g and y, z -> 1.
FiniteQuotient c2_quotient_rank3();

}  // namespace fgcert
