#pragma once

// Homomorphisms between free groups, given by the images of the generators.

#include <string>
#include <string_view>
#include <vector>

#include "fgcert/int_matrix.hpp"
#include "fgcert/words.hpp"

namespace fgcert {

class FreeHom {
 public:
  FreeHom(AlphabetPtr domain, AlphabetPtr codomain, std::vector<Word> images);

  static FreeHom identity(const AlphabetPtr& alphabet);

  const AlphabetPtr& domain() const noexcept { return domain_; }
  const AlphabetPtr& codomain() const noexcept { return codomain_; }
  const std::vector<Word>& images() const noexcept { return images_; }
  const Word& image(std::size_t i) const { return images_.at(i); }

  /// Image of `w`; throws AlphabetMismatch when w is not over the domain.
  Word operator()(const Word& w) const;

  bool is_endomorphism() const { return same_alphabet(domain_, codomain_); }

  friend bool operator==(const FreeHom& a, const FreeHom& b);

 private:
  AlphabetPtr domain_;
  AlphabetPtr codomain_;
  std::vector<Word> images_;
};

inline Word apply(const FreeHom& h, const Word& w) { return h(w); }

/// f after g: x_i -> f(g(x_i)).
FreeHom compose(const FreeHom& f, const FreeHom& g);

bool fixes_word(const FreeHom& h, const Word& w);

/// Column i holds the exponent-sum vector of h(x_i), so that
/// abelianization_matrix(compose(f, g)) = abelianization_matrix(f) * abelianization_matrix(g).
IntMatrix abelianization_matrix(const FreeHom& h);

/// An automorphism together with an explicit inverse. Construction fails with
/// PreconditionError unless both composites fix every generator.
class VerifiedAut {
 public:
  VerifiedAut(FreeHom forward, FreeHom backward);

  const FreeHom& forward() const noexcept { return forward_; }
  const FreeHom& backward() const noexcept { return backward_; }
  const AlphabetPtr& alphabet() const noexcept { return forward_.domain(); }

  Word operator()(const Word& w) const { return forward_(w); }
  VerifiedAut inverse() const { return VerifiedAut(backward_, forward_, Trusted{}); }

  static VerifiedAut identity(const AlphabetPtr& alphabet);

  friend VerifiedAut compose(const VerifiedAut& f, const VerifiedAut& g);

 private:
  struct Trusted {};
  VerifiedAut(FreeHom forward, FreeHom backward, Trusted)
      : forward_(std::move(forward)), backward_(std::move(backward)) {}

  FreeHom forward_;
  FreeHom backward_;
};

VerifiedAut compose(const VerifiedAut& f, const VerifiedAut& g);

/// w -> g^-1 w g. Under this convention
/// compose(inner_aut(g1), inner_aut(g2)) = inner_aut(g2 * g1).
VerifiedAut inner_aut(const Word& g);

// Nielsen generators, for any rank.

/// x_i -> x_i x_j^sign (right) or x_j^sign x_i (left); requires i != j.
VerifiedAut transvection(const AlphabetPtr& alphabet, std::size_t i, std::size_t j,
                         int sign = 1, bool right = true);
/// x_i -> x_i^-1.
VerifiedAut inversion(const AlphabetPtr& alphabet, std::size_t i);
/// x_i -> x_{perm[i]}.
VerifiedAut permutation(const AlphabetPtr& alphabet, const std::vector<std::size_t>& perm);

/// Named automorphisms. Rank 2 over {x, y}:
///   alpha: x -> x,  y -> y x^2        beta: x -> x y^2,  y -> y
/// Rank 3 over {x, y, z}:
///   alpha: z -> z y (others fixed)    beta: y -> y z (others fixed)
namespace named {
VerifiedAut alpha_rank2();
VerifiedAut beta_rank2();
VerifiedAut alpha_rank3();
VerifiedAut beta_rank3();
}  // namespace named

/// One line per domain generator, `name -> word`. Blank lines and lines
/// starting with '#' are ignored.
FreeHom parse_hom(std::string_view text, const AlphabetPtr& domain, const AlphabetPtr& codomain);
std::string format_hom(const FreeHom& h);

}  // namespace fgcert
