#pragma once

// Reduced words in finitely generated free groups.
//
// Conventions used throughout the library:
//   commutator(a, b) = a b a^-1 b^-1     (so commutator(y, x) = y x y^-1 x^-1)
//   conjugate(a, t)  = t^-1 a t          (right conjugation)

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fgcert/errors.hpp"

namespace fgcert {

class Alphabet {
 public:
  /// Throws std::invalid_argument on an empty, duplicated or malformed name.
  explicit Alphabet(std::vector<std::string> names);

  std::size_t rank() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  bool operator==(const Alphabet&) const = default;

 private:
  std::vector<std::string> names_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

AlphabetPtr make_alphabet(std::vector<std::string> names);

/// x, y, z for ranks up to 3, otherwise x1 ... xn. Instances are cached, so
/// repeated calls for the same rank return the same pointer.
AlphabetPtr standard_alphabet(std::size_t rank);

/// e1 ... ek, the default names for Schreier generators.
AlphabetPtr indexed_alphabet(std::string_view prefix, std::size_t count);

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b);
void require_same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b, const char* op);

struct Syllable {
  std::uint32_t generator;
  std::int64_t exponent;

  auto operator<=>(const Syllable&) const = default;
};

/// One letter x_i^{+1} or x_i^{-1}.
struct Letter {
  std::uint32_t generator;
  bool inverse;
};

class Word {
 public:
  /// The identity word over `alphabet`.
  explicit Word(AlphabetPtr alphabet);

  static Word generator(AlphabetPtr alphabet, std::size_t index, std::int64_t exponent = 1);
  /// Freely reduces the given syllables (zero exponents are dropped).
  static Word from_syllables(AlphabetPtr alphabet, std::span<const Syllable> syllables);
  static Word from_letters(AlphabetPtr alphabet, std::span<const Letter> letters);

  const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
  std::span<const Syllable> syllables() const noexcept { return syllables_; }
  bool is_identity() const noexcept { return syllables_.empty(); }

  /// Number of letters, i.e. the sum of |exponent| over syllables.
  std::int64_t length() const noexcept;
  std::vector<std::int64_t> exponent_sums() const;
  std::vector<Letter> letters() const;

  /// Multiplies by x_gen^exp on the right, keeping the word reduced.
  void push_back(std::uint32_t gen, std::int64_t exp);

  Word& operator*=(const Word& rhs);
  Word power(std::int64_t k) const;

  friend bool operator==(const Word& a, const Word& b);
  /// Total order on syllable sequences; only meaningful within one alphabet.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  AlphabetPtr alphabet_;
  std::vector<Syllable> syllables_;
};

Word operator*(const Word& a, const Word& b);
Word inverse(const Word& a);
Word conjugate(const Word& a, const Word& by);
Word commutator(const Word& a, const Word& b);

/// Grammar:
///   word    := "1" | term (("*" | whitespace) term)*
///   term    := name ("^" integer)?
///   integer := "-"? digit+   (nonzero)
Word parse_word(std::string_view text, const AlphabetPtr& alphabet);

/// Inverse of parse_word on reduced words; the identity prints as "1".
std::string to_string(const Word& w);
std::ostream& operator<<(std::ostream& os, const Word& w);

}  // namespace fgcert
