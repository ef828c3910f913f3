#pragma once

// Seeded random words for property checks. All callers pass their own engine
// so results depend only on the seed.

#include <random>

#include "fgcert/quotients.hpp"
#include "fgcert/words.hpp"

namespace fgcert {

/// Uniform letters, freely reduced afterwards, so the result may be shorter
/// than the drawn length (which is uniform in [0, max_length]).
Word random_word(const AlphabetPtr& alphabet, std::size_t max_length, std::mt19937_64& rng);

/// A reduced word of exactly `length` letters (no cancellation).
Word random_reduced_word(const AlphabetPtr& alphabet, std::size_t length, std::mt19937_64& rng);

/// A random product of Schreier generators and their inverses, expanded back
/// into the ambient free group.
Word random_subgroup_element(const SchreierSystem& s, std::size_t max_factors, std::mt19937_64& rng);

/// Independent reference reduction: a stack of single letters.
Word reduce_letters(const AlphabetPtr& alphabet, const std::vector<Letter>& letters);

}  // namespace fgcert
