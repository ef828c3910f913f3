#include "fgcert/sampling.hpp"

namespace fgcert {

namespace {

Letter random_letter(std::size_t rank, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, 2 * rank - 1);
  const auto v = pick(rng);
  return Letter{static_cast<std::uint32_t>(v / 2), (v % 2) == 1};
}

}  // namespace

Word random_word(const AlphabetPtr& alphabet, std::size_t max_length, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> len(0, max_length);
  const auto n = len(rng);
  std::vector<Letter> letters;
  letters.reserve(n);
  for (std::size_t i = 0; i < n; ++i) letters.push_back(random_letter(alphabet->rank(), rng));
  return Word::from_letters(alphabet, letters);
}

Word random_reduced_word(const AlphabetPtr& alphabet, std::size_t length, std::mt19937_64& rng) {
  std::vector<Letter> letters;
  while (letters.size() < length) {
    const Letter l = random_letter(alphabet->rank(), rng);
    if (!letters.empty() && letters.back().generator == l.generator && letters.back().inverse != l.inverse) continue;
    letters.push_back(l);
  }
  return Word::from_letters(alphabet, letters);
}

Word random_subgroup_element(const SchreierSystem& s, std::size_t max_factors, std::mt19937_64& rng) {
  return s.expand(random_word(s.generator_alphabet(), max_factors, rng));
}

Word reduce_letters(const AlphabetPtr& alphabet, const std::vector<Letter>& letters) {
  std::vector<Letter> stack;
  for (const auto& l : letters) {
    if (!stack.empty() && stack.back().generator == l.generator && stack.back().inverse != l.inverse)
      stack.pop_back();
    else
      stack.push_back(l);
  }
  std::vector<Syllable> syllables;
  for (const auto& l : stack) {
    const std::int64_t e = l.inverse ? -1 : 1;
    if (!syllables.empty() && syllables.back().generator == l.generator)
      syllables.back().exponent += e;
    else
      syllables.push_back({l.generator, e});
  }
  return Word::from_syllables(alphabet, syllables);
}

}  // namespace fgcert
