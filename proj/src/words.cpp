#include "fgcert/words.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace fgcert {

namespace {

bool valid_name(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin() + 1, s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw std::invalid_argument("alphabet must have at least one generator");
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (!valid_name(n)) throw std::invalid_argument("invalid generator name '" + n + "'");
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate generator name '" + n + "'");
  }
}

std::optional<std::size_t> Alphabet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

AlphabetPtr make_alphabet(std::vector<std::string> names) {
  return std::make_shared<const Alphabet>(std::move(names));
}

AlphabetPtr standard_alphabet(std::size_t rank) {
  static std::mutex mu;
  static std::map<std::size_t, AlphabetPtr> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(rank);
  if (it != cache.end()) return it->second;
  std::vector<std::string> names;
  if (rank <= 3) {
    const char* xyz[] = {"x", "y", "z"};
    names.assign(xyz, xyz + rank);
  } else {
    for (std::size_t i = 1; i <= rank; ++i) names.push_back("x" + std::to_string(i));
  }
  auto a = make_alphabet(std::move(names));
  cache.emplace(rank, a);
  return a;
}

AlphabetPtr indexed_alphabet(std::string_view prefix, std::size_t count) {
  std::vector<std::string> names;
  names.reserve(count);
  for (std::size_t i = 1; i <= count; ++i) names.push_back(std::string(prefix) + std::to_string(i));
  return make_alphabet(std::move(names));
}

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
  return a == b || (a && b && *a == *b);
}

void require_same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b, const char* op) {
  if (!same_alphabet(a, b)) throw AlphabetMismatch(std::string(op) + ": alphabet mismatch");
}

// --- Word -------------------------------------------------------------------

Word::Word(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {
  if (!alphabet_) throw std::invalid_argument("word needs an alphabet");
}

Word Word::generator(AlphabetPtr alphabet, std::size_t index, std::int64_t exponent) {
  Word w(std::move(alphabet));
  if (index >= w.alphabet_->rank()) throw std::out_of_range("generator index out of range");
  w.push_back(static_cast<std::uint32_t>(index), exponent);
  return w;
}

Word Word::from_syllables(AlphabetPtr alphabet, std::span<const Syllable> syllables) {
  Word w(std::move(alphabet));
  for (const auto& s : syllables) {
    if (s.generator >= w.alphabet_->rank()) throw std::out_of_range("generator index out of range");
    w.push_back(s.generator, s.exponent);
  }
  return w;
}

Word Word::from_letters(AlphabetPtr alphabet, std::span<const Letter> letters) {
  Word w(std::move(alphabet));
  for (const auto& l : letters) {
    if (l.generator >= w.alphabet_->rank()) throw std::out_of_range("generator index out of range");
    w.push_back(l.generator, l.inverse ? -1 : 1);
  }
  return w;
}

std::int64_t Word::length() const noexcept {
  std::int64_t n = 0;
  for (const auto& s : syllables_) n += std::abs(s.exponent);
  return n;
}

std::vector<std::int64_t> Word::exponent_sums() const {
  std::vector<std::int64_t> v(alphabet_->rank(), 0);
  for (const auto& s : syllables_) v[s.generator] += s.exponent;
  return v;
}

std::vector<Letter> Word::letters() const {
  std::vector<Letter> out;
  out.reserve(static_cast<std::size_t>(length()));
  for (const auto& s : syllables_) {
    const bool inv = s.exponent < 0;
    for (std::int64_t k = 0; k < std::abs(s.exponent); ++k) out.push_back({s.generator, inv});
  }
  return out;
}

void Word::push_back(std::uint32_t gen, std::int64_t exp) {
  if (exp == 0) return;
  if (!syllables_.empty() && syllables_.back().generator == gen) {
    syllables_.back().exponent += exp;
    if (syllables_.back().exponent == 0) syllables_.pop_back();
    return;
  }
  syllables_.push_back({gen, exp});
}

Word& Word::operator*=(const Word& rhs) {
  require_same_alphabet(alphabet_, rhs.alphabet_, "multiply");
  if (&rhs == this) return *this = Word(rhs) * rhs;
  // Cancellation only happens at the junction; after the first syllable that
  // survives, the remainder of rhs is appended verbatim.
  std::size_t i = 0;
  const auto& r = rhs.syllables_;
  while (i < r.size() && !syllables_.empty() && syllables_.back().generator == r[i].generator) {
    syllables_.back().exponent += r[i].exponent;
    ++i;
    if (syllables_.back().exponent != 0) break;
    syllables_.pop_back();
  }
  syllables_.insert(syllables_.end(), r.begin() + static_cast<std::ptrdiff_t>(i), r.end());
  return *this;
}

Word Word::power(std::int64_t k) const {
  Word base = k < 0 ? inverse(*this) : *this;
  Word result(alphabet_);
  std::int64_t n = k < 0 ? -k : k;
  // Square-and-multiply: powers of reduced words are reduced after each product.
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

bool operator==(const Word& a, const Word& b) {
  return a.syllables_ == b.syllables_ && same_alphabet(a.alphabet_, b.alphabet_);
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  return a.syllables_ <=> b.syllables_;
}

Word operator*(const Word& a, const Word& b) {
  Word r = a;
  r *= b;
  return r;
}

Word inverse(const Word& a) {
  Word r(a.alphabet());
  const auto s = a.syllables();
  for (auto it = s.rbegin(); it != s.rend(); ++it) r.push_back(it->generator, -it->exponent);
  return r;
}

Word conjugate(const Word& a, const Word& by) { return inverse(by) * a * by; }

Word commutator(const Word& a, const Word& b) { return a * b * inverse(a) * inverse(b); }

// --- text -------------------------------------------------------------------

namespace {

class WordParser {
 public:
  WordParser(std::string_view text, const AlphabetPtr& alphabet)
      : text_(text), alphabet_(alphabet) {}

  Word parse() {
    Word w(alphabet_);
    skip_space();
    if (at_end()) throw ParseError("empty word", pos_);
    if (text_[pos_] == '1') {
      ++pos_;
      skip_space();
      if (!at_end()) throw ParseError("unexpected input after identity '1'", pos_);
      return w;
    }
    parse_term(w);
    while (true) {
      const std::size_t before = pos_;
      skip_space();
      if (at_end()) break;
      bool separated = pos_ > before;
      if (text_[pos_] == '*') {
        ++pos_;
        skip_space();
        separated = true;
      }
      if (!separated) throw ParseError("expected separator between terms", pos_);
      if (at_end()) throw ParseError("expected term", pos_);
      parse_term(w);
    }
    return w;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void parse_term(Word& w) {
    const std::size_t start = pos_;
    if (at_end() || !std::isalpha(static_cast<unsigned char>(text_[pos_])))
      throw ParseError("expected generator name", pos_);
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    const auto name = text_.substr(start, pos_ - start);
    const auto idx = alphabet_->index_of(name);
    if (!idx) throw ParseError("unknown generator '" + std::string(name) + "'", start);
    std::int64_t exp = 1;
    if (!at_end() && text_[pos_] == '^') {
      ++pos_;
      exp = parse_integer();
    }
    w.push_back(static_cast<std::uint32_t>(*idx), exp);
  }

  std::int64_t parse_integer() {
    const std::size_t start = pos_;
    if (!at_end() && text_[pos_] == '-') ++pos_;
    const std::size_t digits = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) throw ParseError("expected integer exponent", digits);
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc() || ptr != text_.data() + pos_) throw ParseError("exponent out of range", start);
    if (value == 0) throw ParseError("exponent must be nonzero", start);
    return value;
  }

  std::string_view text_;
  const AlphabetPtr& alphabet_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(std::string_view text, const AlphabetPtr& alphabet) {
  return WordParser(text, alphabet).parse();
}

std::string to_string(const Word& w) {
  if (w.is_identity()) return "1";
  std::string out;
  for (const auto& s : w.syllables()) {
    if (!out.empty()) out += ' ';
    out += w.alphabet()->name(s.generator);
    if (s.exponent != 1) {
      out += '^';
      out += std::to_string(s.exponent);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << to_string(w); }

}  // namespace fgcert
