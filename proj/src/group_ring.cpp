#include "fgcert/group_ring.hpp"

#include <stdexcept>

namespace fgcert {

// --- Z[F] ---------------------------------------------------------------------

FreeGroupRingElement FreeGroupRingElement::from_word(const Word& w, std::int64_t coefficient) {
  FreeGroupRingElement a(w.alphabet());
  a.add_term(w, coefficient);
  return a;
}

FreeGroupRingElement FreeGroupRingElement::constant(const AlphabetPtr& alphabet, std::int64_t c) {
  return from_word(Word(alphabet), c);
}

std::int64_t FreeGroupRingElement::coefficient(const Word& w) const {
  const auto it = terms_.find(w);
  return it == terms_.end() ? 0 : it->second;
}

void FreeGroupRingElement::add_term(const Word& w, std::int64_t c) {
  require_same_alphabet(w.alphabet(), alphabet_, "group ring term");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (inserted) return;
  it->second = checked::add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

FreeGroupRingElement& FreeGroupRingElement::operator+=(const FreeGroupRingElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

FreeGroupRingElement& FreeGroupRingElement::operator-=(const FreeGroupRingElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, checked::sub(0, c));
  return *this;
}

FreeGroupRingElement FreeGroupRingElement::operator-() const {
  FreeGroupRingElement r(alphabet_);
  r -= *this;
  return r;
}

FreeGroupRingElement FreeGroupRingElement::mapped(const FreeHom& h) const {
  require_same_alphabet(h.domain(), alphabet_, "map group ring element");
  FreeGroupRingElement r(h.codomain());
  for (const auto& [w, c] : terms_) r.add_term(h(w), c);
  return r;
}

bool operator==(const FreeGroupRingElement& a, const FreeGroupRingElement& b) {
  return same_alphabet(a.alphabet_, b.alphabet_) && a.terms_ == b.terms_;
}

FreeGroupRingElement operator+(FreeGroupRingElement a, const FreeGroupRingElement& b) { return a += b; }
FreeGroupRingElement operator-(FreeGroupRingElement a, const FreeGroupRingElement& b) { return a -= b; }

FreeGroupRingElement operator*(const FreeGroupRingElement& a, const FreeGroupRingElement& b) {
  require_same_alphabet(a.alphabet(), b.alphabet(), "group ring product");
  FreeGroupRingElement r(a.alphabet());
  for (const auto& [u, c] : a.terms())
    for (const auto& [v, d] : b.terms()) r.add_term(u * v, checked::mul(c, d));
  return r;
}

FreeGroupRingElement operator*(const FreeGroupRingElement& a, const Word& g) {
  FreeGroupRingElement r(a.alphabet());
  for (const auto& [u, c] : a.terms()) r.add_term(u * g, c);
  return r;
}

FreeGroupRingElement operator*(const Word& g, const FreeGroupRingElement& a) {
  FreeGroupRingElement r(a.alphabet());
  for (const auto& [u, c] : a.terms()) r.add_term(g * u, c);
  return r;
}

namespace {

std::string signed_term(bool first, std::int64_t c, const std::string& body, bool is_unit_word) {
  std::string out;
  const bool negative = c < 0;
  const std::uint64_t mag = negative ? 0 - static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
  if (first) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  if (is_unit_word) return out + std::to_string(mag);
  if (mag != 1) out += std::to_string(mag) + " ";
  return out + body;
}

}  // namespace

std::string to_string(const FreeGroupRingElement& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : a.terms()) {
    out += signed_term(first, c, to_string(w), w.is_identity());
    first = false;
  }
  return out;
}

// --- Z/m[(Z/m)^n] ---------------------------------------------------------------

FiniteGroupRingElement::FiniteGroupRingElement(std::uint32_t modulus, std::uint32_t rank)
    : modulus_(modulus), rank_(rank) {
  if (modulus_ < 2) throw std::invalid_argument("group ring modulus must be at least 2");
  if (rank_ == 0) throw std::invalid_argument("group ring rank must be positive");
  // Keys are base-m integers with `rank` digits.
  long double size = 1;
  for (std::uint32_t i = 0; i < rank_; ++i) size *= modulus_;
  if (size > 1e18L) throw ResourceError("group (Z/m)^n too large to index");
}

FiniteGroupRingElement FiniteGroupRingElement::group_element(std::uint32_t modulus, const IntVector& exponents,
                                                             std::int64_t coefficient) {
  FiniteGroupRingElement a(modulus, static_cast<std::uint32_t>(exponents.size()));
  a.add_term(a.encode(exponents), coefficient);
  return a;
}

FiniteGroupRingElement FiniteGroupRingElement::constant(std::uint32_t modulus, std::uint32_t rank,
                                                        std::int64_t c) {
  FiniteGroupRingElement a(modulus, rank);
  a.add_term(0, c);
  return a;
}

FiniteGroupRingElement FiniteGroupRingElement::reduce(const FreeGroupRingElement& a, std::uint32_t modulus) {
  FiniteGroupRingElement r(modulus, static_cast<std::uint32_t>(a.alphabet()->rank()));
  for (const auto& [w, c] : a.terms()) r.add_term(r.encode(w.exponent_sums()), c);
  return r;
}

std::uint64_t FiniteGroupRingElement::encode(const IntVector& exponents) const {
  if (exponents.size() != rank_) throw std::invalid_argument("exponent vector has the wrong rank");
  std::uint64_t key = 0;
  const auto m = static_cast<std::int64_t>(modulus_);
  for (std::size_t i = exponents.size(); i-- > 0;) key = key * modulus_ + static_cast<std::uint64_t>(((exponents[i] % m) + m) % m);
  return key;
}

IntVector FiniteGroupRingElement::decode(std::uint64_t key) const {
  IntVector v(rank_);
  for (std::size_t i = 0; i < rank_; ++i) {
    v[i] = static_cast<std::int64_t>(key % modulus_);
    key /= modulus_;
  }
  return v;
}

void FiniteGroupRingElement::add_term(std::uint64_t key, std::int64_t c) {
  const auto m = static_cast<std::int64_t>(modulus_);
  const auto r = static_cast<std::uint32_t>(((c % m) + m) % m);
  if (r == 0) return;
  auto [it, inserted] = terms_.emplace(key, r);
  if (inserted) return;
  it->second = static_cast<std::uint32_t>((static_cast<std::uint64_t>(it->second) + r) % modulus_);
  if (it->second == 0) terms_.erase(it);
}

void FiniteGroupRingElement::require_compatible(const FiniteGroupRingElement& o) const {
  if (o.modulus_ != modulus_ || o.rank_ != rank_) throw std::invalid_argument("group ring parameters differ");
}

FiniteGroupRingElement& FiniteGroupRingElement::operator+=(const FiniteGroupRingElement& o) {
  require_compatible(o);
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

FiniteGroupRingElement& FiniteGroupRingElement::operator-=(const FiniteGroupRingElement& o) {
  require_compatible(o);
  for (const auto& [k, c] : o.terms_) add_term(k, static_cast<std::int64_t>(modulus_) - c);
  return *this;
}

FiniteGroupRingElement FiniteGroupRingElement::operator-() const {
  FiniteGroupRingElement r(modulus_, rank_);
  r -= *this;
  return r;
}

FiniteGroupRingElement FiniteGroupRingElement::mapped(const IntMatrix& a) const {
  if (a.rows() != rank_ || a.cols() != rank_) throw std::invalid_argument("matrix has the wrong size");
  FiniteGroupRingElement r(modulus_, rank_);
  for (const auto& [k, c] : terms_) r.add_term(encode(a * decode(k)), c);
  return r;
}

FiniteGroupRingElement operator+(FiniteGroupRingElement a, const FiniteGroupRingElement& b) { return a += b; }
FiniteGroupRingElement operator-(FiniteGroupRingElement a, const FiniteGroupRingElement& b) { return a -= b; }

FiniteGroupRingElement operator*(const FiniteGroupRingElement& a, const FiniteGroupRingElement& b) {
  if (a.modulus() != b.modulus() || a.rank() != b.rank())
    throw std::invalid_argument("group ring parameters differ");
  FiniteGroupRingElement r(a.modulus(), a.rank());
  const std::uint64_t m = a.modulus();
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      // Digit-wise addition mod m of the packed exponent vectors.
      std::uint64_t x = ka, y = kb, key = 0, place = 1;
      for (std::uint32_t i = 0; i < a.rank(); ++i) {
        key += ((x % m + y % m) % m) * place;
        x /= m;
        y /= m;
        place *= m;
      }
      r.add_term(key, static_cast<std::int64_t>((static_cast<std::uint64_t>(ca) * cb) % m));
    }
  return r;
}

std::string to_string(const FiniteGroupRingElement& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : a.terms()) {
    if (!first) out += " + ";
    first = false;
    out += std::to_string(c);
    if (k != 0) out += "*g" + to_string(a.decode(k));
  }
  return out;
}

}  // namespace fgcert
