#include "fgcert/magnus.hpp"

#include "fgcert/errors.hpp"

#include <stdexcept>

namespace fgcert {

std::vector<FreeGroupRingElement> fox_coordinates(const Word& w) {
  const auto& a = w.alphabet();
  std::vector<FreeGroupRingElement> coords(a->rank(), FreeGroupRingElement(a));
  const auto letters = w.letters();
  // suffix = l_k ... l_L, built from the right.
  Word suffix(a);
  for (std::size_t k = letters.size(); k-- > 0;) {
    const auto& l = letters[k];
    if (l.inverse) {
      suffix = Word::generator(a, l.generator, -1) * suffix;
      coords[l.generator].add_term(suffix, -1);
    } else {
      coords[l.generator].add_term(suffix, 1);
      suffix = Word::generator(a, l.generator) * suffix;
    }
  }
  return coords;
}

FreeGroupRingElement fox_resubstitute(const AlphabetPtr& alphabet, const std::vector<FreeGroupRingElement>& c) {
  if (c.size() != alphabet->rank()) throw std::invalid_argument("need one coordinate per generator");
  FreeGroupRingElement sum(alphabet);
  for (std::size_t i = 0; i < c.size(); ++i) {
    sum += Word::generator(alphabet, i) * c[i];
    sum -= c[i];
  }
  return sum;
}

// --- PhiElement -----------------------------------------------------------------

namespace {

IntVector reduced(IntVector v, std::uint32_t m) {
  for (auto& x : v) x = ((x % m) + m) % m;
  return v;
}

// sum_i (X_i - 1) t_i - (g - 1) in Z/m[(Z/m)^n].
bool consistent(std::uint32_t m, const IntVector& g, const std::vector<FiniteGroupRingElement>& t) {
  const auto n = static_cast<std::uint32_t>(g.size());
  FiniteGroupRingElement lhs(m, n);
  for (std::uint32_t i = 0; i < n; ++i) {
    IntVector unit(n, 0);
    unit[i] = 1;
    lhs += FiniteGroupRingElement::group_element(m, unit) * t[i];
    lhs -= t[i];
  }
  const auto rhs = FiniteGroupRingElement::group_element(m, g) - FiniteGroupRingElement::constant(m, n, 1);
  return lhs == rhs;
}

}  // namespace

PhiElement::PhiElement(std::uint32_t modulus, IntVector top, std::vector<FiniteGroupRingElement> bottom, Trusted)
    : modulus_(modulus), top_(std::move(top)), bottom_(std::move(bottom)) {}

PhiElement::PhiElement(std::uint32_t modulus, IntVector top, std::vector<FiniteGroupRingElement> bottom)
    : modulus_(modulus), top_(reduced(std::move(top), modulus)), bottom_(std::move(bottom)) {
  if (top_.empty() || bottom_.size() != top_.size()) throw std::invalid_argument("top and bottom rows differ in rank");
  for (const auto& b : bottom_)
    if (b.modulus() != modulus_ || b.rank() != top_.size())
      throw std::invalid_argument("bottom row has the wrong group ring");
  if (!consistent(modulus_, top_, bottom_))
    throw PreconditionError("bottom row does not satisfy the Fox identity for the top row");
}

PhiElement PhiElement::identity(std::uint32_t modulus, std::uint32_t rank) {
  return PhiElement(modulus, IntVector(rank, 0),
                    std::vector<FiniteGroupRingElement>(rank, FiniteGroupRingElement(modulus, rank)));
}

PhiElement operator*(const PhiElement& a, const PhiElement& b) {
  if (a.modulus_ != b.modulus_ || a.rank() != b.rank()) throw std::invalid_argument("Phi parameters differ");
  const auto m = a.modulus_;
  IntVector g(a.rank());
  for (std::size_t i = 0; i < g.size(); ++i) g[i] = (a.top_[i] + b.top_[i]) % m;
  const auto g2 = FiniteGroupRingElement::group_element(m, b.top_);
  std::vector<FiniteGroupRingElement> t;
  for (std::size_t i = 0; i < g.size(); ++i) t.push_back(a.bottom_[i] * g2 + b.bottom_[i]);
  // The identity is preserved by products, so rechecking is redundant; the
  // public constructor still runs it on every value built from outside.
  return PhiElement(m, std::move(g), std::move(t), PhiElement::Trusted{});
}

PhiElement PhiElement::inverse() const {
  IntVector g(top_.size());
  for (std::size_t i = 0; i < g.size(); ++i) g[i] = (modulus_ - top_[i]) % modulus_;
  const auto gi = FiniteGroupRingElement::group_element(modulus_, g);
  std::vector<FiniteGroupRingElement> t;
  for (const auto& b : bottom_) t.push_back(-(b * gi));
  return PhiElement(modulus_, std::move(g), std::move(t), Trusted{});
}

std::string to_string(const PhiElement& a) {
  std::string out = "(" + to_string(a.top()) + "; ";
  for (std::size_t i = 0; i < a.bottom().size(); ++i) out += (i ? ", " : "") + to_string(a.bottom()[i]);
  return out + ")";
}

PhiElement magnus_image(const Word& w, std::uint32_t modulus) {
  std::vector<FiniteGroupRingElement> bottom;
  for (const auto& c : fox_coordinates(w)) bottom.push_back(FiniteGroupRingElement::reduce(c, modulus));
  return PhiElement(modulus, w.exponent_sums(), std::move(bottom));
}

// --- J ------------------------------------------------------------------------

FreeRingMatrix jacobian(const FreeHom& h) {
  if (!h.is_endomorphism()) throw AlphabetMismatch("jacobian needs an endomorphism");
  const auto& a = h.domain();
  const std::size_t n = a->rank();
  FreeRingMatrix j(n, FreeGroupRingElement(a));
  for (std::size_t col = 0; col < n; ++col) {
    auto coords = fox_coordinates(h.image(col));
    for (std::size_t row = 0; row < n; ++row) j(row, col) = std::move(coords[row]);
  }
  return j;
}

FiniteRingMatrix jacobian_mod(const FreeHom& h, std::uint32_t modulus) {
  const auto j = jacobian(h);
  const auto n = static_cast<std::uint32_t>(j.size());
  FiniteRingMatrix out(n, FiniteGroupRingElement(modulus, n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out(r, c) = FiniteGroupRingElement::reduce(j(r, c), modulus);
  return out;
}

FreeRingMatrix apply_entrywise(const FreeHom& f, const FreeRingMatrix& m) {
  return m.transformed([&](const FreeGroupRingElement& e) { return e.mapped(f); });
}

FiniteRingMatrix apply_entrywise(const FreeHom& f, const FiniteRingMatrix& m) {
  const IntMatrix a = abelianization_matrix(f);
  return m.transformed([&](const FiniteGroupRingElement& e) { return e.mapped(a); });
}

bool acts_trivially_mod(const FreeHom& h, std::uint32_t modulus) {
  const IntMatrix a = abelianization_matrix(h);
  const auto m = static_cast<std::int64_t>(modulus);
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if ((((a(r, c) - (r == c ? 1 : 0)) % m) + m) % m != 0) return false;
  return true;
}

KaReport ka_check(const std::vector<VerifiedAut>& auts, std::uint32_t modulus) {
  KaReport report;
  report.modulus = modulus;
  std::vector<const VerifiedAut*> members;
  std::vector<FiniteRingMatrix> js;
  for (std::size_t i = 0; i < auts.size(); ++i) {
    if (!acts_trivially_mod(auts[i].forward(), modulus)) {
      report.precondition_failures.push_back("automorphism " + std::to_string(i) + " is not trivial mod " +
                                             std::to_string(modulus));
      continue;
    }
    members.push_back(&auts[i]);
    js.push_back(jacobian_mod(auts[i].forward(), modulus));
  }
  report.automorphisms = members.size();
  for (std::size_t i = 0; i < members.size(); ++i) {
    const auto n = static_cast<std::uint32_t>(js[i].size());
    const auto id = FiniteRingMatrix::identity(n, FiniteGroupRingElement(modulus, n),
                                               FiniteGroupRingElement::constant(modulus, n, 1));
    ++report.inverse_checks;
    if (js[i] * jacobian_mod(members[i]->backward(), modulus) != id) ++report.failures;
    for (std::size_t j = 0; j < members.size(); ++j) {
      ++report.pairs_checked;
      const auto lhs = jacobian_mod(compose(members[i]->forward(), members[j]->forward()), modulus);
      if (lhs != js[i] * js[j]) ++report.failures;
    }
  }
  return report;
}

// --- local rings ------------------------------------------------------------------

LocalCommutatorReport local_commutator_check(std::uint64_t p, unsigned k, unsigned s, unsigned t,
                                             const std::vector<ModMatrix>& as, const std::vector<ModMatrix>& bs) {
  if (!is_prime(p) || k == 0 || s == 0 || t == 0) throw std::invalid_argument("bad local ring parameters");
  auto ipow = [p](unsigned e) {
    std::uint64_t r = 1;
    while (e-- > 0) r = checked::mul(static_cast<std::int64_t>(r), static_cast<std::int64_t>(p));
    return r;
  };
  const std::uint64_t m = ipow(k);
  const std::uint64_t ps = ipow(s), pt = ipow(t);
  // The commutator is checked modulo p^(s+t) capped at m (where it is exact).
  const std::uint64_t target = s + t >= k ? m : ipow(s + t);

  LocalCommutatorReport report{p, k, s, t, 0, 0};
  auto prepare = [&](const std::vector<ModMatrix>& xs, std::uint64_t ideal) {
    std::vector<std::pair<ModMatrix, ModMatrix>> out;  // (I + X, (I + X)^-1)
    for (const auto& x : xs) {
      if (x.modulus() != m || x.rows() != x.cols()) throw std::invalid_argument("sample has the wrong ring");
      if (!x.divisible_by(ideal)) throw PreconditionError("sample lies outside its ideal");
      const ModMatrix u = ModMatrix::identity(x.rows(), m) + x;
      out.emplace_back(u, unipotent_inverse(u));
    }
    return out;
  };
  const auto us = prepare(as, ps);
  const auto vs = prepare(bs, pt);
  for (const auto& [u, ui] : us)
    for (const auto& [v, vi] : vs) {
      ++report.pairs_checked;
      const ModMatrix c = u * v * ui * vi;
      const ModMatrix d = c - ModMatrix::identity(c.rows(), m);
      if (!d.divisible_by(target)) ++report.failures;
    }
  return report;
}

}  // namespace fgcert
