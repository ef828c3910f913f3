#include "fgcert/homs.hpp"

#include <sstream>
#include <stdexcept>

namespace fgcert {

FreeHom::FreeHom(AlphabetPtr domain, AlphabetPtr codomain, std::vector<Word> images)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(images)) {
  if (!domain_ || !codomain_) throw std::invalid_argument("homomorphism needs alphabets");
  if (images_.size() != domain_->rank())
    throw std::invalid_argument("homomorphism needs one image per domain generator");
  for (const auto& w : images_) require_same_alphabet(w.alphabet(), codomain_, "homomorphism image");
}

FreeHom FreeHom::identity(const AlphabetPtr& alphabet) {
  std::vector<Word> images;
  for (std::size_t i = 0; i < alphabet->rank(); ++i) images.push_back(Word::generator(alphabet, i));
  return FreeHom(alphabet, alphabet, std::move(images));
}

Word FreeHom::operator()(const Word& w) const {
  require_same_alphabet(w.alphabet(), domain_, "apply homomorphism");
  Word out(codomain_);
  for (const auto& s : w.syllables()) out *= images_[s.generator].power(s.exponent);
  return out;
}

bool operator==(const FreeHom& a, const FreeHom& b) {
  return same_alphabet(a.domain_, b.domain_) && same_alphabet(a.codomain_, b.codomain_) &&
         a.images_ == b.images_;
}

FreeHom compose(const FreeHom& f, const FreeHom& g) {
  require_same_alphabet(g.codomain(), f.domain(), "compose");
  std::vector<Word> images;
  images.reserve(g.images().size());
  for (const auto& w : g.images()) images.push_back(f(w));
  return FreeHom(g.domain(), f.codomain(), std::move(images));
}

bool fixes_word(const FreeHom& h, const Word& w) { return h(w) == w; }

IntMatrix abelianization_matrix(const FreeHom& h) {
  if (!h.is_endomorphism()) throw AlphabetMismatch("abelianization matrix needs an endomorphism");
  const std::size_t n = h.domain()->rank();
  IntMatrix m(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    const auto sums = h.image(c).exponent_sums();
    for (std::size_t r = 0; r < n; ++r) m(r, c) = sums[r];
  }
  return m;
}

// --- VerifiedAut ----------------------------------------------------------------

namespace {

bool is_identity_on_generators(const FreeHom& h) { return h == FreeHom::identity(h.domain()); }

}  // namespace

VerifiedAut::VerifiedAut(FreeHom forward, FreeHom backward)
    : forward_(std::move(forward)), backward_(std::move(backward)) {
  if (!forward_.is_endomorphism() || !backward_.is_endomorphism())
    throw PreconditionError("automorphism must map a free group to itself");
  require_same_alphabet(forward_.domain(), backward_.domain(), "automorphism");
  if (!is_identity_on_generators(compose(forward_, backward_)) ||
      !is_identity_on_generators(compose(backward_, forward_)))
    throw PreconditionError("supplied inverse does not invert the endomorphism");
}

VerifiedAut VerifiedAut::identity(const AlphabetPtr& alphabet) {
  return VerifiedAut(FreeHom::identity(alphabet), FreeHom::identity(alphabet), Trusted{});
}

VerifiedAut compose(const VerifiedAut& f, const VerifiedAut& g) {
  return VerifiedAut(compose(f.forward_, g.forward_), compose(g.backward_, f.backward_),
                     VerifiedAut::Trusted{});
}

VerifiedAut inner_aut(const Word& g) {
  const auto& a = g.alphabet();
  std::vector<Word> fwd, bwd;
  const Word gi = inverse(g);
  for (std::size_t i = 0; i < a->rank(); ++i) {
    const Word x = Word::generator(a, i);
    fwd.push_back(gi * x * g);
    bwd.push_back(g * x * gi);
  }
  return VerifiedAut(FreeHom(a, a, std::move(fwd)), FreeHom(a, a, std::move(bwd)));
}

VerifiedAut transvection(const AlphabetPtr& alphabet, std::size_t i, std::size_t j, int sign, bool right) {
  if (i == j || i >= alphabet->rank() || j >= alphabet->rank())
    throw std::invalid_argument("transvection needs two distinct generators");
  if (sign != 1 && sign != -1) throw std::invalid_argument("transvection sign must be +1 or -1");
  auto fwd = FreeHom::identity(alphabet).images();
  auto bwd = fwd;
  const Word xi = Word::generator(alphabet, i);
  const Word xj = Word::generator(alphabet, j, sign);
  const Word xj_inv = inverse(xj);
  fwd[i] = right ? xi * xj : xj * xi;
  bwd[i] = right ? xi * xj_inv : xj_inv * xi;
  return VerifiedAut(FreeHom(alphabet, alphabet, fwd), FreeHom(alphabet, alphabet, bwd));
}

VerifiedAut inversion(const AlphabetPtr& alphabet, std::size_t i) {
  auto images = FreeHom::identity(alphabet).images();
  images.at(i) = Word::generator(alphabet, i, -1);
  FreeHom h(alphabet, alphabet, images);
  return VerifiedAut(h, h);
}

VerifiedAut permutation(const AlphabetPtr& alphabet, const std::vector<std::size_t>& perm) {
  const std::size_t n = alphabet->rank();
  if (perm.size() != n) throw std::invalid_argument("permutation has the wrong length");
  std::vector<Word> fwd(n, Word(alphabet)), bwd(n, Word(alphabet));
  std::vector<bool> hit(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (perm[i] >= n || hit[perm[i]]) throw std::invalid_argument("not a permutation");
    hit[perm[i]] = true;
    fwd[i] = Word::generator(alphabet, perm[i]);
    bwd[perm[i]] = Word::generator(alphabet, i);
  }
  return VerifiedAut(FreeHom(alphabet, alphabet, fwd), FreeHom(alphabet, alphabet, bwd));
}

namespace named {

namespace {

VerifiedAut from_text(std::size_t rank, std::string_view forward, std::string_view backward) {
  const auto a = standard_alphabet(rank);
  return VerifiedAut(parse_hom(forward, a, a), parse_hom(backward, a, a));
}

}  // namespace

VerifiedAut alpha_rank2() { return from_text(2, "x -> x\ny -> y x^2", "x -> x\ny -> y x^-2"); }
VerifiedAut beta_rank2() { return from_text(2, "x -> x y^2\ny -> y", "x -> x y^-2\ny -> y"); }
VerifiedAut alpha_rank3() {
  return from_text(3, "x -> x\ny -> y\nz -> z y", "x -> x\ny -> y\nz -> z y^-1");
}
VerifiedAut beta_rank3() {
  return from_text(3, "x -> x\ny -> y z\nz -> z", "x -> x\ny -> y z^-1\nz -> z");
}

}  // namespace named

// --- text format ------------------------------------------------------------------

FreeHom parse_hom(std::string_view text, const AlphabetPtr& domain, const AlphabetPtr& codomain) {
  std::vector<std::optional<Word>> images(domain->rank());
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    const auto line = text.substr(line_start, line_end - line_start);
    const auto first = line.find_first_not_of(" \t\r");
    if (first != std::string_view::npos && line[first] != '#') {
      const auto arrow = line.find("->");
      if (arrow == std::string_view::npos) throw ParseError("expected 'name -> word'", line_start + first);
      auto lhs = line.substr(0, arrow);
      const auto b = lhs.find_first_not_of(" \t");
      const auto e = lhs.find_last_not_of(" \t");
      lhs = b == std::string_view::npos ? std::string_view{} : lhs.substr(b, e - b + 1);
      const auto idx = domain->index_of(lhs);
      if (!idx) throw ParseError("unknown generator '" + std::string(lhs) + "'", line_start + first);
      if (images[*idx]) throw ParseError("generator '" + std::string(lhs) + "' given twice", line_start + first);
      std::string rhs(line.substr(arrow + 2));
      while (!rhs.empty() && (rhs.back() == '\r' || rhs.back() == ' ')) rhs.pop_back();
      try {
        images[*idx] = parse_word(rhs, codomain);
      } catch (const ParseError& err) {
        throw ParseError(std::string("in image of ") + std::string(lhs) + ": " + err.what(),
                         line_start + arrow + 2 + err.position());
      }
    }
    if (line_end == text.size()) break;
    line_start = line_end + 1;
  }
  std::vector<Word> out;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (!images[i]) throw ParseError("missing image for generator '" + domain->name(i) + "'", text.size());
    out.push_back(*images[i]);
  }
  return FreeHom(domain, codomain, std::move(out));
}

std::string format_hom(const FreeHom& h) {
  std::string out;
  for (std::size_t i = 0; i < h.images().size(); ++i)
    out += h.domain()->name(i) + " -> " + to_string(h.image(i)) + "\n";
  return out;
}

}  // namespace fgcert
