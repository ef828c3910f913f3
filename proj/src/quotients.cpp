#include "fgcert/quotients.hpp"

#include <deque>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include <json.hpp>

namespace fgcert {

// --- FiniteQuotient -----------------------------------------------------------

FiniteQuotient::FiniteQuotient(AlphabetPtr alphabet, std::size_t size, std::vector<Permutation> images)
    : alphabet_(std::move(alphabet)), size_(size), images_(std::move(images)) {
  if (!alphabet_) throw std::invalid_argument("quotient needs an alphabet");
  if (size_ == 0) throw std::invalid_argument("quotient target size must be positive");
  if (images_.size() != alphabet_->rank())
    throw std::invalid_argument("quotient needs one permutation per generator");
  inverse_images_.assign(images_.size(), Permutation(size_, 0));
  for (std::size_t g = 0; g < images_.size(); ++g) {
    if (images_[g].size() != size_) throw std::invalid_argument("permutation has the wrong length");
    std::vector<bool> hit(size_, false);
    for (std::size_t p = 0; p < size_; ++p) {
      const auto q = images_[g][p];
      if (q >= size_ || hit[q]) throw std::invalid_argument("generator image is not a bijection");
      hit[q] = true;
      inverse_images_[g][q] = static_cast<std::uint32_t>(p);
    }
  }
}

std::uint32_t FiniteQuotient::act(std::uint32_t point, const Word& w) const {
  require_same_alphabet(w.alphabet(), alphabet_, "quotient action");
  for (const auto& s : w.syllables()) {
    const bool inv = s.exponent < 0;
    const std::int64_t n = inv ? -s.exponent : s.exponent;
    // Exponents can be large (p-th powers); cycle length bounds the work.
    std::uint32_t start = point;
    std::int64_t steps = 0;
    while (steps < n) {
      point = act(point, s.generator, inv);
      ++steps;
      if (point == start) {
        steps = n - (n % steps);
        start = static_cast<std::uint32_t>(-1);
      }
    }
  }
  return point;
}

std::vector<std::uint32_t> FiniteQuotient::orbit(std::uint32_t from) const {
  std::vector<bool> seen(size_, false);
  std::vector<std::uint32_t> out{from};
  seen[from] = true;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::uint32_t g = 0; g < images_.size(); ++g)
      for (bool inv : {false, true}) {
        const auto q = act(out[i], g, inv);
        if (!seen[q]) {
          seen[q] = true;
          out.push_back(q);
        }
      }
  return out;
}

FiniteQuotient FiniteQuotient::from_json(const nlohmann::json& j) {
  auto names = j.at("alphabet").get<std::vector<std::string>>();
  const auto size = j.at("targetSize").get<std::size_t>();
  const auto& gens = j.at("generatorImages");
  std::vector<Permutation> images;
  if (gens.is_object()) {
    for (const auto& n : names) images.push_back(gens.at(n).get<Permutation>());
  } else {
    images = gens.get<std::vector<Permutation>>();
  }
  if (j.contains("basePoint") && j.at("basePoint").get<std::size_t>() != 0)
    throw std::invalid_argument("base point must be 0");
  return FiniteQuotient(make_alphabet(std::move(names)), size, std::move(images));
}

nlohmann::json FiniteQuotient::to_json() const {
  nlohmann::ordered_json j;
  j["alphabet"] = alphabet_->names();
  j["targetSize"] = size_;
  j["generatorImages"] = images_;
  j["basePoint"] = 0;
  return j;
}

FiniteQuotient abelian_quotient(const AlphabetPtr& alphabet, std::span<const std::uint32_t> moduli) {
  std::size_t size = 1;
  for (auto m : moduli) {
    if (m == 0) throw std::invalid_argument("moduli must be positive");
    size *= m;
  }
  if (moduli.size() != alphabet->rank()) throw std::invalid_argument("one modulus per generator");
  std::vector<Permutation> images(alphabet->rank(), Permutation(size));
  for (std::size_t p = 0; p < size; ++p) {
    std::size_t stride = 1;
    for (std::size_t g = 0; g < moduli.size(); ++g) {
      const std::size_t digit = (p / stride) % moduli[g];
      const std::size_t next = (digit + 1) % moduli[g];
      images[g][p] = static_cast<std::uint32_t>(p + (next - digit) * stride);
      stride *= moduli[g];
    }
  }
  return FiniteQuotient(alphabet, size, std::move(images));
}

FiniteQuotient mod_abelianization_quotient(const AlphabetPtr& alphabet, std::uint32_t m) {
  std::vector<std::uint32_t> moduli(alphabet->rank(), m);
  return abelian_quotient(alphabet, moduli);
}

FiniteQuotient intersect_stabilizers(std::span<const PointedAction> actions, std::size_t max_index) {
  if (actions.empty()) throw std::invalid_argument("need at least one action");
  const auto& alphabet = actions.front().action.alphabet();
  for (const auto& a : actions) require_same_alphabet(a.action.alphabet(), alphabet, "intersect stabilizers");

  using Tuple = std::vector<std::uint32_t>;
  std::map<Tuple, std::uint32_t> index;
  std::vector<Tuple> points;
  Tuple start;
  for (const auto& a : actions) start.push_back(a.point);
  index.emplace(start, 0);
  points.push_back(start);

  const std::size_t rank = alphabet->rank();
  std::vector<std::vector<std::uint32_t>> table(rank);
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::uint32_t g = 0; g < rank; ++g) {
      Tuple next(actions.size());
      for (std::size_t k = 0; k < actions.size(); ++k) next[k] = actions[k].action.act(points[i][k], g, false);
      auto [it, inserted] = index.emplace(next, static_cast<std::uint32_t>(points.size()));
      if (inserted) {
        if (points.size() >= max_index)
          throw ResourceError("orbit exceeds the limit of " + std::to_string(max_index) + " points");
        points.push_back(std::move(next));
      }
      table[g].push_back(it->second);
    }
  }
  // The orbit under positive letters alone is closed: each generator permutes
  // a finite set, so inverse letters add nothing.
  return FiniteQuotient(alphabet, points.size(), std::move(table));
}

// --- SchreierSystem -----------------------------------------------------------

SchreierSystem::SchreierSystem(FiniteQuotient quotient, std::vector<Word> transversal,
                               std::vector<std::uint32_t> coset_of_point,
                               std::vector<std::uint32_t> point_of_coset, std::vector<Word> generators,
                               std::vector<std::int64_t> generator_at, AlphabetPtr generator_alphabet)
    : quotient_(std::move(quotient)),
      transversal_(std::move(transversal)),
      coset_of_point_(std::move(coset_of_point)),
      point_of_coset_(std::move(point_of_coset)),
      generators_(std::move(generators)),
      generator_at_(std::move(generator_at)),
      generator_alphabet_(std::move(generator_alphabet)),
      expansion_(generator_alphabet_, quotient_.alphabet(), generators_) {}

std::shared_ptr<const SchreierSystem> SchreierSystem::build(const FiniteQuotient& quotient,
                                                            GeneratorOrder order,
                                                            AlphabetPtr generator_names,
                                                            std::size_t max_index) {
  const auto& alphabet = quotient.alphabet();
  const std::size_t rank = alphabet->rank();
  constexpr auto kUnseen = static_cast<std::uint32_t>(-1);

  std::vector<std::uint32_t> coset_of_point(quotient.size(), kUnseen);
  std::vector<std::uint32_t> point_of_coset{0};
  std::vector<Word> transversal{Word(alphabet)};
  coset_of_point[0] = 0;
  for (std::size_t c = 0; c < point_of_coset.size(); ++c) {
    for (std::uint32_t g = 0; g < rank; ++g)
      for (bool inv : {false, true}) {
        const auto q = quotient.act(point_of_coset[c], g, inv);
        if (coset_of_point[q] != kUnseen) continue;
        if (point_of_coset.size() >= max_index)
          throw ResourceError("subgroup index exceeds the limit of " + std::to_string(max_index));
        coset_of_point[q] = static_cast<std::uint32_t>(point_of_coset.size());
        point_of_coset.push_back(q);
        Word rep = transversal[c];
        rep.push_back(g, inv ? -1 : 1);
        transversal.push_back(std::move(rep));
      }
  }

  const std::size_t index = transversal.size();
  std::vector<std::int64_t> generator_at(index * rank, -1);
  std::vector<Word> generators;
  auto visit = [&](std::size_t c, std::uint32_t g) {
    const auto target = coset_of_point[quotient.act(point_of_coset[c], g, false)];
    Word s = transversal[c] * Word::generator(alphabet, g) * inverse(transversal[target]);
    if (s.is_identity()) return;
    generator_at[c * rank + g] = static_cast<std::int64_t>(generators.size());
    generators.push_back(std::move(s));
  };
  if (order == GeneratorOrder::transversal_major) {
    for (std::size_t c = 0; c < index; ++c)
      for (std::uint32_t g = 0; g < rank; ++g) visit(c, g);
  } else {
    for (std::uint32_t g = 0; g < rank; ++g)
      for (std::size_t c = 0; c < index; ++c) visit(c, g);
  }

  if (generator_names) {
    if (generator_names->rank() != generators.size())
      throw std::invalid_argument("expected " + std::to_string(generators.size()) + " generator names");
  } else {
    generator_names = indexed_alphabet("e", generators.size());
  }
  return std::shared_ptr<const SchreierSystem>(
      new SchreierSystem(quotient, std::move(transversal), std::move(coset_of_point), std::move(point_of_coset),
                         std::move(generators), std::move(generator_at), std::move(generator_names)));
}

std::uint32_t SchreierSystem::coset_step(std::uint32_t coset, std::uint32_t gen, bool inverse) const {
  return coset_of_point_[quotient_.act(point_of_coset_[coset], gen, inverse)];
}

std::uint32_t SchreierSystem::coset_of(const Word& w) const {
  return coset_of_point_[quotient_.act(0, w)];
}

std::optional<std::uint32_t> SchreierSystem::generator_at(std::uint32_t coset, std::uint32_t gen) const {
  const auto v = generator_at_[coset * alphabet()->rank() + gen];
  if (v < 0) return std::nullopt;
  return static_cast<std::uint32_t>(v);
}

Word SchreierSystem::rewrite(const Word& w) const {
  require_same_alphabet(w.alphabet(), alphabet(), "rewrite");
  Word out(generator_alphabet_);
  std::uint32_t c = 0;
  for (const auto& s : w.syllables()) {
    const bool inv = s.exponent < 0;
    const std::int64_t n = inv ? -s.exponent : s.exponent;
    for (std::int64_t k = 0; k < n; ++k) {
      if (!inv) {
        // t_c x = s(c, x) t_{c x}
        if (auto e = generator_at(c, s.generator)) out.push_back(*e, 1);
        c = coset_step(c, s.generator, false);
      } else {
        // t_c x^-1 = s(d, x)^-1 t_d  where d = c x^-1
        const auto d = coset_step(c, s.generator, true);
        if (auto e = generator_at(d, s.generator)) out.push_back(*e, -1);
        c = d;
      }
    }
  }
  if (c != 0) throw PreconditionError("word " + to_string(w) + " is not in the subgroup");
  return out;
}

std::size_t schreier_rank(std::size_t index, std::size_t rank) {
  if (index == 0 || rank == 0) throw std::invalid_argument("index and rank must be positive");
  return index * (rank - 1) + 1;
}

bool is_prefix_closed(const std::vector<Word>& transversal) {
  std::map<Word, bool> present;
  for (const auto& t : transversal) present.emplace(t, true);
  for (const auto& t : transversal) {
    Word prefix(t.alphabet());
    if (!present.count(prefix)) return false;
    for (const auto& l : t.letters()) {
      prefix.push_back(l.generator, l.inverse ? -1 : 1);
      if (!present.count(prefix)) return false;
    }
  }
  return true;
}

// --- SubgroupHom ----------------------------------------------------------------

SubgroupHom::SubgroupHom(SchreierSystemPtr system, AlphabetPtr target, std::vector<Word> images)
    : system_(std::move(system)),
      on_generators_([&] {
        if (images.size() != system_->schreier_generators().size())
          throw std::invalid_argument("expected " + std::to_string(system_->schreier_generators().size()) +
                                      " images, got " + std::to_string(images.size()));
        return FreeHom(system_->generator_alphabet(), std::move(target), std::move(images));
      }()) {}

FiniteQuotient preimage_action(const SubgroupHom& h, const FiniteQuotient& target) {
  require_same_alphabet(h.target(), target.alphabet(), "preimage action");
  const auto& s = h.system();
  const std::size_t rank = s.alphabet()->rank();
  const std::size_t tsize = target.size();
  const std::size_t size = s.index() * tsize;
  std::vector<Permutation> images(rank, Permutation(size));
  // Point (c, k) is encoded as c * tsize + k.
  std::vector<Word> generator_images;
  for (const auto& w : h.on_generators().images()) generator_images.push_back(w);
  for (std::uint32_t g = 0; g < rank; ++g)
    for (std::uint32_t c = 0; c < s.index(); ++c) {
      const auto next = s.coset_step(c, g, false);
      const auto e = s.generator_at(c, g);
      for (std::uint32_t k = 0; k < tsize; ++k) {
        const auto k2 = e ? target.act(k, generator_images[*e]) : k;
        images[g][c * tsize + k] = static_cast<std::uint32_t>(next * tsize + k2);
      }
    }
  return FiniteQuotient(s.alphabet(), size, std::move(images));
}

FiniteQuotient klein_quotient() {
  const std::uint32_t moduli[] = {2, 2};
  return abelian_quotient(standard_alphabet(2), moduli);
}

FiniteQuotient c2_quotient_rank3() {
  const std::uint32_t moduli[] = {2, 1, 1};
  return abelian_quotient(standard_alphabet(3), moduli);
}

}  // namespace fgcert
