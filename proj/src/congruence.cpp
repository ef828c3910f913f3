#include "fgcert/congruence.hpp"

#include <set>

#include "fgcert/modp.hpp"

namespace fgcert {

SchreierSystemPtr klein_system() {
  static const SchreierSystemPtr system = SchreierSystem::build(klein_quotient());
  return system;
}

SubgroupHom klein_pi(const AlphabetPtr& target) {
  if (target->rank() != 2) throw PreconditionError("pi needs a rank-2 target");
  const Word a = Word::generator(target, 0), b = Word::generator(target, 1);
  return SubgroupHom(klein_system(), target, {a, Word(target), b, inverse(a), inverse(b)});
}

CongruenceInput make_congruence_input(FiniteQuotient k_quotient, std::uint64_t p) {
  if (k_quotient.alphabet()->rank() != 2) throw PreconditionError("K must be given as an action of a rank-2 free group");
  if (p == 2 || !is_prime(p)) throw PreconditionError("p must be an odd prime");
  const std::size_t n = k_quotient.orbit(0).size();
  if ((6 * n) % p == 0)
    throw PreconditionError("p = " + std::to_string(p) + " divides 6n = " + std::to_string(6 * n));
  return CongruenceInput{std::move(k_quotient), p, n};
}

FiniteQuotient trivial_k_quotient() {
  const auto names = make_alphabet({"a", "b"});
  return FiniteQuotient(names, 1, {{0}, {0}});
}

// --- N ------------------------------------------------------------------------

NOracle::NOracle(const CongruenceInput& input, std::size_t max_index)
    : k_(input.k_quotient), pi_(klein_pi(input.k_quotient.alphabet())) {
  const auto f2 = klein_system()->alphabet();
  const Word x = Word::generator(f2, 0), y = Word::generator(f2, 1);
  conjugators_ = {Word(f2), x, y, x * y};

  std::vector<PointedAction> actions;
  actions.push_back({mod_abelianization_quotient(f2, 6), 0});
  // Base stabilizer of the preimage action is pi^-1(K); t w t^-1 fixes the
  // base point exactly when w fixes base * t.
  const FiniteQuotient pre = preimage_action(pi_, k_);
  for (const auto& t : conjugators_) actions.push_back({pre, pre.act(0, t)});
  system_ = SchreierSystem::build(intersect_stabilizers(actions, max_index), GeneratorOrder::transversal_major,
                                  nullptr, max_index);

  // N is normal iff conjugating each free generator of N by x and y stays in N.
  normal_ = true;
  for (const auto& s : system_->schreier_generators())
    for (const auto& g : {x, y})
      if (!system_->contains(conjugate(s, g))) normal_ = false;

  // The divisibility of the index is a consequence of normality; a point
  // stabilizer K that is not normal can break it, so only normal N is held to it.
  const std::size_t n = input.n;
  const std::size_t bound = 36 * n * n * n * n;
  if (normal_ && bound % system_->index() != 0)
    throw std::logic_error("index of N = " + std::to_string(system_->index()) + " does not divide 36 n^4");
}

bool NOracle::pi_lands_in_k(const Word& w) const { return k_.fixes_base(pi_(w)); }

bool NOracle::contains(const Word& w) const {
  for (auto e : w.exponent_sums())
    if (e % 6 != 0) return false;
  for (const auto& t : conjugators_)
    if (!pi_lands_in_k(t * w * inverse(t))) return false;
  return true;
}

bool MOracle::contains(const Word& w) const {
  for (auto e : w.exponent_sums())
    if (e % 4 != 0) return false;
  if (!n_->contains(w)) return false;
  const auto p = static_cast<std::int64_t>(p_);
  for (auto e : n_->schreier().rewrite(w).exponent_sums())
    if (e % p != 0) return false;
  return true;
}

// --- certificate --------------------------------------------------------------------

std::size_t image_order_in_4_torus(const NOracle& n, std::uint64_t p) {
  using Point = std::pair<std::int64_t, std::int64_t>;
  std::vector<Point> gens;
  const auto pp = static_cast<std::int64_t>(p % 4);
  for (const auto& g : n.schreier().schreier_generators()) {
    const auto v = g.exponent_sums();
    gens.emplace_back((((pp * v[0]) % 4) + 4) % 4, (((pp * v[1]) % 4) + 4) % 4);
  }
  std::set<Point> seen{{0, 0}};
  std::vector<Point> frontier{{0, 0}};
  while (!frontier.empty()) {
    const Point q = frontier.back();
    frontier.pop_back();
    for (const auto& g : gens) {
      const Point r{(q.first + g.first) % 4, (q.second + g.second) % 4};
      if (seen.insert(r).second) frontier.push_back(r);
    }
  }
  return seen.size();
}

Certificate certify(const CongruenceInput& input, const NOracle& n) {
  using boost::multiprecision::pow;
  Certificate c;
  c.n = input.n;
  c.p = input.p;
  c.index_of_n = n.index();
  c.rank_of_n = n.rank();
  c.n_is_normal = n.is_normal();
  if (c.rank_of_n != schreier_rank(c.index_of_n, 2)) throw std::logic_error("Schreier rank mismatch for N");
  const BigInt p = input.p;
  c.order_f2_mod_npn = BigInt(c.index_of_n) * pow(p, static_cast<unsigned>(c.rank_of_n));
  c.image_order_in_4_torus = image_order_in_4_torus(n, input.p);
  c.order_f2_mod_m = c.order_f2_mod_npn * c.image_order_in_4_torus;
  const BigInt n4 = BigInt(input.n) * input.n * input.n * input.n;
  c.bound = 144 * n4 * pow(p, static_cast<unsigned>(36 * n4 + 1));
  c.divides = c.bound % c.order_f2_mod_m == 0;
  return c;
}

Certificate certify(const CongruenceInput& input) { return certify(input, NOracle(input)); }

nlohmann::ordered_json Certificate::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["p"] = p;
  j["indexOfN"] = index_of_n;
  j["rankOfN"] = rank_of_n;
  j["nIsNormal"] = n_is_normal;
  j["orderOfF2ModNpN"] = order_f2_mod_npn.str();
  j["imageOrderIn4Torus"] = image_order_in_4_torus;
  j["orderOfF2ModM"] = order_f2_mod_m.str();
  j["bound"] = bound.str();
  j["divides"] = divides;
  j["equalsBound"] = order_f2_mod_m == bound;
  return j;
}

}  // namespace fgcert
