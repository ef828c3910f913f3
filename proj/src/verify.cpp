#include "fgcert/verify.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <sstream>

#include "fgcert/affine.hpp"
#include "fgcert/congruence.hpp"
#include "fgcert/magnus.hpp"
#include "fgcert/sampling.hpp"
#include "fgcert/schreier_modules.hpp"
#include "manifest_data.hpp"

namespace fgcert {

namespace {

using Json = nlohmann::json;

// --- shared context -------------------------------------------------------------------

struct Context {
  const Json& params;
  std::mt19937_64& rng;
  std::map<std::string, std::shared_ptr<const NOracle>>& n_cache;

  std::size_t get(const char* key, std::size_t fallback) const {
    return params.contains(key) ? params.at(key).get<std::size_t>() : fallback;
  }
};

using CheckFn = std::function<std::string(Context&)>;

std::string fraction(std::size_t ok, std::size_t total) { return std::to_string(ok) + "/" + std::to_string(total); }

template <class Range, class F>
std::string join(const Range& r, const std::string& sep, F&& f) {
  std::string out;
  bool first = true;
  for (const auto& v : r) {
    if (!first) out += sep;
    first = false;
    out += f(v);
  }
  return out;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

// --- Delta and pi -------------------------------------------------------------------

const AlphabetPtr& pi_target() {
  static const AlphabetPtr a = make_alphabet({"alpha", "beta"});
  return a;
}

const SubgroupHom& pi() {
  static const SubgroupHom h = klein_pi(pi_target());
  return h;
}

const VerifiedAut& named_rank2(const std::string& name) {
  static const VerifiedAut a = named::alpha_rank2(), b = named::beta_rank2();
  if (name == "alpha") return a;
  if (name == "beta") return b;
  throw std::invalid_argument("unknown automorphism " + name);
}

Word e_word(const std::string& text) { return parse_word(text, klein_system()->generator_alphabet()); }

std::string delta_row(const std::string& aut, std::size_t j) {
  const auto& s = *klein_system();
  const Word image = named_rank2(aut)(s.schreier_generators().at(j - 1));
  const Word sw = s.rewrite(image);
  std::string out = to_string(image) + " = " + to_string(sw);
  if (s.expand(sw) != image) out += " (expansion differs)";
  return out;
}

// Subgroup-word images of e2, e1e4, e3e5 under an automorphism.
std::vector<Word> invariance_images(const std::string& aut) {
  const auto& s = *klein_system();
  std::vector<Word> out;
  for (const char* w : {"e2", "e1 e4", "e3 e5"}) out.push_back(s.rewrite(named_rank2(aut)(s.expand(e_word(w)))));
  return out;
}

std::string factorization_check(Context& c) {
  const auto& s = *klein_system();
  const auto& aut = named_rank2(c.params.at("aut").get<std::string>());
  const Word f2_image = aut(s.expand(e_word(c.params.at("image").get<std::string>())));
  const Word displayed = e_word(c.params.at("factorization").get<std::string>());
  std::size_t in_kernel = 0, factors = 0;
  for (const auto& f : c.params.at("factors")) {
    ++factors;
    if (pi().on_subgroup_word(e_word(f.get<std::string>())).is_identity()) ++in_kernel;
  }
  std::string out = s.rewrite(f2_image) == displayed ? "subgroup words equal" : "subgroup words differ";
  out += s.expand(displayed) == f2_image ? "; F2 words equal" : "; F2 words differ";
  return out + "; factors in ker pi " + fraction(in_kernel, factors);
}

std::string induced(const std::string& aut, const char* generator) {
  const auto& s = *klein_system();
  return to_string(pi().on_subgroup_word(s.rewrite(named_rank2(aut)(s.expand(e_word(generator))))));
}

void register_section2(std::map<std::string, CheckFn>& r) {
  r["delta.transversal"] = [](Context&) {
    return join(klein_system()->transversal(), ", ", [](const Word& w) { return to_string(w); });
  };
  r["delta.schreier-generators"] = [](Context&) {
    return join(klein_system()->schreier_generators(), ", ", [](const Word& w) { return to_string(w); });
  };
  r["delta.schreier-rank"] = [](Context&) {
    const auto& s = *klein_system();
    const auto count = s.schreier_generators().size();
    const auto formula = schreier_rank(s.index(), s.alphabet()->rank());
    return count == formula ? std::to_string(count)
                            : "generators " + std::to_string(count) + ", formula " + std::to_string(formula);
  };
  r["delta.abelianization-alpha"] = [](Context&) { return to_string(abelianization_matrix(named_rank2("alpha").forward())); };
  r["delta.abelianization-beta"] = [](Context&) { return to_string(abelianization_matrix(named_rank2("beta").forward())); };
  for (std::size_t j = 1; j <= 5; ++j) {
    r["delta.alpha-e" + std::to_string(j)] = [j](Context&) { return delta_row("alpha", j); };
    r["delta.beta-e" + std::to_string(j)] = [j](Context&) { return delta_row("beta", j); };
  }
  r["delta.pi-images"] = [](Context&) {
    return join(pi().on_generators().images(), ", ", [](const Word& w) { return to_string(w); });
  };
  r["delta.ker-pi-normal-generators"] = [](Context&) {
    const std::vector<const char*> gens{"e2", "e1 e4", "e3 e5"};
    return join(gens, " | ", [](const char* g) { return to_string(pi().on_subgroup_word(e_word(g))); });
  };
  for (std::string aut : {"alpha", "beta"}) {
    r["delta." + aut + "-invariance-words"] = [aut](Context&) {
      return join(invariance_images(aut), " | ", [](const Word& w) { return to_string(w); });
    };
    r["delta." + aut + "-invariance-kernel"] = [aut](Context&) {
      return join(invariance_images(aut), " | ", [](const Word& w) { return to_string(pi().on_subgroup_word(w)); });
    };
  }
  r["delta.alpha-e3e5-factorization"] = factorization_check;
  r["delta.beta-e1e4-factorization"] = factorization_check;
  r["delta.induced-alpha-on-alpha"] = [](Context&) { return induced("alpha", "e1"); };
  r["delta.induced-alpha-on-beta"] = [](Context&) { return induced("alpha", "e3"); };
  r["delta.induced-beta-on-alpha"] = [](Context&) { return induced("beta", "e1"); };
  r["delta.induced-beta-on-beta"] = [](Context&) { return induced("beta", "e3"); };
  r["delta.fixed-commutator"] = [](Context&) {
    const auto f2 = standard_alphabet(2);
    const Word yx = commutator(Word::generator(f2, 1), Word::generator(f2, 0));
    auto b = [](bool v) { return std::string(v ? "true" : "false"); };
    return "alpha: " + b(fixes_word(named_rank2("alpha").forward(), yx)) +
           ", beta: " + b(fixes_word(named_rank2("beta").forward(), yx));
  };
}

// --- largeness ------------------------------------------------------------------------

const SchreierSystemPtr& r_system() {
  static const SchreierSystemPtr s = SchreierSystem::build(c2_quotient_rank3(), GeneratorOrder::generator_major);
  return s;
}

const IntMatrix& matrix_b() {
  static const IntMatrix b = conjugation_matrix(*r_system(), Word::generator(r_system()->alphabet(), 0));
  return b;
}

const Lattice& v_minus() {
  static const Lattice l = eigen_lattice(matrix_b(), -1);
  return l;
}

/// Automorphisms of F3 that preserve R, closed under inverses.
const std::vector<VerifiedAut>& r_preserving_pool() {
  static const std::vector<VerifiedAut> pool = [] {
    const auto a = standard_alphabet(3);
    std::vector<VerifiedAut> base{named::alpha_rank3(),
                                  named::beta_rank3(),
                                  inner_aut(Word::generator(a, 0)),
                                  inner_aut(Word::generator(a, 1)),
                                  inner_aut(Word::generator(a, 2)),
                                  transvection(a, 0, 1),
                                  transvection(a, 0, 2, 1, false),
                                  inversion(a, 0),
                                  inversion(a, 1),
                                  permutation(a, {0, 2, 1})};
    std::vector<VerifiedAut> out;
    for (const auto& v : base) {
      out.push_back(v);
      out.push_back(v.inverse());
    }
    return out;
  }();
  return pool;
}

VerifiedAut random_pool_product(std::size_t max_factors, std::mt19937_64& rng) {
  const auto& pool = r_preserving_pool();
  std::uniform_int_distribution<std::size_t> len(1, max_factors), pick(0, pool.size() - 1);
  VerifiedAut out = VerifiedAut::identity(standard_alphabet(3));
  for (std::size_t i = len(rng); i > 0; --i) out = compose(out, pool[pick(rng)]);
  return out;
}

void register_largeness(std::map<std::string, CheckFn>& r) {
  r["largeness.r-generators"] = [](Context&) {
    return join(r_system()->schreier_generators(), ", ", [](const Word& w) { return to_string(w); });
  };
  r["largeness.matrix-b"] = [](Context&) { return to_string(matrix_b()); };
  r["largeness.b-squared"] = [](Context&) {
    const IntMatrix sq = matrix_b() * matrix_b();
    return sq == IntMatrix::identity(sq.rows()) ? std::string("identity") : to_string(sq);
  };
  auto lattice_text = [](const Lattice& l) { return to_string(l) + (l.is_saturated() ? " saturated" : " not saturated"); };
  r["largeness.eigen-plus"] = [lattice_text](Context&) { return lattice_text(eigen_lattice(matrix_b(), 1)); };
  r["largeness.eigen-minus"] = [lattice_text](Context&) { return lattice_text(v_minus()); };
  r["largeness.nu-alpha"] = [](Context&) { return to_string(induced_action(*r_system(), named::alpha_rank3(), v_minus())); };
  r["largeness.nu-beta"] = [](Context&) { return to_string(induced_action(*r_system(), named::beta_rank3(), v_minus())); };
  r["largeness.b-commutation"] = [](Context& c) {
    const auto n = c.get("samples", 60), len = c.get("maxFactors", 6);
    std::size_t ok = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const auto sigma = random_pool_product(len, c.rng);
      if (!preserves_subgroup(*r_system(), sigma)) continue;
      const IntMatrix rho = abelianized_action(*r_system(), sigma);
      if (rho * matrix_b() == matrix_b() * rho) ++ok;
    }
    return fraction(ok, n);
  };
  r["largeness.nu-multiplicative"] = [](Context& c) {
    const auto n = c.get("samples", 50), len = c.get("maxFactors", 4);
    std::size_t ok = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const auto s = random_pool_product(len, c.rng), t = random_pool_product(len, c.rng);
      const auto& sys = *r_system();
      if (induced_action(sys, compose(s, t), v_minus()) ==
          induced_action(sys, s, v_minus()) * induced_action(sys, t, v_minus()))
        ++ok;
    }
    return fraction(ok, n);
  };
}

// --- magnus ---------------------------------------------------------------------------

std::vector<ModMatrix> random_ideal_matrices(std::uint64_t p, unsigned k, unsigned s, std::size_t count,
                                             std::mt19937_64& rng) {
  std::uint64_t m = 1, ps = 1;
  for (unsigned i = 0; i < k; ++i) m *= p;
  for (unsigned i = 0; i < s; ++i) ps *= p;
  std::uniform_int_distribution<std::uint64_t> coeff(0, m / ps - 1);
  std::vector<ModMatrix> out;
  for (std::size_t n = 0; n < count; ++n) {
    ModMatrix a(3, 3, m);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) a.set(i, j, static_cast<std::int64_t>(coeff(rng) * ps));
    out.push_back(std::move(a));
  }
  return out;
}

std::vector<ModMatrix> all_ideal_matrices(std::uint64_t m, std::uint64_t step) {
  std::vector<ModMatrix> out{ModMatrix(3, 3, m)};
  for (std::size_t cell = 0; cell < 9; ++cell) {
    std::vector<ModMatrix> next;
    for (const auto& a : out)
      for (std::uint64_t v = 0; v < m; v += step) {
        ModMatrix b = a;
        b.set(cell / 3, cell % 3, static_cast<std::int64_t>(v));
        next.push_back(std::move(b));
      }
    out = std::move(next);
  }
  return out;
}

std::string ka_text(const KaReport& rep) {
  std::string out = std::to_string(rep.pairs_checked) + " pairs, " + std::to_string(rep.inverse_checks) +
                    " inverses, " + std::to_string(rep.failures) + " failures";
  if (!rep.precondition_failures.empty())
    out += ", " + std::to_string(rep.precondition_failures.size()) + " precondition violations";
  return out;
}

FreeHom random_endo(const AlphabetPtr& a, std::size_t max_len, std::mt19937_64& rng) {
  std::vector<Word> images;
  for (std::size_t i = 0; i < a->rank(); ++i) images.push_back(random_word(a, max_len, rng));
  return FreeHom(a, a, std::move(images));
}

void enumerate_reduced(const AlphabetPtr& a, std::size_t max_len, Word& current, std::int64_t last,
                       const std::function<void(const Word&)>& visit) {
  visit(current);
  if (static_cast<std::size_t>(current.length()) == max_len) return;
  const auto rank = static_cast<std::int64_t>(a->rank());
  for (std::int64_t code = 0; code < 2 * rank; ++code) {
    // code encodes (generator, sign); skip the inverse of the last letter.
    if (last >= 0 && code == (last ^ 1)) continue;
    Word next = current * Word::generator(a, static_cast<std::size_t>(code / 2), (code % 2) ? -1 : 1);
    enumerate_reduced(a, max_len, next, code, visit);
  }
}

void register_magnus(std::map<std::string, CheckFn>& r) {
  r["magnus.fox-x-inverse"] = [](Context&) {
    return to_string(fox_coordinates(parse_word("x^-1", standard_alphabet(2)))[0]);
  };
  r["magnus.eq2-random"] = [](Context& c) {
    const auto n = c.get("samples", 10000), len = c.get("maxLength", 30), max_rank = c.get("maxRank", 3);
    std::uniform_int_distribution<std::size_t> rank(1, max_rank);
    std::size_t ok = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const auto a = standard_alphabet(rank(c.rng));
      const Word w = random_word(a, len, c.rng);
      const auto expected = FreeGroupRingElement::from_word(w) - FreeGroupRingElement::constant(a, 1);
      if (fox_resubstitute(a, fox_coordinates(w)) == expected) ++ok;
    }
    return fraction(ok, n);
  };
  r["magnus.magnus-hom"] = [](Context& c) {
    const auto n = c.get("samples", 1000), len = c.get("maxLength", 20);
    std::string out;
    for (const auto& setting : c.params.at("settings")) {
      const auto rank = setting.at(0).get<std::size_t>();
      const auto m = setting.at(1).get<std::uint32_t>();
      const auto a = standard_alphabet(rank);
      std::size_t ok = 0;
      for (std::size_t i = 0; i < n; ++i) {
        const Word u = random_word(a, len, c.rng), v = random_word(a, len, c.rng);
        if (magnus_image(u * v, m) == magnus_image(u, m) * magnus_image(v, m)) ++ok;
      }
      if (!out.empty()) out += "; ";
      out += "(" + std::to_string(rank) + "," + std::to_string(m) + ") " + fraction(ok, n);
    }
    return out;
  };
  r["magnus.j-composition-golden"] = [](Context& c) {
    const auto& al = named_rank2("alpha").forward();
    const auto& be = named_rank2("beta").forward();
    auto verdict = [](bool v) { return std::string(v ? "holds" : "fails"); };
    std::string out = "integral: " + verdict(jacobian(compose(al, be)) == jacobian(al) * apply_entrywise(al, jacobian(be)));
    for (const auto& mj : c.params.at("moduli")) {
      const auto m = mj.get<std::uint32_t>();
      const bool ok = jacobian_mod(compose(al, be), m) == jacobian_mod(al, m) * apply_entrywise(al, jacobian_mod(be, m));
      out += "; mod " + std::to_string(m) + ": " + verdict(ok);
    }
    return out;
  };
  r["magnus.j-composition-random"] = [](Context& c) {
    const auto n = c.get("samples", 100), len = c.get("maxImageLength", 5);
    const auto a = standard_alphabet(2);
    std::size_t ok = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const FreeHom f = random_endo(a, len, c.rng), g = random_endo(a, len, c.rng);
      if (jacobian(compose(f, g)) == jacobian(f) * apply_entrywise(f, jacobian(g))) ++ok;
    }
    return fraction(ok, n);
  };
  r["magnus.fox-injectivity"] = [](Context& c) {
    const auto a = standard_alphabet(2);
    std::set<std::string> seen;
    std::size_t total = 0;
    Word start(a);
    enumerate_reduced(a, c.get("maxLength", 8), start, -1, [&](const Word& w) {
      ++total;
      seen.insert(join(fox_coordinates(w), " ; ", [](const FreeGroupRingElement& e) { return to_string(e); }));
    });
    return std::to_string(seen.size()) + " distinct of " + std::to_string(total);
  };
  r["magnus.ka-rank2-mod2"] = [](Context&) {
    const auto a = standard_alphabet(2);
    const auto& al = named_rank2("alpha");
    const auto& be = named_rank2("beta");
    const Word x = Word::generator(a, 0), y = Word::generator(a, 1);
    std::vector<VerifiedAut> auts{al,           be,           inner_aut(x),
                                  inner_aut(y), inner_aut(x * y), compose(al, be),
                                  compose(compose(al, be), compose(al.inverse(), be.inverse()))};
    return ka_text(ka_check(auts, 2));
  };
  r["magnus.ka-rank3-mod2"] = [](Context&) {
    const auto a = standard_alphabet(3);
    const auto al = named::alpha_rank3(), be = named::beta_rank3();
    std::vector<VerifiedAut> auts{inner_aut(Word::generator(a, 0)),
                                  inner_aut(Word::generator(a, 1) * Word::generator(a, 2)), compose(al, al),
                                  compose(be, be)};
    return ka_text(ka_check(auts, 2));
  };
  r["magnus.ka-rank3-mod3"] = [](Context&) {
    const auto a = standard_alphabet(3);
    const auto al = named::alpha_rank3(), be = named::beta_rank3();
    std::vector<VerifiedAut> auts{inner_aut(Word::generator(a, 0)), compose(al, compose(al, al)),
                                  compose(be, compose(be, be))};
    return ka_text(ka_check(auts, 3));
  };
  auto local = [](Context& c) {
    const auto p = c.params.at("p").get<std::uint64_t>();
    const auto k = c.params.at("k").get<unsigned>();
    const auto s = c.params.at("s").get<unsigned>();
    const auto t = c.params.at("t").get<unsigned>();
    std::vector<ModMatrix> as, bs;
    if (c.params.contains("samples")) {
      const auto n = c.get("samples", 200);
      as = random_ideal_matrices(p, k, s, n, c.rng);
      bs = c.params.at("shared").get<bool>() ? as : random_ideal_matrices(p, k, t, n, c.rng);
    } else {
      std::uint64_t m = 1, ps = 1, pt = 1;
      for (unsigned i = 0; i < k; ++i) m *= p;
      for (unsigned i = 0; i < s; ++i) ps *= p;
      for (unsigned i = 0; i < t; ++i) pt *= p;
      as = all_ideal_matrices(m, ps);
      bs = all_ideal_matrices(m, pt);
    }
    const auto rep = local_commutator_check(p, k, s, t, as, bs);
    return std::to_string(rep.pairs_checked) + " pairs, " + std::to_string(rep.failures) + " failures";
  };
  for (const char* id : {"magnus.local-z9", "magnus.local-z8", "magnus.local-z8-exhaustive", "magnus.local-z27"})
    r[id] = local;
}

// --- congruence -----------------------------------------------------------------------

FiniteQuotient k_quotient_named(const std::string& name) {
  if (name == "trivial") return trivial_k_quotient();
  if (name == "s3") return FiniteQuotient(make_alphabet({"a", "b"}), 3, {{1, 0, 2}, {1, 2, 0}});
  if (name == "c2") return FiniteQuotient(make_alphabet({"a", "b"}), 2, {{1, 0}, {0, 1}});
  throw std::invalid_argument("unknown K quotient " + name);
}

CongruenceInput input_of(Context& c) {
  return make_congruence_input(k_quotient_named(c.params.at("k").get<std::string>()), c.params.at("p").get<std::uint64_t>());
}

std::shared_ptr<const NOracle> n_of(Context& c) {
  const auto key = c.params.at("k").get<std::string>() + ":" + std::to_string(c.params.at("p").get<std::uint64_t>());
  auto& slot = c.n_cache[key];
  if (!slot) slot = std::make_shared<const NOracle>(input_of(c));
  return slot;
}

Certificate certificate_of(Context& c) { return certify(input_of(c), *n_of(c)); }

void register_congruence(std::map<std::string, CheckFn>& r) {
  r["congruence.index-n"] = [](Context& c) { return std::to_string(certificate_of(c).index_of_n); };
  r["congruence.rank-n"] = [](Context& c) { return std::to_string(certificate_of(c).rank_of_n); };
  r["congruence.order-npn"] = [](Context& c) { return certificate_of(c).order_f2_mod_npn.str(); };
  r["congruence.image-order"] = [](Context& c) { return std::to_string(certificate_of(c).image_order_in_4_torus); };
  r["congruence.order-m"] = [](Context& c) { return certificate_of(c).order_f2_mod_m.str(); };
  r["congruence.bound"] = [](Context& c) { return certificate_of(c).bound.str(); };
  r["congruence.divides"] = [](Context& c) { return std::string(certificate_of(c).divides ? "true" : "false"); };
  auto pi_in_k = [](Context& c) {
    const auto n_oracle = n_of(c);
    const auto n = c.get("samples", 1000), len = c.get("maxFactors", 12);
    std::size_t ok = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (n_oracle->pi_lands_in_k(random_subgroup_element(n_oracle->schreier(), len, c.rng))) ++ok;
    return fraction(ok, n);
  };
  r["congruence.pi-n-in-k"] = pi_in_k;
  r["congruence.pi-n-in-k-s3"] = pi_in_k;
  r["congruence.p7"] = [](Context& c) {
    const auto cert = certificate_of(c);
    return cert.order_f2_mod_m.str() + (cert.divides ? " divides bound" : " does not divide bound");
  };
  r["congruence.p3-rejected"] = [](Context& c) {
    try {
      input_of(c);
      return std::string("accepted");
    } catch (const PreconditionError&) {
      return std::string("rejected");
    }
  };
  r["congruence.n-membership"] = [](Context& c) {
    const auto n = n_of(c);
    const auto f2 = klein_system()->alphabet();
    auto yn = [](bool v) { return std::string(v ? "yes" : "no"); };
    return "x^6: " + yn(n->contains(Word::generator(f2, 0, 6))) + ", x: " + yn(n->contains(Word::generator(f2, 0)));
  };
  r["congruence.m-membership"] = [](Context& c) {
    const MOracle m(n_of(c), c.params.at("p").get<std::uint64_t>());
    const auto f2 = klein_system()->alphabet();
    auto yn = [](bool v) { return std::string(v ? "yes" : "no"); };
    return "x^30: " + yn(m.contains(Word::generator(f2, 0, 6).power(5))) +
           ", x^60: " + yn(m.contains(Word::generator(f2, 0, 12).power(5)));
  };
}

// --- affine -----------------------------------------------------------------------------

AffineGroup group_of(Context& c) {
  std::optional<std::uint64_t> xi;
  if (c.params.contains("xi")) xi = c.params.at("xi").get<std::uint64_t>();
  return AffineGroup(make_affine_params(c.params.at("r").get<std::uint64_t>(), c.params.at("p").get<std::uint64_t>(), xi));
}

template <class T>
std::string spaced(const std::vector<T>& v) {
  return join(v, " ", [](const T& x) { return std::to_string(x); });
}

GammaElement random_gamma(const AffineGroup& g, std::mt19937_64& rng) {
  const auto& pr = g.params();
  std::uniform_int_distribution<std::uint64_t> field(0, pr.p - 1), unit(1, pr.r - 1), shift(0, pr.r - 1);
  GammaElement x = gamma_identity(g);
  for (auto& v : x.w)
    for (auto& e : v) e = field(rng);
  x.delta = {unit(rng), shift(rng)};
  return x;
}

void register_affine(std::map<std::string, CheckFn>& r) {
  r["affine.order-delta"] = [](Context& c) { return std::to_string(group_of(c).order()); };
  r["affine.relations"] = [](Context& c) { return std::string(group_of(c).relations_hold() ? "true" : "false"); };
  r["affine.irreducible"] = [](Context& c) {
    const auto rep = irreducibility_certificate(group_of(c));
    return std::string(rep.distinct_eigenvalues ? "eigenvalues distinct" : "eigenvalues repeated") + "; orbit " +
           spaced(rep.line_orbit) + "; spun " + spaced(rep.spun_dimensions);
  };
  r["affine.vandermonde"] = [](Context& c) {
    const auto g = group_of(c);
    const auto rep = two_generation_certificate(g);
    const bool e11 = !rep.copies.empty() && rep.copies.front().projection;
    return std::string(rep.vandermonde_invertible ? "invertible" : "singular") + (e11 ? "; C = E11" : "; C != E11");
  };
  r["affine.two-generation"] = [](Context& c) {
    const auto g = group_of(c);
    const auto rep = two_generation_certificate(g);
    std::vector<std::size_t> dims;
    std::string flags;
    for (const auto& cc : rep.copies) {
      dims.push_back(cc.spun_dimension);
      if (!cc.isolated) flags += "; copy " + std::to_string(cc.copy) + " not isolated";
      if (!cc.projection) flags += "; copy " + std::to_string(cc.copy) + " projection failed";
    }
    return "spun " + spaced(dims) + "; total " + std::to_string(rep.total_dimension) + flags;
  };
  r["affine.gamma-order"] = [](Context& c) { return group_of(c).gamma_order().str(); };
  r["affine.partial-sums"] = [](Context& c) {
    const auto g = group_of(c);
    const auto& pr = g.params();
    std::size_t ok = 0, total = 0;
    for (std::uint64_t j = 1; j < pr.r; ++j) {
      const auto eta = mod_pow(pr.xi, j, pr.p);
      std::uint64_t sum = 1, power = 1;
      for (std::uint64_t k = 1; k + 2 <= pr.r; ++k) {
        power = power * eta % pr.p;
        sum = (sum + power) % pr.p;
        ++total;
        if (sum != 0) ++ok;
      }
    }
    return fraction(ok, total);
  };
  r["affine.conjugation-via-d"] = [](Context& c) {
    const auto g = group_of(c);
    const auto n = c.get("samples", 200);
    const GammaElement dp = d_prime(g), dpi = gamma_inverse(g, dp);
    std::size_t ok = 0;
    for (std::size_t i = 0; i < n; ++i) {
      GammaElement w = random_gamma(g, c.rng);
      w.delta = {1, 0};
      const GammaElement conj = gamma_multiply(g, gamma_multiply(g, dp, w), dpi);
      GammaElement expected = w;
      for (auto& v : expected.w) v = g.d() * v;
      if (conj == expected) ++ok;
    }
    return fraction(ok, n);
  };
  r["affine.commuting-sl"] = [](Context& c) {
    const auto g = group_of(c);
    const auto& pr = g.params();
    const auto n = c.get("samples", 200);
    const auto copies = g.copies();
    std::uniform_int_distribution<std::uint64_t> field(1, pr.p - 1);
    std::uniform_int_distribution<std::size_t> idx(0, copies - 1);
    std::size_t ok = 0;
    for (std::size_t s = 0; s < n; ++s) {
      // A product of elementary transvections lies in SL_(r-2)(p).
      ModMatrix h = ModMatrix::identity(copies, pr.p);
      for (int t = 0; t < 6 && copies > 1; ++t) {
        const auto i = idx(c.rng), j = idx(c.rng);
        if (i == j) continue;
        ModMatrix e = ModMatrix::identity(copies, pr.p);
        e.set(i, j, static_cast<std::int64_t>(field(c.rng)));
        h = h * e;
      }
      const GammaElement x = random_gamma(g, c.rng);
      const ModMatrix delta = g.matrix(x.delta);
      auto sl = [&](const std::vector<ModVector>& w) {
        std::vector<ModVector> out(copies, ModVector(g.dim(), 0));
        for (std::size_t col = 0; col < copies; ++col)
          for (std::size_t j = 0; j < copies; ++j)
            for (std::size_t k = 0; k < g.dim(); ++k) out[col][k] = (out[col][k] + h(j, col) * w[j][k]) % pr.p;
        return out;
      };
      auto act = [&](std::vector<ModVector> w) {
        for (auto& v : w) v = delta * v;
        return w;
      };
      if (act(sl(x.w)) == sl(act(x.w))) ++ok;
    }
    return fraction(ok, n);
  };
  r["affine.gamma-axioms"] = [](Context& c) {
    const auto g = group_of(c);
    const auto n = c.get("samples", 1000);
    const GammaElement id = gamma_identity(g);
    std::size_t ok = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const auto a = random_gamma(g, c.rng), b = random_gamma(g, c.rng), d = random_gamma(g, c.rng);
      const bool assoc = gamma_multiply(g, gamma_multiply(g, a, b), d) == gamma_multiply(g, a, gamma_multiply(g, b, d));
      const bool unit = gamma_multiply(g, a, id) == a && gamma_multiply(g, id, a) == a;
      const bool inv = gamma_multiply(g, a, gamma_inverse(g, a)) == id;
      const bool matrix_hom = g.matrix(g.multiply(a.delta, b.delta)) == g.matrix(a.delta) * g.matrix(b.delta);
      if (assoc && unit && inv && matrix_hom) ++ok;
    }
    return fraction(ok, n);
  };
}

// --- properties -----------------------------------------------------------------------

AlphabetPtr random_alphabet(std::size_t max_rank, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> rank(1, max_rank);
  return standard_alphabet(rank(rng));
}

std::vector<FiniteQuotient> sample_quotients(std::size_t random_actions, std::mt19937_64& rng) {
  std::vector<FiniteQuotient> out{klein_quotient(), c2_quotient_rank3()};
  std::uniform_int_distribution<std::size_t> size(1, 12);
  for (std::size_t i = 0; i < random_actions; ++i) {
    const auto a = random_alphabet(3, rng);
    const auto n = size(rng);
    std::vector<Permutation> images;
    for (std::size_t g = 0; g < a->rank(); ++g) {
      Permutation p(n);
      for (std::size_t k = 0; k < n; ++k) p[k] = static_cast<std::uint32_t>(k);
      std::shuffle(p.begin(), p.end(), rng);
      images.push_back(std::move(p));
    }
    out.emplace_back(a, n, std::move(images));
  }
  return out;
}

void register_properties(std::map<std::string, CheckFn>& r) {
  r["properties.words-group-axioms"] = [](Context& c) {
    const auto n = c.get("samples", 10000), len = c.get("maxLength", 64);
    std::size_t ok = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const auto a = random_alphabet(3, c.rng);
      const Word x = random_word(a, len, c.rng), y = random_word(a, len, c.rng), z = random_word(a, len, c.rng);
      const Word one(a);
      if ((x * y) * z == x * (y * z) && x * one == x && one * x == x && (x * inverse(x)).is_identity() &&
          (inverse(x) * x).is_identity() && (x * y).length() <= x.length() + y.length())
        ++ok;
    }
    return fraction(ok, n);
  };
  r["properties.words-confluence"] = [](Context& c) {
    const auto n = c.get("samples", 10000), len = c.get("maxLength", 64);
    std::size_t ok = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const auto a = random_alphabet(3, c.rng);
      std::uniform_int_distribution<std::size_t> wl(0, len);
      const Word w = random_reduced_word(a, wl(c.rng), c.rng);
      auto letters = w.letters();
      std::uniform_int_distribution<std::size_t> pairs(1, 8), gen(0, a->rank() - 1), coin(0, 1);
      for (std::size_t k = pairs(c.rng); k > 0; --k) {
        std::uniform_int_distribution<std::size_t> pos(0, letters.size());
        const auto at = pos(c.rng);
        const auto g = static_cast<std::uint32_t>(gen(c.rng));
        const bool inv = coin(c.rng) == 1;
        letters.insert(letters.begin() + static_cast<std::ptrdiff_t>(at), {Letter{g, inv}, Letter{g, !inv}});
      }
      if (Word::from_letters(a, letters) == w && reduce_letters(a, letters) == w) ++ok;
    }
    return fraction(ok, n);
  };
  r["properties.words-reference-reduction"] = [](Context& c) {
    const auto n = c.get("samples", 10000), len = c.get("maxLength", 64);
    std::size_t ok = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const auto a = random_alphabet(3, c.rng);
      const Word u = random_word(a, len, c.rng), v = random_word(a, len, c.rng);
      auto letters = u.letters();
      const auto lv = v.letters();
      letters.insert(letters.end(), lv.begin(), lv.end());
      const bool concat = u.is_identity() || v.is_identity() || parse_word(to_string(u) + " " + to_string(v), a) == u * v;
      if (reduce_letters(a, letters) == u * v && concat) ++ok;
    }
    return fraction(ok, n);
  };
  r["properties.words-parse-roundtrip"] = [](Context& c) {
    const auto n = c.get("samples", 10000), len = c.get("maxLength", 64);
    std::size_t ok = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const auto a = random_alphabet(3, c.rng);
      const Word w = random_word(a, len, c.rng);
      if (parse_word(to_string(w), a) == w) ++ok;
    }
    return fraction(ok, n);
  };
  r["properties.homs-functoriality"] = [](Context& c) {
    const auto n = c.get("samples", 1000), len = c.get("maxImageLength", 8), max_rank = c.get("maxRank", 3);
    std::size_t ok = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const auto a = random_alphabet(max_rank, c.rng);
      const FreeHom f = random_endo(a, len, c.rng), g = random_endo(a, len, c.rng);
      if (abelianization_matrix(compose(f, g)) == abelianization_matrix(f) * abelianization_matrix(g)) ++ok;
    }
    return fraction(ok, n);
  };
  r["properties.homs-hom-law"] = [](Context& c) {
    const auto n = c.get("samples", 1000), len = c.get("maxImageLength", 8), wl = c.get("maxLength", 16);
    const auto max_rank = c.get("maxRank", 3);
    std::size_t ok = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const auto a = random_alphabet(max_rank, c.rng);
      const FreeHom h = random_endo(a, len, c.rng);
      const Word u = random_word(a, wl, c.rng), v = random_word(a, wl, c.rng);
      if (h(u * v) == h(u) * h(v)) ++ok;
    }
    return fraction(ok, n);
  };
  r["properties.quotients-roundtrip"] = [](Context& c) {
    const auto n = c.get("samples", 1000), len = c.get("maxFactors", 20);
    auto run = [&](const SchreierSystem& s) {
      std::size_t ok = 0;
      for (std::size_t i = 0; i < n; ++i) {
        const Word v = random_word(s.generator_alphabet(), len, c.rng);
        const Word w = s.expand(v);
        if (s.contains(w) && s.rewrite(w) == v && s.expand(s.rewrite(w)) == w) ++ok;
      }
      return fraction(ok, n);
    };
    return "Delta " + run(*klein_system()) + "; R " + run(*r_system());
  };
  auto per_system = [](std::function<bool(const SchreierSystem&)> pred) {
    return [pred](Context& c) {
      const auto qs = sample_quotients(c.get("randomActions", 50), c.rng);
      std::size_t ok = 0;
      for (const auto& q : qs)
        if (pred(*SchreierSystem::build(q))) ++ok;
      return fraction(ok, qs.size());
    };
  };
  r["properties.quotients-schreier-formula"] = per_system([](const SchreierSystem& s) {
    return s.schreier_generators().size() == schreier_rank(s.index(), s.alphabet()->rank()) &&
           s.index() == s.quotient().orbit(0).size();
  });
  r["properties.quotients-prefix-closure"] =
      per_system([](const SchreierSystem& s) { return is_prefix_closed(s.transversal()); });
  r["properties.quotients-generators-in-subgroup"] = per_system([](const SchreierSystem& s) {
    for (const auto& g : s.schreier_generators())
      if (!s.contains(g) || g.is_identity()) return false;
    return true;
  });
}

const std::map<std::string, CheckFn>& registry() {
  static const std::map<std::string, CheckFn> r = [] {
    std::map<std::string, CheckFn> m;
    register_section2(m);
    register_largeness(m);
    register_magnus(m);
    register_congruence(m);
    register_affine(m);
    register_properties(m);
    return m;
  }();
  return r;
}

const CheckFn* lookup(const std::string& id) {
  const auto& r = registry();
  if (auto it = r.find(id); it != r.end()) return &it->second;
  // Parameterized affine checks: affine.<params>.<name>.
  if (id.rfind("affine.", 0) == 0) {
    const auto last = id.rfind('.');
    if (auto it = r.find("affine" + id.substr(last)); it != r.end()) return &it->second;
  }
  return nullptr;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"section2", "largeness", "magnus", "congruence",
                                              "affine",   "properties", "all"};
  return names;
}

const nlohmann::json& checks_manifest() {
  static const nlohmann::json m = nlohmann::json::parse(detail::kChecksManifest);
  return m;
}

std::size_t Report::count(CheckStatus s) const {
  std::size_t n = 0;
  for (const auto& c : checks)
    if (c.status == s) ++n;
  return n;
}

std::string report_timestamp() {
  std::time_t t = 0;
  if (const char* env = std::getenv("SOURCE_DATE_EPOCH")) {
    try {
      t = static_cast<std::time_t>(std::stoll(env));
    } catch (const std::exception&) {
      t = 0;
    }
  }
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Report run_suite(const std::string& suite, const VerifyOptions& options) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end())
    throw std::invalid_argument("unknown suite '" + suite + "'");
  Report report{kToolVersion, report_timestamp(), suite, options.seed, {}};
  std::map<std::string, std::shared_ptr<const NOracle>> n_cache;
  static const Json empty = Json::object();

  for (const auto& entry : checks_manifest().at("checks")) {
    const auto entry_suite = entry.at("suite").get<std::string>();
    if (suite != "all" && entry_suite != suite) continue;
    CheckResult res;
    res.id = entry.at("id").get<std::string>();
    res.paper_ref = entry.at("paperRef").get<std::string>();
    res.expected = entry.at("expected").get<std::string>();
    const Json& params = entry.contains("params") ? entry.at("params") : empty;

    const CheckFn* fn = lookup(res.id);
    if (!fn) {
      res.status = CheckStatus::skipped;
      res.computed = "no routine for this check";
      report.checks.push_back(std::move(res));
      continue;
    }
    std::mt19937_64 rng(options.seed ^ fnv1a(res.id));
    Context ctx{params, rng, n_cache};
    const auto start = std::chrono::steady_clock::now();
    try {
      res.computed = (*fn)(ctx);
    } catch (const std::exception& e) {
      res.computed = std::string("error: ") + e.what();
    }
    if (options.timing)
      res.elapsed_millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    res.status = res.computed == res.expected ? CheckStatus::pass : CheckStatus::fail;
    report.checks.push_back(std::move(res));
  }
  return report;
}

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::skipped:
      return "skipped";
  }
  return "unknown";
}

nlohmann::ordered_json to_json(const Report& report) {
  nlohmann::ordered_json j;
  j["toolVersion"] = report.tool_version;
  j["timestamp"] = report.timestamp;
  j["suite"] = report.suite;
  j["seed"] = report.seed;
  auto checks = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    nlohmann::ordered_json cj;
    cj["id"] = c.id;
    cj["paperRef"] = c.paper_ref;
    cj["status"] = to_string(c.status);
    cj["expected"] = c.expected;
    cj["computed"] = c.computed;
    cj["elapsedMillis"] = c.elapsed_millis;
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  j["summary"] = {{"total", report.checks.size()},
                  {"passed", report.count(CheckStatus::pass)},
                  {"failed", report.count(CheckStatus::fail)},
                  {"skipped", report.count(CheckStatus::skipped)}};
  return j;
}

std::string to_text(const Report& report) {
  std::ostringstream out;
  out << "fgcert " << report.tool_version << "  suite=" << report.suite << "  seed=" << report.seed << "\n";
  for (const auto& c : report.checks) {
    out << (c.status == CheckStatus::pass ? "PASS " : c.status == CheckStatus::fail ? "FAIL " : "SKIP ") << c.id;
    if (c.status != CheckStatus::pass) out << "\n     expected: " << c.expected << "\n     computed: " << c.computed;
    out << "\n";
  }
  out << report.count(CheckStatus::pass) << " passed, " << report.count(CheckStatus::fail) << " failed, "
      << report.count(CheckStatus::skipped) << " skipped\n";
  return out.str();
}

}  // namespace fgcert
