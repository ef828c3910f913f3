#include "fgcert/affine.hpp"

#include "fgcert/errors.hpp"

namespace fgcert {

AffineParams make_affine_params(std::uint64_t r, std::uint64_t p, std::optional<std::uint64_t> xi) {
  if (r <= 2 || !is_prime(r)) throw PreconditionError("r must be a prime greater than 2");
  if (!is_prime(p)) throw PreconditionError("p must be prime");
  if (p % r != 1) throw PreconditionError("r = " + std::to_string(r) + " does not divide p - 1 = " + std::to_string(p - 1));
  if (p >= (1ULL << 31)) throw ResourceError("p too large for word-sized arithmetic");
  auto has_order_r = [&](std::uint64_t x) { return x % p != 1 && mod_pow(x, r, p) == 1; };
  if (xi) {
    if (!has_order_r(*xi % p))
      throw PreconditionError("xi = " + std::to_string(*xi) + " does not have order " + std::to_string(r) + " mod " +
                              std::to_string(p));
  } else {
    for (std::uint64_t x = 2; x < p && !xi; ++x)
      if (has_order_r(x)) xi = x;
  }
  return AffineParams{r, p, *xi % p, primitive_root(r)};
}

std::uint64_t smallest_prime_one_mod(std::uint64_t r) {
  if (r < 2) throw PreconditionError("r must be at least 2");
  for (std::uint64_t p = r + 1;; p += r)
    if (is_prime(p)) return p;
}

// --- AffineGroup ------------------------------------------------------------------

AffineGroup::AffineGroup(AffineParams params)
    : params_(params), d_(params.r - 1, params.r - 1, params.p), s_(params.r - 1, params.r - 1, params.p) {
  const auto n = dim();
  for (std::size_t i = 1; i <= n; ++i) d_.set(i - 1, i - 1, static_cast<std::int64_t>(mod_pow(params_.xi, i, params_.p)));
  s_ = matrix(s_pair());
}

boost::multiprecision::cpp_int AffineGroup::gamma_order() const {
  using boost::multiprecision::cpp_int;
  return boost::multiprecision::pow(cpp_int(params_.p), static_cast<unsigned>(dim() * copies())) * order();
}

ModMatrix AffineGroup::matrix(const AffinePair& g) const {
  const auto r = params_.r;
  if (g.a % r == 0) throw std::invalid_argument("a must be a unit mod r");
  ModMatrix perm(dim(), dim(), params_.p);
  for (std::uint64_t i = 1; i < r; ++i) perm.set((g.a * i) % r - 1, i - 1, 1);
  return d_.power(g.b % r) * perm;
}

AffinePair AffineGroup::multiply(const AffinePair& g, const AffinePair& h) const {
  const auto r = params_.r;
  return {(g.a * h.a) % r, (g.b + h.b * mod_inverse(g.a, r)) % r};
}

AffinePair AffineGroup::inverse(const AffinePair& g) const {
  const auto r = params_.r;
  return {mod_inverse(g.a, r), (r - (g.b * g.a) % r) % r};
}

bool AffineGroup::relations_hold() const {
  const auto n = dim();
  const auto id = ModMatrix::identity(n, params_.p);
  const auto s_inv = s_.power(params_.r - 2);
  return d_.power(params_.r) == id && s_.power(params_.r - 1) == id && s_inv * s_ == id &&
         s_inv * d_ * s_ == d_.power(params_.a);
}

// --- Gamma ----------------------------------------------------------------------

GammaElement gamma_identity(const AffineGroup& g) {
  return {std::vector<ModVector>(g.copies(), ModVector(g.dim(), 0)), {1, 0}};
}

GammaElement gamma_multiply(const AffineGroup& g, const GammaElement& x, const GammaElement& y) {
  const auto m = g.matrix(x.delta);
  const auto p = g.params().p;
  GammaElement out{x.w, g.multiply(x.delta, y.delta)};
  for (std::size_t c = 0; c < out.w.size(); ++c) {
    const auto moved = m * y.w[c];
    for (std::size_t i = 0; i < moved.size(); ++i) out.w[c][i] = (out.w[c][i] + moved[i]) % p;
  }
  return out;
}

GammaElement gamma_inverse(const AffineGroup& g, const GammaElement& x) {
  const auto inv = g.inverse(x.delta);
  const auto m = g.matrix(inv);
  const auto p = g.params().p;
  GammaElement out{x.w, inv};
  for (std::size_t c = 0; c < out.w.size(); ++c) {
    auto moved = m * x.w[c];
    for (auto& v : moved) v = (p - v) % p;
    out.w[c] = std::move(moved);
  }
  return out;
}

GammaElement gamma_power(const AffineGroup& g, const GammaElement& x, std::int64_t k) {
  const GammaElement base = k < 0 ? gamma_inverse(g, x) : x;
  GammaElement out = gamma_identity(g);
  for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i) out = gamma_multiply(g, out, base);
  return out;
}

GammaElement d_prime(const AffineGroup& g) {
  GammaElement out{std::vector<ModVector>(g.copies(), ModVector(g.dim(), 0)), g.d_pair()};
  for (std::size_t c = 0; c < g.copies(); ++c) out.w[c][c] = 1;
  return out;
}

GammaElement s_prime(const AffineGroup& g) {
  return {std::vector<ModVector>(g.copies(), ModVector(g.dim(), 0)), g.s_pair()};
}

// --- certificates -------------------------------------------------------------------

namespace {

ModVector unit(std::size_t n, std::size_t i) {
  ModVector v(n, 0);
  v[i] = 1;
  return v;
}

ModMatrix block_diagonal(const ModMatrix& m, std::size_t copies) {
  const auto n = m.rows();
  ModMatrix out(n * copies, n * copies, m.modulus());
  for (std::size_t c = 0; c < copies; ++c)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out.set(c * n + i, c * n + j, static_cast<std::int64_t>(m(i, j)));
  return out;
}

}  // namespace

bool IrreducibilityReport::passed() const {
  if (!distinct_eigenvalues || !transitive) return false;
  for (auto d : spun_dimensions)
    if (d != eigenvalues.size()) return false;
  return !spun_dimensions.empty();
}

IrreducibilityReport irreducibility_certificate(const AffineGroup& g) {
  IrreducibilityReport rep;
  const auto n = g.dim();
  for (std::size_t i = 0; i < n; ++i) rep.eigenvalues.push_back(g.d()(i, i));
  rep.distinct_eigenvalues = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (rep.eigenvalues[i] == rep.eigenvalues[j]) rep.distinct_eigenvalues = false;
  // D is diagonal, so its eigenlines are the coordinate lines; follow the
  // image of e_1 under S.
  std::size_t idx = 1;
  do {
    rep.line_orbit.push_back(idx);
    const auto col = g.s().column(idx - 1);
    std::size_t next = 0;
    for (std::size_t r = 0; r < n; ++r)
      if (col[r] != 0) next = r + 1;
    idx = next;
  } while (idx != 1 && idx != 0 && rep.line_orbit.size() <= n);
  rep.transitive = idx == 1 && rep.line_orbit.size() == n;
  for (std::size_t i = 0; i < n; ++i) rep.spun_dimensions.push_back(spin({unit(n, i)}, {g.d(), g.s()}).dimension());
  return rep;
}

ModMatrix vandermonde(const AffineGroup& g) {
  const auto n = g.dim();
  const auto& pr = g.params();
  ModMatrix v(n, n, pr.p);
  for (std::size_t j = 1; j <= n; ++j)
    for (std::size_t m = 0; m < n; ++m) v.set(j - 1, m, static_cast<std::int64_t>(mod_pow(pr.xi, j * m, pr.p)));
  return v;
}

bool TwoGenerationReport::passed(const AffineGroup& g) const {
  if (!vandermonde_invertible || copies.size() != g.copies()) return false;
  for (const auto& c : copies)
    if (!c.isolated || !c.projection || c.spun_dimension != g.dim()) return false;
  return total_dimension == g.dim() * g.copies();
}

TwoGenerationReport two_generation_certificate(const AffineGroup& g) {
  TwoGenerationReport rep;
  const auto n = g.dim();
  const auto copies = g.copies();
  const auto& pr = g.params();
  const ModMatrix vm = vandermonde(g);
  rep.vandermonde_invertible = rank_mod_p(vm) == n;

  const std::vector<ModMatrix> block_gens{block_diagonal(g.d(), copies), block_diagonal(g.s(), copies)};
  const GammaElement dp = d_prime(g), sp = s_prime(g);
  std::vector<ModVector> all_seeds;

  for (std::size_t i = 1; i <= copies; ++i) {
    CopyCertificate cert;
    cert.copy = i;
    for (std::uint64_t l = 1; l + 1 < pr.r && cert.l == 0; ++l)
      if (g.s().power(l).column(n - 1) == unit(n, i - 1)) cert.l = l;
    if (cert.l == 0) {
      rep.copies.push_back(cert);
      continue;
    }
    const ModMatrix conj = g.s().power(cert.l) * g.d() * g.s().power(pr.r - 1 - cert.l);
    for (std::uint64_t k = 1; k + 1 < pr.r && cert.k == 0; ++k)
      if (conj == g.d().power(pr.r - k)) cert.k = k;
    if (cert.k == 0) {
      rep.copies.push_back(cert);
      continue;
    }
    const auto l = static_cast<std::int64_t>(cert.l);
    GammaElement w = gamma_multiply(g, gamma_power(g, sp, l), dp);
    w = gamma_multiply(g, w, gamma_power(g, sp, -l));
    w = gamma_multiply(g, w, gamma_power(g, dp, static_cast<std::int64_t>(cert.k)));

    cert.isolated = w.delta == AffinePair{1, 0} && w.w[i - 1][i - 1] != 0;
    for (std::size_t j = 0; j < copies; ++j)
      if (j != i - 1 && w.w[j][i - 1] != 0) cert.isolated = false;

    if (auto beta = solve_mod_p(vm, unit(n, i - 1))) {
      cert.beta = *beta;
      ModMatrix c(n, n, pr.p);
      for (std::size_t m = 0; m < n; ++m) c = c + scaled(g.d().power(m), cert.beta[m]);
      ModMatrix e(n, n, pr.p);
      e.set(i - 1, i - 1, 1);
      cert.projection = c == e;

      ModVector seed;
      for (const auto& entry : w.w) {
        const auto v = c * entry;
        seed.insert(seed.end(), v.begin(), v.end());
      }
      cert.spun_dimension = spin({seed}, block_gens).dimension();
      all_seeds.push_back(std::move(seed));
    }
    rep.copies.push_back(cert);
  }
  if (!all_seeds.empty()) rep.total_dimension = spin(all_seeds, block_gens).dimension();
  return rep;
}

nlohmann::ordered_json to_json(const AffineGroup& g, const IrreducibilityReport& irr, const TwoGenerationReport& two) {
  const auto& pr = g.params();
  nlohmann::ordered_json j;
  j["r"] = pr.r;
  j["p"] = pr.p;
  j["xi"] = pr.xi;
  j["primitiveRootModR"] = pr.a;
  j["orderOfDelta"] = g.order();
  j["orderOfGamma"] = g.gamma_order().str();
  j["relationsHold"] = g.relations_hold();
  j["irreducibility"] = {{"eigenvalues", irr.eigenvalues},
                         {"distinctEigenvalues", irr.distinct_eigenvalues},
                         {"lineOrbit", irr.line_orbit},
                         {"transitive", irr.transitive},
                         {"spunDimensions", irr.spun_dimensions},
                         {"passed", irr.passed()}};
  nlohmann::ordered_json copies = nlohmann::ordered_json::array();
  for (const auto& c : two.copies)
    copies.push_back({{"copy", c.copy},
                      {"l", c.l},
                      {"k", c.k},
                      {"isolated", c.isolated},
                      {"beta", c.beta},
                      {"projection", c.projection},
                      {"spunDimension", c.spun_dimension}});
  j["twoGeneration"] = {{"vandermondeInvertible", two.vandermonde_invertible},
                        {"copies", copies},
                        {"totalDimension", two.total_dimension},
                        {"passed", two.passed(g)}};
  return j;
}

}  // namespace fgcert
