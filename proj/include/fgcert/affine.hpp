#pragma once

// AGL_1(r) acting on V = F_p^(r-1), and Gamma = W x| AGL_1(r) with
// W = V^(r-2).
//
// With basis e_1..e_(r-1) of V and a primitive root a mod r:
//   D = diag(xi, xi^2, ..., xi^(r-1)),   S e_i = e_(a i mod r),
// so S^-1 D S = D^a. The element (a, b) of AGL_1(r) acts as D^b P_a, where
// P_a e_i = e_(a i); products compose as (a1, b1)(a2, b2) = (a1 a2, b1 + b2 / a1).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "fgcert/modp.hpp"

namespace fgcert {

struct AffineParams {
  std::uint64_t r;
  std::uint64_t p;
  std::uint64_t xi;
  /// Smallest primitive root mod r; S corresponds to multiplication by it.
  std::uint64_t a;
};

/// Checks r > 2 prime, p prime with p = 1 mod r, and xi of order exactly r mod
/// p (choosing the smallest such xi when omitted). Throws PreconditionError.
AffineParams make_affine_params(std::uint64_t r, std::uint64_t p, std::optional<std::uint64_t> xi = std::nullopt);

/// Smallest prime p > r with p = 1 mod r.
std::uint64_t smallest_prime_one_mod(std::uint64_t r);

struct AffinePair {
  std::uint64_t a;  // in F_r^*
  std::uint64_t b;  // in F_r

  bool operator==(const AffinePair&) const = default;
};

class AffineGroup {
 public:
  explicit AffineGroup(AffineParams params);

  const AffineParams& params() const noexcept { return params_; }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(params_.r - 1); }
  std::size_t copies() const noexcept { return static_cast<std::size_t>(params_.r - 2); }
  std::uint64_t order() const noexcept { return params_.r * (params_.r - 1); }
  /// p^((r-1)(r-2)) r (r-1).
  boost::multiprecision::cpp_int gamma_order() const;

  const ModMatrix& d() const noexcept { return d_; }
  const ModMatrix& s() const noexcept { return s_; }
  AffinePair d_pair() const { return {1, 1}; }
  AffinePair s_pair() const { return {params_.a, 0}; }

  ModMatrix matrix(const AffinePair& g) const;
  AffinePair multiply(const AffinePair& g, const AffinePair& h) const;
  AffinePair inverse(const AffinePair& g) const;

  /// D^r = I, S^(r-1) = I, S^-1 D S = D^a.
  bool relations_hold() const;

 private:
  AffineParams params_;
  ModMatrix d_;
  ModMatrix s_;
};

/// (w, delta) with w in W = V^(r-2); products (w1, d1)(w2, d2) = (w1 + d1 w2, d1 d2).
struct GammaElement {
  std::vector<ModVector> w;
  AffinePair delta;

  bool operator==(const GammaElement&) const = default;
};

GammaElement gamma_identity(const AffineGroup& g);
GammaElement gamma_multiply(const AffineGroup& g, const GammaElement& x, const GammaElement& y);
GammaElement gamma_inverse(const AffineGroup& g, const GammaElement& x);
GammaElement gamma_power(const AffineGroup& g, const GammaElement& x, std::int64_t k);
/// D' = ((e_1, ..., e_(r-2)), D) and S' = (0, S).
GammaElement d_prime(const AffineGroup& g);
GammaElement s_prime(const AffineGroup& g);

struct IrreducibilityReport {
  std::vector<std::uint64_t> eigenvalues;
  bool distinct_eigenvalues = false;
  /// Orbit of the line through e_1 under powers of S, as basis indices.
  std::vector<std::size_t> line_orbit;
  bool transitive = false;
  /// Dimension spun from each e_i under D and S.
  std::vector<std::size_t> spun_dimensions;
  bool passed() const;
};

IrreducibilityReport irreducibility_certificate(const AffineGroup& g);

struct CopyCertificate {
  std::size_t copy = 0;  // 1-based
  std::uint64_t l = 0;
  std::uint64_t k = 0;
  bool isolated = false;             // e_copy appears only in entry `copy` of w
  std::vector<std::uint64_t> beta;   // C = sum beta_m D^m
  bool projection = false;           // C = E_(copy, copy)
  std::size_t spun_dimension = 0;
};

struct TwoGenerationReport {
  bool vandermonde_invertible = false;
  std::vector<CopyCertificate> copies;
  std::size_t total_dimension = 0;
  bool passed(const AffineGroup& g) const;
};

/// Finds l with S^l e_(r-1) = e_i and k with S^l D S^-l = D^(r-k) for each
/// copy i, forms w = S'^l D' S'^-l D'^k in W, isolates copy i with the
/// Vandermonde projection C = E_ii, and spins C(w) under D and S.
TwoGenerationReport two_generation_certificate(const AffineGroup& g);

/// The (r-1) x (r-1) matrix (xi^(j m)) for j = 1..r-1, m = 0..r-2.
ModMatrix vandermonde(const AffineGroup& g);

nlohmann::ordered_json to_json(const AffineGroup& g, const IrreducibilityReport& irr, const TwoGenerationReport& two);

}  // namespace fgcert
