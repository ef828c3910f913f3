#pragma once

// The abelianization of a Schreier subgroup H as a Z-module: coordinates are
// exponent sums over the Schreier generators, so H/H' = Z^k with e_j as the
// j-th unit vector.

#include "fgcert/homs.hpp"
#include "fgcert/int_matrix.hpp"
#include "fgcert/quotients.hpp"

namespace fgcert {

/// Exponent-sum vector of rewrite(w) over the Schreier generators.
IntVector abelianized(const SchreierSystem& s, const Word& w);

/// Matrix of v -> class of g^-1 v g on H/H'. Column j is the abelianized
/// rewrite of g^-1 e_j g. Throws PreconditionError when g does not normalize H.
IntMatrix conjugation_matrix(const SchreierSystem& s, const Word& g);

/// Saturated integer kernel of m - lambda I, basis rows in Hermite normal form.
Lattice eigen_lattice(const IntMatrix& m, std::int64_t lambda);

/// True when sigma maps H onto H: both sigma and its inverse send every
/// Schreier generator into H.
bool preserves_subgroup(const SchreierSystem& s, const VerifiedAut& sigma);

/// Matrix of sigma on H/H'; column j is the abelianized rewrite of sigma(e_j).
/// Throws PreconditionError when sigma does not preserve H.
IntMatrix abelianized_action(const SchreierSystem& s, const VerifiedAut& sigma);

/// The action of sigma on an invariant lattice L, in the coordinates of L's
/// stored basis: column j holds the coordinates of sigma(b_j). Composition
/// is covariant, induced_action(s, compose(f, g), L) = induced(f) * induced(g).
/// Throws PreconditionError when sigma does not preserve H or L.
IntMatrix induced_action(const SchreierSystem& s, const VerifiedAut& sigma, const Lattice& lattice);

}  // namespace fgcert
