#include "fgcert/schreier_modules.hpp"

namespace fgcert {

IntVector abelianized(const SchreierSystem& s, const Word& w) { return s.rewrite(w).exponent_sums(); }

IntMatrix conjugation_matrix(const SchreierSystem& s, const Word& g) {
  const Word gi = inverse(g);
  std::vector<IntVector> columns;
  for (const auto& e : s.schreier_generators()) {
    const Word c = gi * e * g;
    if (!s.contains(c)) throw PreconditionError("conjugation by " + to_string(g) + " does not preserve the subgroup");
    columns.push_back(abelianized(s, c));
  }
  return IntMatrix::from_columns(columns, s.schreier_generators().size());
}

Lattice eigen_lattice(const IntMatrix& m, std::int64_t lambda) {
  if (m.rows() != m.cols()) throw std::invalid_argument("eigen lattice needs a square matrix");
  const IntMatrix shifted = m - scaled(IntMatrix::identity(m.rows()), lambda);
  return Lattice(m.rows(), integer_kernel(shifted));
}

bool preserves_subgroup(const SchreierSystem& s, const VerifiedAut& sigma) {
  require_same_alphabet(sigma.alphabet(), s.alphabet(), "preserves subgroup");
  for (const auto& e : s.schreier_generators())
    if (!s.contains(sigma.forward()(e)) || !s.contains(sigma.backward()(e))) return false;
  return true;
}

IntMatrix abelianized_action(const SchreierSystem& s, const VerifiedAut& sigma) {
  if (!preserves_subgroup(s, sigma)) throw PreconditionError("automorphism does not preserve the subgroup");
  std::vector<IntVector> columns;
  for (const auto& e : s.schreier_generators()) columns.push_back(abelianized(s, sigma(e)));
  return IntMatrix::from_columns(columns, s.schreier_generators().size());
}

IntMatrix induced_action(const SchreierSystem& s, const VerifiedAut& sigma, const Lattice& lattice) {
  if (lattice.ambient_dim() != s.schreier_generators().size())
    throw std::invalid_argument("lattice dimension differs from the subgroup rank");
  const IntMatrix rho = abelianized_action(s, sigma);
  std::vector<IntVector> columns;
  for (std::size_t j = 0; j < lattice.rank(); ++j) {
    auto c = lattice.coordinates(rho * lattice.basis_vector(j));
    if (!c) throw PreconditionError("lattice is not invariant under the automorphism");
    columns.push_back(std::move(*c));
  }
  return IntMatrix::from_columns(columns, lattice.rank());
}

}  // namespace fgcert
