// Closed-form inverse updates for symmetric coordinate-pair perturbations
// M = B + mu*(e_i e_j^T + e_j e_i^T), plus the O(1) all-entries-sum query
// that makes repeated single-edge toggles cheap.
#ifndef GKSS_LINALG_HPP
#define GKSS_LINALG_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "gkss/errors.hpp"

namespace gkss {

// Inverse of a symmetric matrix together with its column sums and total,
// kept current across updates so sum queries stay O(1).
struct InverseState {
  Eigen::MatrixXd inv;
  Eigen::VectorXd col_sums;
  double total = 0.0;
};

// Builds the state by direct inversion; throws SingularUpdate if B is
// numerically singular.
InverseState make_inverse_state(const Eigen::MatrixXd& b);

// Denominator pieces of the update at (i, j, mu); both must stay away from
// zero for the closed form to hold.
struct UpdateDenominators {
  double one_plus_mu_cij;
  double discriminant;
};
UpdateDenominators update_denominators(const InverseState& state, int i, int j, double mu);

// Returns the state for (B + mu*(e_i e_j^T + e_j e_i^T))^{-1}. The formula is
// sufficient, not necessary: a vanishing denominator raises SingularUpdate
// even when the perturbed matrix happens to be invertible.
InverseState rank2_update(const InverseState& state, int i, int j, double mu);

// Sum of all entries of (B + mu*(e_i e_j^T + e_j e_i^T))^{-1} without
// materialising the update; O(1) given the maintained sums.
double toggled_grw_sum(const InverseState& state, int i, int j, double mu);

// (A + u v^T)^{-1} via the standard one-term correction; denominator below
// 1e-12 in magnitude raises SingularUpdate.
Eigen::MatrixXd sherman_morrison(const Eigen::MatrixXd& a_inv, const Eigen::VectorXd& u,
                                 const Eigen::VectorXd& v);

struct PairPerturbation {
  int i;
  int j;
  double mu;
};

// Chains rank2_update over a multi-entry symmetric perturbation
// sum_k mu_k*(e_{i_k} e_{j_k}^T + e_{j_k} e_{i_k}^T).
InverseState apply_pair_perturbations(InverseState state,
                                      const std::vector<PairPerturbation>& toggles);

}  // namespace gkss

#endif
