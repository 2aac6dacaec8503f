#include "gkss/linalg.hpp"

#include <cmath>

namespace gkss {

namespace {
constexpr double kDenomTol = 1e-10;
constexpr double kShermanTol = 1e-12;
}  // namespace

InverseState make_inverse_state(const Eigen::MatrixXd& b) {
  if (b.rows() != b.cols()) throw InvalidArgument("make_inverse_state: matrix not square");
  Eigen::FullPivLU<Eigen::MatrixXd> lu(b);
  if (!lu.isInvertible()) throw SingularUpdate("make_inverse_state: singular base matrix");
  InverseState s;
  s.inv = lu.inverse();
  s.col_sums = s.inv.colwise().sum();
  s.total = s.col_sums.sum();
  return s;
}

UpdateDenominators update_denominators(const InverseState& state, int i, int j, double mu) {
  const double cij = state.inv(i, j);
  const double cii = state.inv(i, i);
  const double cjj = state.inv(j, j);
  const double head = 1.0 + mu * cij;
  return {head, head * head - mu * mu * cii * cjj};
}

namespace {

struct UpdateCoefs {
  double gamma;  // mu*(1 + mu*c_ij) / discriminant
  double a;      // mu*c_jj / (1 + mu*c_ij)
  double b;      // mu*c_ii / (1 + mu*c_ij)
};

UpdateCoefs update_coefs(const InverseState& state, int i, int j, double mu) {
  if (i == j) throw InvalidArgument("rank2 update: need i != j");
  const int n = static_cast<int>(state.inv.rows());
  if (i < 0 || j < 0 || i >= n || j >= n)
    throw InvalidArgument("rank2 update: index out of range");
  const UpdateDenominators d = update_denominators(state, i, j, mu);
  if (std::abs(d.one_plus_mu_cij) < kDenomTol || std::abs(d.discriminant) < kDenomTol)
    throw SingularUpdate("rank2 update: denominator vanished (|1+mu*c_ij|=" +
                         std::to_string(std::abs(d.one_plus_mu_cij)) + ", |disc|=" +
                         std::to_string(std::abs(d.discriminant)) + ")");
  const double cii = state.inv(i, i);
  const double cjj = state.inv(j, j);
  UpdateCoefs c;
  c.gamma = mu * d.one_plus_mu_cij / d.discriminant;
  c.a = mu * cjj / d.one_plus_mu_cij;
  c.b = mu * cii / d.one_plus_mu_cij;
  return c;
}

}  // namespace

InverseState rank2_update(const InverseState& state, int i, int j, double mu) {
  const UpdateCoefs c = update_coefs(state, i, j, mu);
  const Eigen::VectorXd ci = state.inv.col(i);
  const Eigen::VectorXd cj = state.inv.col(j);
  const double si = state.col_sums(i);
  const double sj = state.col_sums(j);

  InverseState out;
  out.inv = state.inv -
            c.gamma * (ci * cj.transpose() + cj * ci.transpose() -
                       c.a * ci * ci.transpose() - c.b * cj * cj.transpose());
  // Column sums follow the same correction using rows i and j of the old
  // inverse (equal to the columns by symmetry).
  out.col_sums = state.col_sums -
                 c.gamma * (si * cj + sj * ci - c.a * si * ci - c.b * sj * cj);
  out.total = state.total - c.gamma * (2.0 * si * sj - c.a * si * si - c.b * sj * sj);
  return out;
}

double toggled_grw_sum(const InverseState& state, int i, int j, double mu) {
  const UpdateCoefs c = update_coefs(state, i, j, mu);
  const double si = state.col_sums(i);
  const double sj = state.col_sums(j);
  return state.total - c.gamma * (2.0 * si * sj - c.a * si * si - c.b * sj * sj);
}

Eigen::MatrixXd sherman_morrison(const Eigen::MatrixXd& a_inv, const Eigen::VectorXd& u,
                                 const Eigen::VectorXd& v) {
  if (a_inv.rows() != a_inv.cols()) throw InvalidArgument("sherman_morrison: matrix not square");
  if (u.size() != a_inv.rows() || v.size() != a_inv.rows())
    throw InvalidArgument("sherman_morrison: vector size mismatch");
  const Eigen::VectorXd au = a_inv * u;
  const Eigen::VectorXd va = a_inv.transpose() * v;
  const double denom = 1.0 + v.dot(au);
  if (std::abs(denom) < kShermanTol)
    throw SingularUpdate("sherman_morrison: denominator " + std::to_string(denom));
  return a_inv - (au * va.transpose()) / denom;
}

InverseState apply_pair_perturbations(InverseState state,
                                      const std::vector<PairPerturbation>& toggles) {
  for (const PairPerturbation& t : toggles) state = rank2_update(state, t.i, t.j, t.mu);
  return state;
}

}  // namespace gkss
