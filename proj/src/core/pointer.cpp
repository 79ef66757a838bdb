#include "core/pointer.hpp"

#include <cmath>
#include <stdexcept>

namespace weaklab::pointer {

namespace {

constexpr double kBranchCutoff = 1e-15;  // squared-amplitude weight below which a branch is dropped

void check_coupling(double epsilon, double sigma) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("coupling strength must be positive");
  if (!(sigma > 0.0)) throw std::invalid_argument("pointer sigma must be positive");
}

// Readout standard deviation of one branch: |Psi|^2 has variance sigma^2/2.
inline double position_sd(double sigma) { return sigma / std::sqrt(2.0); }

// Amplitude Gaussian, unit peak; normalization cancels everywhere it is used.
inline double amp_gauss(double x, double center, double sigma) {
  const double d = x - center;
  return std::exp(-d * d / (2.0 * sigma * sigma));
}

}  // namespace

JointState couple(const PureState& system, const hilbert::HermitianOperator& observable,
                  double epsilon, double sigma) {
  if (observable.dim() != system.dim())
    throw std::invalid_argument("observable dimension does not match state");
  return couple(system, hilbert::eigen_system(observable), epsilon, sigma);
}

JointState couple(const PureState& system, const hilbert::EigenSystem& eigensystem,
                  double epsilon, double sigma) {
  check_coupling(epsilon, sigma);
  if (eigensystem.dim != system.dim())
    throw std::invalid_argument("eigensystem dimension does not match state");

  JointState joint{{}, sigma, epsilon, system.basis};
  for (const auto& eb : eigensystem.branches) {
    auto proj = hilbert::project(eb, system.amps, system.dim());
    double w = 0.0;
    for (const auto& a : proj) w += std::norm(a);
    if (w < kBranchCutoff) continue;
    const double c = std::sqrt(w);
    const double inv = 1.0 / c;
    for (auto& a : proj) a *= inv;
    joint.branches.push_back(JointBranch{eb.value, cplx{c, 0.0}, epsilon * eb.value,
                                         PureState{system.basis, std::move(proj)}});
  }
  if (joint.branches.empty()) throw std::invalid_argument("degenerate state");
  return joint;
}

std::pair<ReadoutRecord, PureState> readout(const JointState& joint, RandomStream& rng) {
  const std::size_t nb = joint.branches.size();

  // Branch pick by |c_b|^2, then the Gaussian position draw.
  double x = 0.0;
  {
    const double u = rng.uniform();
    double cum = 0.0;
    std::size_t pick = nb - 1;
    for (std::size_t b = 0; b < nb; ++b) {
      cum += std::norm(joint.branches[b].amplitude);
      if (u < cum) {
        pick = b;
        break;
      }
    }
    x = rng.normal(joint.branches[pick].pointer_center, position_sd(joint.sigma));
  }

  // Bayesian update of the branch amplitudes at the sampled position.
  std::vector<cplx> updated(nb);
  double norm2 = 0.0;
  for (std::size_t b = 0; b < nb; ++b) {
    updated[b] = joint.branches[b].amplitude *
                 amp_gauss(x, joint.branches[b].pointer_center, joint.sigma);
    norm2 += std::norm(updated[b]);
  }
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& c : updated) c *= inv;

  // Branch states are orthonormal, so the fidelity against the pre-readout
  // system state reduces to the branch-amplitude overlap.
  cplx overlap{0.0, 0.0};
  for (std::size_t b = 0; b < nb; ++b)
    overlap += std::conj(joint.branches[b].amplitude) * updated[b];
  const double fidelity = std::norm(overlap);

  PureState post{joint.basis, std::vector<cplx>(joint.basis.size(), cplx{0.0, 0.0})};
  if (nb == 1) {
    post.amps = joint.branches[0].state.amps;  // no entanglement, no disturbance
  } else {
    for (std::size_t b = 0; b < nb; ++b) {
      const auto& bs = joint.branches[b].state.amps;
      for (std::size_t i = 0; i < bs.size(); ++i) post.amps[i] += updated[b] * bs[i];
    }
  }

  ReadoutRecord rec;
  rec.value = x;
  rec.epsilon = joint.epsilon;
  rec.collapsed_flag = fidelity < 0.5;
  return {rec, std::move(post)};
}

double mean_shift(const JointState& joint) {
  double mean = 0.0;
  for (const auto& b : joint.branches) mean += std::norm(b.amplitude) * b.pointer_center;
  return mean;
}

double mean_shift(const JointState& joint, const PureState& post) {
  const std::size_t nb = joint.branches.size();
  std::vector<cplx> d(nb);
  double weight = 0.0;
  for (std::size_t b = 0; b < nb; ++b) {
    d[b] = joint.branches[b].amplitude * hilbert::inner(post, joint.branches[b].state);
    weight += std::norm(d[b]);
  }
  if (weight < 1e-24) throw std::invalid_argument("post-selection annihilates state");

  // Pointer state after post-selection is sum_b d_b g(x - x_b); its mean is a
  // ratio of Gaussian-overlap bilinear forms.
  double numerator = 0.0;
  double denominator = 0.0;
  for (std::size_t b = 0; b < nb; ++b) {
    for (std::size_t k = 0; k < nb; ++k) {
      const double xb = joint.branches[b].pointer_center;
      const double xk = joint.branches[k].pointer_center;
      const double omega = branch_overlap(xb - xk, joint.sigma);
      const double pair = (std::conj(d[b]) * d[k]).real() * omega;
      denominator += pair;
      numerator += pair * 0.5 * (xb + xk);
    }
  }
  if (!(denominator > 0.0)) throw std::invalid_argument("post-selection annihilates state");
  return numerator / denominator;
}

double branch_overlap(double separation, double sigma) {
  return std::exp(-separation * separation / (4.0 * sigma * sigma));
}

double wrong_port_probability(double epsilon, double sigma, double transmission) {
  if (epsilon < 0.0) throw std::invalid_argument("coupling strength must be nonnegative");
  if (!(sigma > 0.0)) throw std::invalid_argument("pointer sigma must be positive");
  if (!(transmission > 0.0 && transmission < 1.0))
    throw std::invalid_argument("transmission must lie in (0, 1)");
  const double omega = branch_overlap(epsilon, sigma);
  return 2.0 * transmission * (1.0 - transmission) * (1.0 - omega);
}

}  // namespace weaklab::pointer
