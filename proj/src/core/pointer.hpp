#pragma once

#include <utility>
#include <vector>

#include "core/hilbert.hpp"
#include "core/rng.hpp"

namespace weaklab::pointer {

using hilbert::cplx;
using hilbert::PureState;

// Measuring-device profile: amplitude Gaussian exp(-(x-center)^2 / (2 sigma^2)).
// Its position-momentum uncertainty product is exactly 1/2 (hbar = 1), the
// minimum the uncertainty relation allows.
struct GaussianPointer {
  double center = 0.0;
  double sigma = 1.0;
};

// One eigenvalue sector of the coupled system, entangled with a pointer
// Gaussian shifted to epsilon * eigenvalue. `amplitude` is the norm of the
// eigenspace projection; `state` is the normalized projection and carries the
// branch phase. Branch states are mutually orthogonal by construction.
struct JointBranch {
  double eigenvalue = 0.0;
  cplx amplitude{0.0, 0.0};
  double pointer_center = 0.0;
  PureState state;
};

struct JointState {
  std::vector<JointBranch> branches;
  double sigma = 1.0;
  double epsilon = 0.0;
  hilbert::Basis basis;
};

// One individually recorded pointer readout (outcomes are never accumulated
// on a shared device; the pointer is recalibrated for every record).
struct ReadoutRecord {
  double value = 0.0;
  double epsilon = 0.0;
  bool collapsed_flag = false;   // post-readout fidelity with the input state < 0.5
  long long trial_id = 0;
  long long cycle_id = 0;
};

// Impulsive coupling epsilon * A (x) P_d applied to a pointer of width sigma:
// each eigenbranch of A acquires pointer_center = epsilon * eigenvalue. The
// time profile of the interaction is integrated out; only its unit integral
// enters, via epsilon.
JointState couple(const PureState& system, const hilbert::HermitianOperator& observable,
                  double epsilon, double sigma);
JointState couple(const PureState& system, const hilbert::EigenSystem& eigensystem,
                  double epsilon, double sigma);

// Strong measurement of the pointer position: samples x from the marginal
// density sum_b |c_b|^2 G_sigma(x - center_b) and applies the Bayesian update
// c_b -> c_b * exp(-(x-center_b)^2/(2 sigma^2)), renormalized. This is the
// partial collapse: vanishing for epsilon -> 0, projective for sigma -> 0.
std::pair<ReadoutRecord, PureState> readout(const JointState& joint, RandomStream& rng);

// Expected pointer position. Without post-selection this is epsilon * <A>.
double mean_shift(const JointState& joint);

// Conditional pointer mean given a successful post-selection, evaluated
// exactly from the branch amplitudes reweighted by <post|branch> and the
// pairwise Gaussian overlaps; equals epsilon * Re(weak value) to first order
// in epsilon. Errors when the post-selection annihilates every branch.
double mean_shift(const JointState& joint, const PureState& post);

// Overlap <g_a|g_b> of two unit-normalized amplitude Gaussians of width sigma
// whose centers differ by `separation`: exp(-separation^2 / (4 sigma^2)).
double branch_overlap(double separation, double sigma);

// Exact probability that one weakly measured photon leaves the Michelson
// apparatus through the wrong port after recombination:
//   2 T (1-T) (1 - exp(-epsilon^2 / (4 sigma^2))).
// Reduces to 0 at epsilon = 0 and to 2T(1-T) (= 1/2 at T = 1/2) for a strong
// which-path measurement.
double wrong_port_probability(double epsilon, double sigma, double transmission);

}  // namespace weaklab::pointer
