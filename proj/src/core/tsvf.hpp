#pragma once

#include <utility>

#include "core/hilbert.hpp"
#include "core/rng.hpp"

namespace weaklab::tsvf {

using hilbert::cplx;
using hilbert::PureState;

// Pre-selected state |psi> paired with the post-selected state <phi|. The
// pair may be orthogonal; only weak-value evaluation enforces the overlap.
struct TwoStateVector {
  PureState pre;
  PureState post;
};

// <phi|A|psi> / <phi|psi>, exactly. Errors with "undefined weak value" when
// |<phi|psi>| <= 1e-12; near-orthogonal pairs are never silently regularized.
cplx weak_value(const hilbert::HermitianOperator& observable, const TwoStateVector& tsv);

// Born-rule projective measurement. Degenerate eigenvalues project onto the
// full eigenspace (Lueders rule). Returns the sampled eigenvalue and the
// normalized post-measurement state.
std::pair<double, PureState> strong_measure(const PureState& state,
                                            const hilbert::HermitianOperator& observable,
                                            RandomStream& rng);
std::pair<double, PureState> strong_measure(const PureState& state,
                                            const hilbert::EigenSystem& eigensystem,
                                            RandomStream& rng);

// Projective test against |target|state>|^2; survivors pass unchanged.
bool postselect(const PureState& state, const PureState& target, RandomStream& rng);

}  // namespace weaklab::tsvf
