#include "core/tsvf.hpp"

#include <cmath>
#include <stdexcept>

namespace weaklab::tsvf {

cplx weak_value(const hilbert::HermitianOperator& observable, const TwoStateVector& tsv) {
  if (observable.dim() != tsv.pre.dim())
    throw std::invalid_argument("observable dimension does not match state");
  const cplx denom = hilbert::inner(tsv.post, tsv.pre);
  if (std::abs(denom) <= 1e-12) throw std::invalid_argument("undefined weak value");
  const auto applied = observable.apply(tsv.pre.amps);
  const cplx numer =
      hilbert::inner(tsv.post, PureState{tsv.pre.basis, applied});
  return numer / denom;
}

std::pair<double, PureState> strong_measure(const PureState& state,
                                            const hilbert::HermitianOperator& observable,
                                            RandomStream& rng) {
  return strong_measure(state, hilbert::eigen_system(observable), rng);
}

std::pair<double, PureState> strong_measure(const PureState& state,
                                            const hilbert::EigenSystem& eigensystem,
                                            RandomStream& rng) {
  if (eigensystem.dim != state.dim())
    throw std::invalid_argument("eigensystem dimension does not match state");

  const std::size_t nb = eigensystem.branches.size();
  std::vector<std::vector<cplx>> projections(nb);
  std::vector<double> weights(nb);
  double total = 0.0;
  for (std::size_t b = 0; b < nb; ++b) {
    projections[b] = hilbert::project(eigensystem.branches[b], state.amps, state.dim());
    double w = 0.0;
    for (const auto& a : projections[b]) w += std::norm(a);
    weights[b] = w;
    total += w;
  }
  if (total <= 0.0) throw std::invalid_argument("degenerate state");

  const double u = rng.uniform() * total;
  double cum = 0.0;
  std::size_t pick = nb - 1;
  for (std::size_t b = 0; b < nb; ++b) {
    cum += weights[b];
    if (u < cum && weights[b] > 0.0) {
      pick = b;
      break;
    }
  }

  const double inv = 1.0 / std::sqrt(weights[pick]);
  auto amps = std::move(projections[pick]);
  for (auto& a : amps) a *= inv;
  return {eigensystem.branches[pick].value, PureState{state.basis, std::move(amps)}};
}

bool postselect(const PureState& state, const PureState& target, RandomStream& rng) {
  const double p = std::norm(hilbert::inner(target, state));
  return rng.bernoulli(p);
}

}  // namespace weaklab::tsvf
