#include "core/hilbert.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>
#include <utility>

namespace weaklab::hilbert {

namespace {

void check_labels(const std::vector<std::string>& labels) {
  if (labels.size() < 2) throw std::invalid_argument("basis needs at least 2 labels");
  std::unordered_set<std::string_view> seen;
  for (const auto& label : labels) {
    if (!seen.insert(label).second)
      throw std::invalid_argument("duplicate basis label: " + label);
  }
}

}  // namespace

Basis::Basis(std::initializer_list<std::string> labels)
    : Basis(std::vector<std::string>(labels)) {}

Basis::Basis(std::vector<std::string> labels)
    : labels_(std::make_shared<const std::vector<std::string>>(std::move(labels))) {
  check_labels(*labels_);
}

std::size_t Basis::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_->size(); ++i)
    if ((*labels_)[i] == label) return i;
  throw std::invalid_argument("unknown basis label: " + std::string(label));
}

bool Basis::operator==(const Basis& other) const {
  return labels_ == other.labels_ || *labels_ == *other.labels_;
}

PureState make_state(Basis basis, std::vector<cplx> amps) {
  if (basis.size() != amps.size())
    throw std::invalid_argument("amplitude count does not match basis size");
  return PureState{std::move(basis), std::move(amps)};
}

PureState basis_state(const Basis& basis, std::size_t index) {
  std::vector<cplx> amps(basis.size(), cplx{0.0, 0.0});
  amps.at(index) = cplx{1.0, 0.0};
  return PureState{basis, std::move(amps)};
}

double norm_squared(const PureState& state) {
  double total = 0.0;
  for (const auto& a : state.amps) total += std::norm(a);
  return total;
}

PureState normalize(const PureState& state) {
  const double n2 = norm_squared(state);
  if (n2 <= 0.0) throw std::invalid_argument("degenerate state");
  const double inv = 1.0 / std::sqrt(n2);
  PureState out = state;
  for (auto& a : out.amps) a *= inv;
  return out;
}

cplx inner(const PureState& a, const PureState& b) {
  if (!(a.basis == b.basis)) throw std::invalid_argument("basis mismatch in inner product");
  cplx total{0.0, 0.0};
  for (std::size_t i = 0; i < a.amps.size(); ++i) total += std::conj(a.amps[i]) * b.amps[i];
  return total;
}

HermitianOperator::HermitianOperator(std::size_t dim, std::vector<cplx> row_major)
    : dim_(dim), m_(std::move(row_major)) {
  if (m_.size() != dim_ * dim_) throw std::invalid_argument("matrix size mismatch");
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c)
      if (std::abs(m_[r * dim_ + c] - std::conj(m_[c * dim_ + r])) > 1e-12)
        throw std::invalid_argument("matrix is not Hermitian");
}

std::vector<cplx> HermitianOperator::apply(std::span<const cplx> amps) const {
  if (amps.size() != dim_) throw std::invalid_argument("dimension mismatch");
  std::vector<cplx> out(dim_, cplx{0.0, 0.0});
  for (std::size_t r = 0; r < dim_; ++r) {
    cplx acc{0.0, 0.0};
    for (std::size_t c = 0; c < dim_; ++c) acc += m_[r * dim_ + c] * amps[c];
    out[r] = acc;
  }
  return out;
}

Unitary::Unitary(std::size_t dim, std::vector<cplx> row_major)
    : dim_(dim), m_(std::move(row_major)) {
  if (m_.size() != dim_ * dim_) throw std::invalid_argument("matrix size mismatch");
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) {
      cplx acc{0.0, 0.0};
      for (std::size_t k = 0; k < dim_; ++k)
        acc += std::conj(m_[k * dim_ + r]) * m_[k * dim_ + c];
      const cplx want = (r == c) ? cplx{1.0, 0.0} : cplx{0.0, 0.0};
      if (std::abs(acc - want) > 1e-12) throw std::invalid_argument("matrix is not unitary");
    }
  }
}

PureState Unitary::apply(const PureState& state) const {
  if (state.dim() != dim_) throw std::invalid_argument("dimension mismatch");
  std::vector<cplx> out(dim_, cplx{0.0, 0.0});
  for (std::size_t r = 0; r < dim_; ++r) {
    cplx acc{0.0, 0.0};
    for (std::size_t c = 0; c < dim_; ++c) acc += m_[r * dim_ + c] * state.amps[c];
    out[r] = acc;
  }
  return PureState{state.basis, std::move(out)};
}

Unitary beam_splitter(double transmission) {
  if (!(transmission > 0.0 && transmission < 1.0))
    throw std::invalid_argument("transmission must lie in (0, 1)");
  const double t = std::sqrt(transmission);
  const double r = std::sqrt(1.0 - transmission);
  return Unitary(2, {cplx{t, 0}, cplx{r, 0}, cplx{r, 0}, cplx{-t, 0}});
}

Unitary beam_splitter(std::span<const double> port_coefficients) {
  const std::size_t n = port_coefficients.size();
  if (n < 2) throw std::invalid_argument("need at least 2 ports");
  double sum = 0.0;
  for (double c : port_coefficients) {
    if (c < 0.0) throw std::invalid_argument("negative port coefficient");
    sum += c;
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw std::invalid_argument("port coefficients must sum to 1");

  // Columns built by modified Gram-Schmidt: the physical first column, then
  // standard basis vectors in index order, skipping any that collapse.
  std::vector<std::vector<double>> cols;
  cols.reserve(n);
  {
    std::vector<double> first(n);
    for (std::size_t i = 0; i < n; ++i) first[i] = std::sqrt(port_coefficients[i]);
    cols.push_back(std::move(first));
  }
  for (std::size_t cand = 0; cand < n && cols.size() < n; ++cand) {
    std::vector<double> v(n, 0.0);
    v[cand] = 1.0;
    for (const auto& col : cols) {
      double dot = 0.0;
      for (std::size_t i = 0; i < n; ++i) dot += col[i] * v[i];
      for (std::size_t i = 0; i < n; ++i) v[i] -= dot * col[i];
    }
    double nrm2 = 0.0;
    for (double x : v) nrm2 += x * x;
    if (nrm2 < 1e-16) continue;
    const double inv = 1.0 / std::sqrt(nrm2);
    for (double& x : v) x *= inv;
    cols.push_back(std::move(v));
  }
  if (cols.size() != n) throw std::invalid_argument("failed to complete splitter unitary");

  std::vector<cplx> m(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m[r * n + c] = cplx{cols[c][r], 0.0};
  return Unitary(n, std::move(m));
}

HermitianOperator projector(const Basis& basis, std::string_view label) {
  const std::size_t n = basis.size();
  const std::size_t k = basis.index_of(label);
  std::vector<cplx> m(n * n, cplx{0.0, 0.0});
  m[k * n + k] = cplx{1.0, 0.0};
  return HermitianOperator(n, std::move(m));
}

HermitianOperator pauli(const std::array<double, 3>& axis) {
  const double len = std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
  if (std::abs(len - 1.0) > 1e-9) throw std::invalid_argument("axis must be a unit vector");
  const double nx = axis[0], ny = axis[1], nz = axis[2];
  return HermitianOperator(2, {cplx{nz, 0}, cplx{nx, -ny}, cplx{nx, ny}, cplx{-nz, 0}});
}

double expectation(const HermitianOperator& op, const PureState& state) {
  const auto applied = op.apply(state.amps);
  cplx acc{0.0, 0.0};
  for (std::size_t i = 0; i < applied.size(); ++i) acc += std::conj(state.amps[i]) * applied[i];
  return acc.real();
}

namespace {

bool is_diagonal(const HermitianOperator& op) {
  for (std::size_t r = 0; r < op.dim(); ++r)
    for (std::size_t c = 0; c < op.dim(); ++c)
      if (r != c && std::abs(op.at(r, c)) > 1e-14) return false;
  return true;
}

constexpr double kEigenvalueMergeTol = 1e-9;

}  // namespace

EigenSystem eigen_system(const HermitianOperator& op) {
  const std::size_t n = op.dim();
  EigenSystem out;
  out.dim = n;

  if (is_diagonal(op)) {
    std::vector<std::pair<double, std::size_t>> diag(n);
    for (std::size_t i = 0; i < n; ++i) diag[i] = {op.at(i, i).real(), i};
    std::sort(diag.begin(), diag.end());
    for (const auto& [value, index] : diag) {
      if (!out.branches.empty() && std::abs(out.branches.back().value - value) <= kEigenvalueMergeTol) {
        out.branches.back().axis_indices.push_back(index);
      } else {
        EigenBranch b;
        b.value = value;
        b.axis_indices.push_back(index);
        out.branches.push_back(std::move(b));
      }
    }
    return out;
  }

  Eigen::MatrixXcd m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = op.at(r, c);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigendecomposition failed");

  // Residual check per eigenvector; 1e-9 is the contract for measurement use.
  for (std::size_t i = 0; i < n; ++i) {
    const Eigen::VectorXcd v = solver.eigenvectors().col(static_cast<Eigen::Index>(i));
    const double residual = (m * v - solver.eigenvalues()[static_cast<Eigen::Index>(i)] * v).norm();
    if (residual > 1e-9) throw std::runtime_error("eigenvector residual exceeds 1e-9");
  }

  for (std::size_t i = 0; i < n; ++i) {
    const double value = solver.eigenvalues()[static_cast<Eigen::Index>(i)];
    std::vector<cplx> vec(n);
    for (std::size_t r = 0; r < n; ++r) vec[r] = solver.eigenvectors()(r, static_cast<Eigen::Index>(i));
    if (!out.branches.empty() && std::abs(out.branches.back().value - value) <= kEigenvalueMergeTol) {
      out.branches.back().vectors.push_back(std::move(vec));
    } else {
      EigenBranch b;
      b.value = value;
      b.vectors.push_back(std::move(vec));
      out.branches.push_back(std::move(b));
    }
  }
  return out;
}

std::vector<cplx> project(const EigenBranch& branch, std::span<const cplx> amps, std::size_t dim) {
  std::vector<cplx> out(dim, cplx{0.0, 0.0});
  if (!branch.axis_indices.empty()) {
    for (std::size_t idx : branch.axis_indices) out[idx] = amps[idx];
    return out;
  }
  for (const auto& v : branch.vectors) {
    cplx coeff{0.0, 0.0};
    for (std::size_t i = 0; i < dim; ++i) coeff += std::conj(v[i]) * amps[i];
    for (std::size_t i = 0; i < dim; ++i) out[i] += coeff * v[i];
  }
  return out;
}

}  // namespace weaklab::hilbert
