#pragma once

#include <array>
#include <complex>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace weaklab::hilbert {

using cplx = std::complex<double>;

// Ordered, unique basis labels (path names, ports, spin directions).
// Immutable and shared, so copying states is cheap.
class Basis {
 public:
  Basis(std::initializer_list<std::string> labels);
  explicit Basis(std::vector<std::string> labels);

  std::size_t size() const { return labels_->size(); }
  const std::string& label(std::size_t i) const { return (*labels_)[i]; }
  const std::vector<std::string>& labels() const { return *labels_; }
  std::size_t index_of(std::string_view label) const;  // throws on unknown label
  bool operator==(const Basis& other) const;

 private:
  std::shared_ptr<const std::vector<std::string>> labels_;
};

// Complex amplitude vector over a labeled finite basis.
struct PureState {
  Basis basis;
  std::vector<cplx> amps;

  std::size_t dim() const { return amps.size(); }
};

PureState make_state(Basis basis, std::vector<cplx> amps);
PureState basis_state(const Basis& basis, std::size_t index);

double norm_squared(const PureState& state);
PureState normalize(const PureState& state);        // errors on a zero vector
cplx inner(const PureState& a, const PureState& b);  // <a|b>, conjugate-linear in a

// Dense Hermitian matrix; hermiticity enforced at construction (1e-12).
class HermitianOperator {
 public:
  HermitianOperator(std::size_t dim, std::vector<cplx> row_major);

  std::size_t dim() const { return dim_; }
  const cplx& at(std::size_t row, std::size_t col) const { return m_[row * dim_ + col]; }
  const std::vector<cplx>& data() const { return m_; }

  std::vector<cplx> apply(std::span<const cplx> amps) const;

 private:
  std::size_t dim_;
  std::vector<cplx> m_;
};

// Dense unitary; U†U = I enforced at construction (1e-12 max norm).
class Unitary {
 public:
  Unitary(std::size_t dim, std::vector<cplx> row_major);

  std::size_t dim() const { return dim_; }
  const cplx& at(std::size_t row, std::size_t col) const { return m_[row * dim_ + col]; }

  PureState apply(const PureState& state) const;

 private:
  std::size_t dim_;
  std::vector<cplx> m_;
};

// Two-port splitter [[sqrt(T), sqrt(1-T)], [sqrt(1-T), -sqrt(T)]]. The real
// sign convention makes the matrix exactly self-inverse, so a Michelson
// round trip returns the untouched photon to its source port.
Unitary beam_splitter(double transmission);

// n-port splitter whose first column is (sqrt(c_1), ..., sqrt(c_n)); the
// remaining columns are completed by Gram-Schmidt over the standard basis in
// index order, which keeps the construction deterministic. Coefficients must
// be nonnegative and sum to 1 within 1e-9.
Unitary beam_splitter(std::span<const double> port_coefficients);

HermitianOperator projector(const Basis& basis, std::string_view label);

// n.sigma for a unit 3-vector n (|n| = 1 within 1e-9); eigenvalues are +-1.
HermitianOperator pauli(const std::array<double, 3>& axis);

double expectation(const HermitianOperator& op, const PureState& state);

// Eigendecomposition grouped by distinct eigenvalue (merged within 1e-9).
// Diagonal operators keep their eigenvectors as basis indices so projections
// stay O(dim); general operators store dense eigenvectors.
struct EigenBranch {
  double value = 0.0;
  std::vector<std::size_t> axis_indices;        // standard-basis eigenvectors
  std::vector<std::vector<cplx>> vectors;       // dense eigenvectors otherwise
};

struct EigenSystem {
  std::size_t dim = 0;
  std::vector<EigenBranch> branches;            // ascending eigenvalue
};

EigenSystem eigen_system(const HermitianOperator& op);

// Projection of amps onto the branch eigenspace.
std::vector<cplx> project(const EigenBranch& branch, std::span<const cplx> amps, std::size_t dim);

}  // namespace weaklab::hilbert
