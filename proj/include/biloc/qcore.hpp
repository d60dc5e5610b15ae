#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "biloc/errors.hpp"

namespace biloc {

using Complex = std::complex<double>;

enum class PauliAxis { X = 0, Y = 1, Z = 2 };

/// Dense square complex matrix of dimension 2 or 4. Row-major, value type,
/// immutable in spirit: operations return fresh matrices.
class ComplexMatrix {
  public:
    explicit ComplexMatrix(int dim);
    static ComplexMatrix identity(int dim);

    int dim() const { return dim_; }
    Complex &at(int r, int c) { return m_[static_cast<std::size_t>(r * dim_ + c)]; }
    const Complex &at(int r, int c) const { return m_[static_cast<std::size_t>(r * dim_ + c)]; }

    ComplexMatrix adjoint() const;
    Complex trace() const;

    /// Largest entrywise |m_ij - (m†)_ij| deviation from Hermiticity.
    double hermiticity_defect() const;

    friend ComplexMatrix operator+(const ComplexMatrix &a, const ComplexMatrix &b);
    friend ComplexMatrix operator-(const ComplexMatrix &a, const ComplexMatrix &b);
    friend ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);
    friend ComplexMatrix operator*(Complex s, const ComplexMatrix &a);

  private:
    int dim_;
    std::array<Complex, 16> m_{}; // dim*dim entries used
};

/// sigma_x, sigma_y or sigma_z.
ComplexMatrix pauli(PauliAxis axis);

/// Kronecker product of two 2x2 matrices; the first factor is the
/// left-hand qubit of the pair.
ComplexMatrix tensor_product(const ComplexMatrix &a, const ComplexMatrix &b);

/// Eigenvalues of a Hermitian matrix, ascending. Cyclic Jacobi on the real
/// symmetric embedding [[Re, -Im], [Im, Re]]; accurate to ~1e-13 for the
/// 2x2 and 4x4 matrices used here.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix &m);

/// 3x3 real matrix t_ij = Tr[rho sigma_i (x) sigma_j], entries in [-1, 1].
struct CorrelationTensor {
    std::array<std::array<double, 3>, 3> t{};

    double operator()(int i, int j) const { return t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
    double &operator()(int i, int j) { return t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }

    void validate() const; // |t_ij| <= 1 + 1e-12
};

/// A two-qubit density matrix together with its constructor provenance.
/// Invariants (checked on construction): Hermitian within 1e-12, unit trace
/// within 1e-12, smallest eigenvalue >= -1e-10.
class TwoQubitState {
  public:
    /// |psi-><psi-|, the maximally entangled singlet.
    static TwoQubitState singlet();
    /// v |psi-><psi-| + (1-v) I/4.
    static TwoQubitState werner(double v);
    /// sqrt(v) (|HH><HH| + |VV><VV|)/2 + (1-sqrt(v)) I/4, with H = |0>, V = |1>.
    static TwoQubitState classical_mixture(double v);
    /// Arbitrary density matrix; validated against the type invariants.
    static TwoQubitState custom(const ComplexMatrix &rho);

    const ComplexMatrix &rho() const { return rho_; }
    const std::string &label() const { return label_; }

  private:
    TwoQubitState(ComplexMatrix rho, std::string label);

    ComplexMatrix rho_;
    std::string label_;
};

/// v rho + (1-v) I/4 (isotropic depolarization of an existing state).
TwoQubitState depolarize(const TwoQubitState &s, double v);

/// Pauli correlation tensor of a state. Throws NumericalConsistencyError if
/// any trace carries imaginary residue >= 1e-10.
CorrelationTensor correlation_tensor(const TwoQubitState &s);

/// Per-wing visibilities; the effective scenario visibility is
/// V = sqrt(v_ab * v_bc).
struct NoiseModel {
    double v_ab = 1.0;
    double v_bc = 1.0;

    double big_v() const;
    void validate() const; // both visibilities in [0, 1]
};

} // namespace biloc
