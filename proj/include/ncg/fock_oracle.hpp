#pragma once

// Truncated Fock-space representation of the deformed Dirac Hamiltonian,
// used as an independent numerical check of the analytic Landau spectrum.

#include <complex>
#include <cstddef>
#include <vector>

#include "ncg/core_model.hpp"

namespace ncg {

/// Dense row-major matrix.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return data_.empty(); }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    const std::vector<T>& data() const noexcept { return data_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using RealMatrix = Matrix<double>;
using ComplexMatrix = Matrix<std::complex<double>>;

RealMatrix multiply(const RealMatrix& lhs, const RealMatrix& rhs);
ComplexMatrix multiply(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
RealMatrix transpose(const RealMatrix& m);

/// max |h(i,j) - conj(h(j,i))|.
double hermiticity_defect(const ComplexMatrix& h);

struct FockRep {
    std::size_t dim = 0;
    RealMatrix a_matrix;     // a(n-1, n) = sqrt(n)
    RealMatrix adag_matrix;  // transpose of a_matrix
    ComplexMatrix h_matrix;  // 2 dim x 2 dim; empty when only the ladder part is built
};

/// Truncated ladder operators on |0>..|dim-1>. Throws DomainError for dim < 2.
FockRep build_ladder(std::size_t dim);

/// Diagonal of [a, a^dagger] - 1. Zero except the last entry, which is -dim.
std::vector<double> commutator_defect(std::size_t dim);

/// H = v_F [[0, i Q a^dagger], [-i Q a, 0]] on (sublattice A) + (sublattice B).
FockRep build_hamiltonian(const NCParams& params, const PhysicalScales& scales, std::size_t dim);

struct JacobiControl {
    double rel_tol = 1e-12;   // off-diagonal Frobenius norm relative to ||M||_F
    int max_sweeps = 100;
    double hermitian_tol = 1e-10;
};

/// Symmetric eigenvalues by cyclic Jacobi, sorted ascending.
/// Throws ConvergenceError (with the final relative off-norm) past max_sweeps.
std::vector<double> eig_symmetric(RealMatrix m, const JacobiControl& control = {});

/// Hermitian eigenvalues, sorted ascending.
///
/// Diagonalizes the real embedding [[Re, -Im], [Im, Re]], whose spectrum is
/// the Hermitian spectrum with every value doubled, and collapses the pairs.
/// Throws DomainError when the input is not Hermitian within
/// control.hermitian_tol and ConvergenceError on Jacobi failure.
std::vector<double> eig_hermitian(const ComplexMatrix& h, const JacobiControl& control = {});

struct SpectrumReport {
    std::size_t dim = 0;
    double coupling = 0.0;             // v_F Q
    std::vector<double> eigenvalues;   // numerical, ascending, length 2 dim
    std::vector<double> analytic;      // +-v_F Q sqrt(n), n = 0..dim-1, ascending
    std::vector<std::size_t> level;    // level index n of each sorted entry
    std::vector<bool> trusted;         // n <= dim / 2
    double interior_residual = 0.0;    // max relative deviation over trusted n >= 1
    double zero_mode_residual = 0.0;   // max |E| / v_F Q over the two n = 0 entries
    std::size_t zero_modes = 0;        // eigenvalues with |E| <= 1e-10 v_F Q
    std::size_t defect_index = 0;      // position of the commutator defect
    double defect_value = 0.0;         // its value, -dim
};

/// Diagonalizes build_hamiltonian and compares it level by level against the
/// analytic spectrum. Requires dim >= 8.
SpectrumReport spectrum_report(const NCParams& params, const PhysicalScales& scales,
                               std::size_t dim, const JacobiControl& control = {});

} // namespace ncg
