#include "ncg/fock_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ncg/error.hpp"

namespace ncg {

namespace {

template <typename T>
Matrix<T> multiply_impl(const Matrix<T>& lhs, const Matrix<T>& rhs)
{
    if (lhs.cols() != rhs.rows()) {
        throw DomainError("matrix dimensions do not agree");
    }
    Matrix<T> out(lhs.rows(), rhs.cols());
    for (std::size_t i = 0; i < lhs.rows(); ++i) {
        for (std::size_t k = 0; k < lhs.cols(); ++k) {
            const T lik = lhs(i, k);
            if (lik == T{}) {
                continue;
            }
            for (std::size_t j = 0; j < rhs.cols(); ++j) {
                out(i, j) += lik * rhs(k, j);
            }
        }
    }
    return out;
}

double frobenius(const RealMatrix& m)
{
    double sum = 0.0;
    for (double v : m.data()) {
        sum += v * v;
    }
    return std::sqrt(sum);
}

double off_diagonal_norm(const RealMatrix& m)
{
    double sum = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (i != j) {
                sum += m(i, j) * m(i, j);
            }
        }
    }
    return std::sqrt(sum);
}

// One Jacobi rotation annihilating m(p, q), applied as J^T M J.
void rotate(RealMatrix& m, std::size_t p, std::size_t q)
{
    const double apq = m(p, q);
    const double theta = (m(q, q) - m(p, p)) / (2.0 * apq);
    const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    const std::size_t n = m.rows();
    for (std::size_t k = 0; k < n; ++k) {
        const double akp = m(k, p);
        const double akq = m(k, q);
        m(k, p) = c * akp - s * akq;
        m(k, q) = s * akp + c * akq;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const double apk = m(p, k);
        const double aqk = m(q, k);
        m(p, k) = c * apk - s * aqk;
        m(q, k) = s * apk + c * aqk;
    }
    m(p, q) = 0.0;
    m(q, p) = 0.0;
}

} // namespace

RealMatrix multiply(const RealMatrix& lhs, const RealMatrix& rhs) { return multiply_impl(lhs, rhs); }
ComplexMatrix multiply(const ComplexMatrix& lhs, const ComplexMatrix& rhs) { return multiply_impl(lhs, rhs); }

RealMatrix transpose(const RealMatrix& m)
{
    RealMatrix out(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            out(j, i) = m(i, j);
        }
    }
    return out;
}

double hermiticity_defect(const ComplexMatrix& h)
{
    if (h.rows() != h.cols()) {
        throw DomainError("matrix is not square");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < h.rows(); ++i) {
        for (std::size_t j = 0; j < h.cols(); ++j) {
            worst = std::max(worst, std::abs(h(i, j) - std::conj(h(j, i))));
        }
    }
    return worst;
}

FockRep build_ladder(std::size_t dim)
{
    if (dim < 2) {
        throw DomainError("Fock cutoff must be at least 2, got " + std::to_string(dim));
    }
    FockRep rep;
    rep.dim = dim;
    rep.a_matrix = RealMatrix(dim, dim);
    for (std::size_t n = 1; n < dim; ++n) {
        rep.a_matrix(n - 1, n) = std::sqrt(static_cast<double>(n));
    }
    rep.adag_matrix = transpose(rep.a_matrix);
    return rep;
}

std::vector<double> commutator_defect(std::size_t dim)
{
    const FockRep rep = build_ladder(dim);
    const RealMatrix aad = multiply(rep.a_matrix, rep.adag_matrix);
    const RealMatrix ada = multiply(rep.adag_matrix, rep.a_matrix);
    std::vector<double> defect(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        defect[i] = aad(i, i) - ada(i, i) - 1.0;
    }
    return defect;
}

FockRep build_hamiltonian(const NCParams& params, const PhysicalScales& scales, std::size_t dim)
{
    FockRep rep = build_ladder(dim);
    const double vq = coupling_energy(params, scales);
    const std::complex<double> i_unit(0.0, 1.0);

    rep.h_matrix = ComplexMatrix(2 * dim, 2 * dim);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            if (rep.adag_matrix(r, c) != 0.0) {
                rep.h_matrix(r, dim + c) = i_unit * (vq * rep.adag_matrix(r, c));
            }
            if (rep.a_matrix(r, c) != 0.0) {
                rep.h_matrix(dim + r, c) = -i_unit * (vq * rep.a_matrix(r, c));
            }
        }
    }
    return rep;
}

std::vector<double> eig_symmetric(RealMatrix m, const JacobiControl& control)
{
    if (m.rows() != m.cols()) {
        throw DomainError("matrix is not square");
    }
    const std::size_t n = m.rows();
    const double scale = frobenius(m);

    double off = off_diagonal_norm(m);
    int sweeps = 0;
    while (scale > 0.0 && off >= control.rel_tol * scale) {
        if (sweeps == control.max_sweeps) {
            throw ConvergenceError("Jacobi did not converge within " +
                                       std::to_string(control.max_sweeps) + " sweeps",
                                   off / scale);
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (m(p, q) != 0.0) {
                    rotate(m, p, q);
                }
            }
        }
        ++sweeps;
        off = off_diagonal_norm(m);
    }

    std::vector<double> values(n);
    for (std::size_t i = 0; i < n; ++i) {
        values[i] = m(i, i);
    }
    std::sort(values.begin(), values.end());
    return values;
}

std::vector<double> eig_hermitian(const ComplexMatrix& h, const JacobiControl& control)
{
    const double defect = hermiticity_defect(h);
    double magnitude = 1.0;
    for (const auto& v : h.data()) {
        magnitude = std::max(magnitude, std::abs(v));
    }
    if (defect > control.hermitian_tol * magnitude) {
        throw DomainError("matrix is not Hermitian (defect " + show(defect) + ")");
    }

    const std::size_t n = h.rows();
    RealMatrix embed(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double re = h(i, j).real();
            const double im = h(i, j).imag();
            embed(i, j) = re;
            embed(n + i, n + j) = re;
            embed(i, n + j) = -im;
            embed(n + i, j) = im;
        }
    }

    const std::vector<double> doubled = eig_symmetric(std::move(embed), control);
    const double pair_tol = 1e-8 * magnitude;
    std::vector<double> values(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double lo = doubled[2 * k];
        const double hi = doubled[2 * k + 1];
        if (hi - lo > pair_tol) {
            throw ConvergenceError("embedded spectrum does not pair up", hi - lo);
        }
        values[k] = 0.5 * (lo + hi);
    }
    return values;
}

SpectrumReport spectrum_report(const NCParams& params, const PhysicalScales& scales,
                               std::size_t dim, const JacobiControl& control)
{
    if (dim < 8) {
        throw DomainError("spectrum report needs a Fock cutoff of at least 8, got " +
                          std::to_string(dim));
    }
    const FockRep rep = build_hamiltonian(params, scales, dim);

    SpectrumReport report;
    report.dim = dim;
    report.coupling = coupling_energy(params, scales);
    report.eigenvalues = eig_hermitian(rep.h_matrix, control);

    for (std::size_t n = dim - 1; n >= 1; --n) {
        report.analytic.push_back(-report.coupling * std::sqrt(static_cast<double>(n)));
        report.level.push_back(n);
    }
    for (int k = 0; k < 2; ++k) {
        report.analytic.push_back(0.0);
        report.level.push_back(0);
    }
    for (std::size_t n = 1; n < dim; ++n) {
        report.analytic.push_back(report.coupling * std::sqrt(static_cast<double>(n)));
        report.level.push_back(n);
    }

    for (std::size_t i = 0; i < report.analytic.size(); ++i) {
        const std::size_t n = report.level[i];
        const bool trusted = n <= dim / 2;
        report.trusted.push_back(trusted);
        const double numeric = report.eigenvalues[i];
        if (n == 0) {
            report.zero_mode_residual =
                std::max(report.zero_mode_residual, std::abs(numeric) / report.coupling);
        } else if (trusted) {
            const double exact = report.analytic[i];
            report.interior_residual =
                std::max(report.interior_residual, std::abs(numeric - exact) / std::abs(exact));
        }
    }
    report.zero_modes = static_cast<std::size_t>(
        std::count_if(report.eigenvalues.begin(), report.eigenvalues.end(),
                      [&](double e) { return std::abs(e) <= 1e-10 * report.coupling; }));

    const std::vector<double> defect = commutator_defect(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (defect[i] != 0.0) {
            report.defect_index = i;
            report.defect_value = defect[i];
        }
    }
    return report;
}

} // namespace ncg
