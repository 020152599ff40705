#pragma once

// Dense complex linear algebra for the quantum-marginal construction:
// discrete Weyl operators, the generalized Bell basis, density operators with
// prescribed spectrum and uniform marginals, partial traces, and a
// self-contained cyclic-Jacobi Hermitian eigensolver (the dimensions in play
// stay ≤ 64, so no external solver is pulled in).

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <numeric>
#include <vector>

#include "kronlab/errors.hpp"

namespace kronlab {

// Tolerances used by the validity checks below; roughly two orders above the
// double-precision error accumulated at the tested dimensions.
inline constexpr double kHermTol = 1e-12;
inline constexpr double kOrthTol = 1e-12;
inline constexpr double kPsdTol = 1e-10;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kEigTol = 1e-9;

using Complex = std::complex<double>;

class ComplexMatrix {
public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t n) : n_(n), a_(n * n) {}

    static ComplexMatrix identity(std::size_t n) {
        ComplexMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t size() const { return n_; }
    Complex& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    ComplexMatrix adjoint() const {
        ComplexMatrix m(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) m(j, i) = std::conj((*this)(i, j));
        return m;
    }

    Complex trace() const {
        Complex t{};
        for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
        return t;
    }

    double frobenius_norm() const {
        double s = 0;
        for (const Complex& v : a_) s += std::norm(v);
        return std::sqrt(s);
    }

    // max_ij |a_ij - conj(a_ji)|
    double hermiticity_error() const {
        double e = 0;
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i; j < n_; ++j)
                e = std::max(e, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
        return e;
    }

    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
        ComplexMatrix c(a.n_);
        for (std::size_t i = 0; i < a.n_; ++i)
            for (std::size_t k = 0; k < a.n_; ++k) {
                const Complex aik = a(i, k);
                if (aik == Complex{}) continue;
                for (std::size_t j = 0; j < a.n_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
        ComplexMatrix c = a;
        for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] += b.a_[i];
        return c;
    }

    friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
        ComplexMatrix c = a;
        for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] -= b.a_[i];
        return c;
    }

    friend ComplexMatrix operator*(Complex s, const ComplexMatrix& a) {
        ComplexMatrix c = a;
        for (Complex& v : c.a_) v *= s;
        return c;
    }

private:
    std::size_t n_ = 0;
    std::vector<Complex> a_;
};

inline ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t na = a.size(), nb = b.size();
    ComplexMatrix c(na * nb);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j) {
            if (a(i, j) == Complex{}) continue;
            for (std::size_t k = 0; k < nb; ++k)
                for (std::size_t l = 0; l < nb; ++l)
                    c(i * nb + k, j * nb + l) = a(i, j) * b(k, l);
        }
    return c;
}

struct HermitianEigen {
    std::vector<double> values;  // decreasing
    ComplexMatrix vectors;       // columns; A ≈ V diag(values) V†
};

namespace detail {

inline double offdiagonal_norm(const ComplexMatrix& a) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

}  // namespace detail

// Cyclic Jacobi for Hermitian matrices. Each rotation annihilates one
// off-diagonal pair; sweeps stop once the off-diagonal Frobenius norm drops
// below 1e-13 (hard cap 60 sweeps).
inline HermitianEigen jacobi_eigen(ComplexMatrix a) {
    const std::size_t n = a.size();
    ComplexMatrix v = ComplexMatrix::identity(n);
    constexpr double kOffTol = 1e-13;
    constexpr int kMaxSweeps = 60;
    for (int sweep = 0; sweep < kMaxSweeps && detail::offdiagonal_norm(a) >= kOffTol; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                const double beta = std::abs(a(p, q));
                if (beta == 0.0) continue;
                const Complex phase = a(p, q) / beta;  // e^{iφ}
                const double alpha = a(p, p).real();
                const double gamma = a(q, q).real();
                const double tau = (gamma - alpha) / (2.0 * beta);
                const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                // column update: col_p ← c·col_p − s·conj(phase)·col_q,
                //                col_q ← s·phase·col_p + c·col_q
                for (std::size_t i = 0; i < n; ++i) {
                    const Complex aip = a(i, p), aiq = a(i, q);
                    a(i, p) = c * aip - s * std::conj(phase) * aiq;
                    a(i, q) = s * phase * aip + c * aiq;
                    const Complex vip = v(i, p), viq = v(i, q);
                    v(i, p) = c * vip - s * std::conj(phase) * viq;
                    v(i, q) = s * phase * vip + c * viq;
                }
                // row update with the adjoint rotation
                for (std::size_t j = 0; j < n; ++j) {
                    const Complex apj = a(p, j), aqj = a(q, j);
                    a(p, j) = c * apj - s * phase * aqj;
                    a(q, j) = s * std::conj(phase) * apj + c * aqj;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
            }
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return a(x, x).real() > a(y, y).real(); });
    HermitianEigen out;
    out.values.resize(n);
    out.vectors = ComplexMatrix(n);
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = a(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
    }
    return out;
}

enum class Subsystem { A, B };

// Hermitian PSD trace-one operator, optionally carrying bipartite factor
// dimensions; validity is checked on construction.
class DensityOperator {
public:
    explicit DensityOperator(ComplexMatrix m) : mat_(std::move(m)) { validate(); }

    DensityOperator(ComplexMatrix m, std::size_t dim_a, std::size_t dim_b)
        : mat_(std::move(m)), dim_a_(dim_a), dim_b_(dim_b) {
        if (dim_a_ * dim_b_ != mat_.size())
            throw contract_error("density operator: factor dimensions do not multiply to the size");
        validate();
    }

    const ComplexMatrix& matrix() const { return mat_; }
    std::size_t dimension() const { return mat_.size(); }
    bool bipartite() const { return dim_a_ != 0; }
    std::size_t dim_a() const { return dim_a_; }
    std::size_t dim_b() const { return dim_b_; }

    // Eigenvalues in decreasing order.
    std::vector<double> spectrum() const { return jacobi_eigen(mat_).values; }

private:
    void validate() const {
        if (mat_.size() == 0) throw contract_error("density operator: empty matrix");
        if (mat_.hermiticity_error() > kHermTol)
            throw contract_error("density operator: matrix is not Hermitian within tolerance");
        if (std::abs(mat_.trace().real() - 1.0) > kTraceTol || std::abs(mat_.trace().imag()) > kTraceTol)
            throw contract_error("density operator: trace is not 1 within tolerance");
        const auto eig = jacobi_eigen(mat_);
        if (eig.values.back() < -kPsdTol)
            throw contract_error("density operator: not positive semidefinite within tolerance");
    }

    ComplexMatrix mat_;
    std::size_t dim_a_ = 0;
    std::size_t dim_b_ = 0;
};

namespace detail {

inline ComplexMatrix partial_trace_matrix(const ComplexMatrix& m, std::size_t da, std::size_t db,
                                          Subsystem keep) {
    const std::size_t nk = keep == Subsystem::A ? da : db;
    const std::size_t nt = keep == Subsystem::A ? db : da;
    ComplexMatrix out(nk);
    for (std::size_t i = 0; i < nk; ++i)
        for (std::size_t j = 0; j < nk; ++j) {
            Complex s{};
            for (std::size_t t = 0; t < nt; ++t) {
                const std::size_t row = keep == Subsystem::A ? i * db + t : t * db + i;
                const std::size_t col = keep == Subsystem::A ? j * db + t : t * db + j;
                s += m(row, col);
            }
            out(i, j) = s;
        }
    return out;
}

}  // namespace detail

inline DensityOperator partial_trace(const DensityOperator& rho, Subsystem keep) {
    if (!rho.bipartite())
        throw contract_error("partial_trace: density operator carries no factor dimensions");
    return DensityOperator(
        detail::partial_trace_matrix(rho.matrix(), rho.dim_a(), rho.dim_b(), keep));
}

// X|i> = |i+1 mod d>, Z|i> = ω^i |i> with ω = exp(2πi/d) the principal root.
struct WeylPair {
    ComplexMatrix x;
    ComplexMatrix z;
};

inline WeylPair weyl_operators(std::size_t d) {
    if (d == 0) throw contract_error("weyl_operators: dimension must be positive");
    WeylPair w{ComplexMatrix(d), ComplexMatrix(d)};
    for (std::size_t i = 0; i < d; ++i) {
        w.x((i + 1) % d, i) = 1.0;
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(d);
        w.z(i, i) = std::polar(1.0, angle);
    }
    return w;
}

// ψ_ij = (id ⊗ X^i Z^j) ψ_00 with ψ_00 the maximally entangled state; the d²
// vectors form an orthonormal basis of C^d ⊗ C^d, every one of them with all
// Schmidt coefficients equal to 1/√d.
struct BellBasis {
    std::size_t d = 0;
    std::vector<std::vector<Complex>> vectors;  // index i*d + j

    const std::vector<Complex>& psi(std::size_t i, std::size_t j) const {
        return vectors[i * d + j];
    }
};

inline BellBasis bell_basis(std::size_t d) {
    if (d == 0) throw contract_error("bell_basis: dimension must be positive");
    BellBasis basis;
    basis.d = d;
    basis.vectors.assign(d * d, std::vector<Complex>(d * d));
    const double inv_sqrt_d = 1.0 / std::sqrt(static_cast<double>(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            auto& psi = basis.vectors[i * d + j];
            for (std::size_t l = 0; l < d; ++l) {
                // X^i Z^j |l> = ω^{jl} |l+i>
                const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) *
                                     static_cast<double>(l) / static_cast<double>(d);
                psi[l * d + (l + i) % d] = std::polar(inv_sqrt_d, angle);
            }
        }
    return basis;
}

// Mixture Σ_m r_m |ψ_{i_m j_m}><ψ_{i_m j_m}| over the Bell basis, with the
// row-major bijection m = d·i + j applied to the decreasingly sorted spectrum.
// Result: spectrum r, both partial traces equal to I/d.
inline DensityOperator construct_marginal_uniform(const std::vector<double>& r) {
    const std::size_t dsq = r.size();
    std::size_t d = 0;
    while (d * d < dsq) ++d;
    if (d == 0 || d * d != dsq)
        throw contract_error("construct_marginal_uniform: spectrum length must be a square d²");
    double sum = 0;
    for (std::size_t m = 0; m < dsq; ++m) {
        if (r[m] < 0) throw contract_error("construct_marginal_uniform: negative spectrum entry");
        if (m > 0 && r[m - 1] < r[m])
            throw contract_error("construct_marginal_uniform: spectrum must be decreasing");
        sum += r[m];
    }
    if (std::abs(sum - 1.0) > kTraceTol)
        throw contract_error("construct_marginal_uniform: spectrum does not sum to 1");

    const BellBasis basis = bell_basis(d);
    ComplexMatrix rho(dsq);
    for (std::size_t m = 0; m < dsq; ++m) {
        if (r[m] == 0.0) continue;
        const auto& psi = basis.vectors[m];
        for (std::size_t a = 0; a < dsq; ++a) {
            if (psi[a] == Complex{}) continue;
            for (std::size_t b = 0; b < dsq; ++b)
                rho(a, b) += r[m] * psi[a] * std::conj(psi[b]);
        }
    }
    return DensityOperator(std::move(rho), d, d);
}

// Singular values (decreasing) of the d_a × d_b reshape of a bipartite unit
// vector; their squares are the spectrum of the reduced state.
inline std::vector<double> schmidt_coefficients(const std::vector<Complex>& psi, std::size_t da,
                                                std::size_t db) {
    if (da * db != psi.size())
        throw contract_error("schmidt_coefficients: factor dimensions do not match the vector");
    double norm2 = 0;
    for (const Complex& v : psi) norm2 += std::norm(v);
    if (std::abs(std::sqrt(norm2) - 1.0) > kTraceTol)
        throw contract_error("schmidt_coefficients: vector is not normalized");
    ComplexMatrix gram(da);  // M M† for the reshape M(a,b) = ψ[a·db + b]
    for (std::size_t a = 0; a < da; ++a)
        for (std::size_t c = 0; c < da; ++c) {
            Complex s{};
            for (std::size_t b = 0; b < db; ++b) s += psi[a * db + b] * std::conj(psi[c * db + b]);
            gram(a, c) = s;
        }
    std::vector<double> coeffs = jacobi_eigen(gram).values;
    for (double& x : coeffs) x = std::sqrt(std::max(x, 0.0));
    return coeffs;
}

}  // namespace kronlab
