#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <random>

namespace fw {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Index = Eigen::Index;

/// Operator 2-norm (largest singular value).
double operator_norm(const Matrix& a);

/// Smallest singular value of a as a map out of its column space,
/// i.e. the cols()-th largest singular value (0 when rows < cols).
double smallest_singular_value(const Matrix& a);

/// Extreme eigenvalues of a Hermitian matrix, returned as (min, max).
std::pair<double, double> hermitian_extreme_eigenvalues(const Matrix& h);

/// Orthonormal basis of the column span of a, with rank decided by
/// sigma > rank_tol * sigma_max. Returns a rows() x rank matrix.
Matrix orthonormal_span(const Matrix& a, double rank_tol = 1e-12);

/// Hermitian matrix power h^p via eigendecomposition; eigenvalues below
/// floor_eig are rejected for negative powers.
Matrix hermitian_power(const Matrix& h, double p, double floor_eig = 0.0);

/// max_ij |a_ij - b_ij|
double max_abs_diff(const Matrix& a, const Matrix& b);

bool all_finite(const Matrix& a);

/// Deterministic random source. std::mt19937_64 is fully specified by the
/// standard; the Gaussian is a hand-rolled Box-Muller on top of explicit
/// 53-bit uniforms, so streams are reproducible across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in (0, 1].
    double uniform() {
        return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
    }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * (uniform() - 0x1.0p-53); }

    double gaussian();

    Complex gaussian_complex() { return {gaussian(), gaussian()}; }

    /// rows x cols matrix of independent complex Gaussians.
    Matrix gaussian_matrix(Index rows, Index cols);

    /// Haar-distributed unitary of size n (QR of a Gaussian with the
    /// phases of R's diagonal fixed, so the draw is well defined).
    Matrix unitary(Index n);

    /// Uniform unit vector in C^n.
    Vector unit_vector(Index n);

    std::uint64_t integer(std::uint64_t bound); // in [0, bound)

private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

} // namespace fw
