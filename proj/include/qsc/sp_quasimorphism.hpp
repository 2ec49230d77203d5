#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace qsc::sp {

using Matrix = Eigen::MatrixXd;
using ComplexMatrix = Eigen::MatrixXcd;

inline constexpr double default_tolerance = 1e-9;

/// J0 = [[0, I], [-I, 0]] in coordinates (q_1..q_n, p_1..p_n).
Matrix standard_form(int n);

/// ||M^T J0 M - J0||_inf <= tol. Throws DomainError for non-square or
/// odd-dimensional input.
bool is_symplectic(const Matrix& m, double tol = default_tolerance);

/// Spanning set of a Lagrangian subspace of R^{2n}, stored as a 2n x n matrix.
class LagrangianFrame {
public:
    /// Throws DomainError when the basis is rank deficient or not isotropic.
    static LagrangianFrame from_basis(Matrix basis, double tol = default_tolerance);
    /// The p-coordinate plane L0.
    static LagrangianFrame base(int n);

    const Matrix& basis() const noexcept { return basis_; }
    int n() const noexcept { return static_cast<int>(basis_.cols()); }

private:
    explicit LagrangianFrame(Matrix basis) : basis_(std::move(basis)) {}
    Matrix basis_;
};

/// det(U)^2 for the unitary polar factor U of X + iY, scaled so L0 maps to 1.
std::complex<double> det_squared(const LagrangianFrame& frame);

/// M = O P with O orthogonal symplectic and P symmetric positive definite.
struct PolarFactors {
    Matrix orthogonal;
    Matrix positive;
};
PolarFactors polar_decomposition(const Matrix& m);

/// Point at s in [0,1] of the polar-coordinate geodesic from a to b: the
/// unitary parts are joined by a one-parameter subgroup, the positive parts
/// by interpolating their logarithms.
Matrix polar_geodesic(const Matrix& a, const Matrix& b, double s);

/// Path t in [0,1] -> Sp(2n, R) starting at the identity, known through
/// equally spaced samples and, optionally, a generator that can be evaluated
/// anywhere (used when angle unwinding needs finer sampling).
class SymplecticPath {
public:
    using Generator = std::function<Matrix(double)>;

    /// Throws DomainError if the first sample is not the identity, a sample
    /// is not symplectic, or fewer than two samples are given.
    static SymplecticPath from_samples(std::vector<Matrix> samples, double tol = default_tolerance);
    static SymplecticPath from_generator(Generator generator, int sample_count,
                                         double tol = default_tolerance);

    int n() const noexcept { return n_; }
    std::size_t sample_count() const noexcept { return samples_.size(); }
    const std::vector<Matrix>& samples() const noexcept { return samples_; }
    const Matrix& endpoint() const { return samples_.back(); }
    double param(std::size_t i) const noexcept {
        return static_cast<double>(i) / static_cast<double>(samples_.size() - 1);
    }
    bool has_generator() const noexcept { return static_cast<bool>(generator_); }

    /// Generator value if present, otherwise polar geodesic between the
    /// neighbouring samples.
    Matrix at(double t) const;

    /// Pointwise product; both paths need the same dimension and sample count.
    friend SymplecticPath operator*(const SymplecticPath& a, const SymplecticPath& b);
    /// Pointwise inverse.
    SymplecticPath inverse() const;
    /// t -> g M(t) g^-1.
    SymplecticPath conjugated(const Matrix& g) const;

private:
    SymplecticPath(int n, std::vector<Matrix> samples, Generator generator)
        : n_(n), samples_(std::move(samples)), generator_(std::move(generator)) {}

    int n_ = 0;
    std::vector<Matrix> samples_;
    Generator generator_;
};

struct LiftOptions {
    int max_depth = 20; ///< bisection depth cap per sample interval
};

/// Continuous lift of arg det^2(M(t) L0) starting at 0, evaluated at t = 1.
/// Intervals are bisected until every phase jump is below pi/4 and agrees
/// with a midpoint probe; throws DomainError past max_depth levels.
double tau_det(const SymplecticPath& path, const LiftOptions& options = {});

struct TauEstimate {
    double value = 0.0;           ///< tau_det(path^k_max) / k_max
    std::vector<double> partials; ///< tau_det(path^k) / k for k = 1..k_max
};

/// Homogenized rotation number truncated at k_max.
TauEstimate tau(const SymplecticPath& path, int k_max = 32, const LiftOptions& options = {});

struct DefectStats {
    std::vector<double> defects; ///< |tau(ab) - tau(a) - tau(b)| per pair, input order
    double max = 0.0;
    double mean = 0.0;
    double bin_width = 0.0;
    std::vector<std::size_t> histogram; ///< equal-width bins over [0, max]
};

using PathPair = std::pair<SymplecticPath, SymplecticPath>;

/// Empirical defect of tau over the given pairs. Work is split across
/// `threads` workers; results do not depend on the thread count.
DefectStats defect_survey(std::span<const PathPair> pairs, int k_max = 32, unsigned threads = 1,
                          std::size_t bins = 10);

} // namespace qsc::sp
