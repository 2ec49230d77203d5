#include "qsc/sp_quasimorphism.hpp"

#include "qsc/errors.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <thread>

namespace qsc::sp {

namespace {

constexpr double pi = std::numbers::pi;

int half_dimension(const Matrix& m) {
    if (m.rows() != m.cols() || m.rows() == 0 || m.rows() % 2 != 0)
        throw DomainError("expected a square matrix of even dimension, got " +
                          std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    return static_cast<int>(m.rows() / 2);
}

/// Unnormalized det(U)^2 for the unitary polar factor of X + iY.
std::complex<double> raw_det_squared(const Matrix& basis) {
    const Eigen::Index n = basis.cols();
    ComplexMatrix z(n, n);
    z.real() = basis.topRows(n);
    z.imag() = basis.bottomRows(n);
    Eigen::JacobiSVD<ComplexMatrix> svd(z, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const ComplexMatrix unitary = svd.matrixU() * svd.matrixV().adjoint();
    const std::complex<double> d = unitary.determinant();
    return d * d;
}

Matrix orthonormalize(const Matrix& basis) {
    Eigen::HouseholderQR<Matrix> qr(basis);
    return qr.householderQ() * Matrix::Identity(basis.rows(), basis.cols());
}

ComplexMatrix to_unitary(const Matrix& orthogonal) {
    const Eigen::Index n = orthogonal.rows() / 2;
    ComplexMatrix u(n, n);
    u.real() = orthogonal.topLeftCorner(n, n);
    u.imag() = orthogonal.bottomLeftCorner(n, n);
    return u;
}

Matrix from_unitary(const ComplexMatrix& u) {
    const Eigen::Index n = u.rows();
    Matrix o(2 * n, 2 * n);
    o.topLeftCorner(n, n) = u.real();
    o.topRightCorner(n, n) = -u.imag();
    o.bottomLeftCorner(n, n) = u.imag();
    o.bottomRightCorner(n, n) = u.real();
    return o;
}

Matrix symmetric_log(const Matrix& spd) {
    Eigen::SelfAdjointEigenSolver<Matrix> eig(spd);
    return eig.eigenvectors() * eig.eigenvalues().array().log().matrix().asDiagonal() *
           eig.eigenvectors().transpose();
}

Matrix symmetric_exp(const Matrix& sym) {
    Eigen::SelfAdjointEigenSolver<Matrix> eig(sym);
    return eig.eigenvectors() * eig.eigenvalues().array().exp().matrix().asDiagonal() *
           eig.eigenvectors().transpose();
}

/// Phase increment in (-pi, pi] from a to b.
double phase_step(std::complex<double> a, std::complex<double> b) {
    return std::arg(b / a);
}

class Lifter {
public:
    Lifter(const SymplecticPath& path, const Matrix& frame, const LiftOptions& options)
        : path_(path), frame_(frame), options_(options) {}

    double total() const {
        double sum = 0.0;
        std::complex<double> prev = phase(path_.samples().front());
        for (std::size_t i = 1; i < path_.sample_count(); ++i) {
            const std::complex<double> next = phase(path_.samples()[i]);
            sum += interval(path_.param(i - 1), prev, path_.param(i), next, 0);
            prev = next;
        }
        return sum;
    }

private:
    std::complex<double> phase(const Matrix& m) const { return raw_det_squared(m * frame_); }

    double interval(double ta, std::complex<double> za, double tb, std::complex<double> zb,
                    int depth) const {
        // A step is trusted only when a midpoint probe splits it into two
        // small steps that add up to it; otherwise a fast winding could hide
        // between the endpoints.
        const double step = phase_step(za, zb);
        const double tm = 0.5 * (ta + tb);
        const std::complex<double> zm = phase(path_.at(tm));
        const double left = phase_step(za, zm);
        const double right = phase_step(zm, zb);
        if (std::abs(step) < pi / 4 && std::abs(left) < pi / 4 && std::abs(right) < pi / 4 &&
            std::abs(left + right - step) < 1e-9)
            return left + right;
        if (depth >= options_.max_depth)
            throw DomainError("angle unwinding did not converge within " +
                              std::to_string(options_.max_depth) + " refinement levels");
        return interval(ta, za, tm, zm, depth + 1) + interval(tm, zm, tb, zb, depth + 1);
    }

    const SymplecticPath& path_;
    const Matrix& frame_;
    const LiftOptions& options_;
};

} // namespace

Matrix standard_form(int n) {
    Matrix j = Matrix::Zero(2 * n, 2 * n);
    j.topRightCorner(n, n).setIdentity();
    j.bottomLeftCorner(n, n) = -Matrix::Identity(n, n);
    return j;
}

bool is_symplectic(const Matrix& m, double tol) {
    const int n = half_dimension(m);
    const Matrix j = standard_form(n);
    return (m.transpose() * j * m - j).cwiseAbs().maxCoeff() <= tol;
}

LagrangianFrame LagrangianFrame::from_basis(Matrix basis, double tol) {
    if (basis.rows() != 2 * basis.cols() || basis.cols() == 0)
        throw DomainError("Lagrangian frame must be 2n x n");
    const int n = static_cast<int>(basis.cols());
    Eigen::JacobiSVD<Matrix> svd(basis);
    const auto& sv = svd.singularValues();
    if (sv(n - 1) <= tol * std::max(1.0, sv(0)))
        throw DomainError("Lagrangian frame is rank deficient");
    const double scale = std::max(1.0, sv(0) * sv(0));
    if ((basis.transpose() * standard_form(n) * basis).cwiseAbs().maxCoeff() > tol * scale)
        throw DomainError("frame does not span a Lagrangian subspace");
    return LagrangianFrame(std::move(basis));
}

LagrangianFrame LagrangianFrame::base(int n) {
    Matrix basis = Matrix::Zero(2 * n, n);
    basis.bottomRows(n).setIdentity();
    return LagrangianFrame(std::move(basis));
}

std::complex<double> det_squared(const LagrangianFrame& frame) {
    // L0 has X = 0, Y = I, so its raw value is det(iI)^2 = (-1)^n.
    const double base = frame.n() % 2 == 0 ? 1.0 : -1.0;
    return raw_det_squared(frame.basis()) * base;
}

PolarFactors polar_decomposition(const Matrix& m) {
    Eigen::SelfAdjointEigenSolver<Matrix> eig(m.transpose() * m);
    const Matrix& v = eig.eigenvectors();
    const Eigen::VectorXd root = eig.eigenvalues().array().sqrt();
    Matrix positive = v * root.asDiagonal() * v.transpose();
    Matrix orthogonal = m * v * root.cwiseInverse().asDiagonal() * v.transpose();
    return {std::move(orthogonal), std::move(positive)};
}

Matrix polar_geodesic(const Matrix& a, const Matrix& b, double s) {
    const PolarFactors pa = polar_decomposition(a);
    const PolarFactors pb = polar_decomposition(b);
    const ComplexMatrix ua = to_unitary(pa.orthogonal);
    const ComplexMatrix ub = to_unitary(pb.orthogonal);
    const ComplexMatrix rel = (ua.adjoint() * ub).log();
    const ComplexMatrix scaled = rel * std::complex<double>(s, 0.0);
    const ComplexMatrix us = ua * scaled.exp();
    const Matrix ps =
        symmetric_exp((1.0 - s) * symmetric_log(pa.positive) + s * symmetric_log(pb.positive));
    return from_unitary(us) * ps;
}

SymplecticPath SymplecticPath::from_samples(std::vector<Matrix> samples, double tol) {
    if (samples.size() < 2)
        throw DomainError("a path needs at least two samples");
    const int n = half_dimension(samples.front());
    if (!samples.front().isIdentity(tol))
        throw DomainError("path must start at the identity");
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (half_dimension(samples[i]) != n)
            throw DomainError("path samples have inconsistent dimensions");
        if (!is_symplectic(samples[i], tol * std::max(1.0, samples[i].squaredNorm())))
            throw DomainError("path sample " + std::to_string(i) + " is not symplectic");
    }
    return SymplecticPath(n, std::move(samples), {});
}

SymplecticPath SymplecticPath::from_generator(Generator generator, int sample_count, double tol) {
    if (sample_count < 2)
        throw DomainError("a path needs at least two samples");
    std::vector<Matrix> samples;
    samples.reserve(static_cast<std::size_t>(sample_count));
    for (int i = 0; i < sample_count; ++i)
        samples.push_back(generator(static_cast<double>(i) / (sample_count - 1)));
    SymplecticPath path = from_samples(std::move(samples), tol);
    path.generator_ = std::move(generator);
    return path;
}

Matrix SymplecticPath::at(double t) const {
    if (generator_)
        return generator_(t);
    const double scaled = std::clamp(t, 0.0, 1.0) * static_cast<double>(samples_.size() - 1);
    const auto i = std::min(static_cast<std::size_t>(scaled), samples_.size() - 2);
    return polar_geodesic(samples_[i], samples_[i + 1], scaled - static_cast<double>(i));
}

SymplecticPath operator*(const SymplecticPath& a, const SymplecticPath& b) {
    if (a.n_ != b.n_ || a.samples_.size() != b.samples_.size())
        throw DomainError("path product needs matching dimension and sample count");
    std::vector<Matrix> samples;
    samples.reserve(a.samples_.size());
    for (std::size_t i = 0; i < a.samples_.size(); ++i)
        samples.push_back(a.samples_[i] * b.samples_[i]);
    SymplecticPath::Generator gen;
    if (a.generator_ && b.generator_)
        gen = [ga = a.generator_, gb = b.generator_](double t) -> Matrix { return ga(t) * gb(t); };
    else
        gen = [a, b](double t) -> Matrix { return a.at(t) * b.at(t); };
    return SymplecticPath(a.n_, std::move(samples), std::move(gen));
}

SymplecticPath SymplecticPath::inverse() const {
    // M^-1 = -J0 M^T J0 for symplectic M.
    const Matrix j = standard_form(n_);
    auto invert = [j](const Matrix& m) -> Matrix { return -j * m.transpose() * j; };
    std::vector<Matrix> inv;
    inv.reserve(samples_.size());
    for (const auto& m : samples_)
        inv.push_back(invert(m));
    Generator gen;
    if (generator_)
        gen = [g = generator_, invert](double t) -> Matrix { return invert(g(t)); };
    return SymplecticPath(n_, std::move(inv), std::move(gen));
}

SymplecticPath SymplecticPath::conjugated(const Matrix& g) const {
    if (half_dimension(g) != n_)
        throw DomainError("conjugating matrix has the wrong dimension");
    const Matrix g_inv = g.inverse();
    std::vector<Matrix> conj;
    conj.reserve(samples_.size());
    for (const auto& m : samples_)
        conj.push_back(g * m * g_inv);
    Generator gen;
    if (generator_)
        gen = [gen0 = generator_, g, g_inv](double t) -> Matrix { return g * gen0(t) * g_inv; };
    return SymplecticPath(n_, std::move(conj), std::move(gen));
}

double tau_det(const SymplecticPath& path, const LiftOptions& options) {
    const Matrix frame = LagrangianFrame::base(path.n()).basis();
    return Lifter(path, frame, options).total();
}

TauEstimate tau(const SymplecticPath& path, int k_max, const LiftOptions& options) {
    if (k_max < 1)
        throw DomainError("k_max must be at least 1");
    // The k-th segment is t -> M(t) M(1)^j, homotopic to M(1)^j M(t) with the
    // same endpoints; it acts on the frame of M(1)^j L0, re-orthonormalized
    // after each step to keep it well conditioned.
    TauEstimate est;
    est.partials.reserve(static_cast<std::size_t>(k_max));
    Matrix frame = LagrangianFrame::base(path.n()).basis();
    double total = 0.0;
    for (int k = 1; k <= k_max; ++k) {
        total += Lifter(path, frame, options).total();
        est.partials.push_back(total / k);
        frame = orthonormalize(path.endpoint() * frame);
    }
    est.value = est.partials.back();
    return est;
}

DefectStats defect_survey(std::span<const PathPair> pairs, int k_max, unsigned threads,
                          std::size_t bins) {
    if (pairs.empty())
        throw DomainError("defect survey needs at least one pair");
    if (bins == 0)
        throw DomainError("histogram needs at least one bin");
    for (const auto& [a, b] : pairs)
        if (a.n() != b.n() || a.sample_count() != b.sample_count())
            throw DomainError("dimension mismatch within a survey pair");

    DefectStats stats;
    stats.defects.assign(pairs.size(), 0.0);
    auto work = [&](std::size_t begin, std::size_t stride) {
        for (std::size_t i = begin; i < pairs.size(); i += stride) {
            const auto& [a, b] = pairs[i];
            const double ab = tau(a * b, k_max).value;
            stats.defects[i] = std::abs(ab - tau(a, k_max).value - tau(b, k_max).value);
        }
    };
    const unsigned workers = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(pairs.size())));
    if (workers == 1) {
        work(0, 1);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(work, w, workers);
    }

    double sum = 0.0;
    for (double d : stats.defects) {
        stats.max = std::max(stats.max, d);
        sum += d;
    }
    stats.mean = sum / static_cast<double>(stats.defects.size());
    stats.histogram.assign(bins, 0);
    stats.bin_width = stats.max / static_cast<double>(bins);
    for (double d : stats.defects) {
        std::size_t bin = stats.bin_width > 0 ? static_cast<std::size_t>(d / stats.bin_width) : 0;
        ++stats.histogram[std::min(bin, bins - 1)];
    }
    return stats;
}

} // namespace qsc::sp
