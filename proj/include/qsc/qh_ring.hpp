#pragma once

#include "qsc/partition.hpp"
#include "qsc/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace qsc {

/// Gr(r, n) together with the symplectic area of the positive generator of
/// H_2. CP^m is Gr(1, m+1).
class RingParams {
public:
    /// Throws DomainError unless 1 <= r <= n-1 and area > 0.
    RingParams(int r, int n, Rational area = 1);
    static RingParams projective_space(int m, Rational area = 1) { return {1, m + 1, std::move(area)}; }

    int r() const noexcept { return r_; }
    int n() const noexcept { return n_; }
    const Rational& area() const noexcept { return area_; }

    int box_rows() const noexcept { return r_; }
    int box_cols() const noexcept { return n_ - r_; }
    /// Real degree of q, i.e. 2 c_1(A) = 2n.
    int q_degree() const noexcept { return 2 * n_; }
    /// The point class m indexes the full r x (n-r) rectangle.
    Partition point_partition() const { return Partition::rectangle(r_, n_ - r_); }
    /// Euler characteristic C(n, r).
    Integer euler_characteristic() const;

    friend bool operator==(const RingParams&, const RingParams&) = default;

private:
    int r_;
    int n_;
    Rational area_;
};

/// Schubert monomial sigma_partition * q^q_exp.
struct Monomial {
    std::int64_t q_exp = 0;
    Partition partition;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    /// Ascending q-exponent, then graded partition order.
    friend auto operator<=>(const Monomial& a, const Monomial& b) {
        if (auto c = a.q_exp <=> b.q_exp; c != 0)
            return c;
        return a.partition <=> b.partition;
    }
};

/// Element of QH*(Gr(r,n)) over Q[q, q^-1]: finitely many nonzero rational
/// multiples of Schubert monomials.
class QHClass {
public:
    using Terms = std::map<Monomial, Rational>;

    explicit QHClass(RingParams ring) : ring_(std::move(ring)) {}

    static QHClass zero(const RingParams& ring) { return QHClass(ring); }
    static QHClass unit(const RingParams& ring) { return schubert(ring, {}); }
    /// Throws DomainError if the partition does not fit the box.
    static QHClass schubert(const RingParams& ring, const Partition& lambda, std::int64_t q_exp = 0,
                            const Rational& coef = 1);

    const RingParams& ring() const noexcept { return ring_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    /// Coefficient of sigma_lambda q^d (zero if absent).
    Rational coefficient(const Partition& lambda, std::int64_t q_exp) const;

    /// Adds coef * sigma_lambda q^d, dropping the term if it cancels.
    void add_term(const Partition& lambda, std::int64_t q_exp, const Rational& coef);

    /// deg(sigma_lambda q^d) = 2|lambda| + 2nd, when every term agrees.
    std::optional<std::int64_t> homogeneous_degree() const;

    QHClass& operator+=(const QHClass& other);
    QHClass& operator-=(const QHClass& other);
    QHClass& operator*=(const Rational& scalar);

    friend QHClass operator+(QHClass a, const QHClass& b) { return a += b; }
    friend QHClass operator-(QHClass a, const QHClass& b) { return a -= b; }
    friend QHClass operator*(const Rational& s, QHClass a) { return a *= s; }
    friend bool operator==(const QHClass&, const QHClass&) = default;

private:
    void require_same_ring(const QHClass& other) const;

    RingParams ring_;
    Terms terms_;
};

/// One Schubert class per partition in the box, graded order.
std::vector<QHClass> schubert_basis(const RingParams& ring);

/// Classical expansion sigma_lambda * sigma_mu in the ring of symmetric
/// polynomials in r variables: nu ranges over partitions with at most r rows.
std::map<Partition, Integer> classical_product(const Partition& lambda, const Partition& mu, int r);

/// Quantum product via the rim-hook rule. Throws DomainError on ring mismatch.
QHClass quantum_product(const QHClass& a, const QHClass& b);

/// g-fold quantum product by repeated squaring; power(a, 0) is the unit.
QHClass power(const QHClass& a, std::uint64_t g);

/// Laurent polynomial in q with rational coefficients, keyed by exponent.
using QPolynomial = std::map<std::int64_t, Rational>;

/// Coefficient of the point class m in a * b, keeping every q-power.
QPolynomial poincare_pairing(const QHClass& a, const QHClass& b);

/// Sum over the Schubert basis of sigma_lambda * sigma_{lambda dual}. Every
/// Schubert class has even degree, so every sign is +1.
QHClass euler_class(const RingParams& ring);

/// scalar * sigma_partition * q^q_exp.
struct SplitForm {
    Rational scalar;
    Partition partition;
    std::int64_t q_exp = 0;

    friend bool operator==(const SplitForm&, const SplitForm&) = default;
};

/// Single-term classes only; anything else yields nullopt.
std::optional<SplitForm> split_form(const QHClass& a);

/// General splitting a = alpha (x) q^d with alpha a (possibly multi-term)
/// singular class: succeeds when every term carries the same q-power.
std::optional<std::pair<QHClass, std::int64_t>> split_singular(const QHClass& a);

/// I_g = d_g * area where E^g = alpha (x) q^{d_g}. Throws AssertionFailure
/// when E^g is zero or does not split.
Rational euler_power_invariant(const RingParams& ring, std::uint64_t g);

/// Same as above with E^g supplied by the caller (e.g. built incrementally).
Rational split_invariant(const QHClass& euler_power);

/// r(n-r)/n * area.
Rational asymptotic_invariant(const RingParams& ring);

/// Closed forms for m^g on Gr(r,n):
///  (I)  gr = an + b, 0 <= b <= r:      m^g = sigma_{b rows of n-r} q^{a(n-r)}
///  (II) g(n-r) = cn + d, 0 <= d <= n-r: m^g = sigma_{r rows of d} q^{cr}
std::optional<QHClass> postnikov_case_one(const RingParams& ring, std::uint64_t g);
std::optional<QHClass> postnikov_case_two(const RingParams& ring, std::uint64_t g);

struct PostnikovReport {
    std::uint64_t g = 0;
    QHClass computed;                  ///< m^g by iterated quantum products
    std::optional<QHClass> case_one;   ///< closed form (I) when it applies
    std::optional<QHClass> case_two;   ///< closed form (II) when it applies
    bool match = false;                ///< some case applies and all applicable ones equal computed
    bool cases_agree = true;           ///< (I) == (II) whenever both apply
};

PostnikovReport verify_postnikov(const RingParams& ring, std::uint64_t g);

} // namespace qsc
