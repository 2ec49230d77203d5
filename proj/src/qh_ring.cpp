#include "qsc/qh_ring.hpp"

#include "qsc/errors.hpp"

#include <mutex>
#include <string>
#include <tuple>

namespace qsc {

RingParams::RingParams(int r, int n, Rational area) : r_(r), n_(n), area_(std::move(area)) {
    if (r < 1 || r > n - 1)
        throw DomainError("Gr(" + std::to_string(r) + "," + std::to_string(n) +
                          ") requires 1 <= r <= n-1");
    if (area_ <= 0)
        throw DomainError("area must be positive");
}

Integer RingParams::euler_characteristic() const {
    Integer c = 1;
    for (int i = 1; i <= r_; ++i)
        c = c * (n_ - r_ + i) / i;
    return c;
}

QHClass QHClass::schubert(const RingParams& ring, const Partition& lambda, std::int64_t q_exp,
                          const Rational& coef) {
    QHClass out(ring);
    out.add_term(lambda, q_exp, coef);
    return out;
}

Rational QHClass::coefficient(const Partition& lambda, std::int64_t q_exp) const {
    auto it = terms_.find(Monomial{q_exp, lambda});
    return it == terms_.end() ? Rational(0) : it->second;
}

void QHClass::add_term(const Partition& lambda, std::int64_t q_exp, const Rational& coef) {
    if (!lambda.fits(ring_.box_rows(), ring_.box_cols()))
        throw DomainError("partition (" + to_string(lambda) + ") outside the " +
                          std::to_string(ring_.box_rows()) + "x" + std::to_string(ring_.box_cols()) +
                          " box");
    if (coef == 0)
        return;
    Monomial key{q_exp, lambda};
    auto [it, inserted] = terms_.try_emplace(std::move(key), coef);
    if (!inserted) {
        it->second += coef;
        if (it->second == 0)
            terms_.erase(it);
    }
}

std::optional<std::int64_t> QHClass::homogeneous_degree() const {
    std::optional<std::int64_t> deg;
    for (const auto& [mono, coef] : terms_) {
        const std::int64_t d = 2 * mono.partition.size() + mono.q_exp * ring_.q_degree();
        if (deg && *deg != d)
            return std::nullopt;
        deg = d;
    }
    return deg;
}

void QHClass::require_same_ring(const QHClass& other) const {
    if (!(ring_ == other.ring_))
        throw DomainError("classes belong to different rings");
}

QHClass& QHClass::operator+=(const QHClass& other) {
    require_same_ring(other);
    for (const auto& [mono, coef] : other.terms_)
        add_term(mono.partition, mono.q_exp, coef);
    return *this;
}

QHClass& QHClass::operator-=(const QHClass& other) {
    require_same_ring(other);
    for (const auto& [mono, coef] : other.terms_)
        add_term(mono.partition, mono.q_exp, -coef);
    return *this;
}

QHClass& QHClass::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [mono, coef] : terms_)
        coef *= scalar;
    return *this;
}

std::vector<QHClass> schubert_basis(const RingParams& ring) {
    std::vector<QHClass> out;
    for (const auto& lambda : partitions_in_box(ring.box_rows(), ring.box_cols()))
        out.push_back(QHClass::schubert(ring, lambda));
    return out;
}

std::map<Partition, Integer> classical_product(const Partition& lambda, const Partition& mu, int r) {
    std::map<Partition, Integer> out;
    if (lambda.rows() > r || mu.rows() > r)
        return out;
    // Row one of an LR filling holds only 1s, so nu_1 <= lambda_1 + mu_1.
    for (const auto& nu : partitions_over(lambda, mu.size(), r, mu.width())) {
        if (!nu.contains(mu))
            continue;
        Integer c = lr_coefficient(lambda, mu, nu);
        if (c != 0)
            out.emplace(nu, std::move(c));
    }
    return out;
}

namespace {

struct BasisTerm {
    Partition partition;
    std::int64_t q_exp;
    Integer coef;
};

using ProductKey = std::tuple<int, int, std::vector<int>, std::vector<int>>;

std::mutex product_mutex;
std::map<ProductKey, std::vector<BasisTerm>> product_cache;

std::vector<BasisTerm> basis_product(int r, int n, const Partition& lambda, const Partition& mu) {
    const bool swap = mu < lambda;
    const Partition& a = swap ? mu : lambda;
    const Partition& b = swap ? lambda : mu;
    ProductKey key{r, n, a.parts(), b.parts()};
    {
        std::lock_guard lock(product_mutex);
        if (auto it = product_cache.find(key); it != product_cache.end())
            return it->second;
    }
    std::map<Monomial, Integer> acc;
    for (const auto& [nu, c] : classical_product(a, b, r)) {
        const auto red = reduce_mod_rim_hooks(nu, r, n);
        if (!red)
            continue;
        auto& slot = acc[Monomial{red->removals, red->core}];
        slot += red->sign * c;
    }
    std::vector<BasisTerm> terms;
    for (auto& [mono, c] : acc)
        if (c != 0)
            terms.push_back({mono.partition, mono.q_exp, std::move(c)});
    std::lock_guard lock(product_mutex);
    product_cache.insert_or_assign(std::move(key), terms);
    return terms;
}

} // namespace

QHClass quantum_product(const QHClass& a, const QHClass& b) {
    if (!(a.ring() == b.ring()))
        throw DomainError("quantum product of classes from different rings");
    const auto& ring = a.ring();
    QHClass out(ring);
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            const Rational scale = ca * cb;
            for (const auto& t : basis_product(ring.r(), ring.n(), ma.partition, mb.partition))
                out.add_term(t.partition, ma.q_exp + mb.q_exp + t.q_exp, scale * Rational(t.coef));
        }
    return out;
}

QHClass power(const QHClass& a, std::uint64_t g) {
    QHClass result = QHClass::unit(a.ring());
    QHClass base = a;
    while (g > 0) {
        if (g & 1U)
            result = quantum_product(result, base);
        g >>= 1U;
        if (g > 0)
            base = quantum_product(base, base);
    }
    return result;
}

QPolynomial poincare_pairing(const QHClass& a, const QHClass& b) {
    const QHClass prod = quantum_product(a, b);
    const Partition point = a.ring().point_partition();
    QPolynomial out;
    for (const auto& [mono, coef] : prod.terms())
        if (mono.partition == point)
            out.emplace(mono.q_exp, coef);
    return out;
}

QHClass euler_class(const RingParams& ring) {
    QHClass e(ring);
    for (const auto& lambda : partitions_in_box(ring.box_rows(), ring.box_cols())) {
        const Partition dual = complement(lambda, ring.box_rows(), ring.box_cols());
        e += quantum_product(QHClass::schubert(ring, lambda), QHClass::schubert(ring, dual));
    }
    return e;
}

std::optional<SplitForm> split_form(const QHClass& a) {
    if (a.terms().size() != 1)
        return std::nullopt;
    const auto& [mono, coef] = *a.terms().begin();
    return SplitForm{coef, mono.partition, mono.q_exp};
}

std::optional<std::pair<QHClass, std::int64_t>> split_singular(const QHClass& a) {
    if (a.is_zero())
        return std::nullopt;
    const std::int64_t d = a.terms().begin()->first.q_exp;
    QHClass alpha(a.ring());
    for (const auto& [mono, coef] : a.terms()) {
        if (mono.q_exp != d)
            return std::nullopt;
        alpha.add_term(mono.partition, 0, coef);
    }
    return std::pair{std::move(alpha), d};
}

Rational split_invariant(const QHClass& euler_power) {
    const auto split = split_singular(euler_power);
    if (!split)
        throw AssertionFailure(euler_power.is_zero() ? "Euler class power vanishes"
                                                     : "Euler class power does not split");
    return Rational(split->second) * euler_power.ring().area();
}

Rational euler_power_invariant(const RingParams& ring, std::uint64_t g) {
    if (g == 0)
        throw DomainError("I_g requires g >= 1");
    return split_invariant(power(euler_class(ring), g));
}

Rational asymptotic_invariant(const RingParams& ring) {
    return Rational(ring.r() * (ring.n() - ring.r()), ring.n()) * ring.area();
}

std::optional<QHClass> postnikov_case_one(const RingParams& ring, std::uint64_t g) {
    const std::int64_t n = ring.n(), r = ring.r();
    const std::int64_t gr = static_cast<std::int64_t>(g) * r;
    const std::int64_t a = gr / n, b = gr % n;
    if (b > r)
        return std::nullopt;
    return QHClass::schubert(ring, Partition::rectangle(static_cast<int>(b), ring.box_cols()),
                             a * (n - r));
}

std::optional<QHClass> postnikov_case_two(const RingParams& ring, std::uint64_t g) {
    const std::int64_t n = ring.n(), r = ring.r();
    const std::int64_t gk = static_cast<std::int64_t>(g) * (n - r);
    const std::int64_t c = gk / n, d = gk % n;
    if (d > n - r)
        return std::nullopt;
    return QHClass::schubert(ring, Partition::rectangle(ring.box_rows(), static_cast<int>(d)), c * r);
}

PostnikovReport verify_postnikov(const RingParams& ring, std::uint64_t g) {
    if (g == 0)
        throw DomainError("verify_postnikov requires g >= 1");
    const QHClass m = QHClass::schubert(ring, ring.point_partition());
    QHClass computed = m;
    for (std::uint64_t i = 1; i < g; ++i)
        computed = quantum_product(computed, m);

    PostnikovReport report{g, std::move(computed), postnikov_case_one(ring, g),
                           postnikov_case_two(ring, g), false, true};
    const bool any = report.case_one || report.case_two;
    report.match = any && (!report.case_one || *report.case_one == report.computed) &&
                   (!report.case_two || *report.case_two == report.computed);
    if (report.case_one && report.case_two)
        report.cases_agree = *report.case_one == *report.case_two;
    return report;
}

} // namespace qsc
