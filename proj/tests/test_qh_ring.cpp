#include "qsc/errors.hpp"
#include "qsc/qh_format.hpp"
#include "qsc/qh_ring.hpp"

#include <doctest.h>

#include <random>

using namespace qsc;

namespace {

QHClass s(const RingParams& ring, Partition p, std::int64_t q = 0, Rational c = 1) {
    return QHClass::schubert(ring, p, q, c);
}

// Quantum Monk rule: sigma_1 * sigma_lambda adds one box in every possible
// way, plus q times lambda with its full outer rim (n-1 cells) stripped when
// lambda touches both the last row and the last column of the box.
QHClass monk_oracle(const RingParams& ring, const Partition& lambda) {
    const int r = ring.r(), k = ring.n() - ring.r();
    QHClass out(ring);
    for (int i = 0; i < r; ++i) {
        std::vector<int> parts(r, 0);
        for (int j = 0; j < r; ++j)
            parts[j] = lambda[j];
        parts[i] += 1;
        if (parts[i] > k || (i > 0 && parts[i] > parts[i - 1]))
            continue;
        out.add_term(Partition(parts), 0, 1);
    }
    if (lambda[0] == k && lambda[r - 1] >= 1) {
        std::vector<int> parts;
        for (int j = 1; j < r; ++j)
            parts.push_back(lambda[j] - 1);
        out.add_term(Partition(parts), 1, 1);
    }
    return out;
}

} // namespace

TEST_CASE("ring parameters") {
    const RingParams gr24(2, 4);
    CHECK(gr24.q_degree() == 8);
    CHECK(gr24.point_partition() == Partition({2, 2}));
    CHECK(gr24.euler_characteristic() == 6);
    CHECK(RingParams::projective_space(2) == RingParams(1, 3));
    CHECK(RingParams::projective_space(3).q_degree() == 8);
    CHECK_THROWS_AS(RingParams(0, 4), DomainError);
    CHECK_THROWS_AS(RingParams(4, 4), DomainError);
    CHECK_THROWS_AS(RingParams(1, 3, 0), DomainError);
    CHECK_THROWS_AS(RingParams(1, 3, -1), DomainError);
}

TEST_CASE("class arithmetic keeps no zero terms") {
    const RingParams ring(2, 4);
    QHClass a = s(ring, {1}) + s(ring, {}, 1);
    a -= s(ring, {1});
    CHECK(a == s(ring, {}, 1));
    a *= 0;
    CHECK(a.is_zero());
    CHECK_THROWS_AS(s(ring, {3}), DomainError);
    CHECK_THROWS_AS(s(ring, {1}) + s(RingParams(1, 3), {1}), DomainError);
    CHECK((s(ring, {2, 2}) + s(ring, {}, 1)).homogeneous_degree() == 8);
    CHECK(s(ring, {1}, 1).homogeneous_degree() == 10);
    CHECK_FALSE((s(ring, {1}) + s(ring, {}, 1)).homogeneous_degree());
}

TEST_CASE("schubert_basis") {
    const auto b12 = schubert_basis(RingParams(1, 2));
    REQUIRE(b12.size() == 2);
    CHECK(b12[0] == QHClass::unit(RingParams(1, 2)));
    CHECK(b12[1] == s(RingParams(1, 2), {1}));
    CHECK(schubert_basis(RingParams(2, 4)).size() == 6);
    const RingParams cp2(1, 3);
    CHECK(schubert_basis(cp2) == std::vector<QHClass>{QHClass::unit(cp2), s(cp2, {1}), s(cp2, {2})});
}

TEST_CASE("quantum_product examples") {
    const RingParams gr12(1, 2);
    CHECK(quantum_product(s(gr12, {1}), s(gr12, {1})) == s(gr12, {}, 1));

    const RingParams gr24(2, 4);
    for (const auto& b : schubert_basis(gr24))
        CHECK(quantum_product(QHClass::unit(gr24), b) == b);
    CHECK(quantum_product(s(gr24, {1}), s(gr24, {2, 1})) == s(gr24, {2, 2}) + s(gr24, {}, 1));
    CHECK(quantum_product(s(gr24, {2}), s(gr24, {2})) == s(gr24, {2, 2}));
    // sigma_1^4 = 2 sigma_{2,2} + 2q on Gr(2,4): evaluate both association orders.
    const QHClass s1 = s(gr24, {1});
    const QHClass left = quantum_product(quantum_product(quantum_product(s1, s1), s1), s1);
    const QHClass right = quantum_product(s1, quantum_product(s1, quantum_product(s1, s1)));
    CHECK(left == right);
    CHECK(left == s(gr24, {2, 2}, 0, 2) + s(gr24, {}, 1, 2));

    CHECK_THROWS_AS(quantum_product(s1, s(RingParams(2, 5), {1})), DomainError);
}

TEST_CASE("quantum product matches the quantum Monk rule") {
    for (int n = 2; n <= 7; ++n)
        for (int r = 1; r < n; ++r) {
            const RingParams ring(r, n);
            for (const auto& lambda : partitions_in_box(r, n - r))
                CHECK_MESSAGE(quantum_product(s(ring, {1}), s(ring, lambda)) == monk_oracle(ring, lambda),
                              "Gr(", r, ",", n, ") lambda=", to_string(lambda));
        }
}

TEST_CASE("CP^n powers of the hyperplane class") {
    for (int m = 1; m <= 5; ++m) {
        const RingParams ring = RingParams::projective_space(m);
        const QHClass a = s(ring, {1});
        for (std::uint64_t k = 0; k <= 3 * (m + 1); ++k) {
            const int rem = static_cast<int>(k % (m + 1));
            const auto q = static_cast<std::int64_t>(k / (m + 1));
            CHECK(power(a, k) == s(ring, rem == 0 ? Partition{} : Partition{rem}, q));
        }
    }
}

TEST_CASE("scalar coefficients are bilinear") {
    const RingParams ring(2, 5, Rational(3, 2));
    const QHClass a = s(ring, {2, 1}, 0, Rational(1, 3)) + s(ring, {1}, 1, -2);
    const QHClass b = s(ring, {3}, 0, 5) + s(ring, {1, 1});
    const QHClass expected = Rational(5, 3) * quantum_product(s(ring, {2, 1}), s(ring, {3})) +
                             Rational(1, 3) * quantum_product(s(ring, {2, 1}), s(ring, {1, 1})) +
                             Rational(-10) * quantum_product(s(ring, {1}, 1), s(ring, {3})) +
                             Rational(-2) * quantum_product(s(ring, {1}, 1), s(ring, {1, 1}));
    CHECK(quantum_product(a, b) == expected);
}

TEST_CASE("grading, commutativity and unit on small rings") {
    for (int n = 2; n <= 5; ++n)
        for (int r = 1; r < n; ++r) {
            const RingParams ring(r, n);
            const auto basis = schubert_basis(ring);
            for (const auto& a : basis) {
                CHECK(quantum_product(QHClass::unit(ring), a) == a);
                for (const auto& b : basis) {
                    const QHClass ab = quantum_product(a, b);
                    CHECK(ab == quantum_product(b, a));
                    if (!ab.is_zero())
                        CHECK(ab.homogeneous_degree() ==
                              *a.homogeneous_degree() + *b.homogeneous_degree());
                }
            }
        }
}

TEST_CASE("associativity on random basis triples of Gr(2,5)") {
    const RingParams ring(2, 5);
    const auto basis = schubert_basis(ring);
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    for (int i = 0; i < 50; ++i) {
        const auto& a = basis[pick(rng)];
        const auto& b = basis[pick(rng)];
        const auto& c = basis[pick(rng)];
        CHECK(quantum_product(quantum_product(a, b), c) == quantum_product(a, quantum_product(b, c)));
    }
}

TEST_CASE("poincare_pairing") {
    const RingParams gr24(2, 4);
    CHECK(poincare_pairing(s(gr24, {2, 1}), s(gr24, {1})) == QPolynomial{{0, Rational(1)}});
    CHECK(poincare_pairing(QHClass::unit(gr24), QHClass::unit(gr24)).count(0) == 0);

    // sigma_1 * sigma_1 = q on CP^1 has no point-class component; the
    // q-retaining pairing sees q once the product lands on the point class.
    const RingParams gr12(1, 2);
    const QHClass s1 = s(gr12, {1});
    CHECK(poincare_pairing(s1, s1).empty());
    CHECK(poincare_pairing(s1, quantum_product(s1, s1)) == QPolynomial{{1, Rational(1)}});

    for (int n = 2; n <= 6; ++n)
        for (int r = 1; r < n; ++r) {
            const RingParams ring(r, n);
            const auto box = partitions_in_box(r, n - r);
            for (const auto& lambda : box)
                for (const auto& mu : box) {
                    const auto p = poincare_pairing(s(ring, lambda), s(ring, mu));
                    const auto it = p.find(0);
                    const Rational c0 = it == p.end() ? Rational(0) : it->second;
                    CHECK(c0 == (mu == complement(lambda, r, n - r) ? 1 : 0));
                }
        }
}

TEST_CASE("euler_class") {
    const RingParams gr12(1, 2), gr13(1, 3), gr24(2, 4), gr25(2, 5);
    CHECK(euler_class(gr12) == s(gr12, {1}, 0, 2));
    CHECK(euler_class(gr13) == s(gr13, {2}, 0, 3));
    // Hand computation: sigma_1 * sigma_{2,1} = sigma_{2,2} + q appears twice.
    CHECK(euler_class(gr24) == s(gr24, {2, 2}, 0, 6) + s(gr24, {}, 1, 2));
    CHECK(euler_class(gr25) == s(gr25, {3, 3}, 0, 10) + s(gr25, {1}, 1, 5));
    for (int n = 2; n <= 6; ++n)
        for (int r = 1; r < n; ++r) {
            const RingParams ring(r, n);
            const QHClass e = euler_class(ring);
            const QHClass classical = s(ring, ring.point_partition(), 0, Rational(ring.euler_characteristic()));
            // The q^0 part is always chi * m; quantum corrections vanish only for projective spaces.
            QHClass q0 = QHClass::zero(ring);
            for (const auto& [mono, c] : e.terms())
                if (mono.q_exp == 0)
                    q0.add_term(mono.partition, 0, c);
            CHECK(q0 == classical);
            CHECK((e == classical) == (r == 1 || r == n - 1));
            CHECK(e.homogeneous_degree() == 2 * r * (n - r));
        }
}

TEST_CASE("power") {
    const RingParams gr24(2, 4), gr13(1, 3);
    CHECK(power(euler_class(gr24), 0) == QHClass::unit(gr24));
    CHECK(power(s(gr24, {2, 2}), 2) == s(gr24, {}, 2));
    CHECK(power(s(gr13, {2}), 3) == s(gr13, {}, 2));
    // Repeated squaring agrees with iterated products.
    const QHClass x = s(gr24, {1}) + s(gr24, {2}, 0, Rational(1, 2));
    QHClass iter = QHClass::unit(gr24);
    for (std::uint64_t g = 0; g <= 9; ++g) {
        CHECK(power(x, g) == iter);
        iter = quantum_product(iter, x);
    }
}

TEST_CASE("split_form") {
    const RingParams gr24(2, 4);
    CHECK(split_form(s(gr24, {}, 2)) == SplitForm{1, Partition{}, 2});
    CHECK(split_form(s(gr24, {2, 2})) == SplitForm{1, Partition{2, 2}, 0});
    CHECK_FALSE(split_form(s(gr24, {1}) + s(gr24, {}, 1)));
    CHECK_FALSE(split_form(QHClass::zero(gr24)));

    const auto multi = split_singular(s(gr24, {2}, 3) + s(gr24, {1, 1}, 3, 5));
    REQUIRE(multi);
    CHECK(multi->second == 3);
    CHECK(multi->first == s(gr24, {2}) + s(gr24, {1, 1}, 0, 5));
    CHECK_FALSE(split_singular(s(gr24, {1}) + s(gr24, {}, 1)));
}

TEST_CASE("euler_power_invariant") {
    const RingParams cp2 = RingParams::projective_space(2);
    CHECK(euler_power_invariant(cp2, 1) == 0);
    CHECK(euler_power_invariant(cp2, 3) == 2);
    // Gr(3,4): m^2 = q sigma_{1,1}, so I_2 = 1 * area.
    CHECK(euler_power_invariant(RingParams(3, 4), 2) == 1);
    CHECK(euler_power_invariant(RingParams(3, 4, Rational(3, 2)), 2) == Rational(3, 2));
    // E^2 = 40 q^2 + 24 q sigma_{2,2} on Gr(2,4): no single q-power.
    CHECK(power(euler_class(RingParams(2, 4)), 2) ==
          s(RingParams(2, 4), {}, 2, 40) + s(RingParams(2, 4), {2, 2}, 1, 24));
    CHECK_THROWS_AS(euler_power_invariant(RingParams(2, 4), 2), AssertionFailure);
    CHECK_THROWS_AS(euler_power_invariant(cp2, 0), DomainError);
    CHECK_THROWS_AS(split_invariant(QHClass::zero(cp2)), AssertionFailure);
    CHECK_THROWS_AS(split_invariant(s(cp2, {1}) + s(cp2, {}, 1)), AssertionFailure);
}

TEST_CASE("verify_postnikov") {
    const RingParams gr24(2, 4);
    auto rep = verify_postnikov(gr24, 2);
    CHECK(rep.case_one);
    CHECK(rep.match);
    CHECK(rep.computed == s(gr24, {}, 2));

    const RingParams gr12(1, 2);
    rep = verify_postnikov(gr12, 5);
    CHECK(rep.computed == s(gr12, {1}, 2));
    REQUIRE(rep.case_one);
    CHECK(*rep.case_one == s(gr12, {1}, 2));
    CHECK(rep.match);
    CHECK(rep.cases_agree);

    rep = verify_postnikov(gr24, 1);
    CHECK(rep.computed == s(gr24, {2, 2}));
    CHECK(rep.match);

    // Gr(2,5), g = 2: only case (II) applies, m^2 = q^2 sigma_{1,1}.
    rep = verify_postnikov(RingParams(2, 5), 2);
    CHECK_FALSE(rep.case_one);
    REQUIRE(rep.case_two);
    CHECK(rep.computed == s(RingParams(2, 5), {1, 1}, 2));
    CHECK(rep.match);

    CHECK_THROWS_AS(verify_postnikov(gr24, 0), DomainError);
}

TEST_CASE("asymptotic_invariant") {
    for (int m = 1; m <= 6; ++m)
        CHECK(asymptotic_invariant(RingParams::projective_space(m)) == Rational(m, m + 1));
    CHECK(asymptotic_invariant(RingParams(2, 4)) == 1);
    CHECK(asymptotic_invariant(RingParams(2, 4, Rational(3, 2))) == Rational(3, 2));
}
