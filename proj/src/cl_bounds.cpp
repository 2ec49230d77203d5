#include "qsc/cl_bounds.hpp"

#include "qsc/errors.hpp"

namespace qsc {

namespace {

const std::vector<std::string> displacing_preconditions{"F normalized", "phi_F displaces B"};

BoundCertificate cl_certificate(std::int64_t g, Rational threshold, const char* theorem) {
    BoundCertificate c;
    c.statement = Statement::cl_greater_than;
    c.g = g;
    c.threshold = std::move(threshold);
    c.theorem = theorem;
    c.preconditions = displacing_preconditions;
    return c;
}

BoundCertificate no_certificate(Rational threshold, const char* theorem) {
    BoundCertificate c;
    c.threshold = std::move(threshold);
    c.theorem = theorem;
    c.preconditions = displacing_preconditions;
    return c;
}

void require_g(std::int64_t g) {
    if (g < 1)
        throw DomainError("g must be a positive integer");
}

} // namespace

HamiltonianProfile::HamiltonianProfile(Rational sup_integral, Rational w)
    : sup_integral_(std::move(sup_integral)), w_(std::move(w)) {
    if (w_ <= 0)
        throw DomainError("bump weight w must be positive");
}

BoundCertificate cl_lower_bound_cpn(int n, const Rational& area, const HamiltonianProfile& profile,
                                    std::int64_t max_g) {
    if (n < 1)
        throw DomainError("CP^n requires n >= 1");
    if (area <= 0)
        throw DomainError("area must be positive");
    require_g(max_g);
    auto threshold = [&](std::int64_t g) {
        return profile.sup_integral() + Rational((g * n) / (n + 1)) * area;
    };
    if (!(profile.w() > threshold(1)))
        return no_certificate(threshold(1), theorem_id::cl_cpn);
    std::int64_t g = 1;
    while (g < max_g && profile.w() > threshold(g + 1))
        ++g;
    auto cert = cl_certificate(g, threshold(g), theorem_id::cl_cpn);
    cert.capped = g == max_g;
    return cert;
}

BoundCertificate cl_lower_bound_grassmannian(const RingParams& ring, const HamiltonianProfile& profile,
                                             std::int64_t g) {
    require_g(g);
    const Rational threshold =
        profile.sup_integral() + euler_power_invariant(ring, static_cast<std::uint64_t>(g));
    if (profile.w() > threshold)
        return cl_certificate(g, threshold, theorem_id::cl_split_euler);
    return no_certificate(threshold, theorem_id::cl_split_euler);
}

BoundCertificate max_cl_lower_bound_grassmannian(const RingParams& ring,
                                                 const HamiltonianProfile& profile,
                                                 std::int64_t max_g) {
    require_g(max_g);
    const QHClass euler = euler_class(ring);
    QHClass euler_power = euler;
    Rational invariant = split_invariant(euler_power);
    Rational threshold = profile.sup_integral() + invariant;
    if (!(profile.w() > threshold))
        return no_certificate(threshold, theorem_id::cl_split_euler);
    std::int64_t g = 1;
    while (g < max_g) {
        euler_power = quantum_product(euler_power, euler);
        const Rational next = split_invariant(euler_power);
        if (next < invariant)
            throw AssertionFailure("I_g decreased from g=" + std::to_string(g) + " to g=" +
                                   std::to_string(g + 1));
        const Rational next_threshold = profile.sup_integral() + next;
        if (!(profile.w() > next_threshold))
            break;
        invariant = next;
        threshold = next_threshold;
        ++g;
    }
    auto cert = cl_certificate(g, threshold, theorem_id::cl_split_euler);
    cert.capped = g == max_g;
    return cert;
}

Rational stable_norm_lower_bound(const RingParams& ring, const Rational& w) {
    if (w <= 0)
        throw DomainError("bump weight w must be positive");
    return w / asymptotic_invariant(ring);
}

BoundCertificate stable_norm_certificate(const RingParams& ring, const Rational& w) {
    BoundCertificate c;
    c.statement = Statement::stable_norm_at_least;
    c.value = stable_norm_lower_bound(ring, w);
    c.threshold = 0;
    c.theorem = theorem_id::stable_norm;
    c.preconditions = {"B displaceable"};
    return c;
}

BoundCertificate aspherical_bound(const HamiltonianProfile& profile) {
    BoundCertificate c = profile.w() > profile.sup_integral()
                             ? cl_certificate(1, profile.sup_integral(), theorem_id::cl_aspherical)
                             : no_certificate(profile.sup_integral(), theorem_id::cl_aspherical);
    c.preconditions.insert(c.preconditions.begin(), "M symplectically aspherical");
    return c;
}

Rational spectral_lower_bound(const RingParams& ring, const HamiltonianProfile& profile,
                              std::int64_t g) {
    require_g(g);
    // c(E^g, F) = c(alpha, F) - I_g >= -sup - I_g, then the bump adds w.
    const Rational shift = euler_power_invariant(ring, static_cast<std::uint64_t>(g));
    const Rational alpha_bound = -profile.sup_integral();
    return alpha_bound - shift + profile.w();
}

nlohmann::ordered_json to_json(const BoundCertificate& cert) {
    nlohmann::ordered_json j;
    switch (cert.statement) {
    case Statement::cl_greater_than:
        j["statement"] = "cl_gt";
        j["g"] = cert.g;
        break;
    case Statement::stable_norm_at_least:
        j["statement"] = "stable_norm_ge";
        j["value"] = to_string(cert.value);
        break;
    case Statement::none:
        j["statement"] = "none";
        break;
    }
    j["threshold"] = to_string(cert.threshold);
    j["theorem"] = cert.theorem;
    j["preconditions"] = cert.preconditions;
    if (cert.capped)
        j["capped"] = true;
    return j;
}

BoundCertificate certificate_from_json(const nlohmann::ordered_json& j) {
    try {
        BoundCertificate c;
        const auto statement = j.at("statement").get<std::string>();
        if (statement == "cl_gt") {
            c.statement = Statement::cl_greater_than;
            c.g = j.at("g").get<std::int64_t>();
        } else if (statement == "stable_norm_ge") {
            c.statement = Statement::stable_norm_at_least;
            c.value = parse_rational(j.at("value").get<std::string>());
        } else if (statement != "none") {
            throw ParseError("unknown certificate statement '" + statement + "'");
        }
        c.threshold = parse_rational(j.at("threshold").get<std::string>());
        c.theorem = j.at("theorem").get<std::string>();
        c.preconditions = j.at("preconditions").get<std::vector<std::string>>();
        c.capped = j.value("capped", false);
        return c;
    } catch (const nlohmann::ordered_json::exception& e) {
        throw ParseError(std::string("invalid certificate JSON: ") + e.what());
    }
}

} // namespace qsc
