#pragma once

#include "qsc/qh_ring.hpp"
#include "qsc/rational.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qsc {

/// Numbers a displacing Hamiltonian F and the bump Hamiltonian w*H_B
/// contribute to the commutator-length bounds.
class HamiltonianProfile {
public:
    /// Throws DomainError unless w > 0.
    HamiltonianProfile(Rational sup_integral, Rational w);

    /// integral over [0,1] of sup_M F(t, .)
    const Rational& sup_integral() const noexcept { return sup_integral_; }
    const Rational& w() const noexcept { return w_; }

private:
    Rational sup_integral_;
    Rational w_;
};

enum class Statement { none, cl_greater_than, stable_norm_at_least };

struct BoundCertificate {
    Statement statement = Statement::none;
    std::int64_t g = 0;             ///< set for cl_greater_than
    Rational value;                 ///< set for stable_norm_at_least
    Rational threshold;             ///< w is compared strictly against this
    std::string theorem;
    std::vector<std::string> preconditions; ///< asserted by the caller, not checked
    bool capped = false;            ///< the search for g stopped at the cap

    bool certified() const noexcept { return statement != Statement::none; }
};

inline constexpr std::int64_t default_max_g = 10000;

/// Theorem ids carried by certificates.
namespace theorem_id {
inline constexpr const char* cl_cpn = "thm-cl-cp-n";
inline constexpr const char* cl_split_euler = "cor-cl-split-euler";
inline constexpr const char* cl_aspherical = "thm-cl-aspherical";
inline constexpr const char* stable_norm = "thm-stable-norm";
} // namespace theorem_id

/// Largest g >= 1 with w > sup + floor(gn/(n+1)) * area on CP^n.
BoundCertificate cl_lower_bound_cpn(int n, const Rational& area, const HamiltonianProfile& profile,
                                    std::int64_t max_g = default_max_g);

/// Certifies cl > g iff w > sup + I_g for the given g.
BoundCertificate cl_lower_bound_grassmannian(const RingParams& ring, const HamiltonianProfile& profile,
                                             std::int64_t g);

/// Largest certified g for Gr(r,n), building E^g incrementally. The search
/// relies on I_g being nondecreasing in g and throws AssertionFailure if a
/// decrease is ever observed.
BoundCertificate max_cl_lower_bound_grassmannian(const RingParams& ring,
                                                 const HamiltonianProfile& profile,
                                                 std::int64_t max_g = default_max_g);

/// w / (r(n-r)/n * area). Throws DomainError unless w > 0.
Rational stable_norm_lower_bound(const RingParams& ring, const Rational& w);

/// Wraps stable_norm_lower_bound in a certificate.
BoundCertificate stable_norm_certificate(const RingParams& ring, const Rational& w);

/// cl > 1 iff w > sup, for symplectically aspherical manifolds (asserted).
BoundCertificate aspherical_bound(const HamiltonianProfile& profile);

/// Lower bound w - sup - I_g for the spectral number of E^g on F # w H_B.
Rational spectral_lower_bound(const RingParams& ring, const HamiltonianProfile& profile,
                              std::int64_t g);

nlohmann::ordered_json to_json(const BoundCertificate& cert);
BoundCertificate certificate_from_json(const nlohmann::ordered_json& j);

} // namespace qsc
