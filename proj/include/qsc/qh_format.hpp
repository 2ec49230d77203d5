#pragma once

#include "qsc/qh_ring.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace qsc {

/// Terms joined by " + ", each "coef*s[3,1]*q^2" with unit factors omitted:
/// "s[2,2] + q", "6*s[2,2]", "-1/2*q^-1", "1". The zero class is "0".
std::string to_string(const QHClass& a);

/// Inverse of to_string; also accepts "s[]", "s[0]", explicit "q^1" and
/// factors in any order. Throws ParseError on malformed text and
/// DomainError when a partition falls outside the ring's box.
QHClass parse_class(const RingParams& ring, std::string_view text);

/// "1 + 2*q^3", "0" for the zero polynomial.
std::string to_string(const QPolynomial& p);

nlohmann::ordered_json to_json(const RingParams& ring);
RingParams ring_from_json(const nlohmann::ordered_json& j);

/// {"ring": {...}, "terms": [{"partition":[2,2],"q":0,"coef":"1"}, ...]}
nlohmann::ordered_json to_json(const QHClass& a);
QHClass class_from_json(const nlohmann::ordered_json& j);

/// "r,n" as used on the command line.
RingParams parse_ring(std::string_view text, Rational area = 1);

} // namespace qsc
