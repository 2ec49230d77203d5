#include "qsc/qh_format.hpp"

#include "qsc/errors.hpp"

#include <charconv>

namespace qsc {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && s.front() == ' ')
        s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ')
        s.remove_suffix(1);
    return s;
}

std::string monomial_text(const Rational& coef, const Partition& lambda, std::int64_t q_exp) {
    std::string factors;
    if (!lambda.empty())
        factors = "s[" + to_string(lambda) + "]";
    if (q_exp != 0) {
        if (!factors.empty())
            factors += '*';
        factors += q_exp == 1 ? std::string("q") : "q^" + std::to_string(q_exp);
    }
    if (factors.empty())
        return to_string(coef);
    if (coef == 1)
        return factors;
    if (coef == -1)
        return "-" + factors;
    return to_string(coef) + "*" + factors;
}

std::int64_t parse_int64(std::string_view s) {
    std::int64_t v = 0;
    const char* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (s.empty() || ec != std::errc() || ptr != end)
        throw ParseError("invalid integer '" + std::string(s) + "'");
    return v;
}

} // namespace

std::string to_string(const QHClass& a) {
    if (a.is_zero())
        return "0";
    std::string out;
    for (const auto& [mono, coef] : a.terms()) {
        if (!out.empty())
            out += " + ";
        out += monomial_text(coef, mono.partition, mono.q_exp);
    }
    return out;
}

std::string to_string(const QPolynomial& p) {
    std::string out;
    for (const auto& [exp, coef] : p) {
        if (coef == 0)
            continue;
        if (!out.empty())
            out += " + ";
        out += monomial_text(coef, {}, exp);
    }
    return out.empty() ? "0" : out;
}

QHClass parse_class(const RingParams& ring, std::string_view text) {
    QHClass out(ring);
    const std::string_view whole = trim(text);
    if (whole.empty())
        throw ParseError("empty class expression");
    std::size_t start = 0;
    while (start <= whole.size()) {
        const auto plus = std::min(whole.find('+', start), whole.size());
        std::string_view term = trim(whole.substr(start, plus - start));
        start = plus + 1;
        if (term.empty())
            throw ParseError("empty term in '" + std::string(text) + "'");

        Rational coef = 1;
        std::optional<Partition> lambda;
        std::int64_t q_exp = 0;
        std::size_t fpos = 0;
        while (fpos <= term.size()) {
            const auto star = std::min(term.find('*', fpos), term.size());
            std::string_view factor = term.substr(fpos, star - fpos);
            fpos = star + 1;
            if (factor.size() > 1 && factor.front() == '-' && (factor[1] == 's' || factor[1] == 'q')) {
                coef = -coef;
                factor.remove_prefix(1);
            }
            if (factor.empty())
                throw ParseError("empty factor in '" + std::string(term) + "'");
            if (factor.front() == 's') {
                if (factor.size() < 3 || factor[1] != '[' || factor.back() != ']')
                    throw ParseError("malformed Schubert symbol '" + std::string(factor) + "'");
                if (lambda)
                    throw ParseError("two Schubert symbols in '" + std::string(term) + "'");
                lambda = parse_partition(factor.substr(2, factor.size() - 3));
            } else if (factor.front() == 'q') {
                if (factor.size() == 1)
                    q_exp += 1;
                else if (factor[1] == '^')
                    q_exp += parse_int64(factor.substr(2));
                else
                    throw ParseError("malformed q factor '" + std::string(factor) + "'");
            } else {
                coef *= parse_rational(factor);
            }
        }
        out.add_term(lambda.value_or(Partition{}), q_exp, coef);
    }
    return out;
}

nlohmann::ordered_json to_json(const RingParams& ring) {
    return {{"r", ring.r()}, {"n", ring.n()}, {"area", to_string(ring.area())}};
}

RingParams ring_from_json(const nlohmann::ordered_json& j) {
    try {
        return RingParams(j.at("r").get<int>(), j.at("n").get<int>(),
                          parse_rational(j.at("area").get<std::string>()));
    } catch (const nlohmann::ordered_json::exception& e) {
        throw ParseError(std::string("invalid ring JSON: ") + e.what());
    }
}

nlohmann::ordered_json to_json(const QHClass& a) {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [mono, coef] : a.terms())
        terms.push_back({{"partition", mono.partition.parts()},
                         {"q", mono.q_exp},
                         {"coef", to_string(coef)}});
    return {{"ring", to_json(a.ring())}, {"terms", std::move(terms)}};
}

QHClass class_from_json(const nlohmann::ordered_json& j) {
    QHClass out(ring_from_json(j.at("ring")));
    try {
        for (const auto& t : j.at("terms")) {
            Partition lambda;
            try {
                lambda = Partition(t.at("partition").get<std::vector<int>>());
            } catch (const DomainError& e) {
                throw ParseError(std::string("invalid partition in JSON: ") + e.what());
            }
            out.add_term(lambda, t.at("q").get<std::int64_t>(),
                         parse_rational(t.at("coef").get<std::string>()));
        }
    } catch (const nlohmann::ordered_json::exception& e) {
        throw ParseError(std::string("invalid class JSON: ") + e.what());
    }
    return out;
}

RingParams parse_ring(std::string_view text, Rational area) {
    const auto comma = text.find(',');
    if (comma == std::string_view::npos)
        throw ParseError("ring must be given as 'r,n'");
    const auto r = parse_int64(trim(text.substr(0, comma)));
    const auto n = parse_int64(trim(text.substr(comma + 1)));
    if (r < 0 || n < 0 || r > 1000 || n > 1000)
        throw DomainError("ring parameters out of range");
    return RingParams(static_cast<int>(r), static_cast<int>(n), std::move(area));
}

} // namespace qsc
