#include "qsc/sp_generators.hpp"

#include "qsc/errors.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <charconv>
#include <cmath>

namespace qsc::sp {

SymplecticPath rotation_path(int n, double theta, int samples) {
    return SymplecticPath::from_generator(
        [n, theta](double t) -> Matrix {
            const double c = std::cos(t * theta), s = std::sin(t * theta);
            Matrix m(2 * n, 2 * n);
            const Matrix id = Matrix::Identity(n, n);
            m << c * id, -s * id, s * id, c * id;
            return m;
        },
        samples);
}

SymplecticPath shear_path(int n, double c, int samples) {
    return SymplecticPath::from_generator(
        [n, c](double t) -> Matrix {
            Matrix m = Matrix::Identity(2 * n, 2 * n);
            m.topRightCorner(n, n) = c * t * Matrix::Identity(n, n);
            return m;
        },
        samples);
}

SymplecticPath identity_path(int n, int samples) {
    return SymplecticPath::from_generator(
        [n](double) -> Matrix { return Matrix::Identity(2 * n, 2 * n); }, samples);
}

namespace {

Matrix random_hamiltonian(std::mt19937_64& rng, int n) {
    std::normal_distribution<double> normal(0.0, 0.5);
    Matrix s(2 * n, 2 * n);
    for (int i = 0; i < 2 * n; ++i)
        for (int j = i; j < 2 * n; ++j)
            s(i, j) = s(j, i) = normal(rng);
    return standard_form(n) * s;
}

} // namespace

SymplecticPath random_path(std::mt19937_64& rng, int n, int samples) {
    const Matrix x = random_hamiltonian(rng, n);
    return SymplecticPath::from_generator(
        [x](double t) -> Matrix { return (t * x).exp(); }, samples, 1e-8);
}

Matrix random_symplectic(std::mt19937_64& rng, int n) {
    return random_hamiltonian(rng, n).exp();
}

std::vector<PathPair> random_pairs(std::uint64_t seed, std::size_t count, int n) {
    std::mt19937_64 rng(seed);
    std::vector<PathPair> pairs;
    pairs.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        SymplecticPath a = random_path(rng, n);
        SymplecticPath b = random_path(rng, n);
        pairs.emplace_back(std::move(a), std::move(b));
    }
    return pairs;
}

double GeneratorSpec::number(const std::string& key) const {
    auto it = params.find(key);
    if (it == params.end())
        throw ParseError("generator '" + kind + "' needs parameter '" + key + "'");
    const std::string& v = it->second;
    double out = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (v.empty() || ec != std::errc() || ptr != v.data() + v.size() || !std::isfinite(out))
        throw ParseError("invalid number '" + v + "' for '" + key + "'");
    return out;
}

std::uint64_t GeneratorSpec::count(const std::string& key) const {
    auto it = params.find(key);
    if (it == params.end())
        throw ParseError("generator '" + kind + "' needs parameter '" + key + "'");
    const std::string& v = it->second;
    std::uint64_t out = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (v.empty() || ec != std::errc() || ptr != v.data() + v.size())
        throw ParseError("invalid integer '" + v + "' for '" + key + "'");
    return out;
}

GeneratorSpec parse_generator_spec(std::string_view text) {
    GeneratorSpec spec;
    const auto colon = text.find(':');
    spec.kind = std::string(text.substr(0, colon));
    if (spec.kind.empty())
        throw ParseError("empty generator spec");
    if (colon == std::string_view::npos)
        return spec;
    std::string_view rest = text.substr(colon + 1);
    while (!rest.empty()) {
        const auto comma = std::min(rest.find(','), rest.size());
        const std::string_view field = rest.substr(0, comma);
        const auto eq = field.find('=');
        if (eq == std::string_view::npos || eq == 0)
            throw ParseError("generator parameter '" + std::string(field) + "' must be key=value");
        spec.params[std::string(field.substr(0, eq))] = std::string(field.substr(eq + 1));
        rest = comma < rest.size() ? rest.substr(comma + 1) : std::string_view{};
    }
    return spec;
}

SymplecticPath path_from_spec(const GeneratorSpec& spec, int n) {
    if (n < 1)
        throw DomainError("dimension must be at least 1");
    if (spec.kind == "rotation")
        return rotation_path(n, spec.number("theta"));
    if (spec.kind == "shear")
        return shear_path(n, spec.number("c"));
    if (spec.kind == "identity")
        return identity_path(n);
    if (spec.kind == "random") {
        std::mt19937_64 rng(spec.count("seed"));
        return random_path(rng, n);
    }
    throw ParseError("unknown path generator '" + spec.kind + "'");
}

SymplecticPath path_from_json(const nlohmann::ordered_json& j, double tol) {
    try {
        std::vector<Matrix> samples;
        for (const auto& mj : j) {
            const auto rows = mj.get<std::vector<std::vector<double>>>();
            Matrix m(static_cast<Eigen::Index>(rows.size()),
                     static_cast<Eigen::Index>(rows.empty() ? 0 : rows.front().size()));
            for (std::size_t r = 0; r < rows.size(); ++r) {
                if (rows[r].size() != rows.front().size())
                    throw ParseError("ragged matrix in path JSON");
                for (std::size_t c = 0; c < rows[r].size(); ++c)
                    m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
            }
            samples.push_back(std::move(m));
        }
        return SymplecticPath::from_samples(std::move(samples), tol);
    } catch (const nlohmann::ordered_json::exception& e) {
        throw ParseError(std::string("invalid path JSON: ") + e.what());
    }
}

nlohmann::ordered_json to_json(const SymplecticPath& path) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& m : path.samples()) {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            std::vector<double> row(static_cast<std::size_t>(m.cols()));
            for (Eigen::Index c = 0; c < m.cols(); ++c)
                row[static_cast<std::size_t>(c)] = m(r, c);
            rows.push_back(row);
        }
        out.push_back(std::move(rows));
    }
    return out;
}

nlohmann::ordered_json to_json(const TauEstimate& est) {
    return {{"tau", est.value}, {"k_max", est.partials.size()}, {"partials", est.partials}};
}

nlohmann::ordered_json to_json(const DefectStats& stats) {
    return {{"pairs", stats.defects.size()},
            {"max_defect", stats.max},
            {"mean_defect", stats.mean},
            {"bin_width", stats.bin_width},
            {"histogram", stats.histogram},
            {"defects", stats.defects}};
}

} // namespace qsc::sp
