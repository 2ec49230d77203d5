#pragma once

#include "qsc/sp_quasimorphism.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace qsc::sp {

inline constexpr int default_samples = 16;

/// t -> [[cos(t theta) I, -sin(t theta) I], [sin(t theta) I, cos(t theta) I]].
SymplecticPath rotation_path(int n, double theta, int samples = default_samples);
/// t -> [[I, c t I], [0, I]].
SymplecticPath shear_path(int n, double c, int samples = default_samples);
SymplecticPath identity_path(int n, int samples = 2);
/// t -> exp(t J0 S) for a random symmetric S with N(0, 1/4) entries.
SymplecticPath random_path(std::mt19937_64& rng, int n, int samples = default_samples);
/// exp(J0 S) for a random symmetric S, as above.
Matrix random_symplectic(std::mt19937_64& rng, int n);
std::vector<PathPair> random_pairs(std::uint64_t seed, std::size_t count, int n);

/// "rotation:theta=1.2", "shear:c=0.5", "identity", "random:seed=42,count=200".
struct GeneratorSpec {
    std::string kind;
    std::map<std::string, std::string> params;

    double number(const std::string& key) const;
    std::uint64_t count(const std::string& key) const;
    bool has(const std::string& key) const { return params.count(key) != 0; }
};

/// Throws ParseError on malformed specs.
GeneratorSpec parse_generator_spec(std::string_view text);

/// Builds a single path from rotation, shear, identity or random (needs seed).
SymplecticPath path_from_spec(const GeneratorSpec& spec, int n);

/// JSON array of 2n x 2n matrices, each an array of rows.
SymplecticPath path_from_json(const nlohmann::ordered_json& j, double tol = default_tolerance);
nlohmann::ordered_json to_json(const SymplecticPath& path);

nlohmann::ordered_json to_json(const TauEstimate& est);
nlohmann::ordered_json to_json(const DefectStats& stats);

} // namespace qsc::sp
