#include "cli_app.hpp"

#include "qsc/cl_bounds.hpp"
#include "qsc/errors.hpp"
#include "qsc/qh_format.hpp"
#include "qsc/sp_generators.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

namespace qsc::cli {

namespace {

using json = nlohmann::ordered_json;

struct RingArgs {
    std::string ring;
    int cpn = 0;
    std::string area = "1";

    void attach(CLI::App* cmd) {
        cmd->add_option("--ring", ring, "Grassmannian as r,n");
        cmd->add_option("--cpn", cpn, "complex projective space CP^n (same as --ring 1,n+1)");
        cmd->add_option("--area", area, "symplectic area of the H_2 generator")->capture_default_str();
    }

    RingParams resolve() const {
        const Rational a = parse_rational(area);
        if (!ring.empty() && cpn != 0)
            throw ParseError("give either --ring or --cpn, not both");
        if (cpn != 0) {
            if (cpn < 1)
                throw DomainError("--cpn needs n >= 1");
            return RingParams::projective_space(cpn, a);
        }
        if (ring.empty())
            throw ParseError("missing --ring or --cpn");
        return parse_ring(ring, a);
    }
};

struct ProfileArgs {
    std::string sup = "0";
    std::string w;

    void attach(CLI::App* cmd) {
        cmd->add_option("--sup", sup, "integral of sup F over the time interval")->capture_default_str();
        cmd->add_option("--w", w, "bump weight (> 0)")->required();
    }
    HamiltonianProfile resolve() const { return {parse_rational(sup), parse_rational(w)}; }
};

void print_table(std::ostream& out, const std::vector<std::pair<std::string, std::string>>& rows) {
    std::size_t width = 0;
    for (const auto& [k, v] : rows)
        width = std::max(width, k.size());
    for (const auto& [k, v] : rows)
        out << std::left << std::setw(static_cast<int>(width)) << k << "  " << v << '\n';
}

std::string number(double x) {
    std::ostringstream s;
    s << std::setprecision(12) << x;
    return s.str();
}

std::string statement_text(const BoundCertificate& c) {
    switch (c.statement) {
    case Statement::cl_greater_than:
        return "cl > " + std::to_string(c.g) + (c.capped ? " (search capped)" : "");
    case Statement::stable_norm_at_least:
        return "stable norm >= " + to_string(c.value);
    case Statement::none:
        break;
    }
    return "none";
}

void print_certificate(std::ostream& out, const BoundCertificate& c, bool as_json) {
    if (as_json) {
        out << to_json(c).dump() << '\n';
        return;
    }
    std::string pre;
    for (const auto& p : c.preconditions)
        pre += (pre.empty() ? "" : "; ") + p;
    print_table(out, {{"statement", statement_text(c)},
                      {"threshold", to_string(c.threshold)},
                      {"theorem", c.theorem},
                      {"assumes", pre}});
}

std::int64_t max_g_from_env() {
    const char* env = std::getenv("QSC_MAX_G");
    if (env == nullptr || *env == '\0')
        return default_max_g;
    const std::string s(env);
    if (!std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }) || s.size() > 12)
        throw ParseError("QSC_MAX_G must be a positive integer");
    const auto v = std::stoll(s);
    if (v < 1)
        throw ParseError("QSC_MAX_G must be a positive integer");
    return v;
}

json postnikov_json(const PostnikovReport& rep) {
    auto cls = [](const std::optional<QHClass>& c) { return c ? to_json(*c)["terms"] : json(nullptr); };
    return {{"ring", to_json(rep.computed.ring())},
            {"g", rep.g},
            {"computed", to_json(rep.computed)["terms"]},
            {"case_one", cls(rep.case_one)},
            {"case_two", cls(rep.case_two)},
            {"match", rep.match},
            {"cases_agree", rep.cases_agree}};
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Quantum Schubert calculus and commutator-length certificates", "qsc"};
    app.require_subcommand(1);
    bool as_json = false;
    unsigned threads = 1;
    app.add_flag("--json", as_json, "emit JSON instead of a table");
    app.add_option("--threads", threads, "worker threads for sampling surveys");

    RingArgs ring_args;
    ProfileArgs profile_args;
    std::string class_a, class_b;
    std::int64_t g = 0;

    auto* product = app.add_subcommand("product", "quantum product of two classes");
    ring_args.attach(product);
    product->add_option("--a", class_a, "first class, e.g. \"s[1]\"")->required();
    product->add_option("--b", class_b, "second class")->required();

    auto* euler = app.add_subcommand("euler", "Euler class of the quantum cohomology ring");
    ring_args.attach(euler);

    auto* power_cmd = app.add_subcommand("power", "g-th quantum power of a class");
    ring_args.attach(power_cmd);
    power_cmd->add_option("--a", class_a, "class to raise")->required();
    power_cmd->add_option("--g", g, "exponent (>= 0)")->required();

    auto* postnikov = app.add_subcommand("postnikov", "compare m^g with its closed forms");
    ring_args.attach(postnikov);
    postnikov->add_option("--g", g, "exponent (>= 1)")->required();

    auto* invariant = app.add_subcommand("invariant", "I_g from the splitting of E^g");
    ring_args.attach(invariant);
    invariant->add_option("--g", g, "exponent (>= 1)")->required();

    int cpn_n = 0;
    auto* bound_cpn = app.add_subcommand("bound-cpn", "commutator length bound on CP^n");
    bound_cpn->add_option("--n", cpn_n, "complex dimension n")->required();
    bound_cpn->add_option("--area", ring_args.area, "area of the line class")->capture_default_str();
    profile_args.attach(bound_cpn);

    auto* bound_grass = app.add_subcommand("bound-grass", "commutator length bound on Gr(r,n)");
    ring_args.attach(bound_grass);
    profile_args.attach(bound_grass);
    bound_grass->add_option("--g", g, "test this g only (default: largest certified g)");

    std::string w_only;
    auto* stable = app.add_subcommand("stable-norm", "stable commutator norm lower bound");
    ring_args.attach(stable);
    stable->add_option("--w", w_only, "bump weight (> 0)")->required();

    auto* aspherical = app.add_subcommand("aspherical", "cl > 1 bound on aspherical manifolds");
    profile_args.attach(aspherical);

    auto* spectral = app.add_subcommand("spectral", "spectral lower bound for E^g");
    ring_args.attach(spectral);
    profile_args.attach(spectral);
    spectral->add_option("--g", g, "exponent (>= 1)")->required();

    std::string path_spec, path_file;
    int dim = 1;
    int k_max = 32;
    auto* sp_tau = app.add_subcommand("sp-tau", "rotation number of a symplectic path");
    sp_tau->add_option("--path", path_spec, "generator: rotation:theta=..., shear:c=..., identity, random:seed=...");
    sp_tau->add_option("--path-file", path_file, "JSON array of 2n x 2n matrices");
    sp_tau->add_option("--dim", dim, "n for Sp(2n)")->capture_default_str();
    sp_tau->add_option("--k-max", k_max, "homogenization depth")->capture_default_str();

    std::string survey_spec;
    std::optional<std::uint64_t> seed;
    auto* sp_survey = app.add_subcommand("sp-survey", "empirical defect of the rotation number");
    sp_survey->add_option("--gen", survey_spec, "random:seed=S,count=N")->required();
    sp_survey->add_option("--seed", seed, "random seed (overrides the spec)");
    sp_survey->add_option("--dim", dim, "n for Sp(2n)")->capture_default_str();
    sp_survey->add_option("--k-max", k_max, "homogenization depth")->capture_default_str();

    for (auto* sub : app.get_subcommands({}))
        sub->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error:parse: " << e.what() << '\n';
        return parse_error;
    }

    std::ostringstream buf;
    try {
        if (product->parsed()) {
            const RingParams ring = ring_args.resolve();
            const QHClass c = quantum_product(parse_class(ring, class_a), parse_class(ring, class_b));
            buf << (as_json ? to_json(c).dump() : to_string(c)) << '\n';
        } else if (euler->parsed()) {
            const RingParams ring = ring_args.resolve();
            const QHClass e = euler_class(ring);
            const QHClass expected = QHClass::schubert(ring, ring.point_partition(), 0,
                                                       Rational(ring.euler_characteristic()));
            if (!(e == expected))
                throw AssertionFailure("Euler class " + to_string(e) + " differs from " +
                                       to_string(expected));
            buf << (as_json ? to_json(e).dump() : to_string(e)) << '\n';
        } else if (power_cmd->parsed()) {
            if (g < 0)
                throw DomainError("--g must be nonnegative");
            const RingParams ring = ring_args.resolve();
            const QHClass p = power(parse_class(ring, class_a), static_cast<std::uint64_t>(g));
            buf << (as_json ? to_json(p).dump() : to_string(p)) << '\n';
        } else if (postnikov->parsed()) {
            if (g < 1)
                throw DomainError("--g must be positive");
            const RingParams ring = ring_args.resolve();
            const auto rep = verify_postnikov(ring, static_cast<std::uint64_t>(g));
            if (as_json) {
                buf << postnikov_json(rep).dump() << '\n';
            } else {
                auto opt = [](const std::optional<QHClass>& c) {
                    return c ? to_string(*c) : std::string("n/a");
                };
                print_table(buf, {{"m^g", to_string(rep.computed)},
                                  {"case (I)", opt(rep.case_one)},
                                  {"case (II)", opt(rep.case_two)},
                                  {"match", rep.match ? "yes" : "no"},
                                  {"cases agree", rep.cases_agree ? "yes" : "no"}});
            }
        } else if (invariant->parsed()) {
            if (g < 1)
                throw DomainError("--g must be positive");
            const RingParams ring = ring_args.resolve();
            const Rational ig = euler_power_invariant(ring, static_cast<std::uint64_t>(g));
            const Rational asym = asymptotic_invariant(ring);
            if (as_json)
                buf << json{{"ring", to_json(ring)}, {"g", g}, {"I_g", to_string(ig)},
                            {"asymptotic", to_string(asym)}}
                           .dump()
                    << '\n';
            else
                print_table(buf, {{"I_g", to_string(ig)}, {"lim I_g/g", to_string(asym)}});
        } else if (bound_cpn->parsed()) {
            print_certificate(buf,
                              cl_lower_bound_cpn(cpn_n, parse_rational(ring_args.area),
                                                 profile_args.resolve(), max_g_from_env()),
                              as_json);
        } else if (bound_grass->parsed()) {
            const RingParams ring = ring_args.resolve();
            const HamiltonianProfile profile = profile_args.resolve();
            print_certificate(buf,
                              g != 0 ? cl_lower_bound_grassmannian(ring, profile, g)
                                     : max_cl_lower_bound_grassmannian(ring, profile, max_g_from_env()),
                              as_json);
        } else if (stable->parsed()) {
            const RingParams ring = ring_args.resolve();
            const Rational w = parse_rational(w_only);
            if (as_json)
                buf << to_json(stable_norm_certificate(ring, w)).dump() << '\n';
            else
                buf << to_string(stable_norm_lower_bound(ring, w)) << '\n';
        } else if (aspherical->parsed()) {
            print_certificate(buf, aspherical_bound(profile_args.resolve()), as_json);
        } else if (spectral->parsed()) {
            const RingParams ring = ring_args.resolve();
            const Rational bound = spectral_lower_bound(ring, profile_args.resolve(), g);
            if (as_json)
                buf << json{{"lower_bound", to_string(bound)}, {"positive", bound > 0}}.dump() << '\n';
            else
                print_table(buf, {{"c(E^g, F#wH_B) >=", to_string(bound)},
                                  {"positive", bound > 0 ? "yes" : "no"}});
        } else if (sp_tau->parsed()) {
            if (path_spec.empty() == path_file.empty())
                throw ParseError("give exactly one of --path or --path-file");
            std::optional<sp::SymplecticPath> path;
            if (!path_file.empty()) {
                std::ifstream in(path_file);
                if (!in)
                    throw ParseError("cannot open '" + path_file + "'");
                json j;
                try {
                    in >> j;
                } catch (const json::exception& e) {
                    throw ParseError(std::string("invalid JSON: ") + e.what());
                }
                path = sp::path_from_json(j);
            } else {
                path = sp::path_from_spec(sp::parse_generator_spec(path_spec), dim);
            }
            const double td = sp::tau_det(*path);
            const sp::TauEstimate est = sp::tau(*path, k_max);
            if (as_json) {
                json j = sp::to_json(est);
                j["tau_det"] = td;
                buf << j.dump() << '\n';
            } else {
                print_table(buf, {{"tau_det", number(td)},
                                  {"tau (k=" + std::to_string(k_max) + ")", number(est.value)}});
            }
        } else if (sp_survey->parsed()) {
            const sp::GeneratorSpec spec = sp::parse_generator_spec(survey_spec);
            if (spec.kind != "random")
                throw ParseError("sp-survey supports only random:seed=S,count=N");
            if (!seed && !spec.has("seed"))
                throw ParseError("sp-survey requires an explicit seed");
            const std::uint64_t s = seed ? *seed : spec.count("seed");
            const std::uint64_t count = spec.has("count") ? spec.count("count") : 200;
            if (count == 0)
                throw DomainError("count must be positive");
            if (dim < 1)
                throw DomainError("--dim must be at least 1");
            const auto pairs = sp::random_pairs(s, count, dim);
            const auto stats = sp::defect_survey(pairs, k_max, threads);
            if (as_json) {
                json j = sp::to_json(stats);
                j["seed"] = s;
                j["dim"] = dim;
                j["k_max"] = k_max;
                buf << j.dump() << '\n';
            } else {
                std::string hist;
                for (auto h : stats.histogram)
                    hist += (hist.empty() ? "" : " ") + std::to_string(h);
                print_table(buf, {{"pairs", std::to_string(stats.defects.size())},
                                  {"max defect", number(stats.max)},
                                  {"mean defect", number(stats.mean)},
                                  {"bin width", number(stats.bin_width)},
                                  {"histogram", hist}});
            }
        }
    } catch (const ParseError& e) {
        err << "error:parse: " << e.what() << '\n';
        return parse_error;
    } catch (const DomainError& e) {
        err << "error:domain: " << e.what() << '\n';
        return domain_error;
    } catch (const AssertionFailure& e) {
        err << "error:assertion: " << e.what() << '\n';
        return assertion_failure;
    }
    out << buf.str();
    return ok;
}

} // namespace qsc::cli
