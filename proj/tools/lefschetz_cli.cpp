// Command-line front end: lefschetz-cli <command> [options] <problem.json | ->
//
// Exit status: 0 success, 1 a verified property failed, 2 malformed input.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "lefschetz/document.hpp"
#include "lefschetz/errors.hpp"
#include "lefschetz/verify.hpp"

using namespace lefschetz;
using nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kMalformed = 2;

std::string read_input(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path);
    if (!in) throw MalformedInput("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Problem load(const std::string& path) { return load_problem(parse_problem(read_input(path))); }

SimplicialMap require_map(const Problem& p) {
    if (p.map) return *p.map;
    if (p.domain.is_identity()) return SimplicialMap::identity(p.domain.base());
    throw MalformedInput("document has a subdivision but no \"map\"");
}

ordered_json counts_json(const Complex& c) {
    ordered_json counts = ordered_json::array();
    for (int q = 0; q <= c.dimension(); ++q) counts.push_back(c.count(q));
    return counts;
}

int run_euler(const std::string& path) {
    const auto p = load(path);
    ordered_json out;
    out["simplex_counts"] = counts_json(p.subcomplex);
    out["euler_characteristic"] = euler_characteristic(p.subcomplex);
    std::cout << format_json(out);
    return kOk;
}

int run_homology(const std::string& path) {
    const auto p = load(path);
    const auto basis = homology_basis(p.subcomplex);
    ordered_json out;
    out["betti_numbers"] = basis.betti_numbers();
    if (p.map || p.domain.is_identity()) {
        const MapPair pair(require_map(p), p.subcomplex);
        if (homology_route_defined(pair)) {
            ordered_json traces = ordered_json::array();
            for (const auto& t : induced_homology_map(pair, basis).traces()) traces.push_back(rational_json(t));
            out["induced_traces"] = std::move(traces);
            out["homological_lefschetz"] = rational_json(homological_lefschetz(pair));
        } else {
            out["induced_traces"] = nullptr;
            out["homological_lefschetz"] = nullptr;
        }
    }
    std::cout << format_json(out);
    return kOk;
}

int run_lefschetz(const std::string& path, const std::string& method) {
    const auto p = load(path);
    const MapPair pair(require_map(p), p.subcomplex);
    if (method == "all") {
        std::cout << emit_report(lefschetz_report(pair));
        return kOk;
    }
    static const std::map<std::string, Method> methods{{"axiomatic", Method::axiomatic},
                                                       {"open-sum", Method::open_sum},
                                                       {"chain", Method::chain},
                                                       {"homological", Method::homological}};
    const Method m = methods.at(method);
    const auto value = evaluate(m, pair);
    ordered_json out;
    out["method"] = method;
    out["value"] = value ? rational_json(*value) : ordered_json(nullptr);
    std::cout << format_json(out);
    return kOk;
}

int run_hopf_check(const std::string& path) {
    const auto p = load(path);
    const auto f = require_map(p);
    ordered_json out;
    out["hopf_simplicial"] = is_hopf_simplicial(f);
    ordered_json certs = ordered_json::array();
    for (const auto& c : fixed_point_certificates(f)) certs.push_back(certificate_json(c));
    out["fixed_points"] = std::move(certs);
    std::cout << format_json(out);
    return kOk;
}

int run_subdivide(const std::string& path, int rounds) {
    const auto p = load(path);
    SubdividedComplex k = p.domain;
    for (int i = 0; i < rounds; ++i) k = barycentric_subdivide(k);
    std::cout << emit_problem(make_document(k));
    return kOk;
}

int run_verify(const std::vector<std::string>& paths, const VerifyOptions& options) {
    bool all_hold = true;
    ordered_json out = ordered_json::array();
    for (const auto& path : paths) {
        const auto checks = verify_problem(load(path), options);
        ordered_json entry;
        entry["file"] = path;
        ordered_json list = ordered_json::array();
        bool file_ok = true;
        for (const auto& c : checks) {
            ordered_json j;
            j["check"] = c.name;
            j["holds"] = c.holds;
            if (!c.detail.empty()) j["detail"] = c.detail;
            list.push_back(std::move(j));
            file_ok = file_ok && c.holds;
        }
        entry["ok"] = file_ok;
        entry["checks"] = std::move(list);
        out.push_back(std::move(entry));
        all_hold = all_hold && file_ok;
    }
    std::cout << format_json(out);
    return all_hold ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Lefschetz numbers, Euler characteristics and valuation checks for simplicial maps"};
    app.require_subcommand(1);

    std::string input = "-";
    auto* euler = app.add_subcommand("euler", "Euler characteristic of the selected subcomplex");
    euler->add_option("input", input, "problem file, or - for standard input");

    auto* homology = app.add_subcommand("homology", "Betti numbers and induced traces");
    homology->add_option("input", input, "problem file, or - for standard input");

    std::string method = "all";
    auto* lefschetz = app.add_subcommand("lefschetz", "Lefschetz number report");
    lefschetz->add_option("input", input, "problem file, or - for standard input");
    lefschetz->add_option("--method", method, "evaluator")
        ->check(CLI::IsMember({"all", "axiomatic", "open-sum", "chain", "homological"}));

    auto* hopf = app.add_subcommand("hopf-check", "Hopf classification with fixed-point certificates");
    hopf->add_option("input", input, "problem file, or - for standard input");

    int rounds = 1;
    auto* subdivide = app.add_subcommand("subdivide", "Barycentric subdivision of the refined complex");
    subdivide->add_option("input", input, "problem file, or - for standard input");
    subdivide->add_option("--rounds", rounds, "number of rounds")->check(CLI::NonNegativeNumber);

    std::vector<std::string> inputs;
    VerifyOptions options;
    auto* verify = app.add_subcommand("verify", "Run every property check; exit 1 on a violation");
    verify->add_option("inputs", inputs, "problem files")->required();
    verify->add_option("--pairs", options.sampled_pairs, "sampled subcomplex pairs per evaluator");
    verify->add_option("--seed", options.seed, "sampling seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kMalformed;
    }

    try {
        if (*euler) return run_euler(input);
        if (*homology) return run_homology(input);
        if (*lefschetz) return run_lefschetz(input, method);
        if (*hopf) return run_hopf_check(input);
        if (*subdivide) return run_subdivide(input, rounds);
        if (*verify) return run_verify(inputs, options);
    } catch (const MalformedInput& e) {
        std::cerr << "malformed input: " << e.what() << '\n';
        return kMalformed;
    } catch (const InvalidSubdivision& e) {
        std::cerr << "invalid subdivision: " << e.what() << '\n';
        return kMalformed;
    } catch (const InvalidMap& e) {
        std::cerr << "invalid map: " << e.what() << '\n';
        return kMalformed;
    } catch (const DomainError& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kMalformed;
    } catch (const ConsistencyFailure& e) {
        std::cerr << "consistency failure: " << e.what() << '\n';
        return kViolation;
    }
    return kMalformed;
}
