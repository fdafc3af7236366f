#ifndef LEFSCHETZ_DOCUMENT_HPP
#define LEFSCHETZ_DOCUMENT_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "lefschetz/lefschetz.hpp"
#include "lefschetz/valuation.hpp"

namespace lefschetz {

/**
 * Problem file contents.
 *
 *   {
 *     "base": [[0,1],[1,2],[0,2]],
 *     "subdivision": {
 *       "refined": [[0,3],[1,3],...],
 *       "locations": {"3": {"0": "1/2", "1": "1/2"}, ...}
 *     },
 *     "map": {"0": 0, "3": 1, ...},
 *     "subcomplex": [[0,3]]
 *   }
 *
 * Only "base" is required. Fractions are "p/q" strings or JSON integers;
 * floating point numbers are rejected. Base vertices may be omitted from
 * "locations". Simplex lists are face-closed on load and stored as their
 * maximal simplices, so parsing canonicalizes.
 */
struct ProblemDocument {
    struct Subdivision {
        std::vector<Simplex> refined;
        std::map<VertexId, std::map<VertexId, Rational>> locations;
        friend bool operator==(const Subdivision&, const Subdivision&) = default;
    };

    std::vector<Simplex> base;
    std::optional<Subdivision> subdivision;
    std::optional<std::map<VertexId, VertexId>> map;
    std::optional<std::vector<Simplex>> subcomplex;

    friend bool operator==(const ProblemDocument&, const ProblemDocument&) = default;
};

/// Throws MalformedInput with a location prefix such as "subdivision.locations.3".
ProblemDocument parse_problem(std::string_view text);

/// Canonical text: two-space indented JSON, keys in fixed order, vertices ascending.
std::string emit_problem(const ProblemDocument& doc);

/// A document turned into validated objects.
struct Problem {
    SubdividedComplex domain;
    std::optional<SimplicialMap> map;
    /// The selected subcomplex, or the whole refined complex.
    Complex subcomplex;
};

/// Throws MalformedInput, InvalidSubdivision, InvalidMap or DomainError.
Problem load_problem(const ProblemDocument& doc);

ProblemDocument make_document(const SubdividedComplex& domain,
                              const std::optional<SimplicialMap>& map = std::nullopt,
                              const std::optional<Complex>& subcomplex = std::nullopt);

nlohmann::ordered_json rational_json(const Rational& r);
nlohmann::ordered_json simplex_json(const Simplex& s);
nlohmann::ordered_json certificate_json(const FixedPointCertificate& c);
nlohmann::ordered_json report_json(const LefschetzReport& r);
nlohmann::ordered_json verdict_json(const ValuationVerdict& v);

std::string emit_report(const LefschetzReport& r);

/// Indented JSON with arrays of scalars kept on one line.
std::string format_json(const nlohmann::ordered_json& j);

}  // namespace lefschetz

#endif
