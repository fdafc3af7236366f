#include "lefschetz/document.hpp"

#include <algorithm>
#include <limits>

#include "lefschetz/errors.hpp"

namespace lefschetz {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw MalformedInput(where + ": " + what);
}

std::uint32_t parse_label(const json& j, const std::string& where) {
    if (!j.is_number_integer()) fail(where, "vertex labels must be non-negative integers");
    if (j.is_number_unsigned() && j.get<std::uint64_t>() <= std::numeric_limits<std::uint32_t>::max())
        return static_cast<std::uint32_t>(j.get<std::uint64_t>());
    fail(where, "vertex label out of range");
}

std::uint32_t parse_label_key(const std::string& key, const std::string& where) {
    if (key.empty() || key.size() > 10 || key.find_first_not_of("0123456789") != std::string::npos)
        fail(where, "object key \"" + key + "\" is not a vertex label");
    const auto value = std::stoull(key);
    if (value > std::numeric_limits<std::uint32_t>::max()) fail(where, "vertex label out of range");
    return static_cast<std::uint32_t>(value);
}

Rational parse_fraction(const json& j, const std::string& where) {
    if (j.is_number_float()) fail(where, "floating point values are not accepted; use \"p/q\"");
    if (j.is_number_integer()) return Rational(mpz_class(j.dump()));
    if (!j.is_string()) fail(where, "expected a fraction string \"p/q\"");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const MalformedInput& e) {
        fail(where, e.what());
    }
}

std::vector<Simplex> parse_simplices(const json& j, const std::string& where) {
    if (!j.is_array()) fail(where, "expected a list of simplices");
    std::vector<Simplex> gens;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string at = where + "[" + std::to_string(i) + "]";
        if (!j[i].is_array()) fail(at, "a simplex is a list of vertex labels");
        std::vector<std::uint32_t> labels;
        for (std::size_t k = 0; k < j[i].size(); ++k)
            labels.push_back(parse_label(j[i][k], at + "[" + std::to_string(k) + "]"));
        try {
            gens.push_back(Simplex::from_labels(labels));
        } catch (const MalformedInput& e) {
            fail(at, e.what());
        }
    }
    return Complex::closure_of(gens).maximal_simplices();
}

void require_known_keys(const json& j, std::initializer_list<const char*> keys, const std::string& where) {
    for (const auto& [key, value] : j.items()) {
        bool known = false;
        for (const char* k : keys) known = known || key == k;
        if (!known) fail(where, "unknown field \"" + key + "\"");
    }
}

}  // namespace

ProblemDocument parse_problem(std::string_view text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw MalformedInput(std::string("syntax error: ") + e.what());
    }
    if (!root.is_object()) fail("document", "top level must be an object");
    require_known_keys(root, {"base", "subdivision", "map", "subcomplex"}, "document");
    if (!root.contains("base")) fail("document", "missing required field \"base\"");

    ProblemDocument doc;
    doc.base = parse_simplices(root["base"], "base");

    if (root.contains("subdivision")) {
        const auto& sub = root["subdivision"];
        if (!sub.is_object()) fail("subdivision", "expected an object");
        require_known_keys(sub, {"refined", "locations"}, "subdivision");
        if (!sub.contains("refined")) fail("subdivision", "missing field \"refined\"");
        ProblemDocument::Subdivision s;
        s.refined = parse_simplices(sub["refined"], "subdivision.refined");
        if (sub.contains("locations")) {
            const auto& locs = sub["locations"];
            if (!locs.is_object()) fail("subdivision.locations", "expected an object keyed by vertex");
            for (const auto& [key, weights] : locs.items()) {
                const std::string at = "subdivision.locations." + key;
                const auto v = vertex(parse_label_key(key, at));
                if (!weights.is_object()) fail(at, "expected an object of base-vertex weights");
                std::map<VertexId, Rational> w;
                for (const auto& [bkey, value] : weights.items())
                    w.emplace(vertex(parse_label_key(bkey, at + "." + bkey)), parse_fraction(value, at + "." + bkey));
                s.locations.emplace(v, std::move(w));
            }
        }
        doc.subdivision = std::move(s);
    }

    if (root.contains("map")) {
        const auto& m = root["map"];
        if (!m.is_object()) fail("map", "expected an object from vertex to image vertex");
        std::map<VertexId, VertexId> images;
        for (const auto& [key, value] : m.items())
            images.emplace(vertex(parse_label_key(key, "map." + key)), vertex(parse_label(value, "map." + key)));
        doc.map = std::move(images);
    }

    if (root.contains("subcomplex")) doc.subcomplex = parse_simplices(root["subcomplex"], "subcomplex");
    return doc;
}

ordered_json rational_json(const Rational& r) { return format_rational(r); }

ordered_json simplex_json(const Simplex& s) {
    ordered_json out = ordered_json::array();
    for (auto v : s.vertices()) out.push_back(label(v));
    return out;
}

namespace {

ordered_json simplices_json(const std::vector<Simplex>& simplices) {
    ordered_json out = ordered_json::array();
    for (const auto& s : simplices) out.push_back(simplex_json(s));
    return out;
}

ordered_json weights_json(const std::map<VertexId, Rational>& weights) {
    ordered_json out = ordered_json::object();
    for (const auto& [v, w] : weights) out[std::to_string(label(v))] = rational_json(w);
    return out;
}

// Compact arrays of numbers keep simplex lists on one line each.
std::string dump_compact_arrays(const ordered_json& j, int indent = 0) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    const std::string inner(static_cast<std::size_t>(indent + 2), ' ');
    if (j.is_array()) {
        bool scalar = std::all_of(j.begin(), j.end(), [](const auto& e) { return e.is_primitive(); });
        if (scalar || j.empty()) return j.dump();
        std::string out = "[\n";
        for (std::size_t i = 0; i < j.size(); ++i)
            out += inner + dump_compact_arrays(j[i], indent + 2) + (i + 1 < j.size() ? ",\n" : "\n");
        return out + pad + "]";
    }
    if (j.is_object()) {
        if (j.empty()) return "{}";
        std::string out = "{\n";
        std::size_t i = 0;
        for (const auto& [key, value] : j.items()) {
            out += inner + ordered_json(key).dump() + ": " + dump_compact_arrays(value, indent + 2) +
                   (++i < j.size() ? ",\n" : "\n");
        }
        return out + pad + "}";
    }
    return j.dump();
}

}  // namespace

std::string emit_problem(const ProblemDocument& doc) {
    ordered_json root;
    root["base"] = simplices_json(doc.base);
    if (doc.subdivision) {
        ordered_json sub;
        sub["refined"] = simplices_json(doc.subdivision->refined);
        ordered_json locs = ordered_json::object();
        for (const auto& [v, w] : doc.subdivision->locations) locs[std::to_string(label(v))] = weights_json(w);
        sub["locations"] = std::move(locs);
        root["subdivision"] = std::move(sub);
    }
    if (doc.map) {
        ordered_json m = ordered_json::object();
        for (const auto& [v, w] : *doc.map) m[std::to_string(label(v))] = label(w);
        root["map"] = std::move(m);
    }
    if (doc.subcomplex) root["subcomplex"] = simplices_json(*doc.subcomplex);
    return dump_compact_arrays(root) + "\n";
}

Problem load_problem(const ProblemDocument& doc) {
    const Complex base = Complex::closure_of(doc.base);
    SubdividedComplex domain = identity_subdivision(base);
    if (doc.subdivision) {
        std::map<VertexId, BarycentricPoint> locations;
        for (const auto& [v, w] : doc.subdivision->locations) {
            try {
                locations.emplace(v, BarycentricPoint(w));
            } catch (const MalformedInput& e) {
                fail("subdivision.locations." + std::to_string(label(v)), e.what());
            }
        }
        domain = custom_subdivision(base, Complex::closure_of(doc.subdivision->refined), std::move(locations));
    }
    std::optional<SimplicialMap> map;
    if (doc.map) map.emplace(std::make_shared<const SubdividedComplex>(domain), *doc.map);
    Complex sub = domain.refined();
    if (doc.subcomplex) {
        sub = Complex::closure_of(*doc.subcomplex);
        if (!sub.is_subcomplex_of(domain.refined()))
            throw DomainError("subcomplex: not a subcomplex of the refined complex");
    }
    return Problem{std::move(domain), std::move(map), std::move(sub)};
}

ProblemDocument make_document(const SubdividedComplex& domain, const std::optional<SimplicialMap>& map,
                              const std::optional<Complex>& subcomplex) {
    ProblemDocument doc;
    doc.base = domain.base().maximal_simplices();
    if (!domain.is_identity()) {
        ProblemDocument::Subdivision s;
        s.refined = domain.refined().maximal_simplices();
        const auto base_vertices = domain.base().vertices();
        for (const auto& [v, loc] : domain.locations())
            if (!std::binary_search(base_vertices.begin(), base_vertices.end(), v))
                s.locations.emplace(v, loc.weights());
        doc.subdivision = std::move(s);
    }
    if (map) doc.map = map->vertex_images();
    if (subcomplex) doc.subcomplex = subcomplex->maximal_simplices();
    return doc;
}

ordered_json certificate_json(const FixedPointCertificate& c) {
    ordered_json out;
    out["simplex"] = simplex_json(c.simplex);
    out["fixed_set_dimension"] = c.fixed_set_dimension;
    out["witness"] = weights_json(c.witness.weights());
    out["local_weights"] = weights_json(c.local_weights);
    return out;
}

ordered_json report_json(const LefschetzReport& r) {
    ordered_json out;
    out["subcomplex"] = simplices_json(r.pair.subcomplex.maximal_simplices());
    ordered_json values;
    values["axiomatic"] = rational_json(r.value_axiomatic);
    values["open_sum"] = rational_json(r.value_open_sum);
    values["chain"] = rational_json(r.value_chain);
    values["homological"] = r.value_homological ? rational_json(*r.value_homological) : ordered_json(nullptr);
    out["values"] = std::move(values);
    out["agree"] = r.agree;
    out["homological_defined"] = r.value_homological.has_value();
    ordered_json traces = ordered_json::array();
    for (const auto& t : r.chain_traces) traces.push_back(rational_json(t));
    out["chain_traces"] = std::move(traces);
    ordered_json htraces = ordered_json::array();
    for (const auto& t : r.homology_traces) htraces.push_back(rational_json(t));
    out["homology_traces"] = std::move(htraces);
    out["betti_numbers"] = r.betti_numbers;

    const auto certs = fixed_point_certificates(r.pair.map);
    const auto maximal = r.pair.map.refined().maximal_simplices();
    bool hopf = true;
    ordered_json fixed = ordered_json::array();
    for (const auto& c : certs) {
        hopf = hopf && std::binary_search(maximal.begin(), maximal.end(), c.simplex);
        fixed.push_back(certificate_json(c));
    }
    ordered_json h;
    h["hopf_simplicial"] = hopf;
    h["fixed_points"] = std::move(fixed);
    out["hopf"] = std::move(h);
    return out;
}

ordered_json verdict_json(const ValuationVerdict& v) {
    ordered_json out;
    out["holds"] = v.holds;
    out["pairs_checked"] = v.pairs_checked;
    if (!v.holds) out["counterexample"] = v.describe();
    return out;
}

std::string emit_report(const LefschetzReport& r) { return dump_compact_arrays(report_json(r)) + "\n"; }

}  // namespace lefschetz

namespace lefschetz {

std::string format_json(const nlohmann::ordered_json& j) { return dump_compact_arrays(j) + "\n"; }

}  // namespace lefschetz
