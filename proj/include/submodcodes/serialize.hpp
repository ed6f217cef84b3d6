#pragma once

#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "submodcodes/codes.hpp"
#include "submodcodes/counting.hpp"
#include "submodcodes/metric.hpp"
#include "submodcodes/search.hpp"
#include "submodcodes/submodule.hpp"

namespace submod {

using nlohmann::json;

// ---- rings -----------------------------------------------------------------

inline json ring_to_json(const ChainRing& ring) {
    return json{{"kind", to_string(ring.kind())},
                {"p", ring.p()},
                {"s", ring.s()},
                {"r", ring.r()}};
}

inline RingPtr ring_from_json(const json& j) {
    return make_ring(ring_kind_from_string(j.at("kind").get<std::string>()),
                     j.at("p").get<std::uint32_t>(), j.at("s").get<std::uint32_t>(),
                     j.at("r").get<std::uint32_t>());
}

// ---- elements and submodules -------------------------------------------------

inline json element_to_json(const ChainRing& ring, Elem e) {
    if (ring.kind() == RingKind::IntegerModular) return json(e);
    return json(ring.element_to_string(e));
}

inline Elem element_from_json(const ChainRing& ring, const json& j) {
    if (j.is_number_unsigned()) {
        Elem e = j.get<Elem>();
        if (e >= ring.size()) throw ValidationError("element out of range");
        return e;
    }
    return ring.parse_element(j.get<std::string>());
}

inline json submodule_to_json(const Submodule& u) {
    json rows = json::array();
    for (const Row& row : u.rows()) {
        json jr = json::array();
        for (Elem e : row) jr.push_back(element_to_json(u.ring(), e));
        rows.push_back(std::move(jr));
    }
    return json{{"ring", ring_to_json(u.ring())}, {"d", u.ambient_rank()}, {"rows", rows}};
}

inline Submodule submodule_from_json(const json& j, const RingPtr& expected_ring = nullptr) {
    RingPtr ring = ring_from_json(j.at("ring"));
    if (expected_ring && !ring->same_spec(*expected_ring))
        throw ValidationError("submodule ring disagrees with the enclosing object");
    int d = j.at("d").get<int>();
    Mat rows;
    for (const json& jr : j.at("rows")) {
        Row row;
        for (const json& je : jr) row.push_back(element_from_json(*ring, je));
        rows.push_back(std::move(row));
    }
    return Submodule::from_generators(expected_ring ? expected_ring : ring, d, std::move(rows));
}

// ---- codes --------------------------------------------------------------------

inline json code_to_json(const Code& code) {
    json members = json::array();
    for (const HomothetyClass& c : code.members()) members.push_back(submodule_to_json(c.rep));
    json params = json::object();
    for (const auto& [k, v] : code.params()) params[k] = v;
    return json{{"ring", ring_to_json(code.ring())},
                {"d", code.ambient_rank()},
                {"construction", json{{"kind", code.construction()}, {"params", params}}},
                {"members", members},
                {"min_distance", code.min_distance()},
                {"cardinality", code.size()}};
}

inline Code code_from_json(const json& j) {
    RingPtr ring = ring_from_json(j.at("ring"));
    int d = j.at("d").get<int>();
    std::vector<HomothetyClass> members;
    for (const json& jm : j.at("members"))
        members.push_back(homothety_class(submodule_from_json(jm, ring)));
    std::string kind = "imported";
    std::map<std::string, long long> params;
    if (j.contains("construction")) {
        kind = j.at("construction").value("kind", "imported");
        if (j.at("construction").contains("params"))
            for (const auto& [k, v] : j.at("construction").at("params").items())
                params[k] = v.get<long long>();
    }
    Code code(ring, d, std::move(members), kind, std::move(params));
    if (j.contains("min_distance") && code.min_distance() != j.at("min_distance").get<int>())
        throw ValidationError("stored min_distance disagrees with the members");
    return code;
}

// ---- matrices and polynomials ---------------------------------------------------

inline json distance_matrix_to_json(const Code& code) {
    const DistanceMatrix& dm = code.distance_matrix();
    json labels = json::array();
    for (const HomothetyClass& c : code.members()) labels.push_back(c.rep.to_string());
    return json{{"labels", labels}, {"N", dm.half}, {"D", dm.full}};
}

inline std::string distance_matrix_to_csv(const DistanceMatrix& dm) {
    std::ostringstream out;
    for (const auto& row : dm.full) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out << ",";
            out << row[c];
        }
        out << "\n";
    }
    return out.str();
}

inline json polynomial_to_json(const IntPolynomial& poly) {
    json out = json::object();
    for (const auto& [deg, coeff] : poly.coefficients())
        out[std::to_string(deg)] = coeff.to_string();
    return out;
}

inline json classes_to_json(const std::vector<HomothetyClass>& classes) {
    json out = json::array();
    for (const HomothetyClass& c : classes) {
        json item = submodule_to_json(c.rep);
        item["class_size"] = c.size;
        out.push_back(std::move(item));
    }
    return out;
}

inline json cert_record_to_json(const CertRecord& rec) {
    return json{{"params",
                 json{{"kind", to_string(rec.point.kind)},
                      {"p", rec.point.p},
                      {"s", rec.point.s},
                      {"r", rec.point.r},
                      {"d", rec.point.d},
                      {"alpha", rec.point.alpha}}},
                {"check", rec.check},
                {"expected", rec.expected},
                {"found", rec.found},
                {"status", rec.status},
                {"bound_is_tight", rec.bound_is_tight},
                {"note", rec.note}};
}

// ---- graph export -----------------------------------------------------------------

/// DOT rendering of the homothety-class graph: vertices are classes, with an
/// edge when one saturation sits strictly between the other and π times it.
/// For d = 2 this is the radius-r ball of the (q+1)-regular tree. Ranks
/// above 2 must opt into the one-apartment (diagonal classes only) view.
inline std::string export_dot(const RingPtr& ring, int d, bool diagonal_only,
                              const std::set<Submodule>& highlight = {},
                              std::uint64_t budget = kDefaultEnumBudget) {
    if (d != 2 && !diagonal_only)
        throw ValidationError("full class graph is rendered only for d = 2; "
                              "use the diagonal-only view otherwise");
    const int r = static_cast<int>(ring->r());
    std::vector<HomothetyClass> classes;
    std::vector<std::string> labels;
    if (diagonal_only) {
        for (const std::vector<int>& delta : pyrope_integral_points(d, r)) {
            classes.push_back(homothety_class(Submodule::diagonal(ring, delta)));
            std::string lab;
            for (std::size_t i = 0; i < delta.size(); ++i)
                lab += (i ? "," : "(") + std::to_string(delta[i]);
            labels.push_back(lab + ")");
        }
    } else {
        for (HomothetyClass& c : enumerate_classes(ring, d, budget)) {
            labels.push_back(c.rep.to_string());
            classes.push_back(std::move(c));
        }
    }
    std::ostringstream out;
    out << "graph classes {\n  node [shape=circle];\n";
    for (std::size_t i = 0; i < classes.size(); ++i) {
        out << "  v" << i << " [label=\"" << labels[i] << "\"";
        if (highlight.count(classes[i].rep))
            out << ", style=filled, fillcolor=lightblue";
        out << "];\n";
    }
    for (std::size_t i = 0; i < classes.size(); ++i) {
        const Submodule& a = classes[i].rep;
        Submodule pa = scale_pi(a, 1);
        for (std::size_t j = i + 1; j < classes.size(); ++j) {
            const Submodule& b = classes[j].rep;
            bool down = is_subset(pa, b) && !(pa == b) && is_subset(b, a) && !(b == a);
            Submodule pb = scale_pi(b, 1);
            bool up = is_subset(pb, a) && !(pb == a) && is_subset(a, b) && !(a == b);
            if (down || up) out << "  v" << i << " -- v" << j << ";\n";
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace submod
