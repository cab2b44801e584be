#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "int_poly.hpp"
#include "mobile.hpp"
#include "posets.hpp"
#include "shapes.hpp"

namespace mobilex {

using json = nlohmann::json;

/// Raised for structurally invalid input documents. JSON syntax errors are
/// reported by nlohmann's own parse_error.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Coefficients serialize as decimal strings, lowest degree first; magnitudes
// exceed 2^53 so numbers are never used.
inline json poly_to_json(const int_poly& p) {
    json a = json::array();
    for (int k = 0; k <= p.degree(); ++k) a.push_back(p.coeff(k).str());
    return a;
}

inline int_poly poly_from_json(const json& a) {
    if (!a.is_array()) throw input_error("polynomial: expected an array of coefficient strings");
    std::vector<Int> coeffs;
    for (const auto& c : a) {
        if (c.is_string())
            coeffs.emplace_back(c.get<std::string>());
        else if (c.is_number_integer())
            coeffs.emplace_back(c.get<long long>());
        else
            throw input_error("polynomial: coefficients must be decimal strings");
    }
    return int_poly{std::move(coeffs)};
}

inline json partition_to_json(const partition& p) {
    json a = json::array();
    for (int x : p.parts()) a.push_back(x);
    return a;
}

inline partition partition_from_json(const json& a) {
    if (!a.is_array()) throw input_error("partition: expected an array of integers");
    std::vector<int> parts;
    for (const auto& x : a) {
        if (!x.is_number_integer()) throw input_error("partition: parts must be integers");
        parts.push_back(x.get<int>());
    }
    try {
        return partition{std::move(parts)};
    } catch (const std::invalid_argument& e) {
        throw input_error(std::string("partition: ") + e.what());
    }
}

inline json skew_to_json(const skew_shape& s) {
    return json{{"lambda", partition_to_json(s.outer())}, {"mu", partition_to_json(s.inner())}};
}

inline skew_shape skew_from_json(const json& j) {
    if (!j.is_object() || !j.contains("lambda")) throw input_error("skew shape: expected {\"lambda\": [...], \"mu\": [...]}");
    partition lam = partition_from_json(j.at("lambda"));
    partition mu = j.contains("mu") ? partition_from_json(j.at("mu")) : partition{};
    try {
        return skew_shape{std::move(lam), std::move(mu)};
    } catch (const std::invalid_argument& e) {
        throw input_error(std::string("skew shape: ") + e.what());
    }
}

// Tree hangings list each node's parent as a 1-based index, 0 marking the
// root: {"at":[4,1],"kind":"tree","parents":[0,1,1]} is a root with two
// children.
inline json hanging_to_json(cell at, const hanging_poset& h) {
    json j;
    j["at"] = json::array({at.row, at.col});
    if (h.is_tree()) {
        j["kind"] = "tree";
        json parents = json::array();
        for (int p : h.tree_parent()) parents.push_back(p + 1);
        j["parents"] = parents;
    } else {
        j["kind"] = "shape";
        j["shape"] = partition_to_json(h.shape_partition());
    }
    return j;
}

inline hanging_poset hanging_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind")) throw input_error("hanging: expected an object with \"kind\"");
    const std::string kind = j.at("kind").get<std::string>();
    try {
        if (kind == "tree") {
            if (!j.contains("parents") || !j.at("parents").is_array())
                throw input_error("hanging: tree needs a \"parents\" array");
            std::vector<int> parent;
            for (const auto& p : j.at("parents")) parent.push_back(p.get<int>() - 1);
            return hanging_poset::tree(std::move(parent));
        }
        if (kind == "shape") {
            if (!j.contains("shape")) throw input_error("hanging: shape needs a \"shape\" partition");
            return hanging_poset::shape(partition_from_json(j.at("shape")));
        }
    } catch (const std::invalid_argument& e) {
        throw input_error(std::string("hanging: ") + e.what());
    }
    throw input_error("hanging: kind must be \"tree\" or \"shape\"");
}

inline json mobile_to_json(const mobile_poset& m) {
    json j = skew_to_json(m.strip());
    json hs = json::array();
    for (const auto& [at, list] : m.hangings())
        for (const auto& h : list) hs.push_back(hanging_to_json(at, h));
    j["hangings"] = hs;
    return j;
}

inline mobile_poset mobile_from_json(const json& j) {
    skew_shape strip = skew_from_json(j);
    if (!strip.is_border_strip()) throw input_error("mobile: lambda/mu is not a border strip");
    std::map<cell, std::vector<hanging_poset>> hangings;
    if (j.contains("hangings")) {
        if (!j.at("hangings").is_array()) throw input_error("mobile: \"hangings\" must be an array");
        for (const auto& hj : j.at("hangings")) {
            if (!hj.contains("at") || !hj.at("at").is_array() || hj.at("at").size() != 2)
                throw input_error("mobile: each hanging needs \"at\": [row, col]");
            cell at{hj.at("at")[0].get<int>(), hj.at("at")[1].get<int>()};
            hangings[at].push_back(hanging_from_json(hj));
        }
    }
    try {
        return mobile_poset{std::move(strip), std::move(hangings)};
    } catch (const std::invalid_argument& e) {
        throw input_error(std::string("mobile: ") + e.what());
    }
}

// Raw labeled poset: {"n": 3, "covers": [[1,2],[1,3]], "omega": [2,1,3]},
// elements and labels 1-based, [a,b] meaning a is below b.
inline labeled_poset labeled_poset_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n")) throw input_error("poset: expected {\"n\", \"covers\", \"omega\"}");
    const int n = j.at("n").get<int>();
    if (n < 0 || n > oracle_max_elements) throw input_error("poset: n out of the supported range 0..18");
    std::vector<std::pair<int, int>> covers;
    if (j.contains("covers"))
        for (const auto& c : j.at("covers")) {
            if (!c.is_array() || c.size() != 2) throw input_error("poset: covers must be [a, b] pairs");
            covers.emplace_back(c[0].get<int>() - 1, c[1].get<int>() - 1);
        }
    std::vector<int> omega;
    if (j.contains("omega"))
        for (const auto& x : j.at("omega")) omega.push_back(x.get<int>());
    else {
        omega.resize(static_cast<std::size_t>(n));
        std::iota(omega.begin(), omega.end(), 1);
    }
    try {
        return labeled_poset(poset(n, covers), std::move(omega));
    } catch (const std::invalid_argument& e) {
        throw input_error(std::string("poset: ") + e.what());
    }
}

inline json labeled_poset_to_json(const labeled_poset& lp) {
    json j;
    j["n"] = lp.size();
    json covers = json::array();
    for (auto [a, b] : lp.p.covers()) covers.push_back(json::array({a + 1, b + 1}));
    j["covers"] = covers;
    j["omega"] = lp.omega;
    return j;
}

}  // namespace mobilex
