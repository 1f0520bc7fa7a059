#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "cotan/complex.hpp"

namespace cotan {

class InputFormatError : public std::runtime_error {
  public:
    explicit InputFormatError(const std::string& what) : std::runtime_error(what) {}
};

// Accepted shape: {"n": <int>, "facets": [[<int>...], ...]}.
// "facets": []  -> the void complex; "facets": [[]] -> the complex whose only
// face is the empty set. Non-maximal entries are absorbed silently.
inline SimplicialComplex complex_from_json(const nlohmann::json& j) {
    if (!j.is_object())
        throw InputFormatError("top-level value must be an object");
    if (!j.contains("n"))
        throw InputFormatError("missing required key \"n\"");
    if (!j.contains("facets"))
        throw InputFormatError("missing required key \"facets\"");
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (it.key() != "n" && it.key() != "facets")
            throw InputFormatError("unknown key \"" + it.key() + "\"");
    }

    const auto& jn = j.at("n");
    if (!jn.is_number_integer())
        throw InputFormatError("\"n\" must be an integer");
    long long n = jn.get<long long>();
    constexpr long long max_ground = 63;
    if (n < 0 || n > max_ground)
        throw InputFormatError("\"n\" must be between 0 and " + std::to_string(max_ground));

    const auto& jf = j.at("facets");
    if (!jf.is_array())
        throw InputFormatError("\"facets\" must be an array of arrays");

    std::vector<VertexSet> facets;
    facets.reserve(jf.size());
    for (std::size_t i = 0; i < jf.size(); ++i) {
        const auto& entry = jf[i];
        if (!entry.is_array())
            throw InputFormatError("facet " + std::to_string(i) + " is not an array");
        VertexSet f;
        for (const auto& jv : entry) {
            if (!jv.is_number_integer())
                throw InputFormatError("facet " + std::to_string(i) +
                                       " contains a non-integer vertex");
            long long v = jv.get<long long>();
            if (v < 0 || v >= n)
                throw InputFormatError("facet " + std::to_string(i) + ": vertex " +
                                       std::to_string(v) + " is out of range [0, " +
                                       std::to_string(n) + ")");
            if (f.contains(static_cast<int>(v)))
                throw InputFormatError("facet " + std::to_string(i) + ": vertex " +
                                       std::to_string(v) + " repeated");
            f = f.with(static_cast<int>(v));
        }
        facets.push_back(f);
    }

    if (facets.empty())
        return SimplicialComplex::void_complex(static_cast<int>(n));
    return SimplicialComplex::from_facets(static_cast<int>(n), facets);
}

inline SimplicialComplex complex_from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputFormatError(std::string("JSON parse error: ") + e.what());
    }
    return complex_from_json(j);
}

inline nlohmann::json complex_to_json(const SimplicialComplex& c) {
    nlohmann::json facets = nlohmann::json::array();
    for (VertexSet f : c.facets()) {
        nlohmann::json arr = nlohmann::json::array();
        for (int v : f) arr.push_back(v);
        facets.push_back(std::move(arr));
    }
    nlohmann::json j;
    j["n"] = c.n();
    j["facets"] = std::move(facets);
    return j;
}

}  // namespace cotan
