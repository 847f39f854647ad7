#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "sgraph/signed_graph.hpp"

namespace sgraph {

/// A graph document failed validation; the message names the offending
/// part.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Canonical JSON document: {"order":n,"edges":[[u,v,sign],...]} with
/// u < v, edges sorted lexicographically, sign in {1,-1}. Equal graphs
/// serialize to identical bytes.
inline std::string to_json(const SignedGraph& g) {
    nlohmann::ordered_json doc;
    doc["order"] = g.order();
    nlohmann::ordered_json edges = nlohmann::ordered_json::array();
    for (const auto& [key, sign] : g.edges())
        edges.push_back({key.first, key.second, sign_value(sign)});
    doc["edges"] = std::move(edges);
    return doc.dump();
}

namespace detail {

inline std::string edge_label(const nlohmann::json& edge) {
    return "edge " + edge.dump();
}

}  // namespace detail

/// Parses the canonical JSON document back into a graph. Rejects loops,
/// duplicate pairs, reversed or out-of-range endpoints, and signs outside
/// {1,-1}; every rejection names the offending edge.
inline SignedGraph from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("order") || !doc.contains("edges"))
        throw ParseError("document must be an object with \"order\" and \"edges\"");
    if (!doc["order"].is_number_integer() || doc["order"].get<long long>() < 0)
        throw ParseError("\"order\" must be a non-negative integer");
    if (!doc["edges"].is_array()) throw ParseError("\"edges\" must be an array");

    const int order = doc["order"].get<int>();
    SignedGraph g(order);
    for (const nlohmann::json& edge : doc["edges"]) {
        if (!edge.is_array() || edge.size() != 3 || !edge[0].is_number_integer() ||
            !edge[1].is_number_integer() || !edge[2].is_number_integer())
            throw ParseError(detail::edge_label(edge) + ": expected [u, v, sign] integers");
        const long long u = edge[0].get<long long>();
        const long long v = edge[1].get<long long>();
        const long long sign = edge[2].get<long long>();
        if (u == v) throw ParseError(detail::edge_label(edge) + ": loop");
        if (u > v)
            throw ParseError(detail::edge_label(edge) + ": endpoints must satisfy u < v");
        if (u < 0 || v >= order)
            throw ParseError(detail::edge_label(edge) + ": vertex index out of range for order " +
                             std::to_string(order));
        if (sign != 1 && sign != -1)
            throw ParseError(detail::edge_label(edge) + ": sign must be 1 or -1");
        if (g.has_edge(static_cast<int>(u), static_cast<int>(v)))
            throw ParseError(detail::edge_label(edge) + ": duplicate pair");
        g.add_edge(static_cast<int>(u), static_cast<int>(v), sign_from_value(static_cast<int>(sign)));
    }
    return g;
}

/// Undirected DOT rendering: vertices v0..v_{order-1}, positive edges solid
/// and labeled "+", negative edges dashed and labeled "−", edges in
/// canonical order.
inline std::string to_dot(const SignedGraph& g) {
    std::string out = "graph G {\n";
    for (int v = 0; v < g.order(); ++v) out += "  v" + std::to_string(v) + ";\n";
    for (const auto& [key, sign] : g.edges()) {
        out += "  v" + std::to_string(key.first) + " -- v" + std::to_string(key.second);
        out += sign == Sign::positive ? " [style=solid, label=\"+\"];\n"
                                      : " [style=dashed, label=\"−\"];\n";
    }
    out += "}\n";
    return out;
}

}  // namespace sgraph
