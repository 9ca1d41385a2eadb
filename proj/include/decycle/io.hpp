#pragma once

// Graph text format:
//   p <vertex_count> <edge_count>
//   e <u> <v>          (one line per edge, 0-indexed)
// plus a structured JSON export carrying the same data and vertex labels.
// Round-trips are bit-exact.

#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "decycle/graph.hpp"

namespace decycle {

inline void write_text(const Graph& g, std::ostream& out) {
    out << "p " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (const Edge& e : g.edges()) out << "e " << e.u << " " << e.v << "\n";
}

inline std::string to_text(const Graph& g) {
    std::ostringstream out;
    write_text(g, out);
    return out.str();
}

inline Graph read_text(std::istream& in) {
    std::string line;
    int n = -1, m = -1;
    Graph g;
    int seen = 0;
    while (std::getline(in, line)) {
        std::istringstream fields(line);
        std::string tag;
        if (!(fields >> tag) || tag[0] == 'c') continue;  // blank or comment
        if (tag == "p") {
            if (n >= 0 || !(fields >> n >> m) || n < 0 || m < 0)
                throw std::invalid_argument("malformed graph header");
            g = Graph(n);
        } else if (tag == "e") {
            int u, v;
            if (n < 0 || !(fields >> u >> v))
                throw std::invalid_argument("malformed edge line");
            g.add_edge(u, v);
            seen++;
        } else {
            throw std::invalid_argument("unrecognized line: " + line);
        }
    }
    if (n < 0) throw std::invalid_argument("missing graph header");
    if (seen != m) throw std::invalid_argument("edge count does not match header");
    return g;
}

inline Graph parse_text(const std::string& text) {
    std::istringstream in(text);
    return read_text(in);
}

inline nlohmann::json to_json(const Graph& g) {
    nlohmann::json j;
    j["vertex_count"] = g.vertex_count();
    j["edges"] = nlohmann::json::array();
    for (const Edge& e : g.edges()) j["edges"].push_back({e.u, e.v});
    nlohmann::json labels = nlohmann::json::object();
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.has_label(v)) labels[std::to_string(v)] = g.label(v);
    j["labels"] = labels;
    return j;
}

inline Graph from_json(const nlohmann::json& j) {
    Graph g(j.at("vertex_count").get<int>());
    for (const auto& e : j.at("edges")) g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
    if (j.contains("labels"))
        for (const auto& [key, value] : j.at("labels").items())
            g.set_label(std::stoi(key), value.get<std::string>());
    return g;
}

}  // namespace decycle
