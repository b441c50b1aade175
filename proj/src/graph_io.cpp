#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "sep/errors.hpp"
#include "sep/graph.hpp"

namespace sep {

namespace {

Graph assemble(int max_label, std::optional<int> declared_n, std::vector<Edge> edges, bool strict) {
    int n = declared_n.value_or(max_label);
    if (max_label > n)
        throw ParseError("vertex " + std::to_string(max_label) + " exceeds declared n = " + std::to_string(n));
    try {
        return strict ? Graph(n, std::move(edges)) : Graph::with_dedup(n, std::move(edges));
    } catch (const PreconditionError& e) {
        throw ParseError(e.what());
    }
}

int parse_label(const std::string& tok, int line_no) {
    std::size_t used = 0;
    long value = 0;
    try {
        value = std::stol(tok, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != tok.size()) throw ParseError("line " + std::to_string(line_no) + ": '" + tok + "' is not an integer");
    if (value < 1) throw ParseError("line " + std::to_string(line_no) + ": vertex label " + tok + " < 1");
    if (value > 1'000'000) throw ParseError("line " + std::to_string(line_no) + ": vertex label " + tok + " too large");
    return static_cast<int>(value);
}

} // namespace

Graph parse_edge_list(const std::string& text, bool strict, std::optional<int> declared_n) {
    std::istringstream in(text);
    std::string line;
    std::vector<Edge> edges;
    int max_label = 0, line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream fields(line);
        std::vector<std::string> toks;
        for (std::string t; fields >> t;) toks.push_back(t);
        if (toks.size() == 2 && toks[0] == "n") {
            if (!edges.empty() || declared_n)
                throw ParseError("line " + std::to_string(line_no) + ": 'n' header must come first and only once");
            std::size_t used = 0;
            int n = -1;
            try {
                n = std::stoi(toks[1], &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != toks[1].size() || n < 0) throw ParseError("line " + std::to_string(line_no) + ": bad vertex count");
            declared_n = n;
            continue;
        }
        if (toks.size() != 2) throw ParseError("line " + std::to_string(line_no) + ": expected two vertex labels");
        int u = parse_label(toks[0], line_no), v = parse_label(toks[1], line_no);
        if (u == v) throw ParseError("line " + std::to_string(line_no) + ": self-loop at vertex " + toks[0]);
        max_label = std::max({max_label, u, v});
        edges.emplace_back(u, v);
    }
    return assemble(max_label, declared_n, std::move(edges), strict);
}

Graph parse_graph_json(const std::string& text, bool strict) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid graph document: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("edges") || !doc["edges"].is_array())
        throw ParseError("graph document needs an \"edges\" array");
    std::optional<int> declared_n;
    if (doc.contains("n")) {
        if (!doc["n"].is_number_integer() || doc["n"].get<long>() < 0) throw ParseError("\"n\" must be a nonnegative integer");
        declared_n = doc["n"].get<int>();
    }
    std::vector<Edge> edges;
    int max_label = 0;
    for (const auto& e : doc["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw ParseError("each edge must be a pair of integers");
        int u = e[0].get<int>(), v = e[1].get<int>();
        if (u < 1 || v < 1) throw ParseError("vertex labels must be >= 1");
        if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u));
        max_label = std::max({max_label, u, v});
        edges.emplace_back(u, v);
    }
    return assemble(max_label, declared_n, std::move(edges), strict);
}

Graph parse_graph(const std::string& text, bool strict) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return parse_graph_json(text, strict);
    return parse_edge_list(text, strict);
}

Graph read_graph_file(const std::string& path, bool strict) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str(), strict);
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.order() << "\n";
    for (const auto& e : g.edges()) out << e.u << " " << e.v << "\n";
    return out.str();
}

} // namespace sep
