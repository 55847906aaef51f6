#include "cnsf/json_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace cnsf {

namespace {

using nlohmann::json;

// JSON numbers when the value fits in 64 bits, decimal strings beyond.
json json_int(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max()) {
        return static_cast<std::int64_t>(v);
    }
    return v.str();
}

json coeff_term(const char* index_key, json index_value, const Rational& c) {
    json term;
    term[index_key] = std::move(index_value);
    term["num"] = json_int(numerator(c));
    term["den"] = json_int(denominator(c));
    return term;
}

std::vector<std::pair<int, int>> pair_list(const json& j, const char* what) {
    if (!j.is_array()) {
        throw InputError(std::string(what) + " must be an array of pairs");
    }
    std::vector<std::pair<int, int>> out;
    out.reserve(j.size());
    for (const auto& entry : j) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() ||
            !entry[1].is_number_integer()) {
            throw InputError(std::string(what) + " entries must be integer pairs");
        }
        out.emplace_back(entry[0].get<int>(), entry[1].get<int>());
    }
    return out;
}

int vertex_count_field(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer()) {
        throw InputError("expected an object with an integer \"n\" field");
    }
    return j["n"].get<int>();
}

} // namespace

nlohmann::json to_json(const Digraph& d) {
    json arcs = json::array();
    for (const auto& [u, v] : d.arcs()) {
        arcs.push_back(json::array({u, v}));
    }
    return json{{"n", d.vertex_count()}, {"arcs", std::move(arcs)}};
}

nlohmann::json to_json(const UndirectedGraph& g) {
    json edges = json::array();
    for (const auto& [u, v] : g.edges()) {
        edges.push_back(json::array({u, v}));
    }
    return json{{"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

nlohmann::json to_json(const NSymElement& e) {
    json terms = json::array();
    for (const auto& [index, c] : e.terms()) {
        terms.push_back(coeff_term("index", json(index.parts()), c));
    }
    return json{{"basis", basis_name(e.basis())}, {"terms", std::move(terms)}};
}

nlohmann::json to_json(const SymElement& e) {
    json terms = json::array();
    for (const auto& [index, c] : e.terms()) {
        terms.push_back(coeff_term("index", json(index.parts()), c));
    }
    return json{{"basis", basis_name(e.basis())}, {"terms", std::move(terms)}};
}

nlohmann::json to_json(const GeneratorPolynomial& p) {
    json terms = json::array();
    for (const auto& [word, c] : p.terms()) {
        terms.push_back(coeff_term("word", json(word), c));
    }
    return json{{"terms", std::move(terms)}};
}

Digraph digraph_from_json(const nlohmann::json& j) {
    const int n = vertex_count_field(j);
    if (!j.contains("arcs")) {
        throw InputError("digraph object is missing the \"arcs\" field");
    }
    return Digraph(n, pair_list(j["arcs"], "arcs"));
}

UndirectedGraph graph_from_json(const nlohmann::json& j) {
    const int n = vertex_count_field(j);
    if (!j.contains("edges")) {
        throw InputError("graph object is missing the \"edges\" field");
    }
    return UndirectedGraph(n, pair_list(j["edges"], "edges"));
}

namespace {

Digraph digraph_from_arc_list(const std::string& text) {
    std::vector<Arc> arcs;
    int n = 0;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream fields(line);
        int u = 0;
        int v = 0;
        if (!(fields >> u)) {
            continue; // blank or comment-only line
        }
        if (!(fields >> v)) {
            throw InputError("arc list line with a single endpoint: " + line);
        }
        int trailing = 0;
        if (fields >> trailing) {
            throw InputError("arc list line with more than two endpoints: " + line);
        }
        if (u < 0 || v < 0) {
            throw InputError("arc list endpoints must be nonnegative");
        }
        arcs.emplace_back(u, v);
        n = std::max({n, u + 1, v + 1});
    }
    return Digraph(n, std::move(arcs));
}

} // namespace

Digraph load_digraph(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open " + path.string());
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();

    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw InputError("malformed JSON in " + path.string() + ": " + e.what());
        }
        return digraph_from_json(j);
    }
    return digraph_from_arc_list(text);
}

GeneratorFamily load_family(const std::filesystem::path& dir) {
    if (!std::filesystem::is_directory(dir)) {
        throw InputError("family path is not a directory: " + dir.string());
    }
    std::vector<Digraph> members;
    for (int i = 1;; ++i) {
        const std::filesystem::path file = dir / ("D" + std::to_string(i) + ".json");
        if (!std::filesystem::exists(file)) {
            break;
        }
        members.push_back(load_digraph(file));
    }
    if (members.empty()) {
        throw InputError("family directory has no D1.json: " + dir.string());
    }
    return GeneratorFamily(std::move(members));
}

} // namespace cnsf
