#include "mars/edge_list.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <unordered_map>

namespace mars {

namespace {

struct RawEdge {
    std::string a, b;
    std::size_t line;
};

std::optional<std::uint64_t> parse_index(std::string_view token) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) return std::nullopt;
    return value;
}

}  // namespace

Graph read_edge_list(std::istream& in, BuildNotes* notes) {
    std::optional<std::size_t> declared_n;
    std::vector<RawEdge> raw;
    bool all_numeric = true;
    bool seen_content = false;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream fields(line);
        std::string first, second, extra;
        if (!(fields >> first)) continue;
        if (first.front() == '#') continue;
        if (!(fields >> second)) throw ParseError(line_no, "expected two tokens, found one");
        if (fields >> extra) throw ParseError(line_no, "unexpected trailing token '" + extra + "'");

        if (!seen_content && first == "n") {
            auto count = parse_index(second);
            if (!count) throw ParseError(line_no, "bad vertex count '" + second + "'");
            declared_n = std::size_t(*count);
            seen_content = true;
            continue;
        }
        seen_content = true;
        if (!parse_index(first) || !parse_index(second)) all_numeric = false;
        raw.push_back({std::move(first), std::move(second), line_no});
    }

    std::vector<Edge> edges;
    edges.reserve(raw.size());
    std::vector<std::string> labels;
    std::size_t n = 0;

    if (all_numeric) {
        std::uint64_t max_index = 0;
        for (const auto& e : raw) {
            std::uint64_t u = *parse_index(e.a), v = *parse_index(e.b);
            if (u == v) throw SelfLoopError(Vertex(u), e.line);
            if (declared_n && (u >= *declared_n || v >= *declared_n))
                throw IndexOutOfRangeError(Vertex(std::max(u, v)), *declared_n, e.line);
            if (std::max(u, v) > 0xFFFFu) throw ParseError(e.line, "vertex index too large");
            max_index = std::max({max_index, u, v});
            edges.emplace_back(Vertex(u), Vertex(v));
        }
        n = declared_n ? *declared_n : (raw.empty() ? 0 : std::size_t(max_index) + 1);
    } else {
        std::unordered_map<std::string, Vertex> index;
        auto intern = [&](const std::string& label) {
            auto [it, inserted] = index.try_emplace(label, Vertex(labels.size()));
            if (inserted) labels.push_back(label);
            return it->second;
        };
        for (const auto& e : raw) {
            if (e.a == e.b) throw SelfLoopError(intern(e.a), e.line);
            const Vertex u = intern(e.a);
            edges.emplace_back(u, intern(e.b));
        }
        n = labels.size();
        if (declared_n && *declared_n != n)
            throw GraphError("header declares n=" + std::to_string(*declared_n) + " but " +
                             std::to_string(n) + " labels were read");
    }

    Graph g = Graph::build(n, edges, notes);
    if (!labels.empty()) g.set_labels(std::move(labels));
    return g;
}

Graph read_edge_list(std::string_view text, BuildNotes* notes) {
    std::istringstream in{std::string(text)};
    return read_edge_list(in, notes);
}

Graph read_edge_list_file(const std::string& path, BuildNotes* notes) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw GraphError("cannot open '" + path + "'");
    return read_edge_list(in, notes);
}

std::string write_edge_list(const Graph& g) {
    std::string out = "n " + std::to_string(g.order()) + "\n";
    for (auto [u, v] : g.edges()) {
        out += std::to_string(u);
        out += ' ';
        out += std::to_string(v);
        out += '\n';
    }
    return out;
}

void write_edge_list_file(const Graph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw GraphError("cannot write '" + path + "'");
    out << write_edge_list(g);
    if (!out) throw GraphError("write failed for '" + path + "'");
}

}  // namespace mars
