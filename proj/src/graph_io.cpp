#include "boundary/graph_io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace boundary {

Graph parse_edge_list(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed edge-list document: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges"))
        throw ParseError("edge-list document must be an object with \"n\" and \"edges\"");
    if (!doc["n"].is_number_integer() || doc["n"].get<long long>() < 0)
        throw ParseError("\"n\" must be a non-negative integer");
    const long long n = doc["n"].get<long long>();
    if (n > kMaxVertices)
        throw ParseError("declared order exceeds the vertex cap of " +
                         std::to_string(kMaxVertices));
    if (!doc["edges"].is_array()) throw ParseError("\"edges\" must be an array of pairs");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : doc["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw ParseError("each edge must be a pair of integers");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    try {
        return Graph::from_edges(static_cast<int>(n), edges);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

std::string emit_edge_list(const Graph& g) {
    nlohmann::ordered_json doc;
    doc["n"] = g.order();
    doc["edges"] = nlohmann::ordered_json::array();
    for (auto [u, v] : g.edges()) doc["edges"].push_back({u, v});
    return doc.dump();
}

namespace {

constexpr char kGraph6Header[] = ">>graph6<<";

bool valid_graph6_byte(unsigned char c) { return c >= 63 && c <= 126; }

}  // namespace

Graph parse_graph6(const std::string& text) {
    std::string s = text;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    if (s.rfind(kGraph6Header, 0) == 0) s.erase(0, sizeof(kGraph6Header) - 1);
    if (s.empty()) throw ParseError("empty graph6 string");

    std::size_t pos = 0;
    long long n;
    unsigned char first = static_cast<unsigned char>(s[pos]);
    if (!valid_graph6_byte(first)) throw ParseError("invalid graph6 size byte");
    if (first < 126) {
        n = first - 63;
        ++pos;
    } else {
        ++pos;
        int size_bytes = 3;
        if (pos < s.size() && static_cast<unsigned char>(s[pos]) == 126) {
            ++pos;
            size_bytes = 6;
        }
        if (pos + static_cast<std::size_t>(size_bytes) > s.size())
            throw ParseError("truncated graph6 size field");
        n = 0;
        for (int k = 0; k < size_bytes; ++k) {
            unsigned char c = static_cast<unsigned char>(s[pos++]);
            if (!valid_graph6_byte(c)) throw ParseError("invalid character in graph6 size field");
            n = (n << 6) | (c - 63);
        }
    }
    if (n > kMaxVertices)
        throw ParseError("graph6 order " + std::to_string(n) + " exceeds the vertex cap of " +
                         std::to_string(kMaxVertices));

    const long long bit_count = n * (n - 1) / 2;
    const std::size_t byte_count = static_cast<std::size_t>((bit_count + 5) / 6);
    if (s.size() - pos < byte_count) throw ParseError("truncated graph6 bit field");
    if (s.size() - pos > byte_count) throw ParseError("trailing bytes after graph6 bit field");

    std::vector<std::pair<int, int>> edges;
    long long bit = 0;
    for (std::size_t k = 0; k < byte_count; ++k) {
        unsigned char c = static_cast<unsigned char>(s[pos + k]);
        if (!valid_graph6_byte(c)) throw ParseError("invalid character in graph6 bit field");
        unsigned value = c - 63u;
        for (int b = 5; b >= 0 && bit < bit_count; --b, ++bit) {
            if ((value >> b) & 1u) {
                // bits run column-wise over the upper triangle:
                // (0,1), (0,2), (1,2), (0,3), ...
                long long r = bit;
                int col = 1;
                while (r >= col) r -= col++;
                edges.emplace_back(static_cast<int>(r), col);
            }
        }
    }
    return Graph::from_edges(static_cast<int>(n), edges);
}

std::string emit_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    unsigned value = 0;
    int filled = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row) {
            value = (value << 1) | (g.has_edge(row, col) ? 1u : 0u);
            if (++filled == 6) {
                out.push_back(static_cast<char>(value + 63));
                value = 0;
                filled = 0;
            }
        }
    if (filled > 0) out.push_back(static_cast<char>((value << (6 - filled)) + 63));
    return out;
}

Graph parse_graph_auto(const std::string& text) {
    std::size_t k = text.find_first_not_of(" \t\r\n");
    if (k != std::string::npos && text[k] == '{') return parse_edge_list(text);
    return parse_graph6(text);
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0)
        return parse_edge_list(text);
    if (path.size() >= 3 && path.compare(path.size() - 3, 3, ".g6") == 0)
        return parse_graph6(text);
    return parse_graph_auto(text);
}

}  // namespace boundary
