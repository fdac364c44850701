#include "tpk/graph6.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "tpk/errors.hpp"

namespace tpk {

namespace {
constexpr uint32_t kMaxGraph6Order = 258047;  // '~' + 3 chars covers up to this
}

std::string encode_graph6(const Graph& g) {
    const uint32_t n = g.order();
    std::string out;
    if (n < 63) {
        out.push_back((char)(63 + n));
    } else {
        if (n > kMaxGraph6Order)
            throw capability_error("graph6 order " + std::to_string(n) + " not supported");
        out.push_back('~');
        out.push_back((char)(63 + ((n >> 12) & 63)));
        out.push_back((char)(63 + ((n >> 6) & 63)));
        out.push_back((char)(63 + (n & 63)));
    }
    uint32_t acc = 0, nbits = 0;
    for (uint32_t j = 1; j < n; ++j)
        for (uint32_t i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1u : 0u);
            if (++nbits == 6) {
                out.push_back((char)(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits) out.push_back((char)(63 + (acc << (6 - nbits))));
    return out;
}

Graph decode_graph6(const std::string& raw) {
    std::string line = raw;
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r' || line.back() == ' '))
        line.pop_back();
    size_t pos = 0;
    auto need = [&](size_t k) {
        if (pos + k > line.size())
            throw parse_error("truncated graph6 line", line.size());
    };
    auto sixbits = [&]() -> uint32_t {
        unsigned char c = (unsigned char)line[pos];
        if (c < 63 || c > 126)
            throw parse_error("invalid graph6 character", pos);
        ++pos;
        return c - 63;
    };
    need(1);
    uint32_t n;
    if (line[pos] == '~') {
        ++pos;
        need(1);
        if (line[pos] == '~') throw parse_error("graph6 orders above 258047 not supported", pos);
        need(3);
        uint32_t a = sixbits(), b = sixbits(), c = sixbits();
        n = (a << 12) | (b << 6) | c;
    } else {
        n = sixbits();
    }
    if (n > Graph::kMaxVertices)
        throw capability_error("decoded graph order " + std::to_string(n) +
                               " exceeds capacity " + std::to_string(Graph::kMaxVertices));
    const uint64_t bits = (uint64_t)n * (n - (n ? 1 : 0)) / 2;
    const uint64_t payload = (bits + 5) / 6;
    if (line.size() - pos < payload) throw parse_error("truncated graph6 payload", line.size());
    if (line.size() - pos > payload) throw parse_error("trailing bytes after graph6 payload", pos + payload);
    std::vector<Edge> edges;
    uint32_t acc = 0, nbits = 0;
    for (uint32_t j = 1; j < n; ++j)
        for (uint32_t i = 0; i < j; ++i) {
            if (nbits == 0) {
                acc = sixbits();
                nbits = 6;
            }
            if ((acc >> (nbits - 1)) & 1) edges.emplace_back(i, j);
            --nbits;
        }
    return Graph::from_edges(n, edges);
}

Graph read_edge_list(std::istream& in) {
    std::vector<Edge> edges;
    uint32_t n = 0;
    bool n_pinned = false;
    std::string line;
    size_t offset = 0, lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string body = line;
        if (auto hash = body.find('#'); hash != std::string::npos) {
            // "# n=N" pins the vertex count
            auto eq = body.find("n=", hash);
            if (eq != std::string::npos) {
                uint32_t val = 0;
                size_t p = eq + 2;
                bool any = false;
                while (p < body.size() && isdigit((unsigned char)body[p])) {
                    val = val * 10 + (body[p++] - '0');
                    any = true;
                }
                if (any) {
                    n = std::max(n, val);
                    n_pinned = true;
                }
            }
            body = body.substr(0, hash);
        }
        std::istringstream ls(body);
        long long u, v;
        if (ls >> u) {
            if (!(ls >> v))
                throw parse_error("edge line " + std::to_string(lineno) + " has a lone endpoint",
                                  offset);
            if (u < 0 || v < 0)
                throw parse_error("negative vertex on line " + std::to_string(lineno), offset);
            edges.emplace_back((uint32_t)u, (uint32_t)v);
            n = std::max(n, (uint32_t)std::max(u, v) + 1);
        }
        offset += line.size() + 1;
    }
    if (edges.empty() && !n_pinned)
        throw parse_error("edge list has no edges and no '# n=N' header", 0);
    return Graph::from_edges(n, edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << "# n=" << g.order() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    if (path.size() >= 3 && path.compare(path.size() - 3, 3, ".g6") == 0) {
        std::string line;
        if (!std::getline(in, line)) throw parse_error("empty graph6 file: " + path, 0);
        return decode_graph6(line);
    }
    return read_edge_list(in);
}

}  // namespace tpk
