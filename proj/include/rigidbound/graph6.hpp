#ifndef RIGIDBOUND_GRAPH6_HPP
#define RIGIDBOUND_GRAPH6_HPP

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rigidbound/graph.hpp"

namespace rigidbound {

// graph6: one ASCII line per graph. First byte n+63 (n <= 62 here, and
// <= 16 for this library), then the upper triangle packed column by
// column -- bit order (0,1),(0,2),(1,2),(0,3),... -- six bits per byte,
// each byte offset by 63.

inline std::string graph6_encode(const Graph& g) {
    int n = g.vertex_count();
    std::string out;
    out.push_back(char(n + 63));
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(char(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(char((acc << (6 - nbits)) + 63));
    return out;
}

inline Graph graph6_decode(const std::string& line) {
    if (line.empty()) throw std::invalid_argument("graph6: empty line");
    int n = int(line[0]) - 63;
    if (n < 0 || n > 62)
        throw std::invalid_argument("graph6: unsupported vertex count byte");
    if (n > kMaxVertices)
        throw std::invalid_argument("graph6: vertex count exceeds 16");
    int need = (n * (n - 1) / 2 + 5) / 6;
    if (int(line.size()) != 1 + need)
        throw std::invalid_argument("graph6: bad line length");
    Graph g(n);
    int bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            int byte = int(line[size_t(1 + bit / 6)]) - 63;
            if (byte < 0 || byte > 63) throw std::invalid_argument("graph6: bad byte");
            if ((byte >> (5 - bit % 6)) & 1) g.add_edge(i, j);
            ++bit;
        }
    }
    return g;
}

inline std::vector<Graph> graph6_read(std::istream& in) {
    std::vector<Graph> gs;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (line.empty()) continue;
        gs.push_back(graph6_decode(line));
    }
    return gs;
}

inline std::vector<Graph> graph6_read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return graph6_read(in);
}

inline void graph6_write(std::ostream& out, const std::vector<Graph>& gs) {
    for (const Graph& g : gs) out << graph6_encode(g) << '\n';
}

}  // namespace rigidbound

#endif
