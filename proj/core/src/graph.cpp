#include "lapbound/graph.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <sstream>

#include "lapbound/rng.hpp"

namespace lapbound {

VertexSubset::VertexSubset(std::vector<int> m) : members(std::move(m)) {
    std::sort(members.begin(), members.end());
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (members[i] < 0)
            throw std::invalid_argument("vertex subset: negative vertex index");
        if (i > 0 && members[i] == members[i - 1])
            throw std::invalid_argument("vertex subset: duplicate vertex " + std::to_string(members[i]));
    }
}

VertexSubset VertexSubset::of(std::initializer_list<int> m) {
    return VertexSubset(std::vector<int>(m));
}

VertexSubset VertexSubset::full(int n) {
    std::vector<int> m(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)] = i;
    VertexSubset s;
    s.members = std::move(m);
    return s;
}

VertexSubset VertexSubset::from_mask(std::uint64_t mask, int n) {
    VertexSubset s;
    for (int v = 0; v < n; ++v)
        if (mask & (std::uint64_t{1} << v)) s.members.push_back(v);
    return s;
}

bool VertexSubset::contains(int v) const {
    return std::binary_search(members.begin(), members.end(), v);
}

VertexSubset VertexSubset::complement(int n) const {
    VertexSubset s;
    std::size_t k = 0;
    for (int v = 0; v < n; ++v) {
        if (k < members.size() && members[k] == v) {
            ++k;
        } else {
            s.members.push_back(v);
        }
    }
    return s;
}

std::uint64_t VertexSubset::mask64() const {
    std::uint64_t m = 0;
    for (int v : members) {
        if (v >= 64) throw std::invalid_argument("mask64: vertex index >= 64");
        m |= std::uint64_t{1} << v;
    }
    return m;
}

bool lex_less(const VertexSubset& a, const VertexSubset& b) {
    return std::lexicographical_compare(a.members.begin(), a.members.end(),
                                        b.members.begin(), b.members.end());
}

std::string to_string(const VertexSubset& u) {
    std::string out;
    for (std::size_t i = 0; i < u.members.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(u.members[i]);
    }
    return out;
}

VertexSubset parse_vertex_list(const std::string& text) {
    std::vector<int> vs;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("vertex list: empty entry");
        std::size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("vertex list: bad entry '" + tok + "'");
        vs.push_back(v);
    }
    if (vs.empty()) throw std::invalid_argument("vertex list: empty");
    return VertexSubset(std::move(vs));
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges)
    : n_(n),
      words_((n + 63) / 64),
      e_(0),
      bits_(static_cast<std::size_t>(n) * static_cast<std::size_t>((n + 63) / 64), 0),
      degrees_(static_cast<std::size_t>(n), 0) {
    if (n < 1) throw std::invalid_argument("graph order must be >= 1");
    for (auto [a, b] : edges) {
        if (a < 0 || a >= n_ || b < 0 || b >= n_)
            throw std::invalid_argument("edge endpoint out of range");
        if (a == b) throw std::invalid_argument("loops are not allowed");
        if (adjacent(a, b)) throw std::invalid_argument("duplicate edge");
        bits_[static_cast<std::size_t>(a) * words_ + b / 64] |= std::uint64_t{1} << (b % 64);
        bits_[static_cast<std::size_t>(b) * words_ + a / 64] |= std::uint64_t{1} << (a % 64);
        ++degrees_[static_cast<std::size_t>(a)];
        ++degrees_[static_cast<std::size_t>(b)];
        ++e_;
    }
}

int Graph::degree(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("degree: vertex out of range");
    return degrees_[static_cast<std::size_t>(v)];
}

bool Graph::adjacent(int u, int v) const {
    return (bits_[static_cast<std::size_t>(u) * words_ + v / 64] >> (v % 64)) & 1;
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(degree(v)));
    const std::uint64_t* r = row(v);
    for (int w = 0; w < words_; ++w) {
        std::uint64_t bitsw = r[w];
        while (bitsw) {
            int b = std::countr_zero(bitsw);
            out.push_back(w * 64 + b);
            bitsw &= bitsw - 1;
        }
    }
    return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(e_));
    for (int a = 0; a < n_; ++a)
        for (int b : neighbors(a))
            if (b > a) out.emplace_back(a, b);
    return out;
}

const std::uint64_t* Graph::row(int v) const {
    return bits_.data() + static_cast<std::size_t>(v) * words_;
}

std::vector<std::uint64_t> Graph::subset_mask(const VertexSubset& u) const {
    std::vector<std::uint64_t> mask(static_cast<std::size_t>(words_), 0);
    for (int v : u.members) {
        if (v < 0 || v >= n_) throw std::invalid_argument("subset vertex out of range");
        mask[static_cast<std::size_t>(v / 64)] |= std::uint64_t{1} << (v % 64);
    }
    return mask;
}

int Graph::neighbors_in(int v, const std::vector<std::uint64_t>& mask) const {
    const std::uint64_t* r = row(v);
    int c = 0;
    for (int w = 0; w < words_; ++w) c += std::popcount(r[w] & mask[static_cast<std::size_t>(w)]);
    return c;
}

bool Graph::is_connected() const {
    return components(*this).size() == 1;
}

Graph6Error::Graph6Error(const std::string& what, std::size_t byte_offset)
    : std::runtime_error(what + " (byte " + std::to_string(byte_offset) + ")"),
      byte_offset_(byte_offset) {}

namespace {

// Upper-triangle bit positions in graph6 order: column-major, x(0,1), x(0,2),
// x(1,2), x(0,3), ...
std::vector<std::pair<int, int>> triangle_order(int n) {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
    return pairs;
}

} // namespace

Graph parse_graph6(const std::string& line) {
    if (line.empty()) throw Graph6Error("empty graph6 line", 0);
    unsigned char c0 = static_cast<unsigned char>(line[0]);
    if (c0 == '~') throw Graph6Error("graph6 order > 62 is not supported", 0);
    if (c0 < 63 || c0 > 126) throw Graph6Error("graph6 header out of range", 0);
    int n = static_cast<int>(c0) - 63;
    if (n == 0) throw Graph6Error("graph of order 0 is not supported", 0);

    long long nbits = static_cast<long long>(n) * (n - 1) / 2;
    std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
    if (line.size() < 1 + nbytes)
        throw Graph6Error("truncated graph6 line: expected " + std::to_string(nbytes) + " data bytes",
                          line.size());
    if (line.size() > 1 + nbytes)
        throw Graph6Error("trailing characters after graph6 data", 1 + nbytes);

    auto pairs = triangle_order(n);
    std::vector<std::pair<int, int>> edges;
    long long k = 0;
    for (std::size_t i = 0; i < nbytes; ++i) {
        unsigned char c = static_cast<unsigned char>(line[1 + i]);
        if (c < 63 || c > 126) throw Graph6Error("graph6 data byte out of range", 1 + i);
        unsigned val = static_cast<unsigned>(c) - 63;
        for (int bit = 5; bit >= 0; --bit, ++k) {
            bool set = (val >> bit) & 1;
            if (k < nbits) {
                if (set) edges.push_back(pairs[static_cast<std::size_t>(k)]);
            } else if (set) {
                throw Graph6Error("padding bits set in final graph6 byte", 1 + i);
            }
        }
    }
    return Graph(n, edges);
}

std::string write_graph6(const Graph& g) {
    int n = g.order();
    if (n > 62) throw std::invalid_argument("graph6: order " + std::to_string(n) + " exceeds 62");
    std::string out;
    out.push_back(static_cast<char>(63 + n));
    auto pairs = triangle_order(n);
    unsigned acc = 0;
    int nacc = 0;
    for (auto [i, j] : pairs) {
        acc = (acc << 1) | (g.adjacent(i, j) ? 1u : 0u);
        if (++nacc == 6) {
            out.push_back(static_cast<char>(63 + acc));
            acc = 0;
            nacc = 0;
        }
    }
    if (nacc > 0) {
        acc <<= (6 - nacc);
        out.push_back(static_cast<char>(63 + acc));
    }
    return out;
}

VertexSubset vertex_boundary(const Graph& g, const VertexSubset& u) {
    auto mask = g.subset_mask(u);
    VertexSubset out;
    for (int v : u.complement(g.order()).members)
        if (g.neighbors_in(v, mask) > 0) out.members.push_back(v);
    return out;
}

EdgeSet edge_boundary(const Graph& g, const VertexSubset& u) {
    auto mask = g.subset_mask(u);
    EdgeSet out;
    for (int a : u.members)
        for (int b : g.neighbors(a))
            if (!(mask[static_cast<std::size_t>(b / 64)] >> (b % 64) & 1))
                out.edges.emplace_back(std::min(a, b), std::max(a, b));
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

long long edge_boundary_size(const Graph& g, const VertexSubset& u) {
    auto mask = g.subset_mask(u);
    long long cut = 0;
    for (int v : u.members) cut += g.degree(v) - g.neighbors_in(v, mask);
    return cut;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSubset& u) {
    if (u.empty()) throw std::invalid_argument("induced subgraph of an empty subset");
    std::vector<int> pos(static_cast<std::size_t>(g.order()), -1);
    for (int i = 0; i < u.size(); ++i) pos[static_cast<std::size_t>(u.members[static_cast<std::size_t>(i)])] = i;
    std::vector<std::pair<int, int>> edges;
    for (int a : u.members)
        for (int b : g.neighbors(a))
            if (b > a && pos[static_cast<std::size_t>(b)] >= 0)
                edges.emplace_back(pos[static_cast<std::size_t>(a)], pos[static_cast<std::size_t>(b)]);
    return InducedSubgraph{Graph(u.size(), edges), u.members};
}

std::vector<VertexSubset> components(const Graph& g) {
    int n = g.order();
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<VertexSubset> out;
    for (int s = 0; s < n; ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        VertexSubset comp;
        std::queue<int> q;
        q.push(s);
        seen[static_cast<std::size_t>(s)] = true;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            comp.members.push_back(v);
            for (int w : g.neighbors(v)) {
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = true;
                    q.push(w);
                }
            }
        }
        std::sort(comp.members.begin(), comp.members.end());
        out.push_back(std::move(comp));
    }
    return out;
}

Graph complete(int n) {
    if (n < 1) throw std::invalid_argument("complete: n must be >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph(n, edges);
}

Graph path(int n) {
    if (n < 1) throw std::invalid_argument("path: n must be >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, edges);
}

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: n must be >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(0, n - 1);
    return Graph(n, edges);
}

Graph empty_graph(int n) {
    if (n < 1) throw std::invalid_argument("empty_graph: n must be >= 1");
    return Graph(n, {});
}

Graph join(const Graph& a, const Graph& b) {
    int na = a.order(), nb = b.order();
    std::vector<std::pair<int, int>> edges = a.edges();
    for (auto [x, y] : b.edges()) edges.emplace_back(na + x, na + y);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j) edges.emplace_back(i, na + j);
    return Graph(na + nb, edges);
}

Graph complete_multipartite(const std::vector<int>& part_sizes) {
    if (part_sizes.empty()) throw std::invalid_argument("complete_multipartite: no parts");
    int n = 0;
    for (int s : part_sizes) {
        if (s < 1) throw std::invalid_argument("complete_multipartite: part sizes must be >= 1");
        n += s;
    }
    std::vector<int> part_of;
    part_of.reserve(static_cast<std::size_t>(n));
    for (std::size_t p = 0; p < part_sizes.size(); ++p)
        for (int i = 0; i < part_sizes[p]; ++i) part_of.push_back(static_cast<int>(p));
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (part_of[static_cast<std::size_t>(i)] != part_of[static_cast<std::size_t>(j)])
                edges.emplace_back(i, j);
    return Graph(n, edges);
}

Graph gnp(int n, double p, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("gnp: n must be >= 1");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("gnp: p must be in [0,1]");
    SplitMix64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.next_double() < p) edges.emplace_back(i, j);
    return Graph(n, edges);
}

} // namespace lapbound
