#pragma once

#include "pzf/errors.hpp"
#include "pzf/vertex_set.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pzf {

/// Immutable simple undirected connected graph with dense vertex indices
/// 0..n-1. External labels are presentation only; every engine works on
/// indices.
class Graph {
  public:
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                            std::vector<std::string> labels = {}) {
        if (n < 2) throw parse_error("graph must have at least 2 vertices, got n=" + std::to_string(n));
        std::vector<VertexSet> adj(n, VertexSet(n));
        for (auto [u, v] : edges) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw parse_error("edge endpoint out of range");
            if (u == v)
                throw parse_error("self-loop at vertex " + std::to_string(u));
            if (adj[u].test(v))
                throw parse_error("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
            adj[u].set(v);
            adj[v].set(u);
        }
        if (labels.empty()) {
            labels.reserve(n);
            for (int v = 0; v < n; ++v) labels.push_back(std::to_string(v));
        }
        return Graph(std::move(adj), std::move(labels));
    }

    /// One edge per line, "u v"; optional header line "n <count>".
    /// Vertices are named; indices assigned in first-appearance order.
    static Graph from_edge_list(const std::string& text) {
        std::istringstream in(text);
        std::string line;
        int declared_n = -1;
        std::map<std::string, int> index;
        std::vector<std::string> labels;
        std::vector<std::pair<int, int>> edges;
        int lineno = 0;
        bool first_content = true;
        auto intern = [&](const std::string& name) {
            auto it = index.find(name);
            if (it != index.end()) return it->second;
            int id = static_cast<int>(labels.size());
            if (declared_n >= 0 && id >= declared_n)
                throw parse_error("line " + std::to_string(lineno) + ": vertex '" + name +
                                  "' exceeds declared n=" + std::to_string(declared_n));
            index.emplace(name, id);
            labels.push_back(name);
            return id;
        };
        while (std::getline(in, line)) {
            ++lineno;
            std::istringstream ls(line);
            std::string a, b, extra;
            if (!(ls >> a)) continue;  // blank line
            if (a[0] == '#') continue;
            if (first_content && a == "n") {
                if (!(ls >> declared_n) || declared_n < 2)
                    throw parse_error("line " + std::to_string(lineno) + ": bad header");
                first_content = false;
                continue;
            }
            first_content = false;
            if (!(ls >> b) || (ls >> extra))
                throw parse_error("line " + std::to_string(lineno) + ": expected two vertex tokens");
            int u = intern(a), v = intern(b);
            if (u == v)
                throw parse_error("line " + std::to_string(lineno) + ": self-loop at '" + a + "'");
            for (auto [x, y] : edges)
                if ((x == u && y == v) || (x == v && y == u))
                    throw parse_error("line " + std::to_string(lineno) + ": duplicate edge '" + a +
                                      " " + b + "'");
            edges.emplace_back(u, v);
        }
        int n = declared_n >= 0 ? declared_n : static_cast<int>(labels.size());
        if (declared_n >= 0)
            for (int v = static_cast<int>(labels.size()); v < n; ++v)
                labels.push_back(std::to_string(v));
        return from_edges(n, edges, std::move(labels));
    }

    /// Standard graph6, short form (n <= 62). One graph per string;
    /// trailing whitespace tolerated.
    static Graph from_graph6(const std::string& text) {
        std::string s(text);
        while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' '))
            s.pop_back();
        if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
        if (s.empty()) throw parse_error("graph6: empty input");
        unsigned char h = static_cast<unsigned char>(s[0]);
        if (h < 63 || h > 126) throw parse_error("graph6: malformed header byte");
        if (h == 126) throw parse_error("graph6: long form (n > 62) not supported");
        int n = h - 63;
        if (n < 2) throw parse_error("graph6: n < 2");
        int nbits = n * (n - 1) / 2;
        int nbytes = (nbits + 5) / 6;
        if (static_cast<int>(s.size()) - 1 != nbytes)
            throw parse_error("graph6: length mismatch (expected " + std::to_string(nbytes) +
                              " data bytes, got " + std::to_string(static_cast<int>(s.size()) - 1) + ")");
        std::vector<std::pair<int, int>> edges;
        int bit = 0;
        for (int j = 1; j < n; ++j) {
            for (int i = 0; i < j; ++i, ++bit) {
                unsigned char c = static_cast<unsigned char>(s[1 + bit / 6]);
                if (c < 63 || c > 126) throw parse_error("graph6: malformed data byte");
                if ((c - 63) >> (5 - bit % 6) & 1) edges.emplace_back(i, j);
            }
        }
        return from_edges(n, edges);
    }

    std::string to_graph6() const {
        std::string out;
        out.push_back(static_cast<char>(63 + n_));
        int acc = 0, nbits = 0;
        for (int j = 1; j < n_; ++j) {
            for (int i = 0; i < j; ++i) {
                acc = (acc << 1) | (adj_[i].test(j) ? 1 : 0);
                if (++nbits == 6) {
                    out.push_back(static_cast<char>(63 + acc));
                    acc = 0;
                    nbits = 0;
                }
            }
        }
        if (nbits) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
        return out;
    }

    /// Graphviz rendering; vertices in `black` are drawn filled.
    std::string to_dot(const VertexSet* black = nullptr) const {
        std::ostringstream out;
        out << "graph G {\n";
        for (int v = 0; v < n_; ++v) {
            out << "  " << v << " [label=\"" << labels_[v] << "\"";
            if (black && black->test(v)) out << ", style=filled, fillcolor=black, fontcolor=white";
            out << "];\n";
        }
        for (int j = 1; j < n_; ++j)
            for (int i = 0; i < j; ++i)
                if (adj_[i].test(j)) out << "  " << i << " -- " << j << ";\n";
        out << "}\n";
        return out.str();
    }

    static Graph path(int n) {
        require_order(n, 2, "path");
        std::vector<std::pair<int, int>> e;
        for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
        return from_edges(n, e, canonical_labels(n));
    }

    static Graph cycle(int n) {
        require_order(n, 3, "cycle");
        std::vector<std::pair<int, int>> e;
        for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
        e.emplace_back(n - 1, 0);
        return from_edges(n, e, canonical_labels(n));
    }

    /// K_{1,m}: center is index 0, pendants 1..m.
    static Graph star(int m) {
        require_order(m, 1, "star");
        std::vector<std::pair<int, int>> e;
        for (int v = 1; v <= m; ++v) e.emplace_back(0, v);
        return from_edges(m + 1, e, canonical_labels(m + 1));
    }

    static Graph complete(int n) {
        require_order(n, 2, "complete");
        std::vector<std::pair<int, int>> e;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i) e.emplace_back(i, j);
        return from_edges(n, e, canonical_labels(n));
    }

    int order() const { return n_; }

    std::size_t edge_count() const { return edges_; }

    const VertexSet& neighbors(int v) const {
        check(v);
        return adj_[v];
    }

    VertexSet closed_neighborhood(int v) const {
        check(v);
        VertexSet s = adj_[v];
        s.set(v);
        return s;
    }

    int degree(int v) const {
        check(v);
        return static_cast<int>(adj_[v].count());
    }

    const std::string& label(int v) const {
        check(v);
        return labels_[v];
    }

    std::optional<int> index_of(std::string_view name) const {
        for (int v = 0; v < n_; ++v)
            if (labels_[v] == name) return v;
        return std::nullopt;
    }

    VertexSet empty_set() const { return VertexSet(n_); }
    VertexSet full_set() const { return VertexSet::full(n_); }

  private:
    Graph(std::vector<VertexSet> adj, std::vector<std::string> labels)
        : n_(static_cast<int>(adj.size())), adj_(std::move(adj)), labels_(std::move(labels)) {
        for (int v = 0; v < n_; ++v) edges_ += adj_[v].count();
        edges_ /= 2;
        if (!connected()) throw parse_error("graph is disconnected");
    }

    bool connected() const {
        VertexSet seen(n_);
        std::deque<int> queue{0};
        seen.set(0);
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            adj_[v].for_each([&](int u) {
                if (!seen.test(u)) {
                    seen.set(u);
                    queue.push_back(u);
                }
            });
        }
        return seen.all();
    }

    static void require_order(int n, int min, const char* family) {
        if (n < min)
            throw parse_error(std::string(family) + ": size below minimum " + std::to_string(min));
    }

    static std::vector<std::string> canonical_labels(int n) {
        std::vector<std::string> labels;
        labels.reserve(n);
        for (int v = 0; v < n; ++v) labels.push_back("v" + std::to_string(v));
        return labels;
    }

    void check(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("vertex out of range");
    }

    int n_;
    std::vector<VertexSet> adj_;
    std::vector<std::string> labels_;
    std::size_t edges_ = 0;
};

}  // namespace pzf
