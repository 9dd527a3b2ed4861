#pragma once

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "seqsr/complex.hpp"
#include "seqsr/complex_io.hpp"

namespace seqsr {

/// Simple undirected graph on vertices 1..n, adjacency kept as bitmasks.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n + 1)) {
        if (n < 0 || n > kMaxGroundSet)
            throw InputError("graph: vertex count " + std::to_string(n) + " outside 0.." +
                             std::to_string(kMaxGroundSet));
    }

    Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
        for (auto [u, v] : edges) add_edge(u, v);
    }

    void add_edge(int u, int v) {
        if (u < 1 || u > n_ || v < 1 || v > n_)
            throw InputError("graph: edge {" + std::to_string(u) + "," + std::to_string(v) + "} out of range");
        if (u == v) throw InputError("graph: loop at vertex " + std::to_string(u));
        adj_[u] = adj_[u].with(v);
        adj_[v] = adj_[v].with(u);
    }

    int n() const noexcept { return n_; }
    Face vertices() const noexcept { return Face::full(n_); }
    Face neighbors(int v) const { return adj_.at(static_cast<std::size_t>(v)); }
    int degree(int v) const { return neighbors(v).size(); }
    bool adjacent(int u, int v) const { return neighbors(u).contains(v); }

    /// Edges {u, v} with u < v in lex order.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 1; u <= n_; ++u)
            adj_[u].for_each([&](int v) {
                if (u < v) out.emplace_back(u, v);
            });
        return out;
    }
    std::size_t num_edges() const { return edges().size(); }

    bool is_independent(Face s) const {
        bool ok = true;
        s.for_each([&](int v) {
            if (ok && neighbors(v).intersects(s)) ok = false;
        });
        return ok;
    }
    bool is_clique(Face s) const {
        bool ok = true;
        s.for_each([&](int v) {
            if (ok && !(s.without(v)).subset_of(neighbors(v))) ok = false;
        });
        return ok;
    }

    /// Two-colourable.
    bool is_bipartite() const {
        std::vector<int> colour(static_cast<std::size_t>(n_ + 1), -1);
        for (int s = 1; s <= n_; ++s) {
            if (colour[s] != -1) continue;
            colour[s] = 0;
            std::vector<int> stack{s};
            while (!stack.empty()) {
                const int u = stack.back();
                stack.pop_back();
                bool clash = false;
                adj_[u].for_each([&](int v) {
                    if (colour[v] == -1) {
                        colour[v] = 1 - colour[u];
                        stack.push_back(v);
                    } else if (colour[v] == colour[u]) {
                        clash = true;
                    }
                });
                if (clash) return false;
            }
        }
        return true;
    }

    bool is_connected() const {
        if (n_ <= 1) return true;
        Face seen = Face::singleton(1), frontier = seen;
        while (!frontier.empty()) {
            Face next;
            frontier.for_each([&](int u) { next = next | neighbors(u); });
            frontier = next - seen;
            seen = seen | next;
        }
        return seen == vertices();
    }

    /// Subgraph induced on `keep`, relabelled 1..m in ascending order.
    /// `labels[k]` is the original name of new vertex k+1.
    std::pair<Graph, std::vector<int>> induced(Face keep) const {
        std::vector<int> labels = keep.labels();
        std::vector<int> to_new(static_cast<std::size_t>(n_ + 1), 0);
        for (std::size_t k = 0; k < labels.size(); ++k) to_new[labels[k]] = static_cast<int>(k) + 1;
        Graph h(static_cast<int>(labels.size()));
        for (auto [u, v] : edges())
            if (to_new[u] && to_new[v]) h.add_edge(to_new[u], to_new[v]);
        return {std::move(h), std::move(labels)};
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int n_ = 0;
    std::vector<Face> adj_{Face{}};
};

inline Graph cycle_graph(int n) {
    if (n < 3) throw InputError("cycle graph needs n >= 3");
    Graph g(n);
    for (int i = 1; i <= n; ++i) g.add_edge(i, i % n + 1);
    return g;
}

inline Graph path_graph(int n) {
    if (n < 1) throw InputError("path graph needs n >= 1");
    Graph g(n);
    for (int i = 1; i < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) g.add_edge(u, v);
    return g;
}

inline Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int u = 1; u <= a; ++u)
        for (int v = a + 1; v <= a + b; ++v) g.add_edge(u, v);
    return g;
}

/// Δ_G: faces are the independent sets; facets (maximal independent sets) by Bron-Kerbosch on the complement.
inline SimplicialComplex independence_complex(const Graph& g, const Limits& limits = {}) {
    require_cap("max_vertices", limits.max_vertices, g.n());
    std::vector<Face> facets;
    const Face all = g.vertices();
    // R: current independent set, P: candidates, X: excluded. Non-neighbours play the role of neighbours.
    auto nonadj = [&](int v) { return (all - g.neighbors(v)).without(v); };
    auto recurse = [&](auto&& self, Face r, Face p, Face x) -> void {
        if (p.empty() && x.empty()) {
            facets.push_back(r);
            return;
        }
        int pivot = (p | x).min_label();
        int best = -1;
        (p | x).for_each([&](int u) {
            const int c = (p & nonadj(u)).size();
            if (c > best) {
                best = c;
                pivot = u;
            }
        });
        (p - nonadj(pivot)).for_each([&](int v) {
            if (!p.contains(v)) return;
            self(self, r.with(v), p & nonadj(v), x & nonadj(v));
            p = p.without(v);
            x = x.with(v);
        });
    };
    recurse(recurse, Face{}, all, Face{});
    return SimplicialComplex::from_facets(g.n(), std::move(facets));
}

/// N_G[F] = F ∪ N_G(F).
inline Face closed_neighborhood(const Graph& g, Face f) {
    if (!f.subset_of(g.vertices())) throw InputError("closed neighborhood: vertex set outside the graph");
    Face out = f;
    f.for_each([&](int v) { out = out | g.neighbors(v); });
    return out;
}

struct RelabeledGraph {
    Graph graph;
    std::vector<int> labels;  // labels[k] = original vertex of new vertex k+1
};

/// G \ N_G[F] for an independent F, relabelled 1..m.
inline RelabeledGraph remove_closed_neighborhood(const Graph& g, Face f) {
    if (!f.subset_of(g.vertices()) || !g.is_independent(f))
        throw InputError("remove closed neighborhood: " + f.to_string() + " is not an independent set");
    auto [h, labels] = g.induced(g.vertices() - closed_neighborhood(g, f));
    return {std::move(h), std::move(labels)};
}

/// G ∪ W(S): one new pendant vertex n+k attached to the k-th member of S (ascending).
inline Graph add_whiskers(const Graph& g, Face s) {
    if (!s.subset_of(g.vertices())) throw InputError("add whiskers: vertex set outside the graph");
    Graph h(g.n() + s.size());
    for (auto [u, v] : g.edges()) h.add_edge(u, v);
    int next = g.n();
    s.for_each([&](int v) { h.add_edge(v, ++next); });
    return h;
}

/// Induced subgraph on V \ S with original labels kept (vertices of S become isolated and are then dropped).
inline RelabeledGraph delete_vertices(const Graph& g, Face s) {
    auto [h, labels] = g.induced(g.vertices() - s);
    return {std::move(h), std::move(labels)};
}

enum class Parity { Any, Even, Odd };

/**
 * All chordless cycles of length >= 4. Each cycle starts at its smallest
 * vertex and runs toward the smaller of that vertex's two cycle neighbours;
 * the list is sorted lexicographically.
 */
inline std::vector<std::vector<int>> chordless_cycles(const Graph& g, Parity parity = Parity::Any,
                                                      const Limits& limits = {}) {
    require_cap("max_vertices", limits.max_vertices, g.n());
    std::vector<std::vector<int>> out;
    std::vector<int> path;
    // path[0] = s is the minimum; extend while keeping the path induced apart from the closing edge to s.
    auto dfs = [&](auto&& self, Face on_path, Face blocked) -> void {
        const int s = path.front();
        const int last = path.back();
        g.neighbors(last).for_each([&](int v) {
            if (v <= s || on_path.contains(v) || blocked.contains(v)) return;
            const bool closes = g.adjacent(v, s);
            if (closes) {
                if (path.size() + 1 >= 4 && path[1] < v) {
                    std::vector<int> cyc = path;
                    cyc.push_back(v);
                    out.push_back(std::move(cyc));
                }
                return;
            }
            // Neighbours of `last` other than v may no longer appear later (they'd be chords).
            const Face newly_blocked = blocked | (g.neighbors(last) - Face::singleton(v));
            path.push_back(v);
            self(self, on_path.with(v), newly_blocked);
            path.pop_back();
        });
    };
    for (int s = 1; s <= g.n(); ++s) {
        g.neighbors(s).for_each([&](int u) {
            if (u <= s) return;
            path = {s, u};
            // Vertices adjacent to s (other than u) may only close the cycle; they stay allowed.
            dfs(dfs, Face{s, u}, Face{});
        });
    }
    std::erase_if(out, [parity](const std::vector<int>& c) {
        const bool even = c.size() % 2 == 0;
        return (parity == Parity::Even && !even) || (parity == Parity::Odd && even);
    });
    std::sort(out.begin(), out.end());
    return out;
}

/// Vertices whose closed neighbourhood is a clique.
inline Face simplicial_vertices(const Graph& g) {
    Face out;
    for (int v = 1; v <= g.n(); ++v)
        if (g.is_clique(g.neighbors(v).with(v))) out = out.with(v);
    return out;
}

/// Text format: "n <N>" then one edge "u v" per line; '#' comments.
inline Graph parse_graph(std::istream& in) {
    int line_no = 0;
    const int n = detail::read_header(in, line_no);
    Graph g(n);
    std::string raw;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string s = detail::strip_comment(raw);
        if (s.empty()) continue;
        std::istringstream ss(s);
        std::string a, b, extra;
        if (!(ss >> a >> b) || (ss >> extra)) throw ParseError(line_no, "expected an edge 'u v'");
        const int u = detail::parse_int(a, line_no), v = detail::parse_int(b, line_no);
        if (u < 1 || u > n || v < 1 || v > n) throw ParseError(line_no, "edge endpoint outside 1.." + std::to_string(n));
        if (u == v) throw ParseError(line_no, "loop at vertex " + a);
        g.add_edge(u, v);
    }
    return g;
}

inline Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

inline std::string format_graph(const Graph& g) {
    std::string out = "n " + std::to_string(g.n()) + "\n";
    for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

}  // namespace seqsr
