#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "int_matrix.hpp"

namespace plumbook {

using VertexId = std::string;

class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct VertexAnnotation {
    VertexId vertex;
    std::size_t degree = 0;
    bool is_bad = false;
};

/// Weighted tree; vertices are indexed 0..size()-1 in declaration order.
class PlumbingTree {
public:
    struct Vertex {
        VertexId id;
        long long euler;
        friend bool operator==(const Vertex&, const Vertex&) = default;
    };

    PlumbingTree() = default;

    /// Validates on construction; throws ValidationError.
    PlumbingTree(std::vector<Vertex> vertices, std::vector<std::pair<VertexId, VertexId>> edges)
        : vertices_(std::move(vertices)), edge_ids_(std::move(edges)) {
        build();
    }

    [[nodiscard]] std::size_t size() const noexcept { return vertices_.size(); }
    [[nodiscard]] const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
    [[nodiscard]] const std::vector<std::pair<VertexId, VertexId>>& edge_ids() const noexcept {
        return edge_ids_;
    }
    /// Edges as index pairs (smaller index first), in declaration order.
    [[nodiscard]] const std::vector<std::pair<std::size_t, std::size_t>>& edges() const noexcept {
        return edges_;
    }

    [[nodiscard]] const VertexId& id(std::size_t v) const { return vertices_.at(v).id; }
    [[nodiscard]] long long euler(std::size_t v) const { return vertices_.at(v).euler; }
    [[nodiscard]] std::size_t degree(std::size_t v) const { return adj_.at(v).size(); }
    /// Neighbours sorted by index.
    [[nodiscard]] const std::vector<std::size_t>& neighbors(std::size_t v) const { return adj_.at(v); }
    [[nodiscard]] bool adjacent(std::size_t a, std::size_t b) const {
        return std::binary_search(adj_.at(a).begin(), adj_.at(a).end(), b);
    }
    [[nodiscard]] bool is_bad(std::size_t v) const {
        return euler(v) + static_cast<long long>(degree(v)) > 0;
    }
    [[nodiscard]] std::vector<std::size_t> bad_vertices() const {
        std::vector<std::size_t> out;
        for (std::size_t v = 0; v < size(); ++v)
            if (is_bad(v)) out.push_back(v);
        return out;
    }
    [[nodiscard]] bool non_positive() const { return bad_vertices().empty(); }

    [[nodiscard]] std::optional<std::size_t> find(const VertexId& id) const {
        auto it = index_.find(id);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }
    [[nodiscard]] std::size_t index(const VertexId& id) const {
        auto v = find(id);
        if (!v) throw ValidationError("unknown vertex '" + id + "'");
        return *v;
    }

    /// Intersection form: diagonal euler numbers, 1 per edge.
    [[nodiscard]] IntMatrix intersection_matrix() const {
        IntMatrix A(size(), size());
        for (std::size_t v = 0; v < size(); ++v) A(v, v) = euler(v);
        for (auto [a, b] : edges_) A(a, b) = A(b, a) = 1;
        return A;
    }

    friend bool operator==(const PlumbingTree& a, const PlumbingTree& b) {
        if (a.vertices_ != b.vertices_ || a.edges_.size() != b.edges_.size()) return false;
        auto ea = a.edges_, eb = b.edges_;
        std::sort(ea.begin(), ea.end());
        std::sort(eb.begin(), eb.end());
        return ea == eb;
    }

private:
    void build() {
        if (vertices_.empty()) throw ValidationError("tree has no vertices");
        for (std::size_t i = 0; i < vertices_.size(); ++i) {
            const auto& v = vertices_[i];
            if (v.id.empty()) throw ValidationError("empty vertex id");
            if (!index_.emplace(v.id, i).second)
                throw ValidationError("duplicate vertex '" + v.id + "'");
            if (v.euler > -2)
                throw ValidationError("vertex '" + v.id + "' has euler number " +
                                      std::to_string(v.euler) + " > -2");
        }
        adj_.assign(vertices_.size(), {});
        std::set<std::pair<std::size_t, std::size_t>> seen;
        for (const auto& [x, y] : edge_ids_) {
            std::size_t a = index(x), b = index(y);
            if (a == b) throw ValidationError("self-loop at '" + x + "'");
            if (a > b) std::swap(a, b);
            if (!seen.emplace(a, b).second)
                throw ValidationError("duplicate edge '" + x + "' -- '" + y + "'");
            edges_.emplace_back(a, b);
            adj_[a].push_back(b);
            adj_[b].push_back(a);
        }
        for (auto& l : adj_) std::sort(l.begin(), l.end());
        if (edges_.size() + 1 != vertices_.size()) {
            if (edges_.size() + 1 > vertices_.size()) throw ValidationError("graph contains a cycle");
            throw ValidationError("graph is disconnected");
        }
        std::vector<bool> mark(size(), false);
        std::vector<std::size_t> stack{0};
        mark[0] = true;
        std::size_t reached = 1;
        while (!stack.empty()) {
            std::size_t x = stack.back();
            stack.pop_back();
            for (std::size_t y : adj_[x])
                if (!mark[y]) {
                    mark[y] = true;
                    ++reached;
                    stack.push_back(y);
                }
        }
        if (reached != size()) throw ValidationError("graph is disconnected");
    }

    std::vector<Vertex> vertices_;
    std::vector<std::pair<VertexId, VertexId>> edge_ids_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
    std::vector<std::vector<std::size_t>> adj_;
    std::map<VertexId, std::size_t> index_;
};

inline std::vector<VertexAnnotation> annotate(const PlumbingTree& t) {
    std::vector<VertexAnnotation> out;
    out.reserve(t.size());
    for (std::size_t v = 0; v < t.size(); ++v) out.push_back({t.id(v), t.degree(v), t.is_bad(v)});
    return out;
}

/// Tree on vertices v1..vn with the given euler numbers and index edges.
inline PlumbingTree make_tree(const std::vector<long long>& eulers,
                              const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    std::vector<PlumbingTree::Vertex> vs;
    for (std::size_t i = 0; i < eulers.size(); ++i) vs.push_back({"v" + std::to_string(i + 1), eulers[i]});
    std::vector<std::pair<VertexId, VertexId>> es;
    for (auto [a, b] : edges) es.emplace_back(vs.at(a).id, vs.at(b).id);
    return PlumbingTree(std::move(vs), std::move(es));
}

/// Random tree: vertex i>0 attaches to a uniform earlier vertex.
template <class Rng>
PlumbingTree random_tree(std::size_t n, Rng& rng, long long lo = -6, long long hi = -2) {
    std::vector<long long> eul(n);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < n; ++i) {
        eul[i] = lo + static_cast<long long>(rng() % static_cast<unsigned long long>(hi - lo + 1));
        if (i > 0) edges.emplace_back(static_cast<std::size_t>(rng() % i), i);
    }
    return make_tree(eul, edges);
}

}  // namespace plumbook
