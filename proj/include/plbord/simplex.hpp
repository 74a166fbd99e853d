#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace plbord {

using Vertex = std::int32_t;

// Finite abstract simplex: strictly increasing vertex ids.
class Simplex {
public:
    Simplex() = default;
    // Requires strictly increasing vertices; throws otherwise.
    explicit Simplex(std::vector<Vertex> vertices);
    Simplex(std::initializer_list<Vertex> vertices);

    // Sorts and validates (rejects duplicates).
    static Simplex sorted(std::vector<Vertex> vertices);

    int dim() const { return static_cast<int>(v_.size()) - 1; }
    std::size_t size() const { return v_.size(); }
    bool empty() const { return v_.empty(); }
    Vertex operator[](std::size_t i) const { return v_[i]; }
    const std::vector<Vertex>& vertices() const { return v_; }

    bool contains(Vertex v) const;
    bool has_face(const Simplex& other) const;  // other ⊆ this
    Simplex intersect(const Simplex& other) const;
    Simplex unite(const Simplex& other) const;  // throws if not disjoint-mergeable? no: plain union
    Simplex erase(Vertex v) const;
    // All nonempty proper+improper faces (2^k - 1 of them), sorted.
    std::vector<Simplex> all_faces() const;
    // Codimension-1 faces in the order "drop i-th vertex".
    std::vector<Simplex> facets() const;

    bool operator==(const Simplex& o) const { return v_ == o.v_; }
    bool operator!=(const Simplex& o) const { return v_ != o.v_; }
    bool operator<(const Simplex& o) const;

    std::string str() const;

private:
    std::vector<Vertex> v_;
};

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const;
};

}  // namespace plbord
