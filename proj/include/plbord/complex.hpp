#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "plbord/simplex.hpp"

namespace plbord {

// Immutable abstract simplicial complex, stored by its maximal simplices
// (sorted, deduplicated, none a face of another). All operations are pure
// and return new complexes.
class Complex {
public:
    Complex() = default;
    // Face-closure of the given simplices; redundant faces dropped.
    static Complex from_maximal(std::vector<Simplex> simplices);

    const std::vector<Simplex>& maximal() const { return maximal_; }
    int dim() const { return dim_; }  // -1 for the empty complex
    bool empty() const { return maximal_.empty(); }
    // Count of top-dimensional simplices ("volume").
    std::int64_t volume() const;
    // True iff s is a face of some maximal simplex.
    bool contains(const Simplex& s) const;
    std::vector<Vertex> vertices() const;
    // Every face of every maximal simplex, each once, sorted (dim-major).
    std::vector<Simplex> all_faces() const;
    // Simplices of exactly dimension d.
    std::vector<Simplex> faces_of_dim(int d) const;
    bool is_pure() const;

    bool operator==(const Complex& o) const { return maximal_ == o.maximal_; }

private:
    std::vector<Simplex> maximal_;
    int dim_ = -1;
};

// --- construction & queries -------------------------------------------------

Complex closure(std::vector<Simplex> maximal);

// star: closure of all simplices containing s; throws if s not in c.
Complex star(const Complex& c, const Simplex& s);
// link: faces of cofaces of s disjoint from s.
Complex link(const Complex& c, const Simplex& s);

std::vector<std::int64_t> f_vector(const Complex& c);
std::int64_t euler_characteristic(const Complex& c);
// max over vertices of the number of simplices in the closed star
// (all dimensions, the vertex itself included).
std::int64_t degree_type(const Complex& c);
std::int64_t star_count(const Complex& c, Vertex v);

int component_count(const Complex& c);

// join of two complexes on disjoint vertex sets (throws if they overlap).
Complex join(const Complex& a, const Complex& b);

// Relabel vertices via the given map (must be injective on vertices of c).
Complex relabel(const Complex& c, const std::unordered_map<Vertex, Vertex>& m);

// Dense relabel 0..n-1 by increasing old id; returns the old-id order.
std::pair<Complex, std::vector<Vertex>> compactify(const Complex& c);

// Isomorphism test by backtracking (small complexes only).
bool isomorphic(const Complex& a, const Complex& b);

// --- pseudomanifold structure -------------------------------------------------

bool is_closed_pseudomanifold(const Complex& c);  // throws on non-pure input

// Codimension-1 faces lying in exactly one top simplex, face-closed.
Complex boundary_complex(const Complex& c);

struct Orientation {
    // Sign per maximal simplex, parallel to Complex::maximal() order,
    // relative to the sorted vertex order.
    std::vector<std::int8_t> sign;
};

struct OrientResult {
    bool orientable = false;
    Orientation orientation;  // valid when orientable
    std::vector<Simplex> witness;  // an inconsistent adjacency when not
};

// Sign propagation across the codim-1 adjacency graph of a pure complex.
OrientResult orient(const Complex& c);

// Exact check that the signed boundary chain of top simplices vanishes.
bool boundary_chain_vanishes(const Complex& c, const Orientation& o);

// dual block of s in bs(y): union of bs-simplices [b(s0),...,b(sm)] with
// s ⊆ s0 ⊊ ... ⊊ sm. Returned in bs(y)'s vertex numbering (see Subdivision).
class SubdivisionTag;

}  // namespace plbord
