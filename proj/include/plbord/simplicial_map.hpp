#pragma once

#include <unordered_map>

#include "plbord/complex.hpp"

namespace plbord {

// Vertex-to-vertex map carrying simplices to simplices (degeneration allowed).
struct SimplicialMap {
    Complex source;
    Complex target;
    std::unordered_map<Vertex, Vertex> vertex_map;

    Simplex image(const Simplex& s) const;
    // Throws unless every source simplex maps into a target simplex.
    void validate() const;
};

SimplicialMap identity_map(const Complex& c);

struct Subdivision {
    Complex complex;            // bs(c); vertex i is the barycenter of cell(i)
    std::vector<Simplex> cell;  // indexed by bs vertex id
    SimplicialMap carrier;      // bs(c) -> c, barycenter to min vertex of its cell
};

// Barycentric subdivision. bs vertices are numbered by the canonical order
// of the faces of c (dim-major, then lexicographic).
Subdivision barycentric_subdivide(const Complex& c);

struct ProductWithInterval {
    Complex complex;
    Vertex offset;  // (v,0) keeps id v, (v,1) becomes v + offset
};

// Prism triangulation of c x [0,1]; each k-simplex contributes k+1 top cells.
ProductWithInterval product_with_interval(const Complex& c);

struct MappingCylinder {
    Complex complex;
    // End subcomplex carrying the source (parameter 0) and a relabel map
    // source-vertex -> cylinder-vertex; target keeps its own ids shifted.
    std::unordered_map<Vertex, Vertex> source_end;
    std::unordered_map<Vertex, Vertex> target_end;
    bool fiber_check_passed = true;
};

enum class FiberCheck { Enforce, Report };

// Simplicial mapping cylinder of f: quotient of source x I gluing the 1-end
// along f. The fiber sanity check (preimage of every closed target simplex
// nonempty, connected, Euler characteristic 1) gates the construction under
// Enforce; under Report the quotient is still built (e.g. cones of constant
// maps) and the flag records the failure. The quotient must stay simplicial
// either way.
MappingCylinder mapping_cylinder(const SimplicialMap& f, FiberCheck check = FiberCheck::Enforce);

// Dual block of s in bs(y): union of bs-simplices [b(s0),...,b(sm)] with
// s ⊆ s0 ⊊ ... ⊊ sm, as a subcomplex of the given subdivision of y.
Complex dual_block(const Complex& y, const Subdivision& bs_y, const Simplex& s);
Complex dual_block(const Complex& y, const Simplex& s);  // convenience

}  // namespace plbord
