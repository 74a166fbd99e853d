#pragma once

#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "plbord/complex.hpp"
#include "plbord/rational.hpp"

namespace plbord {

using Point = std::vector<Rat>;

Point add(const Point& a, const Point& b);
Point sub(const Point& a, const Point& b);
Point scale(const Point& a, const Rat& s);
Rat dot(const Point& a, const Point& b);
Rat norm2(const Point& a);
std::size_t hash_point(const Point& p);

// --- small exact linear algebra ----------------------------------------------

struct Matrix {
    std::size_t rows = 0, cols = 0;
    std::vector<Rat> a;  // row-major

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
    Rat& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

std::size_t rank(Matrix m);

// Unique solution of Ax = b; nullopt when singular or inconsistent-unique.
std::optional<std::vector<Rat>> solve_unique(Matrix a, std::vector<Rat> b);

// General solution of Ax = b: particular point + nullspace basis;
// nullopt when inconsistent.
struct AffineSolution {
    std::vector<Rat> particular;
    std::vector<std::vector<Rat>> nullspace;
};
std::optional<AffineSolution> solve_affine(Matrix a, std::vector<Rat> b);

// Inverse of a square matrix; nullopt when singular.
std::optional<Matrix> inverse(Matrix m);

// --- simplex geometry ---------------------------------------------------------

// affine rank of a point set = dim of affine hull + 1
std::size_t affine_rank(std::span<const Point> pts);
bool affinely_independent(std::span<const Point> pts);

// Barycentric-coordinate evaluator for an affinely independent simplex.
class BaryEval {
public:
    // pts: vertices of the simplex (affinely independent), ambient dim n.
    explicit BaryEval(std::vector<Point> pts);
    std::size_t size() const { return pts_.size(); }
    const std::vector<Point>& points() const { return pts_; }
    // Barycentric coordinates of p if p lies in the affine hull; else nullopt.
    std::optional<std::vector<Rat>> coords(const Point& p) const;

private:
    std::vector<Point> pts_;
    // solves [V^T; 1^T] lambda = [p; 1] by a precomputed row-reduced form
    Matrix lhs_;                 // (n+1) x m system matrix
    std::vector<std::size_t> pivot_rows_;  // selected independent rows
    Matrix inv_;                 // inverse of the m x m pivot square
};

// Exact squared distance between conv(A) and conv(B); both affinely
// independent vertex lists. Enumerates face pairs.
Rat simplex_distance_squared(std::span<const Point> a, std::span<const Point> b);

// V-representation of conv(A) ∩ conv(B), exact; dims of A/B at most 3 in the
// parametrizing direction (the smaller simplex is parametrized).
std::vector<Point> simplex_intersection(std::span<const Point> a, std::span<const Point> b);

bool point_in_simplex(const Point& p, std::span<const Point> simplex);

// axis-aligned bounding box squared distance (0 when boxes overlap)
struct Box {
    Point lo, hi;
};
Box bounding_box(std::span<const Point> pts);
Rat box_distance_squared(const Box& a, const Box& b);

// --- geometric complexes -------------------------------------------------------

// A Complex together with exact rational vertex coordinates, simplexwise linear.
struct GeometricComplex {
    Complex complex;
    int ambient = 0;
    std::unordered_map<Vertex, Point> coords;

    const Point& point(Vertex v) const;
    std::vector<Point> simplex_points(const Simplex& s) const;
    // Throws: degenerate simplex (affinely dependent vertices), or when
    // check_injectivity and two simplices intersect outside their shared face.
    void validate(bool check_injectivity = true) const;
};

// exact injectivity check on a pair: intersection equals the shared face
bool pair_intersects_properly(const GeometricComplex& gc, const Simplex& s, const Simplex& t);

}  // namespace plbord
