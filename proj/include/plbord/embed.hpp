#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "plbord/geometry.hpp"
#include "plbord/rng.hpp"

namespace plbord {

// Exact angular verdicts are expressed through the cosine: an angle theta is
// at least alpha iff cos(theta) <= cos(alpha), checked against a rational
// bound c <= cos(alpha) chosen once (conservative direction).
Rat cos_upper_to_rational_bound(double alpha_radians);

struct EmbedParams {
    int ambient = 3;                   // n
    Rat lattice = 0;                   // lambda; 0 = derive alpha/(4*ceil-sqrt(n))
    Rat thickness = 1;                 // T target (distance)
    double alpha = 0.25;               // link thickness target, radians
    Rat cos_alpha = 0;                 // rational bound <= cos(alpha); 0 = derive
    Rat edge_limit = 0;                // ell; 0 = derive from V
    Rat radius = 0;                    // R; 0 = derive from V
    int restarts = 64;
    int jitter = 48;                   // per-vertex candidate budget
    std::uint64_t seed = 0;

    void derive(int complex_dim, std::int64_t vertex_count);
};

struct ThicknessReport {
    bool finite = false;
    Rat thickness_squared = 0;         // min squared distance over disjoint pairs
    Rat link_cos_bound = 1;            // certified max cosine over links (see below)
    double min_link_angle = 0;         // approximate
    Rat max_edge_squared = 0;
    bool snapped = false;
    Rat radius_used = 0;
    std::int64_t pairs_checked = 0;
};

// Exact minimum squared distance over pairs of faces with disjoint vertex
// sets; nullopt = +infinity sentinel (no such pair).
std::optional<Rat> thickness_squared(const GeometricComplex& gc);

// Exact check: squared distance of every disjoint face pair >= t2.
bool thickness_at_least(const GeometricComplex& gc, const Rat& t2);

struct LinkThicknessReport {
    double min_angle = 0;       // approximate minimal angular distance
    Rat cos_bound = -1;         // certified: cos(min angle) <= cos_bound
    bool has_pair = false;      // false = no vertex-disjoint pair (+infinity)
};

// Radial projection of lk(s) from the barycenter of s to the unit sphere of
// the orthogonal complement; minimal angular distance between images of
// vertex-disjoint link simplices. Exact comparisons; supports link simplices
// of dimension <= 1 (complexes of dimension <= 2).
LinkThicknessReport link_thickness(const GeometricComplex& gc, const Simplex& s);

// Exact check: every vertex-disjoint link pair subtends angle theta with
// cos(theta) <= cos_bound.
bool link_thickness_at_least(const GeometricComplex& gc, const Simplex& s, const Rat& cos_bound);
// Same check applied at every simplex of positive codimension.
bool all_links_at_least(const GeometricComplex& gc, const Rat& cos_bound);

// Round every coordinate to the nearest multiple of lambda (half-up).
// Throws when snapping merges vertices or degenerates a simplex.
GeometricComplex snap_to_grid(const GeometricComplex& gc, const Rat& lambda);

Rat max_edge_squared(const GeometricComplex& gc);
bool on_lattice(const GeometricComplex& gc, const Rat& lambda);
Rat max_radius_squared(const GeometricComplex& gc);

struct EmbedResult {
    bool success = false;
    GeometricComplex embedding;
    ThicknessReport report;
    int trials_used = 0;
    std::string failure;  // set when !success (best effort embedding retained)
};

// Randomized lattice placement with restarts; deterministic given the seed.
// Requires ambient >= 2*dim+1.
EmbedResult random_thick_embed(const Complex& c, const EmbedParams& params);

// Independent re-verification: measurements only, no search state shared.
struct VerifyOutcome {
    bool ok = false;
    std::string violated;  // name of the violated condition + witness
};
VerifyOutcome verify_embedding(const GeometricComplex& gc, const EmbedParams& params);

struct RadiusRow {
    std::int64_t vertices = 0;
    Rat radius;
    bool success = false;
};

struct RadiusExperiment {
    std::vector<RadiusRow> rows;
    double slope = 0;  // fitted d log R / d log V
};

// Minimal successful radius per size for random bounded-degree graphs.
RadiusExperiment radius_experiment(const std::vector<std::int64_t>& sizes, int max_degree,
                                   const EmbedParams& base, std::uint64_t seed);

// Random bounded-degree graph generator shared by experiments and tests.
Complex random_bounded_degree_graph(std::int64_t vertices, int max_degree, Rng& rng);

}  // namespace plbord
