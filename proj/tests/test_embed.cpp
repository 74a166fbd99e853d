#include <cmath>

#include "doctest.h"
#include "plbord/embed.hpp"
#include "plbord/error.hpp"

using namespace plbord;

namespace {
Point pt(std::initializer_list<long> xs) {
    Point p;
    for (long x : xs) p.push_back(Rat(x));
    return p;
}
}  // namespace

TEST_CASE("thickness measurement") {
    GeometricComplex gc;
    gc.ambient = 2;
    gc.complex = closure({Simplex({0, 1}), Simplex({2, 3})});
    gc.coords[0] = pt({0, 0});
    gc.coords[1] = pt({1, 0});
    gc.coords[2] = pt({0, 1});
    gc.coords[3] = pt({1, 1});
    auto t = thickness_squared(gc);
    REQUIRE(t.has_value());
    CHECK(*t == 1);
    CHECK(thickness_at_least(gc, Rat(1)));
    CHECK_FALSE(thickness_at_least(gc, Rat(2)));

    // unit square split by a diagonal: nearest disjoint pair is the diagonal
    // and an opposite corner
    GeometricComplex sq;
    sq.ambient = 2;
    sq.complex = closure({Simplex({0, 1, 2}), Simplex({0, 2, 3})});
    sq.coords[0] = pt({0, 0});
    sq.coords[1] = pt({1, 0});
    sq.coords[2] = pt({1, 1});
    sq.coords[3] = pt({0, 1});
    auto t2 = thickness_squared(sq);
    REQUIRE(t2.has_value());
    CHECK(*t2 == Rat(1, 2));

    // single simplex: +infinity sentinel
    GeometricComplex one;
    one.ambient = 2;
    one.complex = closure({Simplex({0, 1})});
    one.coords[0] = pt({0, 0});
    one.coords[1] = pt({1, 0});
    CHECK_FALSE(thickness_squared(one).has_value());
}

TEST_CASE("link thickness") {
    // planar vertex with 4 axis-aligned unit edges: min angle pi/2
    GeometricComplex gc;
    gc.ambient = 2;
    gc.complex = closure(
        {Simplex({0, 1}), Simplex({0, 2}), Simplex({0, 3}), Simplex({0, 4})});
    gc.coords[0] = pt({0, 0});
    gc.coords[1] = pt({1, 0});
    gc.coords[2] = pt({0, 1});
    gc.coords[3] = pt({-1, 0});
    gc.coords[4] = pt({0, -1});
    LinkThicknessReport rep = link_thickness(gc, Simplex({0}));
    CHECK(rep.has_pair);
    CHECK(std::abs(rep.min_angle - 1.5707963) < 1e-6);
    CHECK(rep.cos_bound >= 0);
    CHECK(rep.cos_bound < Rat(1, 1000));
    CHECK(link_thickness_at_least(gc, Simplex({0}), Rat(0)));
    CHECK_FALSE(link_thickness_at_least(gc, Simplex({0}), Rat(-1, 100)));

    // two opposite collinear edges: angle pi
    GeometricComplex line;
    line.ambient = 2;
    line.complex = closure({Simplex({0, 1}), Simplex({0, 2})});
    line.coords[0] = pt({0, 0});
    line.coords[1] = pt({1, 0});
    line.coords[2] = pt({-1, 0});
    LinkThicknessReport rep2 = link_thickness(line, Simplex({0}));
    CHECK(std::abs(rep2.min_angle - 3.14159265) < 1e-6);
    CHECK(link_thickness_at_least(line, Simplex({0}), Rat(-1)));

    // edge in a coplanar triangle pair: link = two antipodal points
    GeometricComplex flat;
    flat.ambient = 3;
    flat.complex = closure({Simplex({0, 1, 2}), Simplex({0, 1, 3})});
    flat.coords[0] = pt({0, 0, 0});
    flat.coords[1] = pt({2, 0, 0});
    flat.coords[2] = pt({1, 1, 0});
    flat.coords[3] = pt({1, -1, 0});
    LinkThicknessReport rep3 = link_thickness(flat, Simplex({0, 1}));
    CHECK(std::abs(rep3.min_angle - 3.14159265) < 1e-6);

    // codimension-zero simplex is rejected
    CHECK_THROWS_AS(link_thickness(flat, Simplex({0, 1, 2})), Error);
}

TEST_CASE("wedge angle candidates") {
    // vertex link containing an edge: min angle to a disjoint point can land
    // in the interior of the projected arc
    GeometricComplex gc;
    gc.ambient = 3;
    gc.complex = closure({Simplex({0, 1, 2}), Simplex({0, 3})});
    gc.coords[0] = pt({0, 0, 0});
    gc.coords[1] = pt({2, 0, 1});
    gc.coords[2] = pt({2, 0, -1});
    gc.coords[3] = pt({-2, 1, 0});
    LinkThicknessReport rep = link_thickness(gc, Simplex({0}));
    CHECK(rep.has_pair);
    double expect = std::acos(-2.0 / std::sqrt(5.0));
    // pairs (1,3) and (2,3) also compete; the reported min is the smallest
    CHECK(rep.min_angle <= expect + 1e-9);
    CHECK(link_thickness_at_least(gc, Simplex({0}), Rat(-85, 100)));
    CHECK_FALSE(link_thickness_at_least(gc, Simplex({0}), Rat(-99, 100)));
}

TEST_CASE("snap to grid") {
    Rat lambda(1, 4);
    GeometricComplex gc;
    gc.ambient = 2;
    gc.complex = closure({Simplex({0, 1})});
    gc.coords[0] = pt({1, 2});         // already on the lattice
    gc.coords[1] = pt({2, 1});
    GeometricComplex snapped = snap_to_grid(gc, lambda);
    CHECK(snapped.coords.at(0) == gc.coords.at(0));
    CHECK(on_lattice(snapped, lambda));

    // vertex at (0.3 lambda, 0) moves to the origin
    GeometricComplex off;
    off.ambient = 2;
    off.complex = closure({Simplex({0}), Simplex({1})});
    off.coords[0] = {Rat(3, 10) * lambda, Rat(0)};
    off.coords[1] = pt({2, 2});
    GeometricComplex s2 = snap_to_grid(off, lambda);
    CHECK(s2.coords.at(0) == pt({0, 0}));
    Rat disp2 = norm2(sub(off.coords.at(0), s2.coords.at(0)));
    CHECK(disp2 <= lambda * lambda * 2 / 4);  // (lambda sqrt(n) / 2)^2

    // idempotence
    GeometricComplex s3 = snap_to_grid(s2, lambda);
    CHECK(s3.coords == s2.coords);

    // merge error
    GeometricComplex merge;
    merge.ambient = 1;
    merge.complex = closure({Simplex({0}), Simplex({1})});
    merge.coords[0] = {Rat(1, 10)};
    merge.coords[1] = {Rat(-1, 10)};
    CHECK_THROWS_AS(snap_to_grid(merge, Rat(1)), Error);
}

TEST_CASE("random thick embed") {
    // K5 into R^2: ambient too small
    std::vector<Simplex> k5;
    for (Vertex a = 0; a < 5; ++a)
        for (Vertex b = a + 1; b < 5; ++b) k5.push_back(Simplex({a, b}));
    EmbedParams flat;
    flat.ambient = 2;
    flat.seed = 1;
    CHECK_THROWS_AS(random_thick_embed(Complex::from_maximal(k5), flat), Error);

    // single triangle into R^5
    EmbedParams p5;
    p5.ambient = 5;
    p5.seed = 7;
    EmbedResult tri = random_thick_embed(closure({Simplex({0, 1, 2})}), p5);
    CHECK(tri.success);

    // 10-vertex bounded-degree graph into R^3, re-verified independently
    Rng rng(42);
    Complex g = random_bounded_degree_graph(10, 4, rng);
    EmbedParams p3;
    p3.ambient = 3;
    p3.seed = 11;
    EmbedResult res = random_thick_embed(g, p3);
    REQUIRE(res.success);
    EmbedParams derived = p3;
    derived.derive(g.dim(), 10);
    VerifyOutcome v = verify_embedding(res.embedding, derived);
    CHECK(v.ok);
    CHECK(res.report.finite);
    CHECK(res.report.thickness_squared >= 1);
    CHECK(res.report.snapped);

    // determinism: same seed, same coordinates
    EmbedResult res2 = random_thick_embed(g, p3);
    REQUIRE(res2.success);
    CHECK(res2.embedding.coords == res.embedding.coords);
}

TEST_CASE("snapping bound and thickness degradation") {
    // random configurations: snap, displacement <= lambda sqrt(n)/2 exactly,
    // and thickness degrades by at most twice the max displacement
    Rng rng(2024);
    Rat lambda(1, 8);
    int done = 0;
    for (int trial = 0; trial < 40; ++trial) {
        GeometricComplex gc;
        gc.ambient = 3;
        std::vector<Simplex> edges;
        for (Vertex v = 0; v < 6; ++v) {
            Point p(3);
            for (int i = 0; i < 3; ++i)
                p[static_cast<std::size_t>(i)] = Rat(rng.between(-400, 400), 16);
            gc.coords[v] = p;
        }
        for (Vertex v = 0; v < 6; v += 2) edges.push_back(Simplex({v, static_cast<Vertex>(v + 1)}));
        gc.complex = closure(edges);
        GeometricComplex snapped;
        try {
            snapped = snap_to_grid(gc, lambda);
        } catch (const Error&) {
            continue;  // merge/degenerate: caller would jitter
        }
        ++done;
        Rat bound2 = lambda * lambda * 3 / 4;  // (lambda sqrt(3)/2)^2
        Rat max_disp2 = 0;
        for (const auto& [v, p] : gc.coords) {
            Rat d2 = norm2(sub(p, snapped.coords.at(v)));
            CHECK(d2 <= bound2);
            if (d2 > max_disp2) max_disp2 = d2;
        }
        auto before = thickness_squared(gc);
        auto after = thickness_squared(snapped);
        REQUIRE(before.has_value());
        REQUIRE(after.has_value());
        // sqrt(after) >= sqrt(before) - 2*sqrt(max_disp2): triangle inequality
        Rat two_disp = 2 * sqrt_upper_bound(max_disp2, 24);
        CHECK(sqrt_leq_sqrt_plus(*before, *after, two_disp));
    }
    CHECK(done > 10);
}

TEST_CASE("radius experiment smoke") {
    EmbedParams base;
    base.ambient = 3;
    base.restarts = 24;
    RadiusExperiment exp = radius_experiment({8}, 4, base, 5);
    REQUIRE(exp.rows.size() == 1);
    CHECK(exp.rows[0].success);
    CHECK(exp.rows[0].vertices == 8);
}
