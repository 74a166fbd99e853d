#include <algorithm>
#include <map>

#include "doctest.h"
#include "plbord/complex.hpp"
#include "plbord/error.hpp"
#include "plbord/rng.hpp"
#include "plbord/simplicial_map.hpp"

using namespace plbord;

namespace {

Complex boundary_delta(int n) {
    // boundary of the n-simplex on vertices 0..n
    std::vector<Vertex> all;
    for (Vertex v = 0; v <= n; ++v) all.push_back(v);
    std::vector<Simplex> tops;
    for (Vertex drop = 0; drop <= n; ++drop) {
        std::vector<Vertex> f;
        for (Vertex v : all)
            if (v != drop) f.push_back(v);
        tops.push_back(Simplex(std::move(f)));
    }
    return Complex::from_maximal(std::move(tops));
}

Complex cycle(int n, Vertex base = 0) {
    std::vector<Simplex> edges;
    for (int i = 0; i < n; ++i)
        edges.push_back(Simplex::sorted({static_cast<Vertex>(base + i),
                                         static_cast<Vertex>(base + (i + 1) % n)}));
    return Complex::from_maximal(std::move(edges));
}

Complex octahedron() {
    // join of three S^0s: {0,1}*{2,3}*{4,5}
    std::vector<Simplex> tops;
    for (Vertex a : {0, 1})
        for (Vertex b : {2, 3})
            for (Vertex c : {4, 5}) tops.push_back(Simplex::sorted({a, b, c}));
    return Complex::from_maximal(std::move(tops));
}

Complex projective_plane_6() {
    // minimal 6-vertex triangulation of RP^2 (icosahedron antipodal quotient)
    std::vector<Simplex> tops = {
        Simplex({0, 1, 2}), Simplex({0, 2, 3}), Simplex({0, 3, 4}), Simplex({0, 4, 5}),
        Simplex({0, 1, 5}), Simplex({1, 2, 4}), Simplex({2, 3, 5}), Simplex::sorted({3, 4, 1}),
        Simplex::sorted({4, 5, 2}), Simplex::sorted({5, 1, 3})};
    return Complex::from_maximal(std::move(tops));
}

}  // namespace

TEST_CASE("closure basics") {
    Complex c = closure({Simplex({0, 1, 2})});
    CHECK(c.dim() == 2);
    CHECK(c.all_faces().size() == 7);

    Complex empty = closure({});
    CHECK(empty.empty());
    CHECK(empty.dim() == -1);

    Complex bd3 = boundary_delta(3);
    CHECK(bd3.all_faces().size() == 14);
    CHECK(bd3.volume() == 4);

    // redundant faces dropped from the maximal set
    Complex red = closure({Simplex({0, 1, 2}), Simplex({0, 1}), Simplex({3})});
    CHECK(red.maximal().size() == 2);

    CHECK_THROWS_AS(Simplex({1, 1, 2}), Error);
}

TEST_CASE("star and link") {
    Complex bd3 = boundary_delta(3);
    Complex lk = link(bd3, Simplex({0}));
    CHECK(lk.dim() == 1);
    CHECK(f_vector(lk) == std::vector<std::int64_t>{3, 3});
    CHECK(is_closed_pseudomanifold(lk));

    Complex lke = link(bd3, Simplex({0, 1}));
    CHECK(lke.dim() == 0);
    CHECK(lke.maximal().size() == 2);

    Complex oct = octahedron();
    Complex lkv = link(oct, Simplex({0}));
    CHECK(f_vector(lkv) == std::vector<std::int64_t>{4, 4});
    CHECK(is_closed_pseudomanifold(lkv));

    CHECK_THROWS_AS(link(bd3, Simplex({9})), Error);

    // star = simplex * link, on small complexes
    Rng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Simplex> tops;
        int nv = 4 + static_cast<int>(rng.below(5));
        for (int i = 0; i < 6; ++i) {
            std::vector<Vertex> pick;
            for (Vertex v = 0; v < nv; ++v)
                if (rng.below(3) == 0) pick.push_back(v);
            if (pick.size() >= 1 && pick.size() <= 4) tops.push_back(Simplex(std::move(pick)));
        }
        if (tops.empty()) continue;
        Complex c = Complex::from_maximal(tops);
        for (Vertex v : c.vertices()) {
            Simplex s({v});
            Complex st = star(c, s);
            Complex lk2 = link(c, s);
            Complex rebuilt = lk2.empty()
                                  ? Complex::from_maximal({s})
                                  : join(Complex::from_maximal({s}), lk2);
            CHECK(st == rebuilt);
        }
    }
}

TEST_CASE("barycentric subdivision") {
    Complex edge = closure({Simplex({0, 1})});
    Subdivision bs1 = barycentric_subdivide(edge);
    CHECK(bs1.complex.volume() == 2);
    CHECK(bs1.complex.vertices().size() == 3);

    Complex tri = closure({Simplex({0, 1, 2})});
    Subdivision bs2 = barycentric_subdivide(tri);
    CHECK(bs2.complex.volume() == 6);

    Complex bd3 = boundary_delta(3);
    Subdivision bs3 = barycentric_subdivide(bd3);
    CHECK(bs3.complex.volume() == 24);
    CHECK(euler_characteristic(bs3.complex) == euler_characteristic(bd3));
    bs3.carrier.validate();

    // carrier sends barycenters to the minimal vertex of their cell
    for (std::size_t i = 0; i < bs3.cell.size(); ++i)
        CHECK(bs3.carrier.vertex_map.at(static_cast<Vertex>(i)) == bs3.cell[i][0]);
}

TEST_CASE("product with interval") {
    Complex edge = closure({Simplex({0, 1})});
    auto prod = product_with_interval(edge);
    CHECK(prod.complex.volume() == 2);

    Complex tri = closure({Simplex({0, 1, 2})});
    CHECK(product_with_interval(tri).complex.volume() == 3);

    Complex bd3 = boundary_delta(3);
    auto pb = product_with_interval(bd3);
    CHECK(pb.complex.volume() == 3 * 4);
    CHECK(euler_characteristic(pb.complex) == euler_characteristic(bd3));

    // both ends are copies of the factor
    Complex bdry = boundary_complex(pb.complex);
    CHECK(component_count(bdry) == 2);
    CHECK(bdry.volume() == 2 * bd3.volume());
}

TEST_CASE("mapping cylinder") {
    Complex tri = closure({Simplex({0, 1, 2})});
    MappingCylinder cyl = mapping_cylinder(identity_map(tri));
    CHECK(cyl.complex.volume() == 3);
    CHECK(euler_characteristic(cyl.complex) == 1);

    // constant map boundary(Δ²) -> point gives a cone; its fibers are not
    // contractible, so the cone comes out of the Report policy only
    Complex b2 = boundary_delta(2);
    SimplicialMap constant;
    constant.source = b2;
    constant.target = closure({Simplex({0})});
    for (Vertex v : b2.vertices()) constant.vertex_map[v] = 0;
    CHECK_THROWS_AS(mapping_cylinder(constant), Error);
    MappingCylinder cone_cyl = mapping_cylinder(constant, FiberCheck::Report);
    CHECK_FALSE(cone_cyl.fiber_check_passed);
    CHECK(euler_characteristic(cone_cyl.complex) == 1);

    // hexagon -> triangle collapsing alternate edges: annulus-like, chi = 0
    Complex hexagon = cycle(6);
    Complex triangle = cycle(3, 100);
    SimplicialMap collapse;
    collapse.source = hexagon;
    collapse.target = triangle;
    collapse.vertex_map = {{0, 100}, {1, 100}, {2, 101}, {3, 101}, {4, 102}, {5, 102}};
    collapse.validate();
    MappingCylinder ann = mapping_cylinder(collapse);
    CHECK(euler_characteristic(ann.complex) == 0);
    CHECK(component_count(ann.complex) == 1);

    // disconnected fiber must be rejected: hexagon double cover of triangle
    SimplicialMap dbl;
    dbl.source = hexagon;
    dbl.target = triangle;
    dbl.vertex_map = {{0, 100}, {1, 101}, {2, 102}, {3, 100}, {4, 101}, {5, 102}};
    CHECK_THROWS_AS(mapping_cylinder(dbl), Error);
}

TEST_CASE("euler, degree_type") {
    Complex bd3 = boundary_delta(3);
    CHECK(euler_characteristic(bd3) == 2);
    CHECK(degree_type(closure({Simplex({0})})) == 1);
    CHECK(degree_type(bd3) == 7);
}

TEST_CASE("dual blocks") {
    Complex tri = closure({Simplex({0, 1, 2})});
    Complex top_dual = dual_block(tri, Simplex({0, 1, 2}));
    CHECK(top_dual.dim() == 0);
    CHECK(top_dual.maximal().size() == 1);

    Complex v_dual = dual_block(tri, Simplex({0}));
    CHECK(v_dual.dim() == 2);
    CHECK(v_dual.volume() == 2);

    Complex edge = closure({Simplex({0, 1})});
    Complex half = dual_block(edge, Simplex({0}));
    CHECK(half.dim() == 1);
    CHECK(half.volume() == 1);
}

TEST_CASE("pseudomanifolds and orientation") {
    Complex bd3 = boundary_delta(3);
    CHECK(is_closed_pseudomanifold(bd3));
    OrientResult o = orient(bd3);
    CHECK(o.orientable);
    CHECK(boundary_chain_vanishes(bd3, o.orientation));

    Complex tri = closure({Simplex({0, 1, 2})});
    CHECK_FALSE(is_closed_pseudomanifold(tri));

    Complex rp2 = projective_plane_6();
    REQUIRE(is_closed_pseudomanifold(rp2));
    CHECK(euler_characteristic(rp2) == 1);
    OrientResult o2 = orient(rp2);
    CHECK_FALSE(o2.orientable);

    Complex mixed = closure({Simplex({0, 1, 2}), Simplex({3, 4})});
    CHECK_THROWS_AS(is_closed_pseudomanifold(mixed), Error);
}

TEST_CASE("closure idempotence and bs laws (random corpus)") {
    Rng rng(0xabcdef);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<Simplex> tops;
        int nv = 3 + static_cast<int>(rng.below(5));
        int count = 1 + static_cast<int>(rng.below(5));
        for (int i = 0; i < count; ++i) {
            std::vector<Vertex> pick;
            for (Vertex v = 0; v < nv; ++v)
                if (rng.below(2) == 0) pick.push_back(v);
            if (!pick.empty() && pick.size() <= 4) tops.push_back(Simplex(std::move(pick)));
        }
        if (tops.empty()) continue;
        Complex c = Complex::from_maximal(tops);
        Complex again = Complex::from_maximal(c.maximal());
        CHECK(c == again);

        Subdivision bs = barycentric_subdivide(c);
        CHECK(euler_characteristic(bs.complex) == euler_characteristic(c));
        CHECK(component_count(bs.complex) == component_count(c));
        if (c.is_pure()) {
            // top count multiplies by (k+1)!
            std::int64_t fact = 1;
            for (int i = 2; i <= c.dim() + 1; ++i) fact *= i;
            CHECK(bs.complex.volume() == c.volume() * fact);
        }
        auto prod = product_with_interval(c);
        if (c.is_pure()) CHECK(prod.complex.volume() == (c.dim() + 1) * c.volume());
    }
}

TEST_CASE("bs degree depends only on degree type, empirically") {
    // For 2-dimensional pure complexes, degree_type(bs(c)) is a function of
    // degree_type(c) alone: complexes with equal input degree land on equal
    // output degree regardless of size.
    auto wheel = [](int n) {
        std::vector<Simplex> tops;
        for (int i = 0; i < n; ++i)
            tops.push_back(Simplex::sorted(
                {0, static_cast<Vertex>(1 + i), static_cast<Vertex>(1 + (i + 1) % n)}));
        return Complex::from_maximal(std::move(tops));
    };
    std::map<std::int64_t, std::int64_t> table;  // input degree -> output degree
    for (int n : {4, 6, 8, 12}) {
        Complex c = wheel(n);
        std::int64_t in = degree_type(c);
        std::int64_t out = degree_type(barycentric_subdivide(c).complex);
        auto it = table.find(in);
        if (it == table.end())
            table[in] = out;
        else
            CHECK(it->second == out);
    }
    // monotone in the input degree
    std::int64_t prev = 0;
    for (auto& [in, out] : table) {
        CHECK(out >= prev);
        prev = out;
    }
}

TEST_CASE("isomorphism checker") {
    Complex a = boundary_delta(3);
    std::unordered_map<Vertex, Vertex> m{{0, 10}, {1, 7}, {2, 3}, {3, 0}};
    Complex b = relabel(a, m);
    CHECK(isomorphic(a, b));
    CHECK_FALSE(isomorphic(a, octahedron()));
}
