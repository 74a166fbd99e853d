#include "doctest.h"
#include "plbord/error.hpp"
#include "plbord/geometry.hpp"
#include "plbord/rng.hpp"

using namespace plbord;

namespace {
Point pt(std::initializer_list<long> xs) {
    Point p;
    for (long x : xs) p.push_back(Rat(x));
    return p;
}
Point ptq(std::initializer_list<const char*> xs) {
    Point p;
    for (const char* x : xs) p.push_back(rat_from_string(x));
    return p;
}
}  // namespace

TEST_CASE("rational helpers") {
    CHECK(rat_to_string(rat_from_string("3/6")) == "1/2");
    CHECK(rat_to_string(rat_from_string("0.25")) == "1/4");
    CHECK(rat_to_string(rat_from_string("-1.5")) == "-3/2");
    CHECK(rat_to_string(rat_from_string("7")) == "7");
    CHECK(round_half_up(rat_from_string("1/2")) == 1);
    CHECK(round_half_up(rat_from_string("-1/2")) == 0);
    CHECK(round_half_up(rat_from_string("-3/2")) == -1);
    CHECK(compare_sqrt(Rat(2), Rat(3, 2)) < 0);      // sqrt(2) < 1.5
    CHECK(compare_sqrt(Rat(9, 4), Rat(3, 2)) == 0);  // sqrt(9/4) = 3/2
    CHECK(sqrt_leq_sqrt_plus(Rat(4), Rat(1), Rat(1)));        // 2 <= 1 + 1
    CHECK_FALSE(sqrt_leq_sqrt_plus(Rat(9), Rat(1), Rat(1)));  // 3 > 2
    Rat up = sqrt_upper_bound(Rat(2));
    Rat lo = sqrt_lower_bound(Rat(2));
    CHECK(lo * lo <= 2);
    CHECK(up * up >= 2);
    CHECK(up - lo < Rat(1, 1000));
}

TEST_CASE("linear algebra") {
    Matrix m(2, 2);
    m.at(0, 0) = 1;
    m.at(0, 1) = 2;
    m.at(1, 0) = 3;
    m.at(1, 1) = 4;
    auto sol = solve_unique(m, {Rat(5), Rat(11)});
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] == 1);
    CHECK((*sol)[1] == 2);
    auto inv = inverse(m);
    REQUIRE(inv.has_value());
    CHECK(inv->at(0, 0) == -2);

    Matrix sing(2, 2);
    sing.at(0, 0) = 1;
    sing.at(0, 1) = 2;
    sing.at(1, 0) = 2;
    sing.at(1, 1) = 4;
    CHECK(rank(sing) == 1);
    CHECK_FALSE(solve_unique(sing, {Rat(1), Rat(1)}).has_value());

    auto aff = solve_affine(sing, {Rat(3), Rat(6)});
    REQUIRE(aff.has_value());
    CHECK(aff->nullspace.size() == 1);
}

TEST_CASE("barycentric coordinates") {
    std::vector<Point> tri = {pt({0, 0, 0}), pt({2, 0, 0}), pt({0, 2, 0})};
    BaryEval eval(tri);
    auto lam = eval.coords(ptq({"1/2", "1/2", "0"}));
    REQUIRE(lam.has_value());
    CHECK((*lam)[0] == Rat(1, 2));
    CHECK((*lam)[1] == Rat(1, 4));
    CHECK((*lam)[2] == Rat(1, 4));
    CHECK_FALSE(eval.coords(pt({0, 0, 1})).has_value());  // off the plane
    CHECK(point_in_simplex(ptq({"1/2", "1/2", "0"}), tri));
    CHECK_FALSE(point_in_simplex(pt({3, 0, 0}), tri));
}

TEST_CASE("simplex distances") {
    // two unit-separated parallel segments
    std::vector<Point> a = {pt({0, 0}), pt({1, 0})};
    std::vector<Point> b = {pt({0, 1}), pt({1, 1})};
    CHECK(simplex_distance_squared(a, b) == 1);

    // unit square with a diagonal: distance from diagonal to opposite vertex
    std::vector<Point> diag = {pt({0, 0}), pt({1, 1})};
    std::vector<Point> corner = {pt({1, 0})};
    CHECK(simplex_distance_squared(diag, corner) == Rat(1, 2));

    // skew segments in 3d
    std::vector<Point> s1 = {pt({0, 0, 0}), pt({1, 0, 0})};
    std::vector<Point> s2 = {ptq({"1/2", "-1/2", "1"}), ptq({"1/2", "1/2", "1"})};
    CHECK(simplex_distance_squared(s1, s2) == 1);

    // touching simplices have distance 0
    std::vector<Point> t1 = {pt({0, 0}), pt({2, 0}), pt({0, 2})};
    std::vector<Point> t2 = {pt({1, 1}), pt({3, 3})};
    CHECK(simplex_distance_squared(t1, t2) == 0);
}

TEST_CASE("simplex intersections") {
    std::vector<Point> tri = {pt({0, 0}), pt({4, 0}), pt({0, 4})};
    std::vector<Point> seg = {pt({1, -1}), pt({1, 5})};
    auto inter = simplex_intersection(tri, seg);
    REQUIRE(inter.size() == 2);
    CHECK(inter[0] == pt({1, 0}));
    CHECK(inter[1] == pt({1, 3}));

    // disjoint
    std::vector<Point> far = {pt({10, 10}), pt({11, 11})};
    CHECK(simplex_intersection(tri, far).empty());

    // shared edge between two triangles
    std::vector<Point> t2 = {pt({0, 0}), pt({4, 0}), pt({2, -3})};
    auto shared = simplex_intersection(tri, t2);
    REQUIRE(shared.size() == 2);
    CHECK(shared[0] == pt({0, 0}));
    CHECK(shared[1] == pt({4, 0}));

    // triangle clipped by tetrahedron in 3d
    std::vector<Point> tet = {pt({0, 0, 0}), pt({2, 0, 0}), pt({0, 2, 0}), pt({0, 0, 2})};
    std::vector<Point> tri3 = {pt({-1, 1, 1}), pt({3, 1, 1}), ptq({"1", "1", "-3"})};
    auto poly = simplex_intersection(tet, tri3);
    CHECK(poly.size() >= 3);
    for (const Point& p : poly) CHECK(point_in_simplex(p, tet));
}

TEST_CASE("exact intersection agrees with sampled test on small instances") {
    Rng rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        // random small simplices in R^3 with coordinates in [-2, 2]/2
        auto rnd_pt = [&]() {
            Point p(3);
            for (int i = 0; i < 3; ++i) p[static_cast<std::size_t>(i)] = Rat(rng.between(-4, 4), 2);
            return p;
        };
        std::size_t na = 1 + rng.below(3), nb = 1 + rng.below(3);
        std::vector<Point> A, B;
        for (std::size_t i = 0; i < na; ++i) A.push_back(rnd_pt());
        for (std::size_t i = 0; i < nb; ++i) B.push_back(rnd_pt());
        if (!affinely_independent(A) || !affinely_independent(B)) continue;
        bool exact_hit = !simplex_intersection(A, B).empty();
        bool exact_dist_zero = simplex_distance_squared(A, B) == 0;
        CHECK(exact_hit == exact_dist_zero);
        // sampled probe: random convex combinations of A inside B
        bool sampled_hit = false;
        for (int probe = 0; probe < 200 && !sampled_hit; ++probe) {
            std::vector<Rat> w(na);
            Rat total = 0;
            for (auto& x : w) {
                x = Rat(rng.between(0, 8));
                total += x;
            }
            if (total == 0) continue;
            Point x(3, Rat(0));
            for (std::size_t i = 0; i < na; ++i)
                x = add(x, scale(A[i], w[i] / total));
            if (point_in_simplex(x, B)) sampled_hit = true;
        }
        if (sampled_hit) CHECK(exact_hit);
    }
}

TEST_CASE("geometric complex validation") {
    GeometricComplex gc;
    gc.ambient = 2;
    gc.complex = closure({Simplex({0, 1, 2}), Simplex({2, 3})});
    gc.coords[0] = pt({0, 0});
    gc.coords[1] = pt({2, 0});
    gc.coords[2] = pt({0, 2});
    gc.coords[3] = pt({-1, 3});
    gc.validate(true);

    // crossing edges are rejected
    GeometricComplex bad;
    bad.ambient = 2;
    bad.complex = closure({Simplex({0, 1}), Simplex({2, 3})});
    bad.coords[0] = pt({0, 0});
    bad.coords[1] = pt({2, 2});
    bad.coords[2] = pt({0, 2});
    bad.coords[3] = pt({2, 0});
    CHECK_THROWS_AS(bad.validate(true), Error);

    // degenerate triangle
    GeometricComplex degen;
    degen.ambient = 2;
    degen.complex = closure({Simplex({0, 1, 2})});
    degen.coords[0] = pt({0, 0});
    degen.coords[1] = pt({1, 1});
    degen.coords[2] = pt({2, 2});
    CHECK_THROWS_AS(degen.validate(false), Error);
}

TEST_CASE("translation invariance of distances") {
    Rng rng(1234);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Point> A = {pt({0, 0, 0}), pt({1, 0, 0})};
        std::vector<Point> B = {pt({0, 2, 0}), pt({1, 2, 1})};
        Point shift(3);
        for (int i = 0; i < 3; ++i) shift[static_cast<std::size_t>(i)] = Rat(rng.between(-9, 9));
        auto shifted = [&](const std::vector<Point>& v) {
            std::vector<Point> out;
            for (const Point& p : v) out.push_back(add(p, shift));
            return out;
        };
        CHECK(simplex_distance_squared(A, B) ==
              simplex_distance_squared(shifted(A), shifted(B)));
    }
}
