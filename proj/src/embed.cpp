#include "plbord/embed.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "plbord/error.hpp"
#include "plbord/parallel.hpp"

namespace plbord {

namespace {

// p + q * sqrt(disc), disc >= 0 fixed per computation
struct Quad {
    Rat p, q;

    Quad operator+(const Quad& o) const { return {p + o.p, q + o.q}; }
    Quad operator-(const Quad& o) const { return {p - o.p, q - o.q}; }
    Quad mul(const Quad& o, const Rat& disc) const {
        return {p * o.p + q * o.q * disc, p * o.q + q * o.p};
    }
};

int sign_quad(const Quad& x, const Rat& disc) {
    // sign of p + q*sqrt(disc)
    int sp = sgn(x.p);
    int sq = sgn(x.q);
    if (disc == 0 || sq == 0) return sp;
    if (sp == sq) return sp;
    if (sp == 0) return sq;
    // opposite signs: compare p^2 vs q^2*disc
    Rat lhs = x.p * x.p;
    Rat rhs = x.q * x.q * disc;
    int c = cmp(lhs, rhs);
    if (c == 0) return 0;
    return (c > 0) ? sp : sq;
}

// exact: d / sqrt(a*b) <= c, with a,b > 0
bool cos_leq(const Rat& d, const Rat& ab, const Rat& c) {
    if (d <= 0) {
        if (c >= 0) return true;
        // -|d|/sqrt(ab) <= c < 0  <=>  d^2 >= c^2 * ab
        return d * d >= c * c * ab;
    }
    if (c < 0) return false;
    return d * d <= c * c * ab;
}

// certified rational upper bound for d / sqrt(ab)
Rat cos_upper(const Rat& d, const Rat& ab) {
    if (d == 0) return Rat(0);
    Rat mag2 = d * d / ab;
    Rat bound = sqrt_upper_bound(mag2, 24);
    return d > 0 ? bound : -sqrt_lower_bound(mag2, 24);
}

}  // namespace

Rat cos_upper_to_rational_bound(double alpha_radians) {
    double c = std::cos(alpha_radians);
    // round towards -inf at 1e-9 granularity: bound <= cos(alpha)
    double scaled = std::floor(c * 1e9);
    return Rat(static_cast<long>(scaled), 1000000000L);
}

void EmbedParams::derive(int complex_dim, std::int64_t vertex_count) {
    const int n = ambient;
    auto ceil_sqrt = [](int v) {
        int r = 1;
        while (r * r < v) ++r;
        return r;
    };
    if (cos_alpha == 0) cos_alpha = cos_upper_to_rational_bound(alpha);
    if (lattice == 0) {
        int inv_alpha = static_cast<int>(std::ceil(1.0 / alpha));
        lattice = Rat(1, 4 * ceil_sqrt(n) * inv_alpha);
    }
    const int codim = n - complex_dim;
    auto root = [&](double base) {
        return std::ceil(std::pow(base, 1.0 / std::max(1, codim)));
    };
    if (edge_limit == 0) {
        // 4 * lambda * sqrt(n) * (diameter heuristic)
        double heur = root(static_cast<double>(vertex_count) + 8.0);
        edge_limit = lattice * Rat(4 * ceil_sqrt(n)) * Rat(static_cast<long>(heur));
        if (edge_limit < 2) edge_limit = 2;
    }
    if (radius == 0) {
        radius = Rat(static_cast<long>(root(3.0 * static_cast<double>(vertex_count))) + 4);
    }
}

std::optional<Rat> thickness_squared(const GeometricComplex& gc) {
    std::vector<Simplex> faces = gc.complex.all_faces();
    std::optional<Rat> best;
    std::vector<Box> boxes;
    std::vector<std::vector<Point>> pts;
    boxes.reserve(faces.size());
    for (const Simplex& f : faces) {
        pts.push_back(gc.simplex_points(f));
        boxes.push_back(bounding_box(pts.back()));
    }
    for (std::size_t i = 0; i < faces.size(); ++i) {
        for (std::size_t j = i + 1; j < faces.size(); ++j) {
            if (!faces[i].intersect(faces[j]).empty()) continue;
            if (best && box_distance_squared(boxes[i], boxes[j]) >= *best) continue;
            Rat d = simplex_distance_squared(pts[i], pts[j]);
            if (!best || d < *best) best = d;
        }
    }
    return best;
}

bool thickness_at_least(const GeometricComplex& gc, const Rat& t2) {
    std::vector<Simplex> faces = gc.complex.all_faces();
    std::vector<Box> boxes;
    std::vector<std::vector<Point>> pts;
    for (const Simplex& f : faces) {
        pts.push_back(gc.simplex_points(f));
        boxes.push_back(bounding_box(pts.back()));
    }
    for (std::size_t i = 0; i < faces.size(); ++i)
        for (std::size_t j = i + 1; j < faces.size(); ++j) {
            if (!faces[i].intersect(faces[j]).empty()) continue;
            if (box_distance_squared(boxes[i], boxes[j]) >= t2) continue;
            if (simplex_distance_squared(pts[i], pts[j]) < t2) return false;
        }
    return true;
}

namespace {

// directions of the link of s, radially projected orthogonal to aff(s)
struct ProjectedLink {
    std::vector<std::vector<Point>> cones;  // 1 generator (vertex) or 2 (edge)
    std::vector<Simplex> labels;
};

ProjectedLink projected_link(const GeometricComplex& gc, const Simplex& s) {
    Complex lk = link(gc.complex, s);
    if (lk.dim() > 1)
        fail("unsupported", "link thickness implemented for link dimension <= 1");
    ProjectedLink out;
    auto spts = gc.simplex_points(s);
    Point bary = spts[0];
    for (std::size_t i = 1; i < spts.size(); ++i) bary = add(bary, spts[i]);
    bary = scale(bary, Rat(1, static_cast<long>(spts.size())));
    // orthogonal projection away from span(s - bary)
    std::vector<Point> dirs;
    for (std::size_t i = 1; i < spts.size(); ++i) dirs.push_back(sub(spts[i], spts[0]));
    const std::size_t m = dirs.size();
    Matrix gram(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) gram.at(i, j) = dot(dirs[i], dirs[j]);
    std::optional<Matrix> gram_inv = m ? inverse(gram) : std::nullopt;
    auto project = [&](const Point& v) {
        if (m == 0) return v;
        std::vector<Rat> rhs(m);
        for (std::size_t i = 0; i < m; ++i) rhs[i] = dot(dirs[i], v);
        std::vector<Rat> coef(m, Rat(0));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) coef[i] += gram_inv->at(i, j) * rhs[j];
        Point out_p = v;
        for (std::size_t i = 0; i < m; ++i) out_p = sub(out_p, scale(dirs[i], coef[i]));
        return out_p;
    };
    std::unordered_map<Vertex, Point> dir_of;
    for (Vertex v : lk.vertices()) {
        Point d = project(sub(gc.point(v), bary));
        if (norm2(d) == 0)
            fail("degenerate-simplex",
                 "link vertex " + std::to_string(v) + " projects to zero at " + s.str());
        dir_of[v] = std::move(d);
    }
    for (const Simplex& f : lk.all_faces()) {
        std::vector<Point> gens;
        for (Vertex v : f.vertices()) gens.push_back(dir_of.at(v));
        if (gens.size() == 2) {
            Matrix g2(2, 2);
            g2.at(0, 0) = norm2(gens[0]);
            g2.at(1, 1) = norm2(gens[1]);
            g2.at(0, 1) = g2.at(1, 0) = dot(gens[0], gens[1]);
            if (!inverse(g2))
                fail("degenerate-simplex", "projected link edge degenerate at " + s.str());
        }
        out.cones.push_back(std::move(gens));
        out.labels.push_back(f);
    }
    return out;
}

// exact test: min angle between cone(U) and cone(W) interior candidates has
// cos <= c; boundary candidates are covered by smaller face pairs.
// Also accumulate a certified upper bound on the cosine when `bound` given.
bool interior_candidates_leq(const std::vector<Point>& U, const std::vector<Point>& W,
                             const Rat& c, Rat* bound, double* best_angle) {
    auto note = [&](double cosv) {
        if (best_angle) {
            double ang = std::acos(std::max(-1.0, std::min(1.0, cosv)));
            if (ang < *best_angle) *best_angle = ang;
        }
    };
    bool ok = true;
    if (U.size() == 1 && W.size() == 1) {
        Rat d = dot(U[0], W[0]);
        Rat ab = norm2(U[0]) * norm2(W[0]);
        if (!cos_leq(d, ab, c)) ok = false;
        if (bound) {
            Rat up = cos_upper(d, ab);
            if (up > *bound) *bound = up;
        }
        note(rat_to_double(d) / std::sqrt(rat_to_double(ab)));
        return ok;
    }
    if (U.size() == 1 || W.size() == 1) {
        const Point& u = U.size() == 1 ? U[0] : W[0];
        const std::vector<Point>& wedge = U.size() == 1 ? W : U;
        // projection of u on span(wedge)
        Matrix g(2, 2);
        g.at(0, 0) = norm2(wedge[0]);
        g.at(1, 1) = norm2(wedge[1]);
        g.at(0, 1) = g.at(1, 0) = dot(wedge[0], wedge[1]);
        std::vector<Rat> rhs = {dot(wedge[0], u), dot(wedge[1], u)};
        auto coef = solve_unique(g, rhs);
        if (!coef) return ok;  // degenerate wedge was rejected earlier
        if ((*coef)[0] <= 0 || (*coef)[1] <= 0) return ok;  // not interior
        Point p = add(scale(wedge[0], (*coef)[0]), scale(wedge[1], (*coef)[1]));
        Rat p2 = norm2(p);
        if (p2 == 0) return ok;
        // cos = |p|/|u| > 0
        Rat u2 = norm2(u);
        if (c < 0) {
            ok = false;
        } else if (p2 > c * c * u2) {
            ok = false;
        }
        if (bound) {
            Rat up = sqrt_upper_bound(p2 / u2, 24);
            if (up > *bound) *bound = up;
        }
        note(std::sqrt(rat_to_double(p2) / rat_to_double(u2)));
        return ok;
    }
    // wedge-wedge: stationary interior pairs are generalized eigenpairs of
    // S Gw^{-1} S^T a = lambda Gu a with lambda = cos^2
    Matrix gu(2, 2), gw(2, 2), s(2, 2);
    gu.at(0, 0) = norm2(U[0]);
    gu.at(1, 1) = norm2(U[1]);
    gu.at(0, 1) = gu.at(1, 0) = dot(U[0], U[1]);
    gw.at(0, 0) = norm2(W[0]);
    gw.at(1, 1) = norm2(W[1]);
    gw.at(0, 1) = gw.at(1, 0) = dot(W[0], W[1]);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) s.at(i, j) = dot(U[i], W[j]);
    auto gw_inv = inverse(gw);
    if (!gw_inv) return ok;
    // M = S Gw^-1 S^T
    Matrix m(2, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            Rat acc = 0;
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l) acc += s.at(i, k) * gw_inv->at(k, l) * s.at(j, l);
            m.at(i, j) = acc;
        }
    // det(M - lambda Gu) = A lambda^2 - B lambda + C
    Rat A = gu.at(0, 0) * gu.at(1, 1) - gu.at(0, 1) * gu.at(1, 0);
    Rat B = m.at(0, 0) * gu.at(1, 1) + m.at(1, 1) * gu.at(0, 0) - m.at(0, 1) * gu.at(1, 0) -
            m.at(1, 0) * gu.at(0, 1);
    Rat C = m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
    Rat disc = B * B - 4 * A * C;
    if (disc < 0) return ok;  // numerically impossible; defensive skip is exact here
    for (int which = 0; which < 2; ++which) {
        // lambda = (B ± sqrt(disc)) / (2A)
        Quad lambda{B / (2 * A), (which == 0 ? Rat(1) : Rat(-1)) / (2 * A)};
        // eigenvector rows of (M - lambda Gu)
        Quad r00 = Quad{m.at(0, 0), 0} - lambda.mul({gu.at(0, 0), 0}, disc);
        Quad r01 = Quad{m.at(0, 1), 0} - lambda.mul({gu.at(0, 1), 0}, disc);
        Quad r10 = Quad{m.at(1, 0), 0} - lambda.mul({gu.at(1, 0), 0}, disc);
        Quad r11 = Quad{m.at(1, 1), 0} - lambda.mul({gu.at(1, 1), 0}, disc);
        Quad a0, a1;
        if (sign_quad(r00, disc) != 0 || sign_quad(r01, disc) != 0) {
            a0 = Quad{0, 0} - r01;
            a1 = r00;
        } else {
            a0 = Quad{0, 0} - r11;
            a1 = r10;
        }
        int s0 = sign_quad(a0, disc), s1 = sign_quad(a1, disc);
        if (s0 == 0 || s1 == 0 || s0 != s1) continue;  // not strictly interior
        if (s0 < 0) {
            a0 = Quad{0, 0} - a0;
            a1 = Quad{0, 0} - a1;
        }
        // b = Gw^{ -1} S^T a
        Quad t0 = a0.mul({s.at(0, 0), 0}, disc) + a1.mul({s.at(1, 0), 0}, disc);
        Quad t1 = a0.mul({s.at(0, 1), 0}, disc) + a1.mul({s.at(1, 1), 0}, disc);
        Quad b0 = t0.mul({gw_inv->at(0, 0), 0}, disc) + t1.mul({gw_inv->at(0, 1), 0}, disc);
        Quad b1 = t0.mul({gw_inv->at(1, 0), 0}, disc) + t1.mul({gw_inv->at(1, 1), 0}, disc);
        int sb0 = sign_quad(b0, disc), sb1 = sign_quad(b1, disc);
        if (sb0 == 0 || sb1 == 0 || sb0 != sb1) continue;
        // d = a^T S b ; flipping b's sign if needed must leave cos > 0
        Quad d = a0.mul(b0.mul({s.at(0, 0), 0}, disc), disc);
        d = d + a0.mul(b1.mul({s.at(0, 1), 0}, disc), disc);
        d = d + a1.mul(b0.mul({s.at(1, 0), 0}, disc), disc);
        d = d + a1.mul(b1.mul({s.at(1, 1), 0}, disc), disc);
        int sd = sign_quad(d, disc);
        if (sb0 < 0) sd = -sd;  // flip b into the cone
        if (sd <= 0) continue;  // stationary pair with nonpositive cosine
        // candidate: cos^2 = lambda, cos > 0. Check sqrt(lambda) <= c.
        if (c < 0) {
            ok = false;
        } else {
            // lambda <= c^2  <=>  ± sqrt(disc) <= 2 A c^2 - B
            Rat rhs = 2 * A * c * c - B;
            bool leq;
            if (which == 0) {
                leq = rhs >= 0 && disc <= rhs * rhs;
            } else {
                if (rhs >= 0)
                    leq = true;  // -sqrt(disc) <= rhs
                else
                    leq = disc >= rhs * rhs;
            }
            if (!leq) ok = false;
        }
        double lam_d = (rat_to_double(B) +
                        (which == 0 ? 1.0 : -1.0) * std::sqrt(std::max(0.0, rat_to_double(disc)))) /
                       (2.0 * rat_to_double(A));
        if (lam_d > 0) {
            double cosv = std::sqrt(std::min(1.0, lam_d));
            note(cosv);
            if (bound) {
                // certified upper bound on sqrt(lambda)
                Rat lam_up = (B + sqrt_upper_bound(disc, 24)) / (2 * A);
                if (which == 1) lam_up = (B - sqrt_lower_bound(disc, 24)) / (2 * A);
                if (lam_up > 0) {
                    Rat up = sqrt_upper_bound(lam_up, 24);
                    if (up > *bound) *bound = up;
                }
            }
        }
    }
    return ok;
}

bool link_pairs_check(const GeometricComplex& gc, const Simplex& s, const Rat& c, Rat* bound,
                      double* best_angle, bool* has_pair) {
    ProjectedLink pl = projected_link(gc, s);
    bool ok = true;
    for (std::size_t i = 0; i < pl.cones.size(); ++i)
        for (std::size_t j = i + 1; j < pl.cones.size(); ++j) {
            if (!pl.labels[i].intersect(pl.labels[j]).empty()) continue;
            if (has_pair) *has_pair = true;
            if (!interior_candidates_leq(pl.cones[i], pl.cones[j], c, bound, best_angle))
                ok = false;
        }
    return ok;
}

}  // namespace

LinkThicknessReport link_thickness(const GeometricComplex& gc, const Simplex& s) {
    if (!gc.complex.contains(s)) fail("absent-simplex", "link_thickness: " + s.str());
    if (link(gc.complex, s).empty() && s.dim() == gc.complex.dim())
        fail("codimension-zero", "link thickness undefined for top simplex " + s.str());
    LinkThicknessReport rep;
    rep.min_angle = 4.0;  // > pi sentinel
    rep.cos_bound = -1;
    bool has_pair = false;
    link_pairs_check(gc, s, Rat(2), &rep.cos_bound, &rep.min_angle, &has_pair);
    rep.has_pair = has_pair;
    if (!has_pair) {
        rep.min_angle = 0;
        rep.cos_bound = -1;
    }
    return rep;
}

bool link_thickness_at_least(const GeometricComplex& gc, const Simplex& s, const Rat& cos_bound) {
    return link_pairs_check(gc, s, cos_bound, nullptr, nullptr, nullptr);
}

bool all_links_at_least(const GeometricComplex& gc, const Rat& cos_bound) {
    const int top = gc.complex.dim();
    for (const Simplex& f : gc.complex.all_faces()) {
        if (f.dim() == top) continue;
        if (!link_thickness_at_least(gc, f, cos_bound)) return false;
    }
    return true;
}

GeometricComplex snap_to_grid(const GeometricComplex& gc, const Rat& lambda) {
    if (lambda <= 0) fail("domain", "lattice side must be positive");
    GeometricComplex out;
    out.complex = gc.complex;
    out.ambient = gc.ambient;
    std::unordered_map<std::size_t, std::vector<Vertex>> seen;
    for (const auto& [v, p] : gc.coords) {
        Point q(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) {
            mpz_class k = round_half_up(p[i] / lambda);
            q[i] = Rat(k) * lambda;
        }
        out.coords[v] = std::move(q);
    }
    // merged vertices?
    std::map<Point, Vertex> by_point;
    for (const auto& [v, p] : out.coords) {
        auto [it, fresh] = by_point.try_emplace(p, v);
        if (!fresh)
            fail("snap-merge", "vertices " + std::to_string(it->second) + " and " +
                                   std::to_string(v) + " snap to the same lattice point");
    }
    for (const Simplex& m : out.complex.maximal()) {
        auto pts = out.simplex_points(m);
        if (!affinely_independent(pts))
            fail("snap-degenerate", "simplex " + m.str() + " degenerates under snapping");
    }
    return out;
}

Rat max_edge_squared(const GeometricComplex& gc) {
    Rat best = 0;
    for (const Simplex& e : gc.complex.faces_of_dim(1)) {
        Rat d = norm2(sub(gc.point(e[0]), gc.point(e[1])));
        if (d > best) best = d;
    }
    return best;
}

bool on_lattice(const GeometricComplex& gc, const Rat& lambda) {
    for (const auto& [v, p] : gc.coords)
        for (const Rat& x : p) {
            Rat q = x / lambda;
            if (q.get_den() != 1) return false;
        }
    return true;
}

Rat max_radius_squared(const GeometricComplex& gc) {
    Rat best = 0;
    for (const auto& [v, p] : gc.coords) {
        Rat d = norm2(p);
        if (d > best) best = d;
    }
    return best;
}

VerifyOutcome verify_embedding(const GeometricComplex& gc, const EmbedParams& params) {
    VerifyOutcome out;
    try {
        gc.validate(true);
    } catch (const Error& e) {
        out.violated = std::string("injectivity: ") + e.what();
        return out;
    }
    Rat t2 = params.thickness * params.thickness;
    if (!thickness_at_least(gc, t2)) {
        out.violated = "thickness below target";
        return out;
    }
    if (!all_links_at_least(gc, params.cos_alpha)) {
        out.violated = "link thickness below target";
        return out;
    }
    if (max_edge_squared(gc) > params.edge_limit * params.edge_limit) {
        out.violated = "edge length above limit";
        return out;
    }
    if (!on_lattice(gc, params.lattice)) {
        out.violated = "vertex off lattice";
        return out;
    }
    if (max_radius_squared(gc) > params.radius * params.radius) {
        out.violated = "vertex outside ball";
        return out;
    }
    out.ok = true;
    return out;
}

namespace {

double dist2_point_point_d(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
    return s;
}

double dist2_point_segment_d(const std::vector<double>& p, const std::vector<double>& a,
                             const std::vector<double>& b) {
    double ab2 = 0, ap_ab = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double d = b[i] - a[i];
        ab2 += d * d;
        ap_ab += (p[i] - a[i]) * d;
    }
    double t = ab2 > 0 ? ap_ab / ab2 : 0;
    t = std::max(0.0, std::min(1.0, t));
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double proj = a[i] + t * (b[i] - a[i]);
        s += (p[i] - proj) * (p[i] - proj);
    }
    return s;
}

double dist2_segment_segment_d(const std::vector<double>& a0, const std::vector<double>& a1,
                               const std::vector<double>& b0, const std::vector<double>& b1) {
    // coarse sampled lower estimate; used only as a prefilter with margin
    double best = 1e300;
    const int steps = 8;
    for (int i = 0; i <= steps; ++i) {
        double t = static_cast<double>(i) / steps;
        std::vector<double> p(a0.size());
        for (std::size_t k = 0; k < p.size(); ++k) p[k] = a0[k] + t * (a1[k] - a0[k]);
        best = std::min(best, dist2_point_segment_d(p, b0, b1));
    }
    return best;
}

struct Placer {
    const Complex& c;
    const EmbedParams& p;
    GeometricComplex gc;
    std::unordered_map<Vertex, std::vector<double>> dcoords;
    std::unordered_map<Vertex, std::vector<Vertex>> adj;
    std::vector<Vertex> order;  // BFS placement order
    double lattice_d;
    long radius_steps;
    double t2_d;
    double margin;

    explicit Placer(const Complex& complex, const EmbedParams& params) : c(complex), p(params) {
        gc.ambient = p.ambient;
        gc.complex = complex;
        for (const Simplex& e : c.faces_of_dim(1)) {
            adj[e[0]].push_back(e[1]);
            adj[e[1]].push_back(e[0]);
        }
        for (auto& [v, nbrs] : adj) std::sort(nbrs.begin(), nbrs.end());
        // BFS order over components, roots by increasing id
        std::unordered_set<Vertex> seen;
        for (Vertex root : c.vertices()) {
            if (seen.count(root)) continue;
            std::vector<Vertex> queue = {root};
            seen.insert(root);
            for (std::size_t head = 0; head < queue.size(); ++head) {
                Vertex v = queue[head];
                order.push_back(v);
                auto it = adj.find(v);
                if (it == adj.end()) continue;
                for (Vertex w : it->second)
                    if (seen.insert(w).second) queue.push_back(w);
            }
        }
        lattice_d = rat_to_double(p.lattice);
        radius_steps = static_cast<long>(rat_to_double(p.radius / p.lattice));
        t2_d = rat_to_double(p.thickness * p.thickness);
        margin = 1e-6 * (1.0 + t2_d);
        // sampled segment-segment estimates overshoot by at most half the
        // sample spacing; widen their skip threshold accordingly
        double t = std::sqrt(t2_d) + rat_to_double(p.edge_limit) / 16.0;
        seg_skip = t * t + margin;
    }
    double seg_skip = 0;

    // exact incremental feasibility of placing v at site q; double distances
    // prefilter, exact confirmation inside the uncertainty band
    bool feasible(Vertex v, const Point& q, const std::vector<double>& qd) const {
        if (norm2(q) > p.radius * p.radius) return false;
        Rat t2 = p.thickness * p.thickness;
        Rat ell2 = p.edge_limit * p.edge_limit;
        // collect placed neighbors of v
        std::vector<Vertex> placed_nbrs;
        if (auto it = adj.find(v); it != adj.end())
            for (Vertex w : it->second)
                if (gc.coords.count(w)) placed_nbrs.push_back(w);
        for (Vertex w : placed_nbrs) {
            Rat e2 = norm2(sub(q, gc.point(w)));
            if (e2 > ell2 || e2 == 0) return false;
        }
        // new faces: point {v}, edges {v,w}
        std::vector<std::vector<Point>> new_faces;
        std::vector<std::vector<Vertex>> new_ids;
        new_faces.push_back({q});
        new_ids.push_back({v});
        for (Vertex w : placed_nbrs) {
            new_faces.push_back({q, gc.point(w)});
            new_ids.push_back({v, w});
        }
        auto exact_ok = [&](std::size_t f, std::span<const Point> other) {
            return simplex_distance_squared(new_faces[f], other) >= t2;
        };
        auto approx_face = [&](std::size_t f, const std::vector<double>& a,
                               const std::vector<double>* b) {
            // distance from new face f (point or segment from qd) to {a} or {a,b}
            const std::vector<double>& fa = qd;
            if (new_ids[f].size() == 1)
                return b ? dist2_point_segment_d(fa, a, *b) : dist2_point_point_d(fa, a);
            const std::vector<double>& fb = dcoords.at(new_ids[f][1]);
            if (!b) return dist2_point_segment_d(a, fa, fb);
            return dist2_segment_segment_d(fa, fb, a, *b);
        };
        // existing faces: placed vertices and fully placed edges
        for (const auto& [w, pw] : gc.coords) {
            const auto& wd = dcoords.at(w);
            for (std::size_t f = 0; f < new_faces.size(); ++f) {
                bool shares = false;
                for (Vertex u : new_ids[f]) shares = shares || u == w;
                if (shares) continue;
                if (approx_face(f, wd, nullptr) > t2_d + margin) continue;
                if (!exact_ok(f, std::vector<Point>{pw})) return false;
            }
        }
        for (const auto& [w, nbrs] : adj) {
            if (!gc.coords.count(w)) continue;
            const auto& wd = dcoords.at(w);
            for (Vertex u : nbrs) {
                if (u <= w || !gc.coords.count(u)) continue;
                const auto& ud = dcoords.at(u);
                std::vector<Point> edge = {gc.point(w), gc.point(u)};
                for (std::size_t f = 0; f < new_faces.size(); ++f) {
                    bool shares = false;
                    for (Vertex x : new_ids[f]) shares = shares || x == w || x == u;
                    if (shares) continue;
                    double skip_at = new_ids[f].size() == 2 ? seg_skip : t2_d + margin;
                    if (approx_face(f, wd, &ud) > skip_at) continue;
                    if (!exact_ok(f, edge)) return false;
                }
            }
        }
        // link angles at v and at each placed neighbor
        if (placed_nbrs.size() >= 2) {
            for (std::size_t i = 0; i < placed_nbrs.size(); ++i)
                for (std::size_t j = i + 1; j < placed_nbrs.size(); ++j) {
                    Point a = sub(gc.point(placed_nbrs[i]), q);
                    Point b = sub(gc.point(placed_nbrs[j]), q);
                    if (!cos_leq(dot(a, b), norm2(a) * norm2(b), p.cos_alpha)) return false;
                }
        }
        for (Vertex w : placed_nbrs) {
            Point d_new = sub(q, gc.point(w));
            for (Vertex u : adj.at(w)) {
                if (u == v || !gc.coords.count(u)) continue;
                Point d_old = sub(gc.point(u), gc.point(w));
                if (!cos_leq(dot(d_new, d_old), norm2(d_new) * norm2(d_old), p.cos_alpha))
                    return false;
            }
        }
        return true;
    }

    bool run(Rng rng) {
        gc.coords.clear();
        dcoords.clear();
        const int n = p.ambient;
        for (Vertex v : order) {
            // anchor: first placed neighbor, else the origin region
            std::optional<Point> anchor;
            if (auto it = adj.find(v); it != adj.end())
                for (Vertex w : it->second)
                    if (gc.coords.count(w)) {
                        anchor = gc.point(w);
                        break;
                    }
            long span = anchor ? static_cast<long>(rat_to_double(p.edge_limit / p.lattice))
                               : radius_steps;
            if (span < 1) span = 1;
            bool placed = false;
            for (int attempt = 0; attempt < p.jitter && !placed; ++attempt) {
                Point q(n, Rat(0));
                for (int i = 0; i < n; ++i) {
                    long off = rng.between(-span, span);
                    q[i] = Rat(off) * p.lattice;
                    if (anchor) q[i] += (*anchor)[i];
                }
                std::vector<double> qd(n);
                for (int i = 0; i < n; ++i) qd[static_cast<std::size_t>(i)] = rat_to_double(q[i]);
                if (feasible(v, q, qd)) {
                    gc.coords[v] = std::move(q);
                    dcoords[v] = std::move(qd);
                    placed = true;
                }
            }
            if (!placed) return false;
        }
        return true;
    }
};

}  // namespace

EmbedResult random_thick_embed(const Complex& c, const EmbedParams& params_in) {
    EmbedResult res;
    if (c.empty()) {
        res.success = true;
        res.embedding.ambient = params_in.ambient;
        return res;
    }
    EmbedParams params = params_in;
    params.derive(c.dim(), static_cast<std::int64_t>(c.vertices().size()));
    if (params.ambient < 2 * c.dim() + 1)
        fail("ambient-too-small", "need n >= 2k+1: n=" + std::to_string(params.ambient) +
                                      ", k=" + std::to_string(c.dim()));
    Rng root(params.seed);
    for (int trial = 0; trial < params.restarts; ++trial) {
        res.trials_used = trial + 1;
        Placer placer(c, params);
        if (!placer.run(root.fork(static_cast<std::uint64_t>(trial)))) continue;
        VerifyOutcome v = verify_embedding(placer.gc, params);
        if (!v.ok) {
            res.failure = v.violated;
            res.embedding = placer.gc;
            continue;
        }
        res.success = true;
        res.embedding = placer.gc;
        auto t2 = thickness_squared(res.embedding);
        res.report.finite = t2.has_value();
        if (t2) res.report.thickness_squared = *t2;
        res.report.max_edge_squared = max_edge_squared(res.embedding);
        res.report.snapped = on_lattice(res.embedding, params.lattice);
        res.report.radius_used = params.radius;
        // link measurement across codim >= 1 faces
        Rat worst = -1;
        double worst_angle = 4.0;
        for (const Simplex& f : res.embedding.complex.all_faces()) {
            if (f.dim() == res.embedding.complex.dim()) continue;
            LinkThicknessReport lr = link_thickness(res.embedding, f);
            if (lr.has_pair) {
                if (lr.cos_bound > worst) worst = lr.cos_bound;
                if (lr.min_angle < worst_angle) worst_angle = lr.min_angle;
            }
        }
        res.report.link_cos_bound = worst;
        res.report.min_link_angle = worst_angle;
        return res;
    }
    res.failure = res.failure.empty() ? "placement budget exhausted" : res.failure;
    return res;
}

Complex random_bounded_degree_graph(std::int64_t vertices, int max_degree, Rng& rng) {
    std::vector<Simplex> simplices;
    std::vector<int> degree(static_cast<std::size_t>(vertices), 0);
    std::set<std::pair<Vertex, Vertex>> edges;
    std::int64_t target = vertices + vertices / 3;
    std::int64_t attempts = 0;
    while (static_cast<std::int64_t>(edges.size()) < target && attempts < target * 20) {
        ++attempts;
        auto a = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(vertices)));
        auto b = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(vertices)));
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        if (edges.count({a, b})) continue;
        if (degree[static_cast<std::size_t>(a)] >= max_degree ||
            degree[static_cast<std::size_t>(b)] >= max_degree)
            continue;
        edges.insert({a, b});
        ++degree[static_cast<std::size_t>(a)];
        ++degree[static_cast<std::size_t>(b)];
    }
    for (auto& [a, b] : edges) simplices.push_back(Simplex({a, b}));
    for (Vertex v = 0; v < vertices; ++v)
        if (degree[static_cast<std::size_t>(v)] == 0) simplices.push_back(Simplex({v}));
    return Complex::from_maximal(std::move(simplices));
}

RadiusExperiment radius_experiment(const std::vector<std::int64_t>& sizes, int max_degree,
                                   const EmbedParams& base, std::uint64_t seed) {
    RadiusExperiment out;
    std::vector<double> xs, ys;
    for (std::size_t idx = 0; idx < sizes.size(); ++idx) {
        std::int64_t v = sizes[idx];
        Rng rng(seed + 977 * idx);
        Complex g = random_bounded_degree_graph(v, max_degree, rng);
        EmbedParams probe = base;
        probe.derive(g.dim(), v);
        // find minimal integer radius by doubling then bisection
        auto works = [&](long r) {
            EmbedParams p2 = probe;
            p2.radius = Rat(r);
            p2.seed = seed + 31 * idx;
            EmbedResult res = random_thick_embed(g, p2);
            return res.success;
        };
        long hi = 2;
        while (hi < 4096 && !works(hi)) hi *= 2;
        long lo = hi / 2;
        while (lo + 1 < hi) {
            long mid = (lo + hi) / 2;
            if (works(mid))
                hi = mid;
            else
                lo = mid;
        }
        RadiusRow row;
        row.vertices = v;
        row.radius = Rat(hi);
        row.success = hi < 4096;
        out.rows.push_back(row);
        if (row.success) {
            xs.push_back(std::log(static_cast<double>(v)));
            ys.push_back(std::log(static_cast<double>(hi)));
        }
    }
    if (xs.size() >= 2) {
        double mx = 0, my = 0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            mx += xs[i];
            my += ys[i];
        }
        mx /= static_cast<double>(xs.size());
        my /= static_cast<double>(xs.size());
        double num = 0, den = 0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            num += (xs[i] - mx) * (ys[i] - my);
            den += (xs[i] - mx) * (xs[i] - mx);
        }
        out.slope = den > 0 ? num / den : 0;
    }
    return out;
}

}  // namespace plbord
