#include "plbord/geometry.hpp"

#include <algorithm>
#include <functional>

#include "plbord/error.hpp"

namespace plbord {

Point add(const Point& a, const Point& b) {
    Point out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

Point sub(const Point& a, const Point& b) {
    Point out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

Point scale(const Point& a, const Rat& s) {
    Point out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * s;
    return out;
}

Rat dot(const Point& a, const Point& b) {
    Rat out = 0;
    for (std::size_t i = 0; i < a.size(); ++i) out += a[i] * b[i];
    return out;
}

Rat norm2(const Point& a) { return dot(a, a); }

std::size_t hash_point(const Point& p) {
    std::size_t h = 0x9e3779b9u + p.size();
    for (const Rat& q : p) h = hash_combine(h, hash_rat(q));
    return h;
}

namespace {

// row-reduce in place; returns pivot (row, col) list
std::vector<std::pair<std::size_t, std::size_t>> reduce(Matrix& m) {
    std::vector<std::pair<std::size_t, std::size_t>> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
        std::size_t piv = row;
        while (piv < m.rows && m.at(piv, col) == 0) ++piv;
        if (piv == m.rows) continue;
        if (piv != row)
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(row, j), m.at(piv, j));
        Rat d = m.at(row, col);
        for (std::size_t j = col; j < m.cols; ++j) m.at(row, j) /= d;
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == row || m.at(i, col) == 0) continue;
            Rat f = m.at(i, col);
            for (std::size_t j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.emplace_back(row, col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::size_t rank(Matrix m) { return reduce(m).size(); }

std::optional<AffineSolution> solve_affine(Matrix a, std::vector<Rat> b) {
    const std::size_t n = a.cols;
    Matrix aug(a.rows, n + 1);
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, n) = b[i];
    }
    auto pivots = reduce(aug);
    for (auto& [r, c] : pivots)
        if (c == n) return std::nullopt;  // inconsistent
    AffineSolution out;
    out.particular.assign(n, Rat(0));
    std::vector<bool> is_pivot_col(n, false);
    for (auto& [r, c] : pivots) {
        out.particular[c] = aug.at(r, n);
        is_pivot_col[c] = true;
    }
    for (std::size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot_col[free_col]) continue;
        std::vector<Rat> dir(n, Rat(0));
        dir[free_col] = 1;
        for (auto& [r, c] : pivots) dir[c] = -aug.at(r, free_col);
        out.nullspace.push_back(std::move(dir));
    }
    return out;
}

std::optional<std::vector<Rat>> solve_unique(Matrix a, std::vector<Rat> b) {
    auto sol = solve_affine(std::move(a), std::move(b));
    if (!sol || !sol->nullspace.empty()) return std::nullopt;
    return sol->particular;
}

std::optional<Matrix> inverse(Matrix m) {
    if (m.rows != m.cols) return std::nullopt;
    const std::size_t n = m.rows;
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    auto pivots = reduce(aug);
    if (pivots.size() != n) return std::nullopt;
    for (auto& [r, c] : pivots)
        if (c >= n) return std::nullopt;
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.at(i, j) = aug.at(i, n + j);
    return out;
}

std::size_t affine_rank(std::span<const Point> pts) {
    if (pts.empty()) return 0;
    const std::size_t n = pts[0].size();
    Matrix m(pts.size() - 1, n);
    for (std::size_t i = 1; i < pts.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i - 1, j) = pts[i][j] - pts[0][j];
    return rank(std::move(m)) + 1;
}

bool affinely_independent(std::span<const Point> pts) {
    return affine_rank(pts) == pts.size();
}

BaryEval::BaryEval(std::vector<Point> pts) : pts_(std::move(pts)) {
    if (pts_.empty()) fail("geometry", "empty simplex");
    const std::size_t n = pts_[0].size();
    const std::size_t m = pts_.size();
    if (!affinely_independent(pts_)) fail("degenerate-simplex", "affinely dependent vertices");
    lhs_ = Matrix(n + 1, m);
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t i = 0; i < n; ++i) lhs_.at(i, j) = pts_[j][i];
        lhs_.at(n, j) = 1;
    }
    // choose m independent rows, the affine row first
    std::vector<std::size_t> chosen;
    auto try_row = [&](std::size_t r) {
        Matrix test(chosen.size() + 1, m);
        for (std::size_t i = 0; i < chosen.size(); ++i)
            for (std::size_t j = 0; j < m; ++j) test.at(i, j) = lhs_.at(chosen[i], j);
        for (std::size_t j = 0; j < m; ++j) test.at(chosen.size(), j) = lhs_.at(r, j);
        if (rank(std::move(test)) == chosen.size() + 1) chosen.push_back(r);
    };
    try_row(n);
    for (std::size_t r = 0; r < n && chosen.size() < m; ++r) try_row(r);
    if (chosen.size() != m) fail("degenerate-simplex", "barycentric system rank deficient");
    pivot_rows_ = chosen;
    Matrix square(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) square.at(i, j) = lhs_.at(pivot_rows_[i], j);
    auto inv = inverse(std::move(square));
    if (!inv) fail("degenerate-simplex", "barycentric system not invertible");
    inv_ = std::move(*inv);
}

std::optional<std::vector<Rat>> BaryEval::coords(const Point& p) const {
    const std::size_t n = pts_[0].size();
    const std::size_t m = pts_.size();
    std::vector<Rat> rhs(m);
    for (std::size_t i = 0; i < m; ++i)
        rhs[i] = (pivot_rows_[i] == n) ? Rat(1) : p[pivot_rows_[i]];
    std::vector<Rat> lambda(m, Rat(0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) lambda[i] += inv_.at(i, j) * rhs[j];
    // consistency on the rows not used: p must lie in the affine hull
    for (std::size_t r = 0; r <= n; ++r) {
        if (std::find(pivot_rows_.begin(), pivot_rows_.end(), r) != pivot_rows_.end()) continue;
        Rat lhs_val = 0;
        for (std::size_t j = 0; j < m; ++j) lhs_val += lhs_.at(r, j) * lambda[j];
        Rat rhs_val = (r == n) ? Rat(1) : p[r];
        if (lhs_val != rhs_val) return std::nullopt;
    }
    return lambda;
}

Rat simplex_distance_squared(std::span<const Point> a, std::span<const Point> b) {
    std::optional<Rat> best;
    const std::uint32_t amask_end = 1u << a.size();
    const std::uint32_t bmask_end = 1u << b.size();
    for (std::uint32_t am = 1; am < amask_end; ++am) {
        std::vector<const Point*> fa;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (am & (1u << i)) fa.push_back(&a[i]);
        for (std::uint32_t bm = 1; bm < bmask_end; ++bm) {
            std::vector<const Point*> fb;
            for (std::size_t i = 0; i < b.size(); ++i)
                if (bm & (1u << i)) fb.push_back(&b[i]);
            const std::size_t p = fa.size() - 1, q = fb.size() - 1;
            const std::size_t vars = p + q;
            Point diff = sub(*fb[0], *fa[0]);
            if (vars == 0) {
                Rat d = norm2(diff);
                if (!best || d < *best) best = d;
                continue;
            }
            std::vector<Point> dirs;
            for (std::size_t i = 1; i <= p; ++i) dirs.push_back(sub(*fa[i], *fa[0]));
            for (std::size_t j = 1; j <= q; ++j) dirs.push_back(scale(sub(*fb[j], *fb[0]), Rat(-1)));
            Matrix gram(vars, vars);
            std::vector<Rat> rhs(vars);
            for (std::size_t i = 0; i < vars; ++i) {
                for (std::size_t j = 0; j < vars; ++j) gram.at(i, j) = dot(dirs[i], dirs[j]);
                rhs[i] = dot(dirs[i], diff);
            }
            auto sol = solve_unique(std::move(gram), std::move(rhs));
            // singular system: the same optimum reappears at a smaller face pair
            if (!sol) continue;
            Rat sum_a = 0, sum_b = 0;
            bool ok = true;
            for (std::size_t i = 0; i < p && ok; ++i) {
                if ((*sol)[i] < 0) ok = false;
                sum_a += (*sol)[i];
            }
            for (std::size_t j = 0; j < q && ok; ++j) {
                if ((*sol)[p + j] < 0) ok = false;
                sum_b += (*sol)[p + j];
            }
            if (!ok || sum_a > 1 || sum_b > 1) continue;
            Point x = *fa[0];
            for (std::size_t i = 0; i < p; ++i)
                x = add(x, scale(sub(*fa[i + 1], *fa[0]), (*sol)[i]));
            Point y = *fb[0];
            for (std::size_t j = 0; j < q; ++j)
                y = add(y, scale(sub(*fb[j + 1], *fb[0]), (*sol)[p + j]));
            Rat d = norm2(sub(x, y));
            if (!best || d < *best) best = d;
        }
    }
    if (!best) fail("geometry", "distance enumeration found no candidate");
    return *best;
}

namespace {

// vertex enumeration of {x in R^d : A x <= b} for small d by basis enumeration
std::vector<std::vector<Rat>> enumerate_vertices(const Matrix& a, const std::vector<Rat>& b) {
    const std::size_t d = a.cols;
    const std::size_t m = a.rows;
    std::vector<std::vector<Rat>> verts;
    if (d == 0) return {{}};
    std::vector<std::size_t> comb(d);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
        if (depth == d) {
            Matrix sq(d, d);
            std::vector<Rat> rhs(d);
            for (std::size_t i = 0; i < d; ++i) {
                for (std::size_t j = 0; j < d; ++j) sq.at(i, j) = a.at(comb[i], j);
                rhs[i] = b[comb[i]];
            }
            auto sol = solve_unique(std::move(sq), std::move(rhs));
            if (!sol) return;
            for (std::size_t r = 0; r < m; ++r) {
                Rat lhs = 0;
                for (std::size_t j = 0; j < d; ++j) lhs += a.at(r, j) * (*sol)[j];
                if (lhs > b[r]) return;
            }
            verts.push_back(*sol);
            return;
        }
        for (std::size_t i = start; i < m; ++i) {
            comb[depth] = i;
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    return verts;
}

}  // namespace

std::vector<Point> simplex_intersection(std::span<const Point> a, std::span<const Point> b) {
    if (b.size() > a.size()) return simplex_intersection(b, a);
    const std::size_t n = a[0].size();
    const std::size_t q = b.size() - 1;
    const std::size_t p = a.size() - 1;
    // unknowns mu (point in b) and s (same point in a):
    // b0 + B mu = a0 + A s
    Matrix sys(n, q + p);
    std::vector<Rat> rhs(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < q; ++j) sys.at(i, j) = b[j + 1][i] - b[0][i];
        for (std::size_t j = 0; j < p; ++j) sys.at(i, q + j) = -(a[j + 1][i] - a[0][i]);
        rhs[i] = a[0][i] - b[0][i];
    }
    auto sol = solve_affine(std::move(sys), std::move(rhs));
    if (!sol) return {};  // affine hulls disjoint
    const std::size_t vars = sol->nullspace.size();
    const std::size_t m_ineq = q + 1 + p + 1;
    Matrix A(m_ineq, vars);
    std::vector<Rat> rb(m_ineq, Rat(0));
    auto coeff = [&](std::size_t comp, std::size_t var) { return sol->nullspace[var][comp]; };
    std::size_t row = 0;
    for (std::size_t i = 0; i < q; ++i, ++row) {  // mu_i >= 0
        for (std::size_t t = 0; t < vars; ++t) A.at(row, t) = -coeff(i, t);
        rb[row] = sol->particular[i];
    }
    {  // sum mu <= 1
        for (std::size_t t = 0; t < vars; ++t) {
            Rat s = 0;
            for (std::size_t i = 0; i < q; ++i) s += coeff(i, t);
            A.at(row, t) = s;
        }
        Rat s0 = 0;
        for (std::size_t i = 0; i < q; ++i) s0 += sol->particular[i];
        rb[row] = Rat(1) - s0;
        ++row;
    }
    for (std::size_t j = 0; j < p; ++j, ++row) {  // s_j >= 0
        for (std::size_t t = 0; t < vars; ++t) A.at(row, t) = -coeff(q + j, t);
        rb[row] = sol->particular[q + j];
    }
    {  // sum s <= 1
        for (std::size_t t = 0; t < vars; ++t) {
            Rat s = 0;
            for (std::size_t j = 0; j < p; ++j) s += coeff(q + j, t);
            A.at(row, t) = s;
        }
        Rat s0 = 0;
        for (std::size_t j = 0; j < p; ++j) s0 += sol->particular[q + j];
        rb[row] = Rat(1) - s0;
    }
    std::vector<std::vector<Rat>> mu_verts;
    if (vars == 0) {
        // unique affine-hull intersection point: check the inequalities hold
        bool ok = true;
        for (std::size_t i = 0; i < q && ok; ++i)
            if (sol->particular[i] < 0) ok = false;
        Rat sum_mu = 0;
        for (std::size_t i = 0; i < q; ++i) sum_mu += sol->particular[i];
        if (sum_mu > 1) ok = false;
        for (std::size_t j = 0; j < p && ok; ++j)
            if (sol->particular[q + j] < 0) ok = false;
        Rat sum_s = 0;
        for (std::size_t j = 0; j < p; ++j) sum_s += sol->particular[q + j];
        if (sum_s > 1) ok = false;
        if (ok) {
            std::vector<Rat> mu(sol->particular.begin(), sol->particular.begin() + q);
            mu_verts.push_back(std::move(mu));
        }
    } else {
        auto tverts = enumerate_vertices(A, rb);
        for (auto& t : tverts) {
            std::vector<Rat> mu(q);
            for (std::size_t i = 0; i < q; ++i) {
                mu[i] = sol->particular[i];
                for (std::size_t v = 0; v < t.size(); ++v) mu[i] += sol->nullspace[v][i] * t[v];
            }
            mu_verts.push_back(std::move(mu));
        }
        std::sort(mu_verts.begin(), mu_verts.end());
        mu_verts.erase(std::unique(mu_verts.begin(), mu_verts.end()), mu_verts.end());
    }
    std::vector<Point> out;
    for (const auto& mu : mu_verts) {
        Point x(b[0]);
        for (std::size_t i = 0; i < q; ++i) x = add(x, scale(sub(b[i + 1], b[0]), mu[i]));
        out.push_back(std::move(x));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool point_in_simplex(const Point& p, std::span<const Point> simplex) {
    std::vector<Point> pts(simplex.begin(), simplex.end());
    BaryEval eval(std::move(pts));
    auto lam = eval.coords(p);
    if (!lam) return false;
    for (const Rat& l : *lam)
        if (l < 0) return false;
    return true;
}

Box bounding_box(std::span<const Point> pts) {
    Box box{pts[0], pts[0]};
    for (const Point& p : pts)
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (p[i] < box.lo[i]) box.lo[i] = p[i];
            if (p[i] > box.hi[i]) box.hi[i] = p[i];
        }
    return box;
}

Rat box_distance_squared(const Box& a, const Box& b) {
    Rat d = 0;
    for (std::size_t i = 0; i < a.lo.size(); ++i) {
        if (a.hi[i] < b.lo[i]) {
            Rat gap = b.lo[i] - a.hi[i];
            d += gap * gap;
        } else if (b.hi[i] < a.lo[i]) {
            Rat gap = a.lo[i] - b.hi[i];
            d += gap * gap;
        }
    }
    return d;
}

const Point& GeometricComplex::point(Vertex v) const {
    auto it = coords.find(v);
    if (it == coords.end()) fail("geometry", "vertex without coordinates: " + std::to_string(v));
    return it->second;
}

std::vector<Point> GeometricComplex::simplex_points(const Simplex& s) const {
    std::vector<Point> out;
    out.reserve(s.size());
    for (Vertex v : s.vertices()) out.push_back(point(v));
    return out;
}

bool pair_intersects_properly(const GeometricComplex& gc, const Simplex& s, const Simplex& t) {
    Simplex shared = s.intersect(t);
    auto ps = gc.simplex_points(s);
    auto pt = gc.simplex_points(t);
    std::vector<Point> inter = simplex_intersection(ps, pt);
    if (shared.empty()) return inter.empty();
    std::vector<Point> expect;
    for (Vertex v : shared.vertices()) expect.push_back(gc.point(v));
    std::sort(expect.begin(), expect.end());
    return inter == expect;
}

void GeometricComplex::validate(bool check_injectivity) const {
    for (const auto& [v, p] : coords)
        if (static_cast<int>(p.size()) != ambient)
            fail("geometry", "coordinate dimension mismatch at vertex " + std::to_string(v));
    for (const Simplex& m : complex.maximal()) {
        auto pts = simplex_points(m);
        if (!affinely_independent(pts))
            fail("degenerate-simplex", "simplex " + m.str() + " is degenerate");
    }
    if (!check_injectivity) return;
    const auto& tops = complex.maximal();
    std::vector<Box> boxes;
    boxes.reserve(tops.size());
    for (const Simplex& m : tops) boxes.push_back(bounding_box(simplex_points(m)));
    for (std::size_t i = 0; i < tops.size(); ++i) {
        for (std::size_t j = i + 1; j < tops.size(); ++j) {
            if (box_distance_squared(boxes[i], boxes[j]) > 0) continue;
            if (!pair_intersects_properly(*this, tops[i], tops[j]))
                fail("not-injective", "simplices " + tops[i].str() + " and " + tops[j].str() +
                                          " intersect outside their shared face");
        }
    }
}

}  // namespace plbord
