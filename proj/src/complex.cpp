#include "plbord/complex.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "plbord/error.hpp"

namespace plbord {

Complex Complex::from_maximal(std::vector<Simplex> simplices) {
    std::sort(simplices.begin(), simplices.end());
    simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());
    // Drop simplices that are faces of later (larger-or-equal-size) ones.
    std::vector<Simplex> keep;
    for (std::size_t i = 0; i < simplices.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = i + 1; j < simplices.size() && !dominated; ++j) {
            if (simplices[j].has_face(simplices[i])) dominated = true;
        }
        if (!dominated) keep.push_back(simplices[i]);
    }
    Complex c;
    c.maximal_ = std::move(keep);
    for (const Simplex& s : c.maximal_) c.dim_ = std::max(c.dim_, s.dim());
    return c;
}

std::int64_t Complex::volume() const {
    std::int64_t v = 0;
    for (const Simplex& s : maximal_)
        if (s.dim() == dim_) ++v;
    return v;
}

bool Complex::contains(const Simplex& s) const {
    if (s.empty()) return false;
    for (const Simplex& m : maximal_)
        if (m.has_face(s)) return true;
    return false;
}

std::vector<Vertex> Complex::vertices() const {
    std::vector<Vertex> out;
    for (const Simplex& s : maximal_) out.insert(out.end(), s.vertices().begin(), s.vertices().end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Simplex> Complex::all_faces() const {
    std::unordered_set<Simplex, SimplexHash> seen;
    for (const Simplex& m : maximal_)
        for (Simplex& f : m.all_faces()) seen.insert(std::move(f));
    std::vector<Simplex> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Simplex> Complex::faces_of_dim(int d) const {
    std::unordered_set<Simplex, SimplexHash> seen;
    for (const Simplex& m : maximal_) {
        if (m.dim() < d) continue;
        if (m.dim() == d) {
            seen.insert(m);
            continue;
        }
        // enumerate d-faces of m
        const auto& v = m.vertices();
        std::vector<int> idx(static_cast<std::size_t>(d) + 1);
        for (int i = 0; i <= d; ++i) idx[static_cast<std::size_t>(i)] = i;
        const int k = static_cast<int>(v.size());
        for (;;) {
            std::vector<Vertex> face;
            face.reserve(idx.size());
            for (int i : idx) face.push_back(v[static_cast<std::size_t>(i)]);
            seen.insert(Simplex(std::move(face)));
            int pos = d;
            while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == k - 1 - (d - pos)) --pos;
            if (pos < 0) break;
            ++idx[static_cast<std::size_t>(pos)];
            for (int i = pos + 1; i <= d; ++i)
                idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
        }
    }
    std::vector<Simplex> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

bool Complex::is_pure() const {
    for (const Simplex& s : maximal_)
        if (s.dim() != dim_) return false;
    return true;
}

Complex closure(std::vector<Simplex> maximal) { return Complex::from_maximal(std::move(maximal)); }

Complex star(const Complex& c, const Simplex& s) {
    if (!c.contains(s)) fail("absent-simplex", "star: simplex " + s.str() + " not in complex");
    std::vector<Simplex> cofaces;
    for (const Simplex& m : c.maximal())
        if (m.has_face(s)) cofaces.push_back(m);
    return Complex::from_maximal(std::move(cofaces));
}

Complex link(const Complex& c, const Simplex& s) {
    if (!c.contains(s)) fail("absent-simplex", "link: simplex " + s.str() + " not in complex");
    std::vector<Simplex> out;
    for (const Simplex& m : c.maximal()) {
        if (!m.has_face(s)) continue;
        std::vector<Vertex> rest;
        for (Vertex v : m.vertices())
            if (!s.contains(v)) rest.push_back(v);
        if (!rest.empty()) out.push_back(Simplex(std::move(rest)));
    }
    return Complex::from_maximal(std::move(out));
}

std::vector<std::int64_t> f_vector(const Complex& c) {
    std::vector<std::int64_t> f(static_cast<std::size_t>(c.dim() + 1), 0);
    for (const Simplex& s : c.all_faces()) ++f[static_cast<std::size_t>(s.dim())];
    return f;
}

std::int64_t euler_characteristic(const Complex& c) {
    std::int64_t chi = 0;
    int sign = 1;
    for (std::int64_t fi : f_vector(c)) {
        chi += sign * fi;
        sign = -sign;
    }
    return chi;
}

std::int64_t star_count(const Complex& c, Vertex v) {
    std::unordered_set<Simplex, SimplexHash> seen;
    for (const Simplex& m : c.maximal()) {
        if (!m.contains(v)) continue;
        for (Simplex& f : m.all_faces())
            if (f.contains(v)) seen.insert(std::move(f));
    }
    return static_cast<std::int64_t>(seen.size());
}

std::int64_t degree_type(const Complex& c) {
    std::int64_t best = 0;
    for (Vertex v : c.vertices()) best = std::max(best, star_count(c, v));
    return best;
}

int component_count(const Complex& c) {
    auto verts = c.vertices();
    if (verts.empty()) return 0;
    std::unordered_map<Vertex, Vertex> parent;
    for (Vertex v : verts) parent[v] = v;
    std::function<Vertex(Vertex)> find = [&](Vertex v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };
    for (const Simplex& m : c.maximal()) {
        for (std::size_t i = 1; i < m.size(); ++i) {
            Vertex a = find(m[0]), b = find(m[i]);
            if (a != b) parent[a] = b;
        }
    }
    std::unordered_set<Vertex> roots;
    for (Vertex v : verts) roots.insert(find(v));
    return static_cast<int>(roots.size());
}

Complex join(const Complex& a, const Complex& b) {
    auto va = a.vertices();
    auto vb = b.vertices();
    std::vector<Vertex> common;
    std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(common));
    if (!common.empty()) fail("join", "join requires disjoint vertex sets");
    if (a.empty()) return b;
    if (b.empty()) return a;
    std::vector<Simplex> out;
    for (const Simplex& sa : a.maximal())
        for (const Simplex& sb : b.maximal()) out.push_back(sa.unite(sb));
    return Complex::from_maximal(std::move(out));
}

Complex relabel(const Complex& c, const std::unordered_map<Vertex, Vertex>& m) {
    std::vector<Simplex> out;
    out.reserve(c.maximal().size());
    for (const Simplex& s : c.maximal()) {
        std::vector<Vertex> v;
        v.reserve(s.size());
        for (Vertex u : s.vertices()) {
            auto it = m.find(u);
            if (it == m.end()) fail("relabel", "vertex without image: " + std::to_string(u));
            v.push_back(it->second);
        }
        out.push_back(Simplex::sorted(std::move(v)));
    }
    return Complex::from_maximal(std::move(out));
}

std::pair<Complex, std::vector<Vertex>> compactify(const Complex& c) {
    auto verts = c.vertices();
    std::unordered_map<Vertex, Vertex> m;
    for (std::size_t i = 0; i < verts.size(); ++i) m[verts[i]] = static_cast<Vertex>(i);
    return {relabel(c, m), verts};
}

namespace {

bool extend_iso(const std::vector<Vertex>& va, const std::vector<Vertex>& vb,
                const Complex& a, const Complex& b, std::unordered_map<Vertex, Vertex>& map,
                std::unordered_set<Vertex>& used, std::size_t pos,
                const std::unordered_set<Simplex, SimplexHash>& faces_b) {
    if (pos == va.size()) {
        for (const Simplex& s : a.maximal()) {
            std::vector<Vertex> img;
            img.reserve(s.size());
            for (Vertex v : s.vertices()) img.push_back(map[v]);
            if (!faces_b.count(Simplex::sorted(std::move(img)))) return false;
        }
        return true;
    }
    Vertex v = va[pos];
    for (Vertex w : vb) {
        if (used.count(w)) continue;
        map[v] = w;
        used.insert(w);
        // quick prune: star counts must match
        if (star_count(a, v) == star_count(b, w) &&
            extend_iso(va, vb, a, b, map, used, pos + 1, faces_b))
            return true;
        used.erase(w);
        map.erase(v);
    }
    return false;
}

}  // namespace

bool isomorphic(const Complex& a, const Complex& b) {
    if (a.dim() != b.dim()) return false;
    auto va = a.vertices();
    auto vb = b.vertices();
    if (va.size() != vb.size()) return false;
    if (f_vector(a) != f_vector(b)) return false;
    std::unordered_set<Simplex, SimplexHash> faces_b;
    for (const Simplex& m : b.maximal()) faces_b.insert(m);
    // maximal-simplex sets must correspond, so it suffices to check maximal ones
    if (a.maximal().size() != b.maximal().size()) return false;
    std::unordered_map<Vertex, Vertex> map;
    std::unordered_set<Vertex> used;
    return extend_iso(va, vb, a, b, map, used, 0, faces_b);
}

bool is_closed_pseudomanifold(const Complex& c) {
    if (c.empty()) return false;
    if (!c.is_pure()) fail("non-pure", "pseudomanifold check requires a pure complex");
    const int k = c.dim();
    if (k == 0) return false;  // isolated points have no codim-1 incidences
    std::unordered_map<Simplex, int, SimplexHash> count;
    for (const Simplex& top : c.maximal())
        for (const Simplex& f : top.facets()) ++count[f];
    for (const auto& [face, n] : count)
        if (n != 2) return false;
    return true;
}

Complex boundary_complex(const Complex& c) {
    if (c.empty()) return Complex();
    if (!c.is_pure()) fail("non-pure", "boundary extraction requires a pure complex");
    std::unordered_map<Simplex, int, SimplexHash> count;
    for (const Simplex& top : c.maximal())
        for (const Simplex& f : top.facets()) ++count[f];
    std::vector<Simplex> bdry;
    for (const auto& [face, n] : count)
        if (n == 1) bdry.push_back(face);
    return Complex::from_maximal(std::move(bdry));
}

OrientResult orient(const Complex& c) {
    OrientResult res;
    if (!c.is_pure()) fail("non-pure", "orientation requires a pure complex");
    const auto& tops = c.maximal();
    const std::size_t n = tops.size();
    res.orientation.sign.assign(n, 0);

    // adjacency via shared facets
    std::unordered_map<Simplex, std::vector<std::size_t>, SimplexHash> by_facet;
    for (std::size_t i = 0; i < n; ++i)
        for (const Simplex& f : tops[i].facets()) by_facet[f].push_back(i);

    auto induced_sign = [](const Simplex& top, const Simplex& facet) {
        // (-1)^i where i is the index of the dropped vertex
        for (std::size_t i = 0; i < top.size(); ++i)
            if (!facet.contains(top[i])) return (i % 2 == 0) ? 1 : -1;
        return 0;
    };

    for (std::size_t root = 0; root < n; ++root) {
        if (res.orientation.sign[root] != 0) continue;
        res.orientation.sign[root] = 1;
        std::queue<std::size_t> q;
        q.push(root);
        while (!q.empty()) {
            std::size_t i = q.front();
            q.pop();
            for (const Simplex& f : tops[i].facets()) {
                for (std::size_t j : by_facet[f]) {
                    if (j == i) continue;
                    // consistent orientation: induced signs on the shared facet cancel
                    int want = -res.orientation.sign[i] * induced_sign(tops[i], f) * induced_sign(tops[j], f);
                    if (res.orientation.sign[j] == 0) {
                        res.orientation.sign[j] = static_cast<std::int8_t>(want);
                        q.push(j);
                    } else if (res.orientation.sign[j] != want) {
                        res.orientable = false;
                        res.witness = {tops[i], tops[j], f};
                        return res;
                    }
                }
            }
        }
    }
    res.orientable = true;
    return res;
}

bool boundary_chain_vanishes(const Complex& c, const Orientation& o) {
    if (!c.is_pure()) return false;
    const auto& tops = c.maximal();
    if (o.sign.size() != tops.size()) return false;
    std::map<Simplex, std::int64_t> chain;
    for (std::size_t t = 0; t < tops.size(); ++t) {
        const auto& v = tops[t].vertices();
        for (std::size_t i = 0; i < v.size(); ++i) {
            std::vector<Vertex> face;
            for (std::size_t j = 0; j < v.size(); ++j)
                if (j != i) face.push_back(v[j]);
            chain[Simplex(std::move(face))] += (i % 2 == 0 ? 1 : -1) * o.sign[t];
        }
    }
    for (const auto& [f, coeff] : chain)
        if (coeff != 0) return false;
    return true;
}

}  // namespace plbord
