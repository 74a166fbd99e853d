#include "plbord/simplicial_map.hpp"

#include <algorithm>
#include <map>

#include "plbord/error.hpp"

namespace plbord {

Simplex SimplicialMap::image(const Simplex& s) const {
    std::vector<Vertex> img;
    img.reserve(s.size());
    for (Vertex v : s.vertices()) {
        auto it = vertex_map.find(v);
        if (it == vertex_map.end())
            fail("simplicial-map", "vertex without image: " + std::to_string(v));
        img.push_back(it->second);
    }
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    return Simplex(std::move(img));
}

void SimplicialMap::validate() const {
    for (Vertex v : source.vertices())
        if (!vertex_map.count(v))
            fail("simplicial-map", "vertex without image: " + std::to_string(v));
    for (const Simplex& m : source.maximal()) {
        Simplex img = image(m);
        if (!target.contains(img))
            fail("simplicial-map",
                 "image of " + m.str() + " = " + img.str() + " is not a target simplex");
    }
}

SimplicialMap identity_map(const Complex& c) {
    SimplicialMap f;
    f.source = c;
    f.target = c;
    for (Vertex v : c.vertices()) f.vertex_map[v] = v;
    return f;
}

Subdivision barycentric_subdivide(const Complex& c) {
    Subdivision out;
    out.cell = c.all_faces();  // canonical dim-major order
    std::unordered_map<Simplex, Vertex, SimplexHash> id_of;
    for (std::size_t i = 0; i < out.cell.size(); ++i)
        id_of[out.cell[i]] = static_cast<Vertex>(i);

    // chains of proper faces ending at each face, built by dimension
    std::vector<Simplex> top;
    std::vector<std::vector<Vertex>> chains_ending_at(out.cell.size());
    // order guarantees faces precede cofaces
    for (std::size_t i = 0; i < out.cell.size(); ++i) {
        const Simplex& s = out.cell[i];
        if (s.dim() == 0) {
            chains_ending_at[i] = {static_cast<Vertex>(i)};
        }
    }
    // enumerate maximal chains recursively per maximal simplex
    std::vector<std::vector<Vertex>> chain_stack;
    for (const Simplex& m : c.maximal()) {
        // depth-first over strictly increasing chains of faces of m ending at m
        std::vector<Vertex> chain;
        std::vector<Simplex> path;
        // recursive lambda
        auto rec = [&](auto&& self, const Simplex& s) -> void {
            chain.push_back(id_of.at(s));
            if (s == m) {
                if (chain.size() == m.size()) {
                    std::vector<Vertex> sorted_chain = chain;
                    std::sort(sorted_chain.begin(), sorted_chain.end());
                    top.push_back(Simplex(std::move(sorted_chain)));
                }
            }
            // extend by any coface of s within m of one dimension higher
            if (s.dim() < m.dim()) {
                for (Vertex v : m.vertices()) {
                    if (s.contains(v)) continue;
                    std::vector<Vertex> next = s.vertices();
                    next.push_back(v);
                    std::sort(next.begin(), next.end());
                    self(self, Simplex(std::move(next)));
                }
            }
            chain.pop_back();
        };
        // maximal chains start at each vertex of m
        for (Vertex v : m.vertices()) rec(rec, Simplex({v}));
    }
    out.complex = Complex::from_maximal(std::move(top));
    out.carrier.source = out.complex;
    out.carrier.target = c;
    for (std::size_t i = 0; i < out.cell.size(); ++i)
        out.carrier.vertex_map[static_cast<Vertex>(i)] = out.cell[i][0];
    return out;
}

ProductWithInterval product_with_interval(const Complex& c) {
    ProductWithInterval out;
    auto verts = c.vertices();
    Vertex offset = verts.empty() ? 1 : verts.back() + 1;
    out.offset = offset;
    std::vector<Simplex> tops;
    for (const Simplex& m : c.maximal()) {
        const auto& v = m.vertices();
        const std::size_t k = v.size();
        // [(d0,0),...,(di,0),(di,1),...,(dk-1,1)] for each split point i
        for (std::size_t i = 0; i < k; ++i) {
            std::vector<Vertex> cell;
            cell.reserve(k + 1);
            for (std::size_t j = 0; j <= i; ++j) cell.push_back(v[j]);
            for (std::size_t j = i; j < k; ++j) cell.push_back(v[j] + offset);
            tops.push_back(Simplex::sorted(std::move(cell)));
        }
    }
    out.complex = Complex::from_maximal(std::move(tops));
    return out;
}

namespace {

// preimage of the closed simplex d under f, as the full subcomplex of the
// source spanned by vertices mapping into d
Complex fiber_over(const SimplicialMap& f, const Simplex& d) {
    std::unordered_set<Vertex> pre;
    for (const auto& [v, w] : f.vertex_map)
        if (d.contains(w)) pre.insert(v);
    std::vector<Simplex> parts;
    for (const Simplex& m : f.source.maximal()) {
        std::vector<Vertex> sub;
        for (Vertex v : m.vertices())
            if (pre.count(v)) sub.push_back(v);
        if (!sub.empty()) parts.push_back(Simplex(std::move(sub)));
    }
    return Complex::from_maximal(std::move(parts));
}

}  // namespace

MappingCylinder mapping_cylinder(const SimplicialMap& f, FiberCheck check) {
    f.validate();
    bool fibers_ok = true;
    std::string fiber_detail;
    // fiber sanity check, the decidable proxy for contractibility
    for (const Simplex& d : f.target.all_faces()) {
        Complex fib = fiber_over(f, d);
        if (fib.empty()) {
            fibers_ok = false;
            fiber_detail = "empty fiber over " + d.str();
        } else if (component_count(fib) != 1) {
            fibers_ok = false;
            fiber_detail = "disconnected fiber over " + d.str();
        } else if (euler_characteristic(fib) != 1) {
            fibers_ok = false;
            fiber_detail = "fiber over " + d.str() + " has Euler characteristic " +
                           std::to_string(euler_characteristic(fib));
        }
        if (!fibers_ok) break;
    }
    if (!fibers_ok && check == FiberCheck::Enforce) fail("cylinder-fiber", fiber_detail);

    ProductWithInterval prod = product_with_interval(f.source);
    Vertex offset = prod.offset;
    // target vertices get fresh ids after the 0-end block
    Vertex target_shift = offset;  // source-end ids stay < offset

    MappingCylinder out;
    out.fiber_check_passed = fibers_ok;
    for (Vertex v : f.source.vertices()) out.source_end[v] = v;
    for (Vertex w : f.target.vertices()) out.target_end[w] = w + target_shift;

    std::vector<Simplex> tops;
    bool collapsed_any = false;
    for (const Simplex& m : prod.complex.maximal()) {
        std::vector<Vertex> img;
        img.reserve(m.size());
        for (Vertex v : m.vertices()) {
            if (v < offset)
                img.push_back(v);
            else
                img.push_back(f.vertex_map.at(v - offset) + target_shift);
        }
        std::sort(img.begin(), img.end());
        std::size_t before = img.size();
        img.erase(std::unique(img.begin(), img.end()), img.end());
        if (img.size() != before) {
            collapsed_any = true;
            if (img.size() < m.size() - 0) {
                // degenerate prism cell: keep only if still top-dimensional later;
                // dropped here, Complex::from_maximal removes dominated faces anyway
            }
        }
        tops.push_back(Simplex(std::move(img)));
    }
    (void)collapsed_any;
    out.complex = Complex::from_maximal(std::move(tops));

    // simpliciality sanity: both ends must embed as subcomplexes
    for (const Simplex& m : f.source.maximal())
        if (!out.complex.contains(m))
            fail("cylinder-quotient", "source end lost simplex " + m.str());
    for (const Simplex& m : f.target.maximal()) {
        std::vector<Vertex> shifted;
        for (Vertex v : m.vertices()) shifted.push_back(v + target_shift);
        if (!out.complex.contains(Simplex(std::move(shifted))))
            fail("cylinder-quotient", "target end lost simplex " + m.str());
    }
    return out;
}

Complex dual_block(const Complex& y, const Subdivision& bs_y, const Simplex& s) {
    if (!y.contains(s)) fail("absent-simplex", "dual_block: " + s.str() + " not in complex");
    std::unordered_map<Simplex, Vertex, SimplexHash> id_of;
    for (std::size_t i = 0; i < bs_y.cell.size(); ++i) id_of[bs_y.cell[i]] = static_cast<Vertex>(i);
    std::vector<Simplex> blocks;
    for (const Simplex& bs_simplex : bs_y.complex.maximal()) {
        // bs simplices are chains; keep the maximal subchain starting at a coface of s
        std::vector<Vertex> kept;
        // order chain members by dimension of their cells
        std::vector<Vertex> chain = bs_simplex.vertices();
        std::sort(chain.begin(), chain.end(), [&](Vertex a, Vertex b) {
            return bs_y.cell[static_cast<std::size_t>(a)] < bs_y.cell[static_cast<std::size_t>(b)];
        });
        for (Vertex b : chain)
            if (bs_y.cell[static_cast<std::size_t>(b)].has_face(s)) kept.push_back(b);
        if (!kept.empty()) blocks.push_back(Simplex::sorted(std::move(kept)));
    }
    return Complex::from_maximal(std::move(blocks));
}

Complex dual_block(const Complex& y, const Simplex& s) {
    Subdivision bs_y = barycentric_subdivide(y);
    return dual_block(y, bs_y, s);
}

}  // namespace plbord
