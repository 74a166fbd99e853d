#include "plbord/singularities.hpp"

#include <algorithm>

#include "plbord/error.hpp"
#include "plbord/rng.hpp"

namespace plbord {

Complex cone(const Complex& c, std::optional<Vertex> apex_opt) {
    auto verts = c.vertices();
    Vertex apex = apex_opt.value_or(verts.empty() ? 0 : verts.back() + 1);
    if (std::binary_search(verts.begin(), verts.end(), apex))
        fail("cone", "apex id already used");
    if (c.empty()) return Complex::from_maximal({Simplex({apex})});
    std::vector<Simplex> tops;
    for (const Simplex& m : c.maximal()) {
        std::vector<Vertex> v = m.vertices();
        v.push_back(apex);
        tops.push_back(Simplex::sorted(std::move(v)));
    }
    return Complex::from_maximal(std::move(tops));
}

Complex suspension(const Complex& c) {
    auto verts = c.vertices();
    Vertex a = verts.empty() ? 0 : verts.back() + 1;
    Vertex b = a + 1;
    if (c.empty())
        return Complex::from_maximal({Simplex({a}), Simplex({b})});
    std::vector<Simplex> tops;
    for (const Simplex& m : c.maximal()) {
        for (Vertex apex : {a, b}) {
            std::vector<Vertex> v = m.vertices();
            v.push_back(apex);
            tops.push_back(Simplex::sorted(std::move(v)));
        }
    }
    return Complex::from_maximal(std::move(tops));
}

Tri sphere_recognizer(const Complex& c, int d) {
    if (d < 0 || d > 2) return Tri::Undecidable;
    if (c.empty() || c.dim() != d || !c.is_pure()) return Tri::No;
    switch (d) {
        case 0:
            return c.maximal().size() == 2 ? Tri::Yes : Tri::No;
        case 1:
            return (is_closed_pseudomanifold(c) && component_count(c) == 1) ? Tri::Yes : Tri::No;
        case 2: {
            if (!is_closed_pseudomanifold(c)) return Tri::No;
            if (component_count(c) != 1) return Tri::No;
            // surface condition: every vertex link is a single circle
            for (Vertex v : c.vertices()) {
                Complex lk = link(c, Simplex({v}));
                if (lk.dim() != 1 || !lk.is_pure()) return Tri::No;
                if (!is_closed_pseudomanifold(lk) || component_count(lk) != 1) return Tri::No;
            }
            return euler_characteristic(c) == 2 ? Tri::Yes : Tri::No;
        }
        default:
            return Tri::Undecidable;
    }
}

Tri ball_recognizer(const Complex& c, int d) {
    if (d < 0 || d > 2) return Tri::Undecidable;
    if (c.empty() || c.dim() != d || !c.is_pure()) return Tri::No;
    switch (d) {
        case 0:
            return c.maximal().size() == 1 ? Tri::Yes : Tri::No;
        case 1: {
            if (component_count(c) != 1) return Tri::No;
            int endpoints = 0;
            for (Vertex v : c.vertices()) {
                int deg = 0;
                for (const Simplex& e : c.maximal())
                    if (e.contains(v)) ++deg;
                if (deg == 1)
                    ++endpoints;
                else if (deg != 2)
                    return Tri::No;
            }
            return endpoints == 2 ? Tri::Yes : Tri::No;
        }
        case 2: {
            if (component_count(c) != 1) return Tri::No;
            if (euler_characteristic(c) != 1) return Tri::No;
            // every edge in at most two triangles, free edges form one circle
            for (const Simplex& e : c.faces_of_dim(1)) {
                int deg = 0;
                for (const Simplex& t : c.maximal())
                    if (t.has_face(e)) ++deg;
                if (deg < 1 || deg > 2) return Tri::No;
            }
            Complex bd = boundary_complex(c);
            if (bd.empty() || sphere_recognizer(bd, 1) != Tri::Yes) return Tri::No;
            // vertex links must be circles (interior) or arcs (boundary)
            for (Vertex v : c.vertices()) {
                Complex lk = link(c, Simplex({v}));
                if (sphere_recognizer(lk, 1) == Tri::Yes) continue;
                if (ball_recognizer(lk, 1) == Tri::Yes) continue;
                return Tri::No;
            }
            return Tri::Yes;
        }
        default:
            return Tri::Undecidable;
    }
}

namespace {

// membership of c (dimension d) in the PL-sphere link sets
Tri pl_member(const Complex& c, int d) {
    if (d <= 2) return sphere_recognizer(c, d);
    return Tri::Undecidable;
}

// recursive closed-pseudomanifold membership; L_1 = {S^0} regularity at d=0
Tri pseudo_member(const Complex& c, int d) {
    if (c.empty() || c.dim() != d || !c.is_pure()) return Tri::No;
    if (d == 0) return c.maximal().size() == 2 ? Tri::Yes : Tri::No;
    if (!is_closed_pseudomanifold(c)) return Tri::No;
    for (Vertex v : c.vertices()) {
        Complex lk = link(c, Simplex({v}));
        Tri sub = pseudo_member(lk, d - 1);
        if (sub != Tri::Yes) return sub;
    }
    return Tri::Yes;
}

// permissive family: pure of the right dimension with no free codim-1 face
Tri all_member(const Complex& c, int d) {
    if (c.empty() || c.dim() != d || !c.is_pure()) return Tri::No;
    if (d == 0) return c.maximal().size() >= 1 ? Tri::Yes : Tri::No;
    return boundary_complex(c).empty() ? Tri::Yes : Tri::No;
}

}  // namespace

LinkFamily LinkFamily::pl_manifold() {
    LinkFamily f;
    f.name_ = "pl-manifold";
    f.base_ = pl_member;
    return f;
}

LinkFamily LinkFamily::pseudomanifold() {
    LinkFamily f;
    f.name_ = "pseudomanifold";
    f.base_ = pseudo_member;
    return f;
}

LinkFamily LinkFamily::all() {
    LinkFamily f;
    f.name_ = "all";
    f.base_ = all_member;
    return f;
}

LinkFamily LinkFamily::by_name(const std::string& name) {
    if (name == "pl-manifold") return pl_manifold();
    if (name == "pseudomanifold") return pseudomanifold();
    if (name == "all") return all();
    fail("family", "unknown link family: " + name);
}

LinkFamily LinkFamily::custom(std::string name, Recognizer base) {
    LinkFamily f;
    f.name_ = std::move(name);
    f.base_ = std::move(base);
    return f;
}

Tri LinkFamily::member(const Complex& c, int d) const {
    Tri base = base_(c, d);
    if (base != Tri::Undecidable) return base;
    for (const auto& plugin : plugins_) {
        Tri t = plugin(c, d);
        if (t == Tri::Yes) return Tri::Yes;  // plugins give one-sided certificates
    }
    return Tri::Undecidable;
}

void LinkFamily::register_recognizer(Recognizer r) { plugins_.push_back(std::move(r)); }

Tri greedy_sphere_certificate(const Complex& c, int d) {
    if (c.empty() || c.dim() != d || !c.is_pure()) return Tri::Undecidable;
    if (!is_closed_pseudomanifold(c)) return Tri::Undecidable;
    // remove one facet, then greedily collapse free faces; reaching a single
    // vertex certifies a sphere
    std::vector<Simplex> faces = c.all_faces();
    std::unordered_set<Simplex, SimplexHash> alive(faces.begin(), faces.end());
    alive.erase(c.maximal().front());
    bool progress = true;
    while (progress) {
        progress = false;
        // find a free face: f with exactly one coface g in alive
        std::vector<Simplex> order(alive.begin(), alive.end());
        std::sort(order.begin(), order.end());
        for (const Simplex& f : order) {
            if (!alive.count(f)) continue;
            const Simplex* only = nullptr;
            int count = 0;
            for (const Simplex& g : order) {
                if (!alive.count(g) || g.size() != f.size() + 1) continue;
                if (g.has_face(f)) {
                    only = &g;
                    if (++count > 1) break;
                }
            }
            if (count == 1) {
                alive.erase(f);
                alive.erase(*only);
                progress = true;
                break;
            }
        }
    }
    if (alive.size() == 1 && alive.begin()->dim() == 0) return Tri::Yes;
    return Tri::Undecidable;
}

std::optional<Vertex> cone_apex(const Complex& lk) {
    if (lk.empty()) return std::nullopt;
    auto verts = lk.vertices();
    for (Vertex a : verts) {
        bool joined = true;
        for (const Simplex& m : lk.maximal()) {
            if (!m.contains(a)) {
                // a must be joined to m: a*m must be a simplex of lk
                std::vector<Vertex> v = m.vertices();
                v.push_back(a);
                if (!lk.contains(Simplex::sorted(std::move(v)))) {
                    joined = false;
                    break;
                }
            }
        }
        if (joined) return a;
    }
    return std::nullopt;
}

std::string to_string(ManifoldReport::Verdict v) {
    switch (v) {
        case ManifoldReport::Verdict::Closed: return "closed";
        case ManifoldReport::Verdict::WithBoundary: return "with-boundary";
        case ManifoldReport::Verdict::Neither: return "neither";
        case ManifoldReport::Verdict::Undecidable: return "undecidable";
    }
    return "?";
}

ManifoldReport is_M_manifold(const Complex& c, const LinkFamily& fam) {
    ManifoldReport rep;
    if (c.empty()) {
        rep.verdict = ManifoldReport::Verdict::Neither;
        rep.detail = "empty complex";
        return rep;
    }
    if (!c.is_pure()) fail("non-pure", "is_M_manifold requires a pure complex");
    rep.degree = degree_type(c);
    const int k = c.dim();
    if (k == 0) {
        rep.verdict = ManifoldReport::Verdict::Closed;
        return rep;
    }

    // A link certifies a boundary vertex when it is a cone on a family member
    // up to PL isomorphism: literal apex cones with member base in any
    // dimension, PL-ball recognition in dimensions <= 2.
    auto boundary_link = [&fam, k](const Complex& lk) -> Tri {
        const int d = k - 1;  // expected link dimension
        if (lk.empty() || lk.dim() != d) return Tri::No;
        if (d == 0) return lk.maximal().size() == 1 ? Tri::Yes : Tri::No;
        Tri undec = Tri::No;
        if (auto apex = cone_apex(lk)) {
            Complex base = link(lk, Simplex({*apex}));
            Tri m = fam.member(base, d - 1);
            if (m == Tri::Yes) {
                // the cone structure must account for all of lk
                Complex rebuilt = join(Complex::from_maximal({Simplex({*apex})}), base);
                if (rebuilt == lk) return Tri::Yes;
            }
            if (m == Tri::Undecidable) undec = Tri::Undecidable;
        }
        Tri ball = ball_recognizer(lk, d);
        if (ball == Tri::Yes) return Tri::Yes;
        if (ball == Tri::Undecidable) return Tri::Undecidable;  // out of range (d >= 3)
        return undec;
    };

    std::vector<Vertex> boundary_vertices;
    for (Vertex v : c.vertices()) {
        Complex lk = link(c, Simplex({v}));
        Tri interior = fam.member(lk, k - 1);
        if (interior == Tri::Yes) continue;
        Tri bdry = boundary_link(lk);
        if (bdry == Tri::Yes) {
            boundary_vertices.push_back(v);
            continue;
        }
        rep.offender = Simplex({v});
        rep.offender_link = lk;
        if (interior == Tri::Undecidable || bdry == Tri::Undecidable) {
            rep.verdict = ManifoldReport::Verdict::Undecidable;
            rep.detail = "link of vertex " + std::to_string(v) +
                         " undecidable at dimension " + std::to_string(k - 1);
        } else {
            rep.verdict = ManifoldReport::Verdict::Neither;
            rep.detail = "link of vertex " + std::to_string(v) + " not permissible";
        }
        return rep;
    }

    Complex bdry = boundary_complex(c);
    if (boundary_vertices.empty()) {
        if (!bdry.empty()) {
            rep.verdict = ManifoldReport::Verdict::Neither;
            rep.detail = "free codimension-1 faces without boundary-type vertex links";
            return rep;
        }
        rep.verdict = ManifoldReport::Verdict::Closed;
        return rep;
    }
    // boundary subcomplex must agree with the free codim-1 faces and its
    // vertex set with the cone-link vertices
    auto bverts = bdry.vertices();
    std::vector<Vertex> sorted_bv = boundary_vertices;
    std::sort(sorted_bv.begin(), sorted_bv.end());
    if (bverts != sorted_bv) {
        rep.verdict = ManifoldReport::Verdict::Neither;
        rep.detail = "cone-link vertices disagree with free codimension-1 faces";
        return rep;
    }
    rep.boundary = bdry;
    rep.verdict = ManifoldReport::Verdict::WithBoundary;
    return rep;
}

namespace {

Complex random_relabel(const Complex& c, Rng& rng) {
    auto verts = c.vertices();
    std::vector<Vertex> perm = verts;
    for (std::size_t i = perm.size(); i > 1; --i)
        std::swap(perm[i - 1], perm[rng.below(i)]);
    // map onto a shuffled, shifted id set
    std::unordered_map<Vertex, Vertex> m;
    for (std::size_t i = 0; i < verts.size(); ++i) m[verts[i]] = perm[i] + 101;
    return relabel(c, m);
}

}  // namespace

AxiomReport check_axioms(const LinkFamily& fam,
                         const std::vector<std::pair<Complex, int>>& sample) {
    AxiomReport rep;
    Rng rng(0x5eedULL);
    // axiom 5: regularity of L_1
    {
        ++rep.checks;
        Complex s0 = Complex::from_maximal({Simplex({0}), Simplex({1})});
        if (fam.member(s0, 0) != Tri::Yes)
            rep.violations.push_back({5, "S^0 not accepted in L_1"});
        Complex three = Complex::from_maximal({Simplex({0}), Simplex({1}), Simplex({2})});
        ++rep.checks;
        if (fam.member(three, 0) == Tri::Yes)
            rep.violations.push_back({5, "three points accepted in L_1"});
    }
    for (const auto& [p, d] : sample) {
        Tri self = fam.member(p, d);
        if (self != Tri::Yes) {
            rep.violations.push_back({0, "sample member of dimension " + std::to_string(d) +
                                             " not accepted by the family"});
            continue;
        }
        // axiom 1: invariance under relabeling
        ++rep.checks;
        if (fam.member(random_relabel(p, rng), d) != Tri::Yes)
            rep.violations.push_back({1, "relabeled copy rejected (dim " + std::to_string(d) + ")"});
        // axiom 2: links of members are members
        for (Vertex v : p.vertices()) {
            ++rep.checks;
            if (d == 0) break;
            Complex lk = link(p, Simplex({v}));
            Tri t = fam.member(lk, d - 1);
            if (t == Tri::No)
                rep.violations.push_back({2, "vertex link of a member rejected in L_" +
                                                 std::to_string(d)});
        }
        // axiom 3: suspension closure
        ++rep.checks;
        if (fam.member(suspension(p), d + 1) == Tri::No)
            rep.violations.push_back({3, "suspension of a member rejected (dim " +
                                             std::to_string(d + 1) + ")"});
        // axiom 4: cone exclusion
        ++rep.checks;
        if (fam.member(cone(p), d + 1) == Tri::Yes)
            rep.violations.push_back({4, "cone of a member accepted (dim " +
                                             std::to_string(d + 1) + ")"});
    }
    return rep;
}

std::optional<SuspensionSplit> detect_suspension(const Complex& lk) {
    auto verts = lk.vertices();
    for (std::size_t i = 0; i < verts.size(); ++i) {
        for (std::size_t j = i + 1; j < verts.size(); ++j) {
            Vertex a = verts[i], b = verts[j];
            if (lk.contains(Simplex({a, b}))) continue;  // poles must be non-adjacent
            Complex qa = link(lk, Simplex({a}));
            Complex qb = link(lk, Simplex({b}));
            if (!(qa == qb)) continue;
            // lk must equal {a,b} * qa exactly
            Complex s0 = Complex::from_maximal({Simplex({a}), Simplex({b})});
            std::vector<Simplex> tops;
            for (const Simplex& m : qa.maximal())
                for (Vertex apex : {a, b}) {
                    std::vector<Vertex> v = m.vertices();
                    v.push_back(apex);
                    tops.push_back(Simplex::sorted(std::move(v)));
                }
            Complex rebuilt = Complex::from_maximal(std::move(tops));
            if (rebuilt == lk) return SuspensionSplit{a, b, qa};
        }
    }
    return std::nullopt;
}

}  // namespace plbord
