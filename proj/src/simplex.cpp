#include "plbord/simplex.hpp"

#include <algorithm>

#include "plbord/error.hpp"
#include "plbord/rational.hpp"

namespace plbord {

namespace {
void check_strict(const std::vector<Vertex>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 0) fail("simplex", "negative vertex id");
        if (i > 0 && v[i] <= v[i - 1]) fail("simplex", "vertices not strictly increasing");
    }
}
}  // namespace

Simplex::Simplex(std::vector<Vertex> vertices) : v_(std::move(vertices)) { check_strict(v_); }

Simplex::Simplex(std::initializer_list<Vertex> vertices) : v_(vertices) { check_strict(v_); }

Simplex Simplex::sorted(std::vector<Vertex> vertices) {
    std::sort(vertices.begin(), vertices.end());
    Simplex s;
    s.v_ = std::move(vertices);
    check_strict(s.v_);
    return s;
}

bool Simplex::contains(Vertex v) const { return std::binary_search(v_.begin(), v_.end(), v); }

bool Simplex::has_face(const Simplex& other) const {
    return std::includes(v_.begin(), v_.end(), other.v_.begin(), other.v_.end());
}

Simplex Simplex::intersect(const Simplex& other) const {
    std::vector<Vertex> out;
    std::set_intersection(v_.begin(), v_.end(), other.v_.begin(), other.v_.end(),
                          std::back_inserter(out));
    Simplex s;
    s.v_ = std::move(out);
    return s;
}

Simplex Simplex::unite(const Simplex& other) const {
    std::vector<Vertex> out;
    std::set_union(v_.begin(), v_.end(), other.v_.begin(), other.v_.end(), std::back_inserter(out));
    Simplex s;
    s.v_ = std::move(out);
    return s;
}

Simplex Simplex::erase(Vertex v) const {
    std::vector<Vertex> out;
    out.reserve(v_.size());
    for (Vertex u : v_)
        if (u != v) out.push_back(u);
    Simplex s;
    s.v_ = std::move(out);
    return s;
}

std::vector<Simplex> Simplex::all_faces() const {
    std::vector<Simplex> out;
    const std::size_t k = v_.size();
    if (k == 0 || k > 24) {
        if (k > 24) fail("simplex", "face enumeration over dimension 23");
        return out;
    }
    out.reserve((static_cast<std::size_t>(1) << k) - 1);
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
        std::vector<Vertex> face;
        face.reserve(static_cast<std::size_t>(__builtin_popcount(mask)));
        for (std::size_t i = 0; i < k; ++i)
            if (mask & (1u << i)) face.push_back(v_[i]);
        Simplex s;
        s.v_ = std::move(face);
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Simplex> Simplex::facets() const {
    std::vector<Simplex> out;
    if (v_.size() <= 1) return out;
    for (std::size_t i = 0; i < v_.size(); ++i) {
        std::vector<Vertex> face;
        face.reserve(v_.size() - 1);
        for (std::size_t j = 0; j < v_.size(); ++j)
            if (j != i) face.push_back(v_[j]);
        Simplex s;
        s.v_ = std::move(face);
        out.push_back(std::move(s));
    }
    return out;
}

bool Simplex::operator<(const Simplex& o) const {
    if (v_.size() != o.v_.size()) return v_.size() < o.v_.size();
    return v_ < o.v_;
}

std::string Simplex::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < v_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v_[i]);
    }
    return s + "]";
}

std::size_t SimplexHash::operator()(const Simplex& s) const {
    std::size_t h = 0x12345678u + s.size();
    for (Vertex v : s.vertices()) h = hash_combine(h, static_cast<std::size_t>(v) * 0x9e3779b1u);
    return h;
}

}  // namespace plbord
