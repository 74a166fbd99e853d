#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "plbord/complex.hpp"

namespace plbord {

// cone: join with one fresh apex (id = max vertex + 1 unless given).
Complex cone(const Complex& c, std::optional<Vertex> apex = std::nullopt);
// suspension: join with two fresh apexes.
Complex suspension(const Complex& c);

enum class Tri { No = 0, Yes = 1, Undecidable = 2 };

// Sphere recognition, decidable up to dimension 2:
//   d=0: two isolated vertices; d=1: connected closed 1-pseudomanifold;
//   d=2: connected closed surface with Euler characteristic 2.
Tri sphere_recognizer(const Complex& c, int d);

// PL-ball recognition, decidable up to dimension 2:
//   d=0: one vertex; d=1: an arc; d=2: a disk (connected surface with
//   boundary, Euler characteristic 1, one boundary circle).
Tri ball_recognizer(const Complex& c, int d);

// A prescribed family {L_n} of permissible links with per-dimension
// membership recognizers. Built-ins: "pl-manifold", "pseudomanifold", "all".
class LinkFamily {
public:
    using Recognizer = std::function<Tri(const Complex&, int dim)>;

    static LinkFamily pl_manifold();
    static LinkFamily pseudomanifold();
    static LinkFamily all();
    static LinkFamily by_name(const std::string& name);  // throws on unknown
    // Open-ended registration point for user families.
    static LinkFamily custom(std::string name, Recognizer base);

    const std::string& name() const { return name_; }
    // Membership of c in L_{d+1} (c has dimension d).
    Tri member(const Complex& c, int d) const;

    // Register an extra recognizer consulted for dimensions the built-in
    // rules leave undecidable (one-sided "yes" certificates allowed).
    void register_recognizer(Recognizer r);

private:
    std::string name_;
    Recognizer base_;
    std::vector<Recognizer> plugins_;
};

// Greedy-collapsibility sphere certificate: returns Yes when c minus one
// facet collapses to a point and c is a closed pseudomanifold; else
// Undecidable. One-sided by design.
Tri greedy_sphere_certificate(const Complex& c, int d);

struct ManifoldReport {
    enum class Verdict { Closed, WithBoundary, Neither, Undecidable };
    Verdict verdict = Verdict::Neither;
    Complex boundary;
    std::optional<Simplex> offender;  // vertex whose link failed
    Complex offender_link;
    std::int64_t degree = 0;  // degree_type of the input
    std::string detail;

    bool ok() const { return verdict == Verdict::Closed || verdict == Verdict::WithBoundary; }
};

std::string to_string(ManifoldReport::Verdict v);

// Vertex-link screening of c against the family: every link must lie in
// L_dim (interior) or cL_{dim-1} (boundary). Links of higher simplices are
// covered recursively through iterated vertex links of the recognizers.
ManifoldReport is_M_manifold(const Complex& c, const LinkFamily& fam);

struct AxiomViolation {
    int axiom = 0;
    std::string detail;
};

struct AxiomReport {
    std::vector<AxiomViolation> violations;
    int checks = 0;
    bool ok() const { return violations.empty(); }
};

// Spot-check axioms 1-5 on a sample of family members (paired with their
// dimensions): relabeling invariance, link closure, suspension closure,
// cone exclusion, and regularity of L_1.
AxiomReport check_axioms(const LinkFamily& fam,
                         const std::vector<std::pair<Complex, int>>& sample);

// If lk is a simplicial cone (an apex joined to every maximal simplex),
// return an apex (smallest id); used for boundary detection.
std::optional<Vertex> cone_apex(const Complex& lk);

// Detect a suspension structure: poles {a,b} with lk = {a,b} * Q.
struct SuspensionSplit {
    Vertex pole_a, pole_b;
    Complex factor;
};
std::optional<SuspensionSplit> detect_suspension(const Complex& lk);

}  // namespace plbord
