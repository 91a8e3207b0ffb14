#pragma once

#include <string>
#include <vector>

#include "stellar/complex.hpp"
#include "stellar/equivalence.hpp"
#include "stellar/search.hpp"

namespace stellar {

enum class Verdict { Yes, No, Unknown };
std::string to_string(Verdict v);

/// Exact in dimensions <= 2; in higher dimension a bounded move search
/// against the standard sphere decides Yes or reports Unknown.
Verdict recognize_sphere(const Complex& k, SearchBudget budget = {2000, 0});
Verdict recognize_ball(const Complex& k, SearchBudget budget = {2000, 0});

struct LinkVerdict {
    int vertex;
    Verdict ball;
    Verdict sphere;
    Verdict ok; // ball or sphere
};

struct ManifoldReport {
    Verdict verdict = Verdict::Unknown;
    std::vector<LinkVerdict> links;
};

/// Every vertex link must be a ball or a sphere of one dimension lower.
ManifoldReport is_stellar_manifold(const Complex& m);
ManifoldReport is_stellar_manifold_serial(const Complex& m);

enum class SurfaceType { Sphere, Disk, ProjectivePlane, Torus, Klein, Other };
std::string to_string(SurfaceType t);

struct SurfaceClass {
    SurfaceType type = SurfaceType::Other;
    long chi = 0;
    bool orientable = false;
    int boundary_components = 0;
    bool genuine_surface = false; // false when a vertex link is pinched
};

/// Classify a connected 2-dimensional pseudo-manifold. Throws input_error
/// when some edge lies in three or more triangles.
SurfaceClass classify_surface(const Complex& k);

/// Same classification on the quotient cell structure S/~ (cells are
/// equivalence classes, incidence inherited, paired facets glued).
SurfaceClass classify_quotient_surface(const Complex& s, const RegularEquivalence& e);

bool is_single_cycle(const Complex& one_dim);
bool is_single_path(const Complex& one_dim);

} // namespace stellar
