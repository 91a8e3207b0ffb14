#pragma once

#include <map>
#include <string>
#include <vector>

#include "stellar/simplex.hpp"

namespace stellar {

/// A finite simplicial complex stored as its set of generator simplexes
/// with Z2 coefficients: adding a generator twice cancels it. Only the
/// listed generators are stored; the face closure is computed on demand.
class Complex {
public:
    Complex() = default;

    /// Z2 sum of the given simplexes (an even number of copies cancels).
    static Complex z2(std::vector<Simplex> gens);
    /// Plain set union (duplicates collapse to one copy).
    static Complex from_set(std::vector<Simplex> gens);

    const std::vector<Simplex>& generators() const { return gens_; }
    bool empty() const { return gens_.empty(); }
    std::size_t size() const { return gens_.size(); }

    bool uniform() const;
    /// Dimension of the largest generator; requires a nonempty complex.
    int dim() const;

    std::vector<int> vertices() const;
    /// Smallest integer strictly above every label (0 for a complex
    /// without vertices).
    int fresh_label() const;

    bool has_generator(const Simplex& s) const;
    /// s is a face of some generator.
    bool has_simplex(const Simplex& s) const;

    /// Z2 sum: symmetric difference of generator sets.
    Complex operator+(const Complex& other) const;
    bool operator==(const Complex&) const = default;
    auto operator<=>(const Complex&) const = default;

    /// All nonempty faces of all generators, deduplicated and sorted.
    std::vector<Simplex> face_closure() const;
    /// Number of faces per dimension, index d = dimension.
    std::vector<long> face_vector() const;

    std::string str() const;

private:
    std::vector<Simplex> gens_; // sorted, unique
};

/// Z2 boundary. Requires a uniform complex.
Complex boundary(const Complex& k);
Complex boundary(const Simplex& s);
bool is_closed(const Complex& k);

/// Join of vertex-disjoint complexes; {empty simplex} acts as identity.
Complex join(const Complex& k, const Complex& l);

/// lk(A,K): the maximal simplexes B with A ⋆ B a face of a generator.
Complex link(const Simplex& a, const Complex& k);

struct StarRest {
    Complex star; // generators containing A, i.e. A ⋆ lk(A,K)
    Complex rest; // generators avoiding A, i.e. Q(A,K)
};
StarRest star_rest(const Simplex& a, const Complex& k);

/// Alternating sum of face counts over the closure (empty simplex excluded).
long euler(const Complex& k);

/// Generator-wise image under a vertex map; unlisted vertices stay fixed.
/// The total map must be injective on the vertices of k.
Complex relabel(const Complex& k, const std::map<int, int>& map);

std::vector<Complex> connected_components(const Complex& k);

/// a ⋆ K for a single fresh vertex.
Complex cone(int apex, const Complex& k);

} // namespace stellar
