#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "stellar/complex.hpp"
#include "stellar/errors.hpp"

namespace stellar {

/// One stellar move: a subdivision (A a), a weld (A a)^-1, or a vertex
/// relabeling.
struct Move {
    enum class Kind { Subdivide, Weld, Relabel };

    Kind kind = Kind::Relabel;
    Simplex face;                // A, for subdivide/weld
    int vertex = 0;              // the starred / removed vertex a
    std::map<int, int> mapping;  // for relabel

    static Move subdivide(Simplex a_face, int new_vertex);
    static Move weld(Simplex a_face, int old_vertex);
    static Move relabeling(std::map<int, int> map);

    Move inverse() const;
    std::string str() const;
};

using MoveScript = std::vector<Move>;

/// Thrown by apply_script; index is the position of the failing move.
class move_error : public input_error {
public:
    move_error(std::size_t index, const std::string& what)
        : input_error("move " + std::to_string(index) + ": " + what), index(index) {}
    std::size_t index;
};

/// (A a)K = a ⋆ ∂A ⋆ lk(A,K) + Q(A,K). A must be a nonempty face of a
/// generator and a must not be a vertex of K.
Complex subdivide(const Complex& k, const Simplex& a_face, int new_vertex);

/// (A a)^-1 K. Requires lk(a,K) = ∂A ⋆ B for some subcomplex B with
/// A not a simplex of K; returns A ⋆ B + Q(a,K).
Complex weld(const Complex& k, const Simplex& a_face, int old_vertex);

Complex apply_move(const Complex& k, const Move& m);
Complex apply_script(const Complex& k, const MoveScript& script);

MoveScript parse_script(const std::string& text);
std::string emit_script(const MoveScript& script);

/// All legal welds of k (faces of dimension >= 1 only), sorted by
/// (removed vertex, face). Used by the equivalence search.
std::vector<Move> legal_welds(const Complex& k);
/// All subdivisions at faces of dimension >= min_dim with the smallest
/// fresh label.
std::vector<Move> legal_subdivisions(const Complex& k, int min_dim = 1);

} // namespace stellar
