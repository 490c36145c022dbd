// Quivers, their Cartan data and root systems.
//
// A quiver is stored as a vertex count plus an arrow list (tail, head).
// Orientation never enters any computation here: only the number of arrows
// between each pair of vertices matters, so presets fix an arbitrary one.
// Vertices are 0..n-1 in input order.
#ifndef QVL_QUIVER_HPP
#define QVL_QUIVER_HPP

#include "qvl/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace qvl {

struct Quiver {
    int n = 0;                                // number of vertices
    std::vector<std::pair<int, int>> arrows;  // (tail, head), loops allowed
};

enum class Family { A, D, E };
enum class Kind { Finite, Affine, Jordan, Unsupported };

struct QuiverClass {
    Kind kind = Kind::Unsupported;
    Family family = Family::A;  // meaningful for Finite/Affine only
    int rank = 0;               // Dynkin rank; affine X_n~ has n+1 vertices

    bool finite() const { return kind == Kind::Finite; }
    bool affine() const { return kind == Kind::Affine; }
    bool jordan() const { return kind == Kind::Jordan; }
    bool supported() const { return kind != Kind::Unsupported; }
    // Affine in the broad sense: owns an imaginary root delta.
    bool has_delta() const { return affine() || jordan(); }
    bool type_a() const {
        return (kind == Kind::Finite || kind == Kind::Affine) && family == Family::A;
    }
    std::string label() const;
};

struct Root {
    IntVec coords;
    bool imaginary = false;  // real <=> tits(b,b) = 1, imaginary <=> b = m*delta
};

bool is_connected(const Quiver& q);
void check_index_dim(const Quiver& q, size_t dim, const char* what);

// Throws input_error on a disconnected quiver; Unsupported is a value, not
// an error (callers gate on it).
QuiverClass classify(const Quiver& q);

// C_ij = 2 delta_ij - n_ij, loops counted twice on the diagonal.
// Requires classify(q).supported().
std::vector<IntVec> cartan_matrix(const Quiver& q);

// Symmetrized quadratic form: (a,b) = sum a_i b_i - 1/2 sum_arrows (a_t b_h + a_h b_t).
Rat tits_form(const Quiver& q, const IntVec& a, const IntVec& b);

// a^T C b = 2 * tits_form(a,b); always an integer.
Int cartan_pair(const Quiver& q, const IntVec& a, const IntVec& b);

// The primitive positive generator of ker C. Affine and Jordan only.
IntVec delta(const Quiver& q);

// All real roots 0 < b <= bound plus every imaginary multiple m*delta <= bound,
// sorted lexicographically. Requires a supported class.
std::vector<Root> positive_roots_upto(const Quiver& q, const IntVec& bound);

// Root test for an arbitrary quiver (used on framed quivers, which are
// usually wild). Reflection descent at loop-free vertices: a positive vector
// of Tits norm 1 is a real root iff it descends to a simple root; a vector of
// norm <= 0 is an imaginary root iff its descent terminal has connected
// support and nonpositive pairings. Norm >= 2 is never a root.
bool is_root(const Quiver& q, const IntVec& beta);

// Q^w: one extra vertex (index q.n) with w_i arrows from i to it.
Quiver framed_quiver(const Quiver& q, const IntVec& w);

// Built-in catalog: "A1".."A8", "D4".."D8", "E6".."E8", the affine versions
// "A1~".."A8~", "D4~".."D8~", "E6~".."E8~", and "jordan".
Quiver quiver_preset(const std::string& name);
std::vector<std::string> preset_names();

} // namespace qvl

#endif
