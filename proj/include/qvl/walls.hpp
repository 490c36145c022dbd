// Classical walls and the affine hyperplane families living over them.
//
// A wall is stored through its primitive positive normal together with the
// rank-1 slice data (m, v_bar, w_bar) that determines its singular offsets:
//   real wall:       S = { w_bar/2 - i : i = 1..w_bar-1 }
//   imaginary wall:  S = { w_bar/2 - a : a in (0,w_bar) rational with
//                          denominator between 1 and v_bar }
// Essential hyperplanes are the translates of singular ones by the pairing
// image of the integral lattice, i.e. by shift_modulus * Z.
#ifndef QVL_WALLS_HPP
#define QVL_WALLS_HPP

#include "qvl/flatness.hpp"
#include "qvl/quiver.hpp"

namespace qvl {

struct Wall {
    IntVec normal;          // primitive, positive
    bool imaginary = false; // normal == delta
    Int m = 0;              // max shift, >= 1 for stored walls
    Int w_bar = 0;          // rank-1 slice framing
    Int v_bar = 0;          // rank-1 slice dimension
};

struct HyperplaneFamily {
    Wall wall;
    RatVec offsets;          // sorted singular offsets, symmetric about 0
    Int shift_modulus = 1;   // gcd of the normal entries
};

struct WallAnalysis {
    QuiverClass cls;
    IntVec v_input;
    IntVec w;
    IntVec v_dominant;        // c-coordinates of the dominant conjugate
    std::vector<int> chain;   // reflections applied to reach it
    bool dominantized = false;
    bool empty_variety = false;  // dominant conjugate left the dimension cone
    FlatnessReport flatness;
    std::vector<Wall> walls;
};

struct Arrangement {
    WallAnalysis base;
    std::vector<HyperplaneFamily> families;
};

// Walls of the (dominantized) instance. Throws input_error when the moment
// map is not flat.
WallAnalysis classical_walls(const Quiver& q, const IntVec& v, const IntVec& w,
                             long long budget = kDefaultBudget);

HyperplaneFamily singular_family(const Wall& wall);

Arrangement singular_hyperplanes(const Quiver& q, const IntVec& v, const IntVec& w,
                                 long long budget = kDefaultBudget);

// theta . b != 0 for every root b <= v.
bool is_generic_stability(const Quiver& q, const IntVec& v, const RatVec& theta);

// Offsets of the family lying in the same shift coset as the value p.
RatVec coset_offsets(const HyperplaneFamily& f, const Rat& p);

// lambda lies in some essential hyperplane of the family.
bool family_relevant(const HyperplaneFamily& f, const RatVec& lambda);

std::vector<HyperplaneFamily> relevant_walls(const std::vector<HyperplaneFamily>& families,
                                             const RatVec& lambda);

// Condition (*): within every shift coset, each essential offset lying
// between the extreme singular offsets of the coset is itself singular.
bool verify_star(const std::vector<HyperplaneFamily>& families);

} // namespace qvl

#endif
