// Flatness of the moment map and representation types of leaves.
//
// The flatness test enumerates decompositions v = v0 + sum of positive roots
// and checks the Crawley-Boevey inequality for each; a dominance fast path
// short-circuits the enumeration. The irreducibility test runs the analogous
// strict inequality over decompositions drawn from a caller-supplied summand
// pool, after checking that (1, v0) is a root of the framed quiver.
#ifndef QVL_FLATNESS_HPP
#define QVL_FLATNESS_HPP

#include "qvl/quiver.hpp"

#include <optional>
#include <vector>

namespace qvl {

inline constexpr long long kDefaultBudget = 10000000;

struct Decomposition {
    IntVec v0;
    std::vector<IntVec> parts;  // the roots v^1..v^k, repetitions allowed
};

struct FlatnessReport {
    bool flat = false;
    bool fast_path = false;                  // dominance shortcut used
    std::optional<Decomposition> witness;    // violating decomposition when flat == false
};

FlatnessReport is_flat(const Quiver& q, const IntVec& v, const IntVec& w,
                       long long budget = kDefaultBudget, bool use_fast_path = true);

// True iff (1, v0) is a root of the framed quiver and every decomposition of
// v0 into a remainder plus summands from the pool passes the strict
// irreducibility inequality.
bool is_irreducible_dim(const Quiver& q, const IntVec& v0, const IntVec& w,
                        const std::vector<Root>& allowed_summands,
                        long long budget = kDefaultBudget);

// Dimension data of a semisimple representation: v0 plus (root, multiplicity)
// summands. Entries may repeat a root (distinct irreducibles of equal
// dimension, as happens for the level-one partition leaves).
struct RepType {
    IntVec v0;
    std::vector<std::pair<IntVec, Int>> summands;
    bool minimal = false;
};

struct LeavesResult {
    bool is_wall = false;    // false when the computed shift is 0 (or n <= 1 at level one)
    std::vector<RepType> leaves;  // minimal leaf last
};

// Representation types over a generic point of the wall with the given
// normal (a positive real root, or delta for the imaginary wall).
// Requires nu dominant.
LeavesResult leaves_on_wall(const Quiver& q, const IntVec& v, const IntVec& w,
                            const IntVec& wall_normal);

} // namespace qvl

#endif
