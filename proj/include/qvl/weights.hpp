// Weights of the framed quiver in "c-coordinates".
//
// A FramedWeight stores the framing w (so omega = sum w_i varpi_i) together
// with an integer vector c representing mu = omega - sum c_i alpha_i. The
// pairing of mu with the i-th simple coroot is w_i - (C c)_i.
#ifndef QVL_WEIGHTS_HPP
#define QVL_WEIGHTS_HPP

#include "qvl/quiver.hpp"

namespace qvl {

struct FramedWeight {
    IntVec framing;  // w, all entries >= 0
    IntVec c;        // may be negative
};

struct ConjugationResult {
    IntVec c;                // dominant terminal
    std::vector<int> chain;  // vertices reflected, in order
};

IntVec coroot_pairings(const Quiver& q, const FramedWeight& fw);

bool is_dominant(const Quiver& q, const FramedWeight& fw);

// Level w . delta of the framing; affine and Jordan classes only.
Int level(const Quiver& q, const IntVec& w);

// Reflects at a negative pairing until dominant. For an affine class the
// framing must have level >= 1 unless the input is already dominant.
ConjugationResult dominant_conjugate(const Quiver& q, const FramedWeight& fw);

// Membership of mu in the integrable irreducible module L(omega): descend to
// the dominant conjugate; any negative c entry along the way (the initial one
// included) rejects, and the terminal must be componentwise nonnegative.
bool is_weight(const Quiver& q, const FramedWeight& fw);

// Largest m >= 0 with nu + m*beta still a weight of L(omega), where nu is
// given by (framing w, c = v) and beta by root_coords. Requires nu dominant.
Int max_shift(const Quiver& q, const FramedWeight& nu, const IntVec& root_coords);

} // namespace qvl

#endif
