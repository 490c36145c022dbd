// Slice quivers: the transverse quiver data attached to a representation type.
//
// Conventions: the slice quiver has one vertex per summand; loops at vertex i
// are 1 - (v^i,v^i) in the Tits normalization, arrows between distinct
// vertices are -<v^i,v^j> in the Cartan pairing, and the framing is
// w_bar_i = w.v^i - <v^0,v^i>. Arrow orientation is fixed low-to-high for
// reproducibility and never used.
#ifndef QVL_SLICE_HPP
#define QVL_SLICE_HPP

#include "qvl/flatness.hpp"
#include "qvl/quiver.hpp"

namespace qvl {

struct SliceData {
    Quiver slice_quiver;
    IntVec v_bar;
    IntVec w_bar;
    std::vector<IntVec> eta;  // row i = v^i; eta(lambda)_i = lambda . v^i
};

Rat eta_apply_row(const SliceData& s, size_t row, const RatVec& lambda);

SliceData slice_quiver(const Quiver& q, const IntVec& w, const RepType& rt);

// Slice at the minimal leaf of the wall with the given normal, by the
// closed rank-1 formulas: an A1 slice with w_bar = <nu,beta> + 2m for a real
// wall, a Jordan slice with w_bar = level for the imaginary wall.
// Requires nu dominant and the normal to define an actual wall.
SliceData rank1_slice(const Quiver& q, const IntVec& v, const IntVec& w,
                      const IntVec& wall_normal);

} // namespace qvl

#endif
