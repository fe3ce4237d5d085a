#pragma once

// Builders for the open books the tool ships with, plus the two structural
// operations on open books: boundary connected sum and positive
// stabilization.

#include "obcalc/lefschetz.hpp"
#include "obcalc/surface.hpp"

#include <vector>

namespace obcalc {

// The trivial disk open book of the standard tight three-sphere.
OpenBookDesc make_disk();

// The genus-one one-boundary open book with monodromy
//   D_delta^m . D_x D_y^{-n_1} ... D_x D_y^{-n_k}.
// With expand_delta the boundary twist power is rewritten through the chain
// relation D_delta = (D_x D_y)^6 into 6|m| twist pairs (left-handed for
// m < 0), which is the form the d3 pipeline consumes; otherwise delta stays
// a literal boundary-parallel curve with null homology class.
// The tuple must consist of non-negative integers, not all zero.
OpenBookDesc make_phi_nm(const std::vector<long long>& n, long long m, bool expand_delta = true);

// Planar five-boundary open book carrying an embedded figure-eight pattern:
// four fixed twists (right, left, right, left on gamma1..gamma4) followed by
// |m| left twists along r. Ships with the cycle basis h_i = r_i + gamma4 -
// gamma1 of the kernel and the identity intersection form on it.
struct Fig8PlanarPreset {
    OpenBookDesc book;
    IntersectionForm form_on_h;
    CycleBasis h_basis;
};

Fig8PlanarPreset preset_fig8_planar(long long m);

// Planar five-boundary open book with two left twists (b, a) and four right
// twists; its supported structure is overtwisted on the three-sphere with
// the declared d3 = -3/2. The curves carry no homology classes or rotation
// numbers, so the d3 pipeline cannot run on it; the declared value stands in.
struct PPrimePreset {
    OpenBookDesc book;
    Rat d3_declared;
};

PPrimePreset preset_pprime();

// Page (g_a + g_b, b_a + b_b - 1); homology bases concatenated with the left
// curves padded by zeros on the right and vice versa; words concatenated.
// Curve names are namespaced "left/" and "right/" to avoid collisions.
OpenBookDesc boundary_connect_sum(const OpenBookDesc& a, const OpenBookDesc& b);

// Plumb a positive band onto the page: boundary count and homology rank grow
// by one, every existing class gains a trailing zero, and one right-handed
// twist along the new last basis direction is appended.
OpenBookDesc positive_stabilize(const OpenBookDesc& book);

} // namespace obcalc
