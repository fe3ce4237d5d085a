#pragma once

// Word algebra on twist words and the induced action on the first homology
// of the page, used for the once-punctured-torus classification.

#include "obcalc/matrix.hpp"
#include "obcalc/surface.hpp"

namespace obcalc {

// Automorphism of H1(page) together with the skew pairing it preserves.
// Construction checks that matrix^T * pairing * matrix == pairing.
struct H1Action {
    IntMat matrix;
    IntMat pairing;

    static H1Action checked(IntMat matrix, IntMat pairing);
};

long long count_left_twists(const TwistWord& word);

// The intersection pairing of a (g, b) page in the implicit positional
// basis: g symplectic 2x2 blocks followed by b-1 null directions for the
// boundary-parallel classes.
IntMat standard_pairing(const PageSurface& page);

// Action of the word on H1(page), composed left to right; a Right letter on
// a curve with class c acts by the transvection a |-> a + <a,c> c and a Left
// letter by its inverse. Every curve used by the word needs a homology class.
H1Action h1_action(const OpenBookDesc& book, const IntMat& pairing);

enum class TorusClass { Periodic, Reducible, PseudoAnosov };

const char* to_string(TorusClass c);

// Classification for pages of type (1,1) by the trace of the H1 action:
// |trace| < 2 or the identity gives Periodic, |trace| == 2 on a non-identity
// matrix gives Reducible, |trace| > 2 gives PseudoAnosov.
// Throws WrongPageError on any other page.
TorusClass torus_nielsen_thurston(const OpenBookDesc& book);

} // namespace obcalc
