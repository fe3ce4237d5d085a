#pragma once

// Handle chain complex of the achiral Lefschetz filling bounded by a contact
// open book, and the exact d3 pipeline built on it: euler characteristic,
// integer kernel of the boundary map, intersection-form bookkeeping,
// signature and the square of the characteristic class.

#include "obcalc/matrix.hpp"
#include "obcalc/surface.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace obcalc {

struct TwoHandle {
    std::string curve;
    int sign = +1; // +1 for a right-handed twist, -1 for a left-handed one
    std::vector<long long> h1_class;
    std::optional<long long> rotation;

    bool operator==(const TwoHandle&) const = default;
};

// One 1-handle per H1 generator of the page, one 2-handle per word letter in
// word order; column i of d2 is the homology class of two-handle i.
struct HandleComplex {
    long long one_handle_count = 0;
    std::vector<TwoHandle> two_handles;
    IntMat d2;
};

// Lattice basis of the full integer kernel of d2, columns of `vectors`.
struct CycleBasis {
    IntMat vectors;

    std::size_t rank() const { return vectors.cols(); }
};

enum class FormProvenance { Preset, UserSupplied };

const char* to_string(FormProvenance p);

// Symmetric intersection matrix expressed on some cycle basis.
struct IntersectionForm {
    RatMat matrix;
    FormProvenance provenance = FormProvenance::UserSupplied;

    static IntersectionForm checked(RatMat matrix, FormProvenance provenance);
};

struct D3Report {
    long long chi_x = 0;
    long long sigma_x = 0;
    long long q = 0;
    Rat c_squared;
    Rat d3;
    std::string form_source;
};

HandleComplex build_complex(const OpenBookDesc& book);

// chi(X) = 1 - (number of 1-handles) + (number of 2-handles)
long long euler_x(const HandleComplex& cx);

CycleBasis kernel_d2(const HandleComplex& cx);

// Re-express a form given on basis `from` on the basis `to`; both must span
// the same rational subspace. Congruence by the exact change-of-basis matrix.
IntersectionForm change_basis(const IntersectionForm& form, const CycleBasis& from,
                              const CycleBasis& to);

int signature(const IntersectionForm& form);

// Pairing of the characteristic class with each basis vector:
// v_j = sum_i rot(curve_i) * (basis_j)_i. Throws MissingRotationError when a
// handle with nonzero coefficient has no rotation number.
std::vector<Rat> c_functional(const HandleComplex& cx, const CycleBasis& basis);

// v^T w for any rational solution w of (form.matrix) w = v; well defined
// because the form is symmetric. Throws NonTorsionError when v is outside
// the column space (the first Chern class is not torsion).
Rat c_squared(const IntersectionForm& form, const std::vector<Rat>& v);

// How d3 obtains the intersection data.
struct FormOnBasis {
    RatMat matrix;
    std::optional<IntMat> basis; // columns, in word coordinates; absent means
                                 // "already on the computed kernel basis"
    FormProvenance provenance = FormProvenance::UserSupplied;
};

struct SigmaOverride {
    long long sigma = 0;
};

// monostate: no form supplied; valid only when the kernel is trivial.
using FormSource = std::variant<std::monostate, FormOnBasis, SigmaOverride>;

D3Report d3(const OpenBookDesc& book, const FormSource& source);

} // namespace obcalc
