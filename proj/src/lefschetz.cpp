#include "obcalc/lefschetz.hpp"

#include "obcalc/errors.hpp"
#include "obcalc/monodromy.hpp"

namespace obcalc {

const char* to_string(FormProvenance p) {
    return p == FormProvenance::Preset ? "preset" : "user";
}

IntersectionForm IntersectionForm::checked(RatMat matrix, FormProvenance provenance) {
    if (!matrix.is_symmetric())
        throw ValidationError("intersection form matrix is not symmetric");
    return IntersectionForm{std::move(matrix), provenance};
}

HandleComplex build_complex(const OpenBookDesc& book) {
    const auto n = static_cast<std::size_t>(h1_rank(book.page));
    const std::size_t k = book.word.size();
    HandleComplex cx;
    cx.one_handle_count = static_cast<long long>(n);
    cx.two_handles.reserve(k);
    cx.d2 = IntMat(n, k);
    for (std::size_t i = 0; i < k; ++i) {
        const TwistLetter& l = book.word.letters[i];
        const CurveOnPage* curve = book.find_curve(l.curve);
        if (!curve)
            throw ValidationError("word letter references unknown curve '" + l.curve + "'");
        if (!curve->h1_class) throw MissingH1ClassError(curve->name);
        // The attaching circle is the same curve for either handedness; the
        // sign records the contact framing only and never enters d2.
        TwoHandle h;
        h.curve = curve->name;
        h.sign = l.handedness == Handedness::Right ? +1 : -1;
        h.h1_class = *curve->h1_class;
        h.rotation = curve->rotation;
        for (std::size_t r = 0; r < n; ++r) cx.d2.at(r, i) = int_from(h.h1_class[r]);
        cx.two_handles.push_back(std::move(h));
    }
    return cx;
}

long long euler_x(const HandleComplex& cx) {
    return 1 - cx.one_handle_count + static_cast<long long>(cx.two_handles.size());
}

CycleBasis kernel_d2(const HandleComplex& cx) {
    CycleBasis basis{integer_kernel(cx.d2)};
    const IntMat image = cx.d2 * basis.vectors;
    if (!image.is_zero()) throw Error("internal: kernel basis fails d2 * v = 0");
    return basis;
}

IntersectionForm change_basis(const IntersectionForm& form, const CycleBasis& from,
                              const CycleBasis& to) {
    if (form.matrix.rows() != from.rank())
        throw DimensionError("change_basis: form size does not match source basis rank");
    if (from.vectors.rows() != to.vectors.rows())
        throw DimensionError("change_basis: bases live in different chain groups");
    if (from.rank() != to.rank())
        throw DimensionError("change_basis: bases are not equivalent over the rationals");
    const RatMat f = RatMat::from_int(from.vectors);
    const RatMat g = RatMat::from_int(to.vectors);
    const auto t = solve_matrix(f, g);
    const auto t_back = solve_matrix(g, f);
    if (!t || !t_back)
        throw DimensionError("change_basis: bases are not equivalent over the rationals");
    return IntersectionForm{t->transposed() * form.matrix * *t, form.provenance};
}

int signature(const IntersectionForm& form) { return signature(form.matrix); }

std::vector<Rat> c_functional(const HandleComplex& cx, const CycleBasis& basis) {
    std::vector<Rat> v(basis.rank(), Rat(0));
    for (std::size_t j = 0; j < basis.rank(); ++j) {
        Int acc = 0;
        for (std::size_t i = 0; i < cx.two_handles.size(); ++i) {
            const Int& coeff = basis.vectors.at(i, j);
            if (coeff == 0) continue;
            const TwoHandle& h = cx.two_handles[i];
            if (!h.rotation) throw MissingRotationError(h.curve);
            acc += int_from(*h.rotation) * coeff;
        }
        v[j] = Rat(acc);
    }
    return v;
}

Rat c_squared(const IntersectionForm& form, const std::vector<Rat>& v) {
    if (v.size() != form.matrix.rows())
        throw DimensionError("c_squared: vector length does not match the form");
    const auto w = solve(form.matrix, v);
    if (!w)
        throw NonTorsionError(
            "characteristic vector is not in the column space of the form; "
            "the first Chern class is not torsion");
    Rat acc(0);
    for (std::size_t i = 0; i < v.size(); ++i) acc += v[i] * (*w)[i];
    return acc;
}

D3Report d3(const OpenBookDesc& book, const FormSource& source) {
    const HandleComplex cx = build_complex(book);
    const long long chi = euler_x(cx);
    const long long q = count_left_twists(book.word);
    const CycleBasis basis = kernel_d2(cx);

    long long sigma = 0;
    Rat csq(0);
    std::string form_source;

    if (const auto* over = std::get_if<SigmaOverride>(&source)) {
        const std::vector<Rat> v = c_functional(cx, basis);
        for (const Rat& x : v)
            if (x != 0)
                throw SigmaOverrideError(
                    "signature override is unsound: the characteristic functional is "
                    "nonzero on the kernel");
        sigma = over->sigma;
        form_source = "sigma-override";
    } else if (const auto* on_basis = std::get_if<FormOnBasis>(&source)) {
        IntersectionForm form = IntersectionForm::checked(on_basis->matrix, on_basis->provenance);
        if (on_basis->basis) {
            if (on_basis->basis->rows() != book.word.size())
                throw DimensionError("form basis vectors do not have word length");
            form = change_basis(form, CycleBasis{*on_basis->basis}, basis);
        } else if (form.matrix.rows() != basis.rank()) {
            throw DimensionError("form size does not match the kernel rank");
        }
        const std::vector<Rat> v = c_functional(cx, basis);
        csq = c_squared(form, v);
        sigma = signature(form);
        form_source = to_string(form.provenance);
    } else {
        if (basis.rank() != 0)
            throw ValidationError(
                "the kernel of d2 is nontrivial; an intersection form (or a signature "
                "override) is required to compute d3");
        form_source = "none";
    }

    D3Report report;
    report.chi_x = chi;
    report.sigma_x = sigma;
    report.q = q;
    report.c_squared = csq;
    report.d3 = (csq - rat_from(2 * chi) - rat_from(3 * sigma)) / Rat(4) + rat_from(q);
    report.form_source = std::move(form_source);
    return report;
}

} // namespace obcalc
