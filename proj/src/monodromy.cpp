#include "obcalc/monodromy.hpp"

#include "obcalc/errors.hpp"

namespace obcalc {

H1Action H1Action::checked(IntMat matrix, IntMat pairing) {
    if (matrix.rows() != matrix.cols() || pairing.rows() != pairing.cols() ||
        matrix.rows() != pairing.rows())
        throw DimensionError("H1Action: matrix and pairing sizes disagree");
    if (!pairing.is_skew_symmetric()) throw DimensionError("H1Action: pairing is not skew-symmetric");
    if (matrix.transposed() * pairing * matrix != pairing)
        throw DimensionError("H1Action: matrix does not preserve the pairing");
    return H1Action{std::move(matrix), std::move(pairing)};
}

long long count_left_twists(const TwistWord& word) {
    long long q = 0;
    for (const TwistLetter& l : word.letters)
        if (l.handedness == Handedness::Left) ++q;
    return q;
}

IntMat standard_pairing(const PageSurface& page) {
    const auto n = static_cast<std::size_t>(h1_rank(page));
    IntMat j(n, n);
    for (long long g = 0; g < page.genus; ++g) {
        const auto i = static_cast<std::size_t>(2 * g);
        j.at(i, i + 1) = 1;
        j.at(i + 1, i) = -1;
    }
    return j;
}

namespace {

// D_c(a) = a + <a,c> c for a Right letter, the inverse for a Left letter;
// as a matrix this is I + c (Jc)^T, and the two signs are inverse to each
// other since c^T J c = 0.
IntMat transvection(const std::vector<long long>& curve_class, const IntMat& pairing,
                    Handedness handedness) {
    const std::size_t n = pairing.rows();
    std::vector<Int> jc(n);
    for (std::size_t r = 0; r < n; ++r) {
        Int acc = 0;
        for (std::size_t k = 0; k < n; ++k) acc += pairing.at(r, k) * int_from(curve_class[k]);
        jc[r] = acc;
    }
    IntMat t = IntMat::identity(n);
    const int sign = handedness == Handedness::Right ? 1 : -1;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) t.at(r, c) += sign * int_from(curve_class[r]) * jc[c];
    return t;
}

} // namespace

H1Action h1_action(const OpenBookDesc& book, const IntMat& pairing) {
    const auto n = static_cast<std::size_t>(h1_rank(book.page));
    if (pairing.rows() != n || pairing.cols() != n)
        throw DimensionError("h1_action: pairing size does not match the page");
    if (!pairing.is_skew_symmetric())
        throw DimensionError("h1_action: pairing is not skew-symmetric");
    IntMat m = IntMat::identity(n);
    for (const TwistLetter& l : book.word.letters) {
        const CurveOnPage* curve = book.find_curve(l.curve);
        if (!curve) throw ValidationError("word letter references unknown curve '" + l.curve + "'");
        if (!curve->h1_class) throw MissingH1ClassError(curve->name);
        m = m * transvection(*curve->h1_class, pairing, l.handedness);
    }
    return H1Action::checked(std::move(m), pairing);
}

const char* to_string(TorusClass c) {
    switch (c) {
    case TorusClass::Periodic: return "Periodic";
    case TorusClass::Reducible: return "Reducible";
    case TorusClass::PseudoAnosov: return "PseudoAnosov";
    }
    return "?";
}

TorusClass torus_nielsen_thurston(const OpenBookDesc& book) {
    if (book.page.genus != 1 || book.page.boundary_count != 1)
        throw WrongPageError("torus classification needs a page of type (1,1), got (" +
                             std::to_string(book.page.genus) + "," +
                             std::to_string(book.page.boundary_count) + ")");
    const H1Action action = h1_action(book, standard_pairing(book.page));
    const Int trace = action.matrix.at(0, 0) + action.matrix.at(1, 1);
    const Int abs_trace = abs(trace);
    if (abs_trace > 2) return TorusClass::PseudoAnosov;
    if (abs_trace < 2) return TorusClass::Periodic;
    return action.matrix == IntMat::identity(2) ? TorusClass::Periodic : TorusClass::Reducible;
}

} // namespace obcalc
