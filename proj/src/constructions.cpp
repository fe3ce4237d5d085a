#include "obcalc/constructions.hpp"

#include "obcalc/errors.hpp"

#include <algorithm>
#include <cstdlib>

namespace obcalc {

OpenBookDesc make_disk() {
    OpenBookDesc book;
    book.page = {0, 1};
    return book;
}

OpenBookDesc make_phi_nm(const std::vector<long long>& n, long long m, bool expand_delta) {
    if (std::all_of(n.begin(), n.end(), [](long long v) { return v == 0; }))
        throw ValidationError("phi_{n,m}: the tuple n must contain a nonzero entry");
    for (long long v : n)
        if (v < 0) throw ValidationError("phi_{n,m}: the tuple n must be non-negative");

    OpenBookDesc book;
    book.page = {1, 1};
    book.curves.push_back({"x", std::vector<long long>{1, 0}, 0});
    book.curves.push_back({"y", std::vector<long long>{0, 1}, 0});
    if (!expand_delta && m != 0)
        book.curves.push_back({"delta", std::vector<long long>{0, 0}, 0});

    auto& letters = book.word.letters;
    if (m != 0) {
        if (expand_delta) {
            // D_delta^m = (D_x D_y)^{6m}; for negative m this is the inverse
            // word, 6|m| repetitions of D_y^{-1} D_x^{-1}.
            const long long reps = 6 * std::llabs(m);
            for (long long i = 0; i < reps; ++i) {
                if (m > 0) {
                    letters.push_back({"x", Handedness::Right});
                    letters.push_back({"y", Handedness::Right});
                } else {
                    letters.push_back({"y", Handedness::Left});
                    letters.push_back({"x", Handedness::Left});
                }
            }
        } else {
            const Handedness h = m > 0 ? Handedness::Right : Handedness::Left;
            for (long long i = 0; i < std::llabs(m); ++i) letters.push_back({"delta", h});
        }
    }
    for (long long ni : n) {
        letters.push_back({"x", Handedness::Right});
        for (long long j = 0; j < ni; ++j) letters.push_back({"y", Handedness::Left});
    }
    return book;
}

Fig8PlanarPreset preset_fig8_planar(long long m) {
    if (m > 0) throw ValidationError("fig8-planar preset requires m <= 0");
    const long long copies = -m;

    OpenBookDesc book;
    book.page = {0, 5};
    book.curves.push_back({"gamma1", std::vector<long long>{0, 1, 0, 0}, 0});
    book.curves.push_back({"gamma2", std::vector<long long>{1, -1, 0, 0}, -1});
    book.curves.push_back({"gamma3", std::vector<long long>{0, 1, -1, 0}, -1});
    book.curves.push_back({"gamma4", std::vector<long long>{0, 0, 1, -1}, -1});
    book.curves.push_back({"r", std::vector<long long>{0, 1, -1, 1}, 0});

    auto& letters = book.word.letters;
    letters.push_back({"gamma1", Handedness::Right});
    letters.push_back({"gamma2", Handedness::Left});
    letters.push_back({"gamma3", Handedness::Right});
    letters.push_back({"gamma4", Handedness::Left});
    for (long long i = 0; i < copies; ++i) letters.push_back({"r", Handedness::Left});

    const std::size_t k = letters.size();
    IntMat h(k, static_cast<std::size_t>(copies));
    for (long long i = 0; i < copies; ++i) {
        const auto col = static_cast<std::size_t>(i);
        h.at(0, col) = -1;                           // -gamma1
        h.at(3, col) = 1;                            // +gamma4
        h.at(4 + static_cast<std::size_t>(i), col) = 1; // +r_i
    }

    return Fig8PlanarPreset{
        std::move(book),
        IntersectionForm{RatMat::identity(static_cast<std::size_t>(copies)),
                         FormProvenance::Preset},
        CycleBasis{std::move(h)},
    };
}

PPrimePreset preset_pprime() {
    OpenBookDesc book;
    book.page = {0, 5};
    book.curves.push_back({"a", std::nullopt, std::nullopt});
    book.curves.push_back({"b", std::nullopt, std::nullopt});
    for (int i = 1; i <= 4; ++i)
        book.curves.push_back({"psi" + std::to_string(i), std::nullopt, std::nullopt});
    auto& letters = book.word.letters;
    letters.push_back({"b", Handedness::Left});
    letters.push_back({"a", Handedness::Left});
    for (int i = 1; i <= 4; ++i) letters.push_back({"psi" + std::to_string(i), Handedness::Right});
    return PPrimePreset{std::move(book), make_rat(-3, 2)};
}

namespace {

std::vector<long long> padded(const std::vector<long long>& v, std::size_t left_zeros,
                              std::size_t right_zeros) {
    std::vector<long long> out(left_zeros, 0);
    out.insert(out.end(), v.begin(), v.end());
    out.insert(out.end(), right_zeros, 0);
    return out;
}

} // namespace

OpenBookDesc boundary_connect_sum(const OpenBookDesc& a, const OpenBookDesc& b) {
    const auto na = static_cast<std::size_t>(h1_rank(a.page));
    const auto nb = static_cast<std::size_t>(h1_rank(b.page));

    OpenBookDesc out;
    out.page = {a.page.genus + b.page.genus, a.page.boundary_count + b.page.boundary_count - 1};
    for (const CurveOnPage& c : a.curves) {
        CurveOnPage nc = c;
        nc.name = "left/" + c.name;
        if (nc.h1_class) nc.h1_class = padded(*nc.h1_class, 0, nb);
        out.curves.push_back(std::move(nc));
    }
    for (const CurveOnPage& c : b.curves) {
        CurveOnPage nc = c;
        nc.name = "right/" + c.name;
        if (nc.h1_class) nc.h1_class = padded(*nc.h1_class, na, 0);
        out.curves.push_back(std::move(nc));
    }
    for (const TwistLetter& l : a.word.letters)
        out.word.letters.push_back({"left/" + l.curve, l.handedness});
    for (const TwistLetter& l : b.word.letters)
        out.word.letters.push_back({"right/" + l.curve, l.handedness});
    return out;
}

OpenBookDesc positive_stabilize(const OpenBookDesc& book) {
    OpenBookDesc out;
    out.page = {book.page.genus, book.page.boundary_count + 1};
    const auto n = static_cast<std::size_t>(h1_rank(book.page));
    for (const CurveOnPage& c : book.curves) {
        CurveOnPage nc = c;
        if (nc.h1_class) nc.h1_class->push_back(0);
        out.curves.push_back(std::move(nc));
    }
    std::string name;
    for (int i = 1;; ++i) {
        name = "stab" + std::to_string(i);
        if (!book.find_curve(name)) break;
    }
    std::vector<long long> cls(n + 1, 0);
    cls.back() = 1;
    out.curves.push_back({name, std::move(cls), 0});
    out.word = book.word;
    out.word.letters.push_back({name, Handedness::Right});
    return out;
}

} // namespace obcalc
