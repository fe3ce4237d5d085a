#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "obcalc/constructions.hpp"
#include "obcalc/errors.hpp"
#include "obcalc/lefschetz.hpp"
#include "oracles.hpp"

using namespace obcalc;

namespace {

IntMat fig8_d2_golden(long long copies) {
    // d2(gamma1) = Y, d2(gamma2) = X - Y, d2(gamma3) = Y - Z,
    // d2(gamma4) = Z - W, d2(r_i) = -Z + Y + W, in the basis (X, Y, Z, W)
    IntMat m(4, static_cast<std::size_t>(4 + copies));
    const long long fixed[4][4] = {{0, 1, 0, 0}, {1, -1, 0, 0}, {0, 1, -1, 0}, {0, 0, 1, -1}};
    for (std::size_t c = 0; c < 4; ++c)
        for (std::size_t r = 0; r < 4; ++r) m.at(r, c) = int_from(fixed[c][r]);
    const long long rcol[4] = {0, 1, -1, 1};
    for (long long i = 0; i < copies; ++i)
        for (std::size_t r = 0; r < 4; ++r) m.at(r, 4 + static_cast<std::size_t>(i)) = int_from(rcol[r]);
    return m;
}


} // namespace

TEST_CASE("build_complex golden matrices") {
    SUBCASE("planar figure-eight book, one r copy") {
        const HandleComplex cx = build_complex(preset_fig8_planar(-1).book);
        CHECK(cx.one_handle_count == 4);
        REQUIRE(cx.two_handles.size() == 5);
        CHECK(cx.d2 == fig8_d2_golden(1));
        CHECK(cx.two_handles[0].curve == "gamma1");
        CHECK(cx.two_handles[0].sign == +1);
        CHECK(cx.two_handles[1].sign == -1);
        CHECK(cx.two_handles[3].sign == -1);
        CHECK(cx.two_handles[4].curve == "r");
        CHECK(cx.two_handles[4].sign == -1);
        CHECK(cx.two_handles[3].rotation == -1);
    }
    SUBCASE("empty word on the disk") {
        const HandleComplex cx = build_complex(make_disk());
        CHECK(cx.one_handle_count == 0);
        CHECK(cx.two_handles.empty());
    }
    SUBCASE("expanded genus-one book") {
        const HandleComplex cx = build_complex(make_phi_nm({1}, -1, true));
        CHECK(cx.one_handle_count == 2);
        CHECK(cx.two_handles.size() == 14);
    }
    SUBCASE("missing class is reported") {
        CHECK_THROWS_AS(build_complex(preset_pprime().book), MissingH1ClassError);
    }
    SUBCASE("unknown curve is reported") {
        OpenBookDesc book = make_disk();
        book.word.letters.push_back({"ghost", Handedness::Right});
        CHECK_THROWS_AS(build_complex(book), ValidationError);
    }
}

TEST_CASE("euler characteristic of the filling") {
    for (long long m = 0; m >= -6; --m) {
        CHECK(euler_x(build_complex(make_phi_nm({1}, m, true))) == 12 * (-m) + 1);
        CHECK(euler_x(build_complex(preset_fig8_planar(m).book)) == 1 + (-m));
    }
    CHECK(euler_x(build_complex(make_disk())) == 1);
}

TEST_CASE("kernel of d2") {
    SUBCASE("figure-eight book: rank |m| and the h_i generate") {
        for (long long m = -1; m >= -5; --m) {
            const HandleComplex cx = build_complex(preset_fig8_planar(m).book);
            const CycleBasis basis = kernel_d2(cx);
            CHECK(basis.rank() == static_cast<std::size_t>(-m));
            CHECK((cx.d2 * basis.vectors).is_zero());
            for (long long i = 0; i < -m; ++i) {
                std::vector<Int> h(cx.two_handles.size(), 0);
                h[0] = -1;
                h[3] = 1;
                h[4 + static_cast<std::size_t>(i)] = 1;
                CHECK(lattice_contains(basis.vectors, h));
            }
        }
    }
    SUBCASE("expanded genus-one book: rank 12|m|") {
        for (long long m = -1; m >= -3; --m) {
            const CycleBasis basis = kernel_d2(build_complex(make_phi_nm({1}, m, true)));
            CHECK(basis.rank() == static_cast<std::size_t>(12 * (-m)));
        }
    }
    SUBCASE("no two-handles, no cycles") {
        CHECK(kernel_d2(build_complex(make_disk())).rank() == 0);
    }
}

TEST_CASE("change of basis") {
    const Fig8PlanarPreset preset = preset_fig8_planar(-2);
    const IntersectionForm id_form = preset.form_on_h;

    SUBCASE("identity change") {
        const IntersectionForm same = change_basis(id_form, preset.h_basis, preset.h_basis);
        CHECK(same.matrix == id_form.matrix);
    }
    SUBCASE("permuted basis permutes the matrix and keeps the signature") {
        IntMat swapped(preset.h_basis.vectors.rows(), 2);
        for (std::size_t r = 0; r < swapped.rows(); ++r) {
            swapped.at(r, 0) = preset.h_basis.vectors.at(r, 1);
            swapped.at(r, 1) = preset.h_basis.vectors.at(r, 0);
        }
        const IntersectionForm moved = change_basis(id_form, preset.h_basis, CycleBasis{swapped});
        CHECK(moved.matrix == RatMat::identity(2));
        CHECK(signature(moved) == signature(id_form));
    }
    SUBCASE("triangular change reproduces the hand-computed T^T T") {
        // second basis {h1, h1 + h2}: T = [[1,1],[0,1]], so T^T I T = [[1,1],[1,2]]
        IntMat mixed(preset.h_basis.vectors.rows(), 2);
        for (std::size_t r = 0; r < mixed.rows(); ++r) {
            mixed.at(r, 0) = preset.h_basis.vectors.at(r, 0);
            mixed.at(r, 1) = preset.h_basis.vectors.at(r, 0) + preset.h_basis.vectors.at(r, 1);
        }
        const IntersectionForm moved = change_basis(id_form, preset.h_basis, CycleBasis{mixed});
        RatMat expected(2, 2);
        expected.at(0, 0) = 1;
        expected.at(0, 1) = 1;
        expected.at(1, 0) = 1;
        expected.at(1, 1) = 2;
        CHECK(moved.matrix == expected);
        CHECK(signature(moved) == 2);
    }
    SUBCASE("pushing the preset form to the computed kernel keeps signature 2") {
        const CycleBasis computed = kernel_d2(build_complex(preset.book));
        const IntersectionForm moved = change_basis(id_form, preset.h_basis, computed);
        CHECK(signature(moved) == 2);
    }
    SUBCASE("inequivalent bases are rejected") {
        IntMat other(preset.h_basis.vectors.rows(), 2);
        other.at(0, 0) = 1; // e_gamma1 is not in the kernel span
        other.at(1, 1) = 1;
        CHECK_THROWS_AS(change_basis(id_form, preset.h_basis, CycleBasis{other}), DimensionError);
    }
}

TEST_CASE("characteristic functional") {
    SUBCASE("figure-eight book pairs to -1 with every h_i") {
        for (long long m = -1; m >= -4; --m) {
            const Fig8PlanarPreset preset = preset_fig8_planar(m);
            const HandleComplex cx = build_complex(preset.book);
            const std::vector<Rat> v = c_functional(cx, preset.h_basis);
            REQUIRE(v.size() == static_cast<std::size_t>(-m));
            for (const Rat& x : v) CHECK(x == Rat(-1));
        }
    }
    SUBCASE("zero rotations give the zero functional") {
        const OpenBookDesc book = make_phi_nm({1}, -2, true);
        const HandleComplex cx = build_complex(book);
        const std::vector<Rat> v = c_functional(cx, kernel_d2(cx));
        for (const Rat& x : v) CHECK(x == 0);
    }
    SUBCASE("empty basis gives the empty vector") {
        const HandleComplex cx = build_complex(make_disk());
        CHECK(c_functional(cx, kernel_d2(cx)).empty());
    }
    SUBCASE("missing rotation with nonzero coefficient is an error") {
        Fig8PlanarPreset preset = preset_fig8_planar(-1);
        for (CurveOnPage& c : preset.book.curves)
            if (c.name == "gamma4") c.rotation = std::nullopt;
        const HandleComplex cx = build_complex(preset.book);
        CHECK_THROWS_AS(c_functional(cx, preset.h_basis), MissingRotationError);
    }
    SUBCASE("missing rotation with zero coefficient is fine") {
        Fig8PlanarPreset preset = preset_fig8_planar(-1);
        for (CurveOnPage& c : preset.book.curves)
            if (c.name == "gamma2") c.rotation = std::nullopt; // h_i avoid gamma2
        const HandleComplex cx = build_complex(preset.book);
        CHECK_NOTHROW(c_functional(cx, preset.h_basis));
    }
}

TEST_CASE("square of the characteristic class") {
    SUBCASE("identity form") {
        for (std::size_t n = 1; n <= 4; ++n) {
            const IntersectionForm form{RatMat::identity(n), FormProvenance::Preset};
            std::vector<Rat> v(n, Rat(-1));
            CHECK(c_squared(form, v) == rat_from(static_cast<long long>(n)));
        }
    }
    SUBCASE("zero vector squares to zero") {
        const IntersectionForm form{RatMat::identity(3), FormProvenance::UserSupplied};
        CHECK(c_squared(form, {Rat(0), Rat(0), Rat(0)}) == 0);
    }
    SUBCASE("rational value from a non-unimodular form") {
        RatMat two(1, 1);
        two.at(0, 0) = 2;
        CHECK(c_squared(IntersectionForm{two, FormProvenance::UserSupplied}, {Rat(1)}) ==
              make_rat(1, 2));
    }
    SUBCASE("vector outside the column space is a torsion obstruction") {
        RatMat zero(1, 1);
        CHECK_THROWS_AS(c_squared(IntersectionForm{zero, FormProvenance::UserSupplied}, {Rat(1)}),
                        NonTorsionError);
    }
    SUBCASE("the value does not depend on the chosen solution") {
        // Q = diag(1, 0), v = (1, 0): solutions are w = (1, t) for any t
        RatMat q(2, 2);
        q.at(0, 0) = 1;
        const std::vector<Rat> v{Rat(1), Rat(0)};
        const IntersectionForm form{q, FormProvenance::UserSupplied};
        const Rat via_solver = c_squared(form, v);
        for (long long t : {-3LL, 0LL, 7LL}) {
            const std::vector<Rat> w{Rat(1), rat_from(t)};
            Rat dot(0);
            for (std::size_t i = 0; i < 2; ++i) dot += v[i] * w[i];
            CHECK(dot == via_solver);
        }
    }
}

TEST_CASE("d3 pipeline") {
    SUBCASE("disk gives the tight three-sphere value") {
        const D3Report report = d3(make_disk(), std::monostate{});
        CHECK(report.d3 == make_rat(-1, 2));
        CHECK(report.chi_x == 1);
        CHECK(report.sigma_x == 0);
        CHECK(report.q == 0);
        CHECK(report.form_source == "none");
    }
    SUBCASE("figure-eight book with the preset form") {
        for (long long m = 0; m >= -6; --m) {
            const Fig8PlanarPreset preset = preset_fig8_planar(m);
            const FormSource source = FormOnBasis{preset.form_on_h.matrix,
                                                  preset.h_basis.vectors, FormProvenance::Preset};
            const D3Report report = d3(preset.book, source);
            CHECK(report.d3 == make_rat(3, 2));
            CHECK(report.chi_x == 1 - m);
            CHECK(report.sigma_x == -m);
            CHECK(report.q == 2 - m);
            CHECK(report.c_squared == rat_from(-m));
            CHECK(report.form_source == "preset");
        }
    }
    SUBCASE("genus-one book with the signature override") {
        for (long long m = -1; m >= -6; --m) {
            const D3Report report = d3(make_phi_nm({1}, m, true), SigmaOverride{8 * (-m)});
            CHECK(report.d3 == make_rat(1, 2));
            CHECK(report.chi_x == 12 * (-m) + 1);
            CHECK(report.q == 12 * (-m) + 1);
            CHECK(report.c_squared == 0);
            CHECK(report.form_source == "sigma-override");
        }
    }
    SUBCASE("the defining identity holds in every report") {
        const Fig8PlanarPreset preset = preset_fig8_planar(-3);
        const FormSource source =
            FormOnBasis{preset.form_on_h.matrix, preset.h_basis.vectors, FormProvenance::Preset};
        const D3Report r = d3(preset.book, source);
        CHECK(r.d3 == (r.c_squared - rat_from(2 * r.chi_x) - rat_from(3 * r.sigma_x)) / Rat(4) +
                          rat_from(r.q));
    }
    SUBCASE("override with a nonzero functional is unsound") {
        CHECK_THROWS_AS(d3(preset_fig8_planar(-1).book, SigmaOverride{1}), SigmaOverrideError);
    }
    SUBCASE("missing rotation propagates") {
        Fig8PlanarPreset preset = preset_fig8_planar(-1);
        for (CurveOnPage& c : preset.book.curves)
            if (c.name == "gamma4") c.rotation = std::nullopt;
        const FormSource source =
            FormOnBasis{preset.form_on_h.matrix, preset.h_basis.vectors, FormProvenance::Preset};
        CHECK_THROWS_AS(d3(preset.book, source), MissingRotationError);
    }
    SUBCASE("a nontrivial kernel demands a form") {
        CHECK_THROWS_AS(d3(preset_fig8_planar(-1).book, std::monostate{}), ValidationError);
    }
    SUBCASE("stabilization leaves d3 unchanged") {
        CHECK(d3(positive_stabilize(make_disk()), std::monostate{}).d3 == make_rat(-1, 2));
        const OpenBookDesc phi = make_phi_nm({1}, -2, true);
        CHECK(d3(positive_stabilize(phi), SigmaOverride{16}).d3 ==
              d3(phi, SigmaOverride{16}).d3);
    }
}
