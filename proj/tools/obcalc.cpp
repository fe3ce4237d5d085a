// obcalc: exact calculator for open book decompositions of contact
// 3-manifolds. Subcommands: describe, classify, d3, bounds, table1,
// paper-check, export-preset.

#include "obcalc/constructions.hpp"
#include "obcalc/errors.hpp"
#include "obcalc/invariants.hpp"
#include "obcalc/json_io.hpp"
#include "obcalc/lefschetz.hpp"
#include "obcalc/monodromy.hpp"
#include "obcalc/surface.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <variant>

namespace {

using namespace obcalc;

// Exit codes, also documented in the README.
constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitContradiction = 3;
constexpr int kExitMissingRotation = 4;
constexpr int kExitNonTorsion = 5;
constexpr int kExitUnsoundOverride = 6;
constexpr int kExitPaperCheck = 7;

FormSource resolve_form(const std::string& spec, const BookFile& file) {
    if (spec == "preset") {
        if (file.form) return *file.form;
        return std::monostate{};
    }
    if (spec.rfind("file=", 0) == 0) return load_form_file(spec.substr(5));
    if (spec.rfind("sigma=", 0) == 0) {
        const std::string v = spec.substr(6);
        try {
            std::size_t used = 0;
            const long long sigma = std::stoll(v, &used);
            if (used != v.size()) throw std::invalid_argument(v);
            return SigmaOverride{sigma};
        } catch (const std::exception&) {
            throw ParseError("--form sigma=INT: '" + v + "' is not an integer");
        }
    }
    throw ParseError("--form expects 'preset', 'file=PATH' or 'sigma=INT'");
}

int cmd_describe(const std::string& path) {
    const BookFile file = load_book_file(path);
    const OpenBookDesc& book = file.book;
    std::cout << "page (" << book.page.genus << "," << book.page.boundary_count << ")"
              << ", -chi=" << page_norm(book.page) << ", N=" << h1_rank(book.page)
              << ", k=" << book.word.size() << ", q=" << count_left_twists(book.word) << "\n";
    return kExitOk;
}

int cmd_classify(const std::string& path) {
    const BookFile file = load_book_file(path);
    std::cout << to_string(torus_nielsen_thurston(file.book)) << "\n";
    return kExitOk;
}

int cmd_d3(const std::string& path, const std::string& form_spec, bool as_json,
           const std::string& out_path) {
    const BookFile file = load_book_file(path);
    const FormSource source = resolve_form(form_spec, file);
    const D3Report report = d3(file.book, source);
    std::ostringstream text;
    if (as_json) {
        text << d3_report_to_json(report).dump(2) << "\n";
    } else {
        text << "chi_x = " << report.chi_x << "\n"
             << "sigma_x = " << report.sigma_x << "\n"
             << "q = " << report.q << "\n"
             << "c_squared = " << rat_string(report.c_squared) << "\n"
             << "d3 = " << rat_string(report.d3) << "\n"
             << "form = " << report.form_source << "\n";
    }
    if (out_path.empty()) {
        std::cout << text.str();
    } else {
        std::ofstream out(out_path);
        if (!out) throw ParseError("cannot write '" + out_path + "'");
        out << text.str();
    }
    return kExitOk;
}

int cmd_bounds(const std::string& path) {
    const InvariantRecord input = load_record_file(path);
    const RefineResult result = analyze(input);
    const InvariantRecord& rec = result.record;
    std::cout << "sg=" << rec.sg.to_string() << " bn=" << rec.bn.to_string()
              << " sn=" << rec.sn.to_string();
    if (rec.sg.is_bounded() && rec.bn.is_bounded() && rec.sn.is_bounded())
        std::cout << " gap=" << gap(rec).to_string();
    else
        std::cout << " gap=unbounded";
    std::cout << "\n";
    if (!rec.tags.empty()) {
        std::cout << "tags:";
        for (Tag t : rec.tags) std::cout << " " << to_string(t);
        std::cout << "\n";
    }
    if (!result.fired_rules.empty()) {
        std::cout << "rules:";
        for (const std::string& r : result.fired_rules) std::cout << " " << r;
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_table1() {
    std::cout << render_table1();
    return kExitOk;
}

int cmd_export_preset(const std::string& name, const std::vector<long long>& n, long long m,
                      bool keep_delta, const std::string& out_path) {
    BookFile file;
    if (name == "disk") {
        file.book = make_disk();
    } else if (name == "fig8-planar") {
        Fig8PlanarPreset preset = preset_fig8_planar(m);
        file.book = std::move(preset.book);
        file.form = FormOnBasis{preset.form_on_h.matrix, preset.h_basis.vectors,
                                FormProvenance::Preset};
    } else if (name == "phi-nm") {
        file.book = make_phi_nm(n.empty() ? std::vector<long long>{1} : n, m, !keep_delta);
    } else if (name == "pprime") {
        file.book = preset_pprime().book;
    } else {
        throw ParseError("unknown preset '" + name +
                         "' (expected disk, fig8-planar, phi-nm or pprime)");
    }
    const std::string text = book_file_to_json(file).dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw ParseError("cannot write '" + out_path + "'");
        out << text;
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// paper-check: the built-in reproduction suite. Deterministic output, one
// PASS/FAIL line per item.

struct CheckSink {
    bool all_ok = true;

    void item(const std::string& name, bool ok, const std::string& detail) {
        std::cout << (ok ? "PASS " : "FAIL ") << name << ": " << detail << "\n";
        all_ok = all_ok && ok;
    }
};

Rat fig8_d3(long long m, bool corrupt_rotation) {
    Fig8PlanarPreset preset = preset_fig8_planar(m);
    if (corrupt_rotation)
        for (CurveOnPage& c : preset.book.curves)
            if (c.name == "gamma4") c.rotation = 0;
    const FormSource source =
        FormOnBasis{preset.form_on_h.matrix, preset.h_basis.vectors, FormProvenance::Preset};
    return d3(preset.book, source).d3;
}

int cmd_paper_check(const std::string& fault) {
    const bool corrupt_rotation = fault == "rotation";
    CheckSink sink;

    {
        bool ok = true;
        std::string detail = "d3 = 3/2 with chi = 1+|m|, sigma = |m|, q = 2+|m|, c^2 = |m| for m = 0..-10";
        for (long long m = 0; m >= -10; --m) {
            Fig8PlanarPreset preset = preset_fig8_planar(m);
            if (corrupt_rotation)
                for (CurveOnPage& c : preset.book.curves)
                    if (c.name == "gamma4") c.rotation = 0;
            const FormSource source = FormOnBasis{preset.form_on_h.matrix, preset.h_basis.vectors,
                                                  FormProvenance::Preset};
            const D3Report report = d3(preset.book, source);
            const long long a = -m;
            if (report.d3 != make_rat(3, 2) || report.chi_x != 1 + a || report.sigma_x != a ||
                report.q != 2 + a || report.c_squared != rat_from(a)) {
                ok = false;
                detail = "m = " + std::to_string(m) + ": expected d3 = 3/2, got " +
                         rat_string(report.d3);
                break;
            }
        }
        sink.item("fig8-planar-d3", ok, detail);
    }

    {
        bool ok = true;
        std::string detail = "d3 = 1/2 with chi = 12|m|+1, q = 12|m|+1, c = 0 for m = -1..-10";
        for (long long m = -1; m >= -10; --m) {
            const OpenBookDesc book = make_phi_nm({1}, m, true);
            const D3Report report = d3(book, SigmaOverride{8 * (-m)});
            const long long a = -m;
            if (report.d3 != make_rat(1, 2) || report.chi_x != 12 * a + 1 ||
                report.q != 12 * a + 1 || report.c_squared != 0) {
                ok = false;
                detail = "m = " + std::to_string(m) + ": expected d3 = 1/2, got " +
                         rat_string(report.d3);
                break;
            }
        }
        sink.item("phi-nm-d3", ok, detail);
    }

    {
        const Rat sum = connect_sum_d3(make_rat(3, 2), make_rat(-3, 2));
        bool ok = sum == make_rat(1, 2);
        std::string detail = "3/2 # -3/2 -> " + rat_string(sum);
        const PPrimePreset pprime = preset_pprime();
        const OpenBookDesc nine =
            boundary_connect_sum(preset_fig8_planar(-1).book, pprime.book);
        ok = ok && nine.page.boundary_count == 9 && nine.page.genus == 0;
        detail += "; boundary components = " + std::to_string(nine.page.boundary_count);
        bool same_all = true;
        for (long long m = -1; m >= -5 && ok; --m) {
            const D3Report direct = d3(make_phi_nm({1}, m, true), SigmaOverride{8 * (-m)});
            InvariantRecord lhs;
            lhs.overtwisted = true;
            lhs.h1_trivial = true;
            lhs.d3 = direct.d3;
            InvariantRecord rhs;
            rhs.overtwisted = true;
            rhs.h1_trivial = true;
            rhs.d3 = connect_sum_d3(fig8_d3(m, corrupt_rotation), pprime.d3_declared);
            same_all = same_all && overtwisted_same(lhs, rhs) == SameVerdict::Same;
        }
        ok = ok && same_all;
        detail += same_all ? "; plane fields agree" : "; plane fields disagree";
        sink.item("connect-sum-d3", ok, detail);
    }

    {
        const struct {
            const char* label;
            MRegime regime;
            const char* sg;
            const char* bn;
            const char* sn;
        } rows[4] = {
            {"m>0", MRegime::Positive, "1", "1", "1"},
            {"m=0", MRegime::Zero, "0", "1", "-1"},
            {"m=-1", MRegime::MinusOne, "0", "[3,9]", "1"},
            {"m<-1", MRegime::LessThanMinusOne, "0", "[4,9]", "1"},
        };
        for (const auto& row : rows) {
            const InvariantRecord rec = table1(row.regime);
            const bool ok = rec.sg.to_string() == row.sg && rec.bn.to_string() == row.bn &&
                            rec.sn.to_string() == row.sn;
            sink.item(std::string("table1-row ") + row.label, ok,
                      "sg=" + rec.sg.to_string() + " bn=" + rec.bn.to_string() +
                          " sn=" + rec.sn.to_string());
        }
    }

    {
        const IntMat d2 = build_complex(preset_fig8_planar(-1).book).d2;
        IntMat expected(4, 5);
        const long long cols[5][4] = {
            {0, 1, 0, 0}, {1, -1, 0, 0}, {0, 1, -1, 0}, {0, 0, 1, -1}, {0, 1, -1, 1}};
        for (std::size_t c = 0; c < 5; ++c)
            for (std::size_t r = 0; r < 4; ++r) expected.at(r, c) = int_from(cols[c][r]);
        sink.item("d2-golden", d2 == expected, "five-column boundary matrix");
    }

    {
        bool ok = true;
        std::string detail = "d3 unchanged under positive stabilization";
        // disk
        {
            const Rat before = d3(make_disk(), std::monostate{}).d3;
            const Rat after = d3(positive_stabilize(make_disk()), std::monostate{}).d3;
            ok = ok && before == after && before == make_rat(-1, 2);
        }
        // fig8-planar presets: pad the h basis with the new letter's zero row
        for (long long m = 0; m >= -3 && ok; --m) {
            Fig8PlanarPreset preset = preset_fig8_planar(m);
            if (corrupt_rotation)
                for (CurveOnPage& c : preset.book.curves)
                    if (c.name == "gamma4") c.rotation = 0;
            const FormSource plain =
                FormOnBasis{preset.form_on_h.matrix, preset.h_basis.vectors, FormProvenance::Preset};
            const Rat before = d3(preset.book, plain).d3;
            const OpenBookDesc stabilized = positive_stabilize(preset.book);
            IntMat padded(preset.h_basis.vectors.rows() + 1, preset.h_basis.vectors.cols());
            for (std::size_t r = 0; r < preset.h_basis.vectors.rows(); ++r)
                for (std::size_t c = 0; c < preset.h_basis.vectors.cols(); ++c)
                    padded.at(r, c) = preset.h_basis.vectors.at(r, c);
            const FormSource source =
                FormOnBasis{preset.form_on_h.matrix, padded, FormProvenance::Preset};
            ok = ok && d3(stabilized, source).d3 == before;
        }
        // phi family under a signature override
        for (long long m = -1; m >= -3 && ok; --m) {
            const OpenBookDesc book = make_phi_nm({1}, m, true);
            const SigmaOverride over{8 * (-m)};
            ok = ok && d3(book, over).d3 == d3(positive_stabilize(book), over).d3;
        }
        sink.item("stabilization-invariance", ok, detail);
    }

    {
        const TorusClass cls = torus_nielsen_thurston(make_phi_nm({1}, 0, true));
        sink.item("torus-classification", cls == TorusClass::PseudoAnosov,
                  std::string("phi_(1),0 is ") + to_string(cls));
    }

    return sink.all_ok ? kExitOk : kExitPaperCheck;
}

int dispatch(int argc, char** argv) {
    CLI::App app{"exact invariants of contact open book decompositions"};
    app.require_subcommand(1);

    std::string describe_path;
    auto* describe = app.add_subcommand("describe", "page data, word length and left-twist count");
    describe->add_option("file", describe_path, "open book JSON file")->required();

    std::string classify_path;
    auto* classify =
        app.add_subcommand("classify", "Nielsen-Thurston class of a (1,1)-page monodromy");
    classify->add_option("file", classify_path, "open book JSON file")->required();

    std::string d3_path, d3_form = "preset", d3_out;
    bool d3_json = false;
    auto* d3_cmd = app.add_subcommand("d3", "exact d3 of the supported contact structure");
    d3_cmd->add_option("file", d3_path, "open book JSON file")->required();
    d3_cmd->add_option("--form", d3_form, "preset | file=PATH | sigma=INT (default preset)");
    d3_cmd->add_flag("--json", d3_json, "emit the report as JSON");
    d3_cmd->add_option("-o,--output", d3_out, "write the report to a file");

    std::string bounds_path;
    auto* bounds = app.add_subcommand("bounds", "refine interval bounds on sg, bn, sn");
    bounds->add_option("file", bounds_path, "invariant record JSON file")->required();

    auto* table = app.add_subcommand("table1", "reference table for the genus-one twist family");

    std::string fault;
    auto* paper = app.add_subcommand("paper-check", "run the built-in reproduction suite");
    paper->add_option("--inject-fault", fault)->group(""); // test hook, hidden

    std::string preset_name, preset_out;
    std::vector<long long> preset_n;
    long long preset_m = 0;
    bool keep_delta = false;
    auto* exp = app.add_subcommand("export-preset", "write a bundled open book as JSON");
    exp->add_option("name", preset_name, "disk | fig8-planar | phi-nm | pprime")->required();
    exp->add_option("--m", preset_m, "twist-power parameter m");
    exp->add_option("--n", preset_n, "tuple n for phi-nm (comma separated)")->delimiter(',');
    exp->add_flag("--keep-delta", keep_delta, "keep delta literal instead of expanding");
    exp->add_option("-o,--output", preset_out, "write to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitParse;
    }

    if (describe->parsed()) return cmd_describe(describe_path);
    if (classify->parsed()) return cmd_classify(classify_path);
    if (d3_cmd->parsed()) return cmd_d3(d3_path, d3_form, d3_json, d3_out);
    if (bounds->parsed()) return cmd_bounds(bounds_path);
    if (table->parsed()) return cmd_table1();
    if (paper->parsed()) return cmd_paper_check(fault);
    if (exp->parsed()) return cmd_export_preset(preset_name, preset_n, preset_m, keep_delta, preset_out);
    return kExitParse;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const ContradictionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitContradiction;
    } catch (const MissingRotationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMissingRotation;
    } catch (const NonTorsionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNonTorsion;
    } catch (const SigmaOverrideError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnsoundOverride;
    } catch (const Error& e) {
        // parse, validation, wrong page, dimension, missing class, unbounded
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
