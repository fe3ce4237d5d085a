#include "obcalc/json_io.hpp"

#include "obcalc/errors.hpp"

#include <fstream>

namespace obcalc {

using nlohmann::json;

namespace {

// Interval endpoints are capped so the refinement arithmetic stays inside
// long long with room to spare.
constexpr long long kMaxEndpoint = 1000000000000000LL; // 1e15

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ParseError(where + ": " + what);
}

const json& need(const json& j, const char* field, const std::string& where) {
    const auto it = j.find(field);
    if (it == j.end()) fail(where, std::string("missing field '") + field + "'");
    return *it;
}

long long as_int(const json& j, const std::string& where) {
    if (!j.is_number_integer()) fail(where, "expected an integer");
    return j.get<long long>();
}

std::vector<long long> as_int_vector(const json& j, const std::string& where) {
    if (!j.is_array()) fail(where, "expected an array of integers");
    std::vector<long long> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(as_int(j[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

Rat as_rat(const json& j, const std::string& where) {
    if (j.is_number_integer()) return rat_from(j.get<long long>());
    if (j.is_string()) {
        const auto q = parse_rat(j.get<std::string>());
        if (!q) fail(where, "expected \"p\" or \"p/q\"");
        return *q;
    }
    fail(where, "expected an integer or a \"p/q\" string");
}

Extended as_endpoint(const json& j, const std::string& where) {
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "inf" || s == "+inf") return Extended::pos_inf();
        if (s == "-inf") return Extended::neg_inf();
        fail(where, "expected an integer, \"inf\" or \"-inf\"");
    }
    const long long v = as_int(j, where);
    if (v > kMaxEndpoint || v < -kMaxEndpoint) fail(where, "endpoint magnitude above 1e15");
    return Extended::finite(v);
}

Interval as_interval(const json& j, const std::string& where) {
    if (j.is_number_integer()) {
        const Extended e = as_endpoint(j, where);
        return Interval{e, e};
    }
    if (!j.is_array() || j.size() != 2)
        fail(where, "expected an integer or a [lo, hi] pair");
    Interval iv{as_endpoint(j[0], where + "[0]"), as_endpoint(j[1], where + "[1]")};
    if (ext_less(iv.hi, iv.lo)) fail(where, "interval has lo > hi");
    return iv;
}

json interval_to_json(const Interval& iv) {
    if (iv.is_singleton()) return json(iv.lo.value);
    json out = json::array();
    out.push_back(iv.lo.is_finite() ? json(iv.lo.value) : json("-inf"));
    out.push_back(iv.hi.is_finite() ? json(iv.hi.value) : json("inf"));
    return out;
}

} // namespace

BookFile parse_book_json(const json& j) {
    if (!j.is_object()) fail("book", "expected a JSON object");
    BookFile out;

    const json& page = need(j, "page", "book");
    out.book.page.genus = as_int(need(page, "genus", "page"), "page.genus");
    out.book.page.boundary_count = as_int(need(page, "boundary", "page"), "page.boundary");

    const json& curves = need(j, "curves", "book");
    if (!curves.is_array()) fail("curves", "expected an array");
    for (std::size_t i = 0; i < curves.size(); ++i) {
        const std::string where = "curves[" + std::to_string(i) + "]";
        const json& c = curves[i];
        if (!c.is_object()) fail(where, "expected an object");
        CurveOnPage curve;
        const json& name = need(c, "name", where);
        if (!name.is_string()) fail(where + ".name", "expected a string");
        curve.name = name.get<std::string>();
        if (c.contains("h1_class")) curve.h1_class = as_int_vector(c["h1_class"], where + ".h1_class");
        if (c.contains("rotation")) curve.rotation = as_int(c["rotation"], where + ".rotation");
        out.book.curves.push_back(std::move(curve));
    }

    const json& word = need(j, "word", "book");
    if (!word.is_array()) fail("word", "expected an array");
    for (std::size_t i = 0; i < word.size(); ++i) {
        const std::string where = "word[" + std::to_string(i) + "]";
        const json& l = word[i];
        if (!l.is_object()) fail(where, "expected an object");
        TwistLetter letter;
        const json& curve = need(l, "curve", where);
        if (!curve.is_string()) fail(where + ".curve", "expected a string");
        letter.curve = curve.get<std::string>();
        const json& sign = need(l, "sign", where);
        if (!sign.is_string()) fail(where + ".sign", "expected \"right\" or \"left\"");
        const auto s = sign.get<std::string>();
        if (s == "right")
            letter.handedness = Handedness::Right;
        else if (s == "left")
            letter.handedness = Handedness::Left;
        else
            fail(where + ".sign", "expected \"right\" or \"left\"");
        out.book.word.letters.push_back(std::move(letter));
    }

    out.book.validate();

    if (j.contains("form")) {
        out.form = parse_form_json(j["form"]);
        if (out.form->basis && out.form->basis->rows() != out.book.word.size())
            fail("form.basis", "basis vectors must have one entry per word letter");
    }
    return out;
}

BookFile load_book_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    return parse_book_json(j);
}

json book_file_to_json(const BookFile& f) {
    json j;
    j["page"] = {{"genus", f.book.page.genus}, {"boundary", f.book.page.boundary_count}};
    j["curves"] = json::array();
    for (const CurveOnPage& c : f.book.curves) {
        json jc;
        jc["name"] = c.name;
        if (c.h1_class) jc["h1_class"] = *c.h1_class;
        if (c.rotation) jc["rotation"] = *c.rotation;
        j["curves"].push_back(std::move(jc));
    }
    j["word"] = json::array();
    for (const TwistLetter& l : f.book.word.letters)
        j["word"].push_back(
            {{"curve", l.curve}, {"sign", l.handedness == Handedness::Right ? "right" : "left"}});
    if (f.form) {
        json jf;
        jf["provenance"] = to_string(f.form->provenance);
        jf["matrix"] = json::array();
        for (std::size_t r = 0; r < f.form->matrix.rows(); ++r) {
            json row = json::array();
            for (std::size_t c = 0; c < f.form->matrix.cols(); ++c)
                row.push_back(rat_string(f.form->matrix.at(r, c)));
            jf["matrix"].push_back(std::move(row));
        }
        if (f.form->basis) {
            jf["basis"] = json::array();
            for (std::size_t c = 0; c < f.form->basis->cols(); ++c) {
                json vec = json::array();
                for (std::size_t r = 0; r < f.form->basis->rows(); ++r)
                    vec.push_back(f.form->basis->at(r, c).get_str());
                jf["basis"].push_back(std::move(vec));
            }
        }
        j["form"] = std::move(jf);
    }
    return j;
}

FormOnBasis parse_form_json(const json& j) {
    if (!j.is_object()) fail("form", "expected a JSON object");
    FormOnBasis out;
    const json& matrix = need(j, "matrix", "form");
    if (!matrix.is_array()) fail("form.matrix", "expected an array of rows");
    const std::size_t n = matrix.size();
    out.matrix = RatMat(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        const json& row = matrix[r];
        if (!row.is_array() || row.size() != n)
            fail("form.matrix", "expected a square matrix");
        for (std::size_t c = 0; c < n; ++c)
            out.matrix.at(r, c) =
                as_rat(row[c], "form.matrix[" + std::to_string(r) + "][" + std::to_string(c) + "]");
    }
    if (!out.matrix.is_symmetric()) fail("form.matrix", "matrix is not symmetric");
    if (j.contains("basis")) {
        const json& basis = need(j, "basis", "form");
        if (!basis.is_array() || basis.size() != n)
            fail("form.basis", "expected one basis vector per matrix row");
        std::size_t k = 0;
        if (n > 0) {
            if (!basis[0].is_array()) fail("form.basis[0]", "expected an array of integers");
            k = basis[0].size();
        }
        IntMat b(k, n);
        for (std::size_t v = 0; v < n; ++v) {
            const std::string where = "form.basis[" + std::to_string(v) + "]";
            if (!basis[v].is_array() || basis[v].size() != k)
                fail(where, "basis vectors must all have the same length");
            for (std::size_t r = 0; r < k; ++r) {
                const json& e = basis[v][r];
                const std::string entry_where = where + "[" + std::to_string(r) + "]";
                if (e.is_string()) {
                    try {
                        b.at(r, v) = Int(e.get<std::string>());
                    } catch (const std::invalid_argument&) {
                        fail(entry_where, "expected an integer");
                    }
                } else {
                    b.at(r, v) = int_from(as_int(e, entry_where));
                }
            }
        }
        out.basis = std::move(b);
    }
    if (j.contains("provenance")) {
        const json& p = j["provenance"];
        if (!p.is_string()) fail("form.provenance", "expected \"preset\" or \"user\"");
        const auto s = p.get<std::string>();
        if (s == "preset")
            out.provenance = FormProvenance::Preset;
        else if (s == "user")
            out.provenance = FormProvenance::UserSupplied;
        else
            fail("form.provenance", "expected \"preset\" or \"user\"");
    }
    return out;
}

FormOnBasis load_form_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    return parse_form_json(j);
}

InvariantRecord parse_record_json(const json& j) {
    if (!j.is_object()) fail("record", "expected a JSON object");
    InvariantRecord rec;
    if (j.contains("manifold")) {
        if (!j["manifold"].is_string()) fail("record.manifold", "expected a string");
        rec.manifold = j["manifold"].get<std::string>();
    }
    if (j.contains("sg")) rec.sg = as_interval(j["sg"], "record.sg");
    if (j.contains("bn")) rec.bn = as_interval(j["bn"], "record.bn");
    if (j.contains("sn")) rec.sn = as_interval(j["sn"], "record.sn");
    if (j.contains("d3")) rec.d3 = as_rat(j["d3"], "record.d3");
    if (j.contains("overtwisted")) {
        if (!j["overtwisted"].is_boolean()) fail("record.overtwisted", "expected a boolean");
        rec.overtwisted = j["overtwisted"].get<bool>();
    }
    if (j.contains("h1_trivial")) {
        if (!j["h1_trivial"].is_boolean()) fail("record.h1_trivial", "expected a boolean");
        rec.h1_trivial = j["h1_trivial"].get<bool>();
    }
    if (j.contains("tags")) {
        const json& tags = j["tags"];
        if (!tags.is_array()) fail("record.tags", "expected an array of tag names");
        for (const json& t : tags) {
            if (!t.is_string()) fail("record.tags", "expected strings");
            const auto tag = tag_from_string(t.get<std::string>());
            if (!tag) fail("record.tags", "unknown tag '" + t.get<std::string>() + "'");
            rec.tags.insert(*tag);
        }
    }
    if (j.contains("assumptions")) {
        const json& as = j["assumptions"];
        if (!as.is_array()) fail("record.assumptions", "expected an array of strings");
        for (const json& a : as) {
            if (!a.is_string()) fail("record.assumptions", "expected strings");
            rec.assumptions.push_back(a.get<std::string>());
        }
    }
    return rec;
}

InvariantRecord load_record_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    return parse_record_json(j);
}

json record_to_json(const InvariantRecord& rec) {
    json j;
    if (!rec.manifold.empty()) j["manifold"] = rec.manifold;
    j["sg"] = interval_to_json(rec.sg);
    j["bn"] = interval_to_json(rec.bn);
    j["sn"] = interval_to_json(rec.sn);
    if (rec.d3) j["d3"] = rat_string(*rec.d3);
    if (rec.overtwisted) j["overtwisted"] = *rec.overtwisted;
    if (rec.h1_trivial) j["h1_trivial"] = *rec.h1_trivial;
    if (!rec.tags.empty()) {
        json tags = json::array();
        for (Tag t : rec.tags) tags.push_back(to_string(t));
        j["tags"] = std::move(tags);
    }
    if (!rec.assumptions.empty()) j["assumptions"] = rec.assumptions;
    return j;
}

json d3_report_to_json(const D3Report& report) {
    json j;
    j["chi_x"] = report.chi_x;
    j["sigma_x"] = report.sigma_x;
    j["q"] = report.q;
    j["c_squared"] = rat_string(report.c_squared);
    j["d3"] = rat_string(report.d3);
    j["form"] = report.form_source;
    return j;
}

} // namespace obcalc
