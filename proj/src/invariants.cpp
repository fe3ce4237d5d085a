#include "obcalc/invariants.hpp"

#include "obcalc/errors.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace obcalc {

bool ext_less(const Extended& a, const Extended& b) {
    if (a.kind == Extended::Kind::NegInf) return b.kind != Extended::Kind::NegInf;
    if (a.kind == Extended::Kind::PosInf) return false;
    if (b.kind == Extended::Kind::PosInf) return true;
    if (b.kind == Extended::Kind::NegInf) return false;
    return a.value < b.value;
}

bool ext_leq(const Extended& a, const Extended& b) { return !ext_less(b, a); }

Extended ext_add(const Extended& a, const Extended& b) {
    if (a.is_finite() && b.is_finite()) return Extended::finite(a.value + b.value);
    const bool pos = a.kind == Extended::Kind::PosInf || b.kind == Extended::Kind::PosInf;
    const bool neg = a.kind == Extended::Kind::NegInf || b.kind == Extended::Kind::NegInf;
    if (pos && neg) throw std::logic_error("extended arithmetic: inf + -inf");
    return pos ? Extended::pos_inf() : Extended::neg_inf();
}

Extended ext_sub(const Extended& a, const Extended& b) {
    Extended nb = b;
    if (b.kind == Extended::Kind::PosInf)
        nb = Extended::neg_inf();
    else if (b.kind == Extended::Kind::NegInf)
        nb = Extended::pos_inf();
    else
        nb.value = -nb.value;
    return ext_add(a, nb);
}

Extended ext_scale(long long k, const Extended& a) {
    if (k < 0) throw std::logic_error("extended arithmetic: negative scale");
    if (k == 0) return Extended::finite(0);
    if (!a.is_finite()) return a;
    return Extended::finite(k * a.value);
}

Extended ext_min(const Extended& a, const Extended& b) { return ext_less(a, b) ? a : b; }
Extended ext_max(const Extended& a, const Extended& b) { return ext_less(a, b) ? b : a; }

Extended ext_floor_half(const Extended& a) {
    if (!a.is_finite()) return a;
    long long v = a.value;
    return Extended::finite(v >= 0 ? v / 2 : -((-v + 1) / 2));
}

Extended ext_ceil_half(const Extended& a) {
    if (!a.is_finite()) return a;
    long long v = a.value;
    return Extended::finite(v >= 0 ? (v + 1) / 2 : -((-v) / 2));
}

std::string ext_string(const Extended& a) {
    switch (a.kind) {
    case Extended::Kind::NegInf: return "-inf";
    case Extended::Kind::PosInf: return "inf";
    case Extended::Kind::Finite: return std::to_string(a.value);
    }
    return "?";
}

Interval Interval::range(long long lo, long long hi) {
    if (lo > hi) throw ContradictionError("interval-construction", "empty interval");
    return {Extended::finite(lo), Extended::finite(hi)};
}

bool Interval::contains(long long v) const {
    return ext_leq(lo, Extended::finite(v)) && ext_leq(Extended::finite(v), hi);
}

std::string Interval::to_string() const {
    if (is_singleton()) return std::to_string(lo.value);
    return "[" + ext_string(lo) + "," + ext_string(hi) + "]";
}

const char* to_string(Tag t) {
    switch (t) {
    case Tag::LensSpace: return "LensSpace";
    case Tag::SmallSFS: return "SmallSFS";
    case Tag::Hyperbolic: return "Hyperbolic";
    case Tag::TightS3: return "TightS3";
    }
    return "?";
}

std::optional<Tag> tag_from_string(const std::string& s) {
    if (s == "LensSpace") return Tag::LensSpace;
    if (s == "SmallSFS") return Tag::SmallSFS;
    if (s == "Hyperbolic") return Tag::Hyperbolic;
    if (s == "TightS3") return Tag::TightS3;
    return std::nullopt;
}

namespace {

// Mutable refinement state: tightening helpers record which rules actually
// changed something and throw when an interval empties.
struct Refiner {
    InvariantRecord rec;
    std::vector<std::string> fired;
    bool changed = false;

    void fire(const char* rule) {
        changed = true;
        if (std::find(fired.begin(), fired.end(), rule) == fired.end()) fired.emplace_back(rule);
    }

    void check(Interval& iv, const char* rule, const char* name) {
        if (ext_less(iv.hi, iv.lo))
            throw ContradictionError(rule, std::string(name) + " emptied to [" +
                                               ext_string(iv.lo) + "," + ext_string(iv.hi) + "]");
    }

    void tighten_lo(Interval& iv, const Extended& cand, const char* rule, const char* name) {
        if (ext_less(iv.lo, cand)) {
            iv.lo = cand;
            fire(rule);
            check(iv, rule, name);
        }
    }

    void tighten_hi(Interval& iv, const Extended& cand, const char* rule, const char* name) {
        if (ext_less(cand, iv.hi)) {
            iv.hi = cand;
            fire(rule);
            check(iv, rule, name);
        }
    }

    void add_tag(Tag t, const char* rule) {
        if (rec.tags.insert(t).second) fire(rule);
    }
};

void refine_pass(Refiner& r) {
    Interval& sg = r.rec.sg;
    Interval& bn = r.rec.bn;
    Interval& sn = r.rec.sn;
    const auto fin = [](long long v) { return Extended::finite(v); };

    // domain floors for the three minima
    r.tighten_lo(sg, fin(0), "domain-floor", "sg");
    r.tighten_lo(bn, fin(1), "domain-floor", "bn");
    r.tighten_lo(sn, fin(-1), "sn-floor", "sn");

    // (a) sn <= 2 sg + bn - 2
    r.tighten_hi(sn, ext_sub(ext_add(ext_scale(2, sg.hi), bn.hi), fin(2)), "norm-upper", "sn");
    if (sg.hi.is_finite())
        r.tighten_lo(bn, ext_add(ext_sub(sn.lo, ext_scale(2, sg.hi)), fin(2)), "norm-upper", "bn");
    if (bn.hi.is_finite())
        r.tighten_lo(sg, ext_ceil_half(ext_add(ext_sub(sn.lo, bn.hi), fin(2))), "norm-upper", "sg");

    // (b) sn >= min(2 sg + bn - 2, 2 sg + 1); the bound is increasing in sg
    // and nondecreasing in bn, so the endpoint choices below are sound.
    {
        const Extended arm1 = ext_sub(ext_add(ext_scale(2, sg.lo), bn.lo), fin(2));
        const Extended arm2 = ext_add(ext_scale(2, sg.lo), fin(1));
        r.tighten_lo(sn, ext_min(arm1, arm2), "norm-lower", "sn");
    }
    if (sn.hi.is_finite() && bn.lo.is_finite()) {
        const long long shift = std::min(bn.lo.value - 2, 1LL);
        r.tighten_hi(sg, ext_floor_half(fin(sn.hi.value - shift)), "norm-lower", "sg");
    }
    if (sn.hi.is_finite() && sg.lo.is_finite() && 2 * sg.lo.value + 1 > sn.hi.value)
        r.tighten_hi(bn, fin(sn.hi.value - 2 * sg.lo.value + 2), "norm-lower", "bn");

    // (c) bn <= 3 forces the equality sn = 2 sg + bn - 2
    if (bn.hi.is_finite() && bn.hi.value <= 3) {
        r.tighten_lo(sn, ext_sub(ext_add(ext_scale(2, sg.lo), bn.lo), fin(2)), "bn3-equality", "sn");
        r.tighten_hi(sn, ext_sub(ext_add(ext_scale(2, sg.hi), bn.hi), fin(2)), "bn3-equality", "sn");
        r.tighten_lo(sg, ext_ceil_half(ext_add(ext_sub(sn.lo, bn.hi), fin(2))), "bn3-equality", "sg");
        r.tighten_hi(sg, ext_floor_half(ext_add(ext_sub(sn.hi, bn.lo), fin(2))), "bn3-equality", "sg");
        r.tighten_lo(bn, ext_add(ext_sub(sn.lo, ext_scale(2, sg.hi)), fin(2)), "bn3-equality", "bn");
        r.tighten_hi(bn, ext_add(ext_sub(sn.hi, ext_scale(2, sg.lo)), fin(2)), "bn3-equality", "bn");
    }

    // (d) sn = -1 exactly for the tight three-sphere
    if (r.rec.tags.count(Tag::TightS3)) {
        r.tighten_lo(sn, fin(-1), "tight-s3", "sn");
        r.tighten_hi(sn, fin(-1), "tight-s3", "sn");
        r.tighten_hi(sg, fin(0), "tight-s3", "sg");
        r.tighten_hi(bn, fin(1), "tight-s3", "bn");
    }
    if (sn.hi == fin(-1)) r.add_tag(Tag::TightS3, "tight-s3");
}

void planar_pass(Refiner& r) {
    if (!(r.rec.sg == Interval::at(0))) return;
    Interval& bn = r.rec.bn;
    Interval& sn = r.rec.sn;
    if (r.rec.tags.count(Tag::Hyperbolic)) {
        if (bn.hi.is_finite() && bn.hi.value <= 3)
            throw ContradictionError("hyperbolic-vs-low-bn",
                                     "a hyperbolic manifold has no planar open book with at most "
                                     "three binding components (bn <= " +
                                         std::to_string(bn.hi.value) + ")");
        if (r.rec.tags.count(Tag::LensSpace) || r.rec.tags.count(Tag::SmallSFS) ||
            r.rec.tags.count(Tag::TightS3))
            throw ContradictionError("hyperbolic-vs-low-bn",
                                     "Hyperbolic conflicts with a Seifert fibered tag");
        r.tighten_lo(bn, Extended::finite(4), "hyperbolic-bn-floor", "bn");
        r.tighten_lo(sn, Extended::finite(1), "hyperbolic-sn-floor", "sn");
    }
    if (bn.hi.is_finite()) {
        if (bn.hi.value <= 2)
            r.add_tag(Tag::LensSpace, "lens-space-tag");
        else if (bn.hi.value == 3)
            r.add_tag(Tag::SmallSFS, "small-sfs-tag");
    }
}

RefineResult run(const InvariantRecord& rec, bool with_planar) {
    Refiner r{rec, {}, false};
    for (int round = 0; round < 1000; ++round) {
        r.changed = false;
        refine_pass(r);
        if (with_planar) planar_pass(r);
        if (!r.changed) return {std::move(r.rec), std::move(r.fired)};
    }
    throw std::logic_error("refinement did not reach a fixed point");
}

} // namespace

RefineResult refine(const InvariantRecord& rec) { return run(rec, false); }

RefineResult planar_low_bn_tags(const InvariantRecord& rec) {
    Refiner r{rec, {}, false};
    planar_pass(r);
    return {std::move(r.rec), std::move(r.fired)};
}

RefineResult analyze(const InvariantRecord& rec) { return run(rec, true); }

Rat connect_sum_d3(const Rat& d3_left, const Rat& d3_right) {
    return d3_left + d3_right + make_rat(1, 2);
}

const char* to_string(SameVerdict v) {
    switch (v) {
    case SameVerdict::Same: return "Same";
    case SameVerdict::Different: return "Different";
    case SameVerdict::Undecidable: return "Undecidable";
    }
    return "?";
}

SameVerdict overtwisted_same(const InvariantRecord& a, const InvariantRecord& b) {
    const bool comparable = a.overtwisted == true && b.overtwisted == true &&
                            a.h1_trivial == true && b.h1_trivial == true && a.d3 && b.d3;
    if (!comparable) return SameVerdict::Undecidable;
    return *a.d3 == *b.d3 ? SameVerdict::Same : SameVerdict::Different;
}

InvariantRecord table1(MRegime regime) {
    InvariantRecord rec;
    switch (regime) {
    case MRegime::Positive:
        rec.manifold = "M_(1),m m>0";
        rec.sg = Interval::at(1);
        rec.bn = Interval::range(1, 1);
        rec.assumptions = {
            "declared: sg = 1 for m > 0",
            "witness: the genus-one one-boundary open book attains the support genus, so bn <= 1",
        };
        break;
    case MRegime::Zero:
        rec.manifold = "M_(1),0 = S^3";
        rec.sg = Interval::at(0);
        rec.bn = Interval::range(1, 1);
        rec.assumptions = {
            "declared: sg = 0 for m <= 0",
            "declared: bn = 1 on the three-sphere",
        };
        break;
    case MRegime::MinusOne:
        rec.manifold = "M_(1),-1 = Sigma(2,3,7)";
        rec.sg = Interval::at(0);
        rec.bn = Interval{Extended::finite(3), Extended::finite(9)};
        rec.sn = Interval{Extended::finite(-1), Extended::finite(1)};
        rec.assumptions = {
            "declared: sg = 0 for m <= 0",
            "declared: the Brieskorn sphere Sigma(2,3,7) is not a lens space, so bn >= 3",
            "witness: a planar open book with nine binding components gives bn <= 9",
            "witness: the genus-one one-boundary open book gives sn <= 1",
        };
        break;
    case MRegime::LessThanMinusOne:
        rec.manifold = "M_(1),m m<-1";
        rec.sg = Interval::at(0);
        rec.bn = Interval{Extended::finite(1), Extended::finite(9)};
        rec.sn = Interval{Extended::finite(-1), Extended::finite(1)};
        rec.tags.insert(Tag::Hyperbolic);
        rec.assumptions = {
            "declared: sg = 0 for m <= 0",
            "declared: M_(1),m is hyperbolic for m < -1 (the exceptional surgeries are -1, 0, 1)",
            "witness: a planar open book with nine binding components gives bn <= 9",
            "witness: the genus-one one-boundary open book gives sn <= 1",
        };
        break;
    }
    return analyze(rec).record;
}

Interval gap(const InvariantRecord& rec) {
    if (!rec.sg.is_bounded() || !rec.bn.is_bounded() || !rec.sn.is_bounded())
        throw UnboundedIntervalError("gap needs bounded sg, bn and sn intervals");
    const long long lo = 2 * rec.sg.lo.value + rec.bn.lo.value - 2 - rec.sn.hi.value;
    const long long hi = 2 * rec.sg.hi.value + rec.bn.hi.value - 2 - rec.sn.lo.value;
    return Interval{Extended::finite(lo), Extended::finite(hi)};
}

std::string render_table1() {
    std::ostringstream out;
    const char* labels[4] = {"m>0", "m=0", "m=-1", "m<-1"};
    const MRegime regimes[4] = {MRegime::Positive, MRegime::Zero, MRegime::MinusOne,
                                MRegime::LessThanMinusOne};
    auto pad = [](std::string s, std::size_t w) {
        while (s.size() < w) s.push_back(' ');
        return s;
    };
    out << pad("", 6) << pad("sg", 5) << pad("bn", 7) << "sn\n";
    for (int i = 0; i < 4; ++i) {
        const InvariantRecord rec = table1(regimes[i]);
        out << pad(labels[i], 6) << pad(rec.sg.to_string(), 5) << pad(rec.bn.to_string(), 7)
            << rec.sn.to_string() << "\n";
    }
    return out.str();
}

} // namespace obcalc
