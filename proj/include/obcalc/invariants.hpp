#pragma once

// Interval-valued knowledge base for the support genus, binding number and
// support norm of a contact structure, refined to a fixed point by the
// inference rules relating the three, plus the overtwisted comparison
// shortcut for manifolds with trivial first homology.

#include "obcalc/exact.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace obcalc {

// Integer extended with +/- infinity; only the arithmetic the rules need.
struct Extended {
    enum class Kind { NegInf, Finite, PosInf };
    Kind kind = Kind::Finite;
    long long value = 0;

    static Extended neg_inf() { return {Kind::NegInf, 0}; }
    static Extended pos_inf() { return {Kind::PosInf, 0}; }
    static Extended finite(long long v) { return {Kind::Finite, v}; }

    bool is_finite() const { return kind == Kind::Finite; }

    bool operator==(const Extended&) const = default;
};

bool ext_less(const Extended& a, const Extended& b);
bool ext_leq(const Extended& a, const Extended& b);
Extended ext_add(const Extended& a, const Extended& b);       // opposite infinities are a logic error
Extended ext_sub(const Extended& a, const Extended& b);
Extended ext_scale(long long k, const Extended& a);           // k >= 0
Extended ext_min(const Extended& a, const Extended& b);
Extended ext_max(const Extended& a, const Extended& b);
Extended ext_floor_half(const Extended& a);                   // floor(a/2)
Extended ext_ceil_half(const Extended& a);                    // ceil(a/2)
std::string ext_string(const Extended& a);

struct Interval {
    Extended lo = Extended::neg_inf();
    Extended hi = Extended::pos_inf();

    static Interval all() { return {}; }
    static Interval at(long long v) { return {Extended::finite(v), Extended::finite(v)}; }
    static Interval range(long long lo, long long hi);
    static Interval at_least(long long lo) { return {Extended::finite(lo), Extended::pos_inf()}; }

    bool is_singleton() const { return lo.is_finite() && lo == hi; }
    bool is_bounded() const { return lo.is_finite() && hi.is_finite(); }
    bool contains(long long v) const;

    // "3" for singletons, "[3,9]" otherwise, with "inf"/"-inf" endpoints.
    std::string to_string() const;

    bool operator==(const Interval&) const = default;
};

enum class Tag { LensSpace, SmallSFS, Hyperbolic, TightS3 };

const char* to_string(Tag t);
std::optional<Tag> tag_from_string(const std::string& s);

struct InvariantRecord {
    Interval sg{Extended::finite(0), Extended::pos_inf()};
    Interval bn{Extended::finite(1), Extended::pos_inf()};
    Interval sn{Extended::finite(-1), Extended::pos_inf()};
    std::optional<Rat> d3;
    std::optional<bool> overtwisted;
    std::optional<bool> h1_trivial;
    std::set<Tag> tags;
    std::vector<std::string> assumptions; // declared facts this record consumed
    std::string manifold;                 // optional shared label

    bool operator==(const InvariantRecord&) const = default;
};

struct RefineResult {
    InvariantRecord record;
    std::vector<std::string> fired_rules; // in order of first firing
};

// Fixed point of the interval rules:
//  (a) sn <= 2 sg + bn - 2, propagated in all three directions;
//  (b) sn >= min(2 sg + bn - 2, 2 sg + 1), propagated;
//  (c) when bn <= 3 is known, sn = 2 sg + bn - 2 as an interval equality;
//  (d) sn >= -1, and sn = -1 exactly for the standard tight structure on
//      the three-sphere (tag and equality propagate both ways).
// Throws ContradictionError naming the rule that emptied an interval.
RefineResult refine(const InvariantRecord& rec);

// Planar consequences, applicable once sg is pinned to [0,0]: a binding
// number at most two forces a lens space, exactly three a small Seifert
// fibered space; a hyperbolic manifold conversely forces bn >= 4 and
// sn >= 1. Records whose sg is not [0,0] are returned unchanged.
RefineResult planar_low_bn_tags(const InvariantRecord& rec);

// refine and planar_low_bn_tags iterated to a joint fixed point.
RefineResult analyze(const InvariantRecord& rec);

// d3 of a connected sum: d3 + d3' + 1/2.
Rat connect_sum_d3(const Rat& d3_left, const Rat& d3_right);

enum class SameVerdict { Same, Different, Undecidable };

const char* to_string(SameVerdict v);

// Plane-field comparison for overtwisted structures on a common manifold
// with trivial first homology: isotopic exactly when the d3 values agree.
SameVerdict overtwisted_same(const InvariantRecord& a, const InvariantRecord& b);

enum class MRegime { Positive, Zero, MinusOne, LessThanMinusOne };

// The reference record for the genus-one twist family in each parameter
// regime, assembled from its declared assumption set and fully refined.
InvariantRecord table1(MRegime regime);

// 2 sg + bn - 2 - sn by interval arithmetic; all inputs must be bounded.
Interval gap(const InvariantRecord& rec);

// Four-row text table of the table1 records, stable byte-for-byte.
std::string render_table1();

} // namespace obcalc
