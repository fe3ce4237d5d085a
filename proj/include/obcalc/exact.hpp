#pragma once

// Exact arithmetic scalars. All linear algebra in this project runs on
// arbitrary-precision integers and rationals; floating point is never used.

#include <gmpxx.h>

#include <optional>
#include <string>

namespace obcalc {

using Int = mpz_class;
using Rat = mpq_class;

// Canonical rational num/den. Throws ValidationError on zero denominator.
Rat make_rat(const Int& num, const Int& den);

// "p/q" in lowest terms, "p" when the denominator is 1.
std::string rat_string(const Rat& q);

// Accepts "p" or "p/q" (optionally signed). nullopt on anything else.
std::optional<Rat> parse_rat(const std::string& s);

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// gmpxx has no long long constructors; these go through long, which is wide
// enough on every platform this project targets.
static_assert(sizeof(long) == sizeof(long long), "long long values must fit in long");

inline Int int_from(long long v) { return Int(static_cast<long>(v)); }
inline Rat rat_from(long long v) { return Rat(static_cast<long>(v)); }

} // namespace obcalc
