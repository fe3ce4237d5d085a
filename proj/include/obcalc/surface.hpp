#pragma once

// Core value types for pages, curves, twist words and open book
// descriptions. All types are immutable values after construction.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace obcalc {

// Compact oriented surface with boundary, recorded by (genus, boundary count).
struct PageSurface {
    long long genus = 0;
    long long boundary_count = 1;

    bool operator==(const PageSurface&) const = default;
};

// chi = 2 - 2g - b
long long euler_char(const PageSurface& page);

// -chi = 2g + b - 2; at least -1, with -1 only for the disk.
long long page_norm(const PageSurface& page);

// rank of the first homology of the page: 2g + b - 1
long long h1_rank(const PageSurface& page);

enum class Handedness { Right, Left };

struct TwistLetter {
    std::string curve;
    Handedness handedness = Handedness::Right;

    bool operator==(const TwistLetter&) const = default;
};

// Ordered monodromy factorization. Right letters are positive Dehn twists,
// Left letters their inverses; exponents are always expanded into repeated
// letters.
struct TwistWord {
    std::vector<TwistLetter> letters;

    std::size_t size() const { return letters.size(); }
    bool operator==(const TwistWord&) const = default;
};

// A curve is known only through its homology class on the page, an optional
// rotation number, and its occurrences in the word. The class may be absent
// when a construction does not provide one; operations that need it say so.
struct CurveOnPage {
    std::string name;
    std::optional<std::vector<long long>> h1_class;
    std::optional<long long> rotation;

    bool operator==(const CurveOnPage&) const = default;
};

struct OpenBookDesc {
    PageSurface page;
    std::vector<CurveOnPage> curves;
    TwistWord word;

    const CurveOnPage* find_curve(std::string_view name) const;

    // Throws ValidationError on bad page data, duplicate curve names,
    // homology classes of the wrong length, or unresolved word letters.
    void validate() const;

    bool operator==(const OpenBookDesc&) const = default;
};

} // namespace obcalc
