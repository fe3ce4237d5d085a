#include "obcalc/surface.hpp"

#include "obcalc/errors.hpp"

#include <set>

namespace obcalc {

long long euler_char(const PageSurface& page) {
    return 2 - 2 * page.genus - page.boundary_count;
}

long long page_norm(const PageSurface& page) { return -euler_char(page); }

long long h1_rank(const PageSurface& page) { return 2 * page.genus + page.boundary_count - 1; }

const CurveOnPage* OpenBookDesc::find_curve(std::string_view name) const {
    for (const CurveOnPage& c : curves)
        if (c.name == name) return &c;
    return nullptr;
}

void OpenBookDesc::validate() const {
    if (page.genus < 0) throw ValidationError("page genus must be non-negative");
    if (page.boundary_count < 1) throw ValidationError("page must have at least one boundary component");
    const auto rank = static_cast<std::size_t>(h1_rank(page));
    std::set<std::string> seen;
    for (const CurveOnPage& c : curves) {
        if (c.name.empty()) throw ValidationError("curve with empty name");
        if (!seen.insert(c.name).second)
            throw ValidationError("duplicate curve name '" + c.name + "'");
        if (c.h1_class && c.h1_class->size() != rank)
            throw ValidationError("curve '" + c.name + "': homology class has length " +
                                  std::to_string(c.h1_class->size()) + ", expected " +
                                  std::to_string(rank));
    }
    for (const TwistLetter& l : word.letters)
        if (!find_curve(l.curve))
            throw ValidationError("word letter references unknown curve '" + l.curve + "'");
}

} // namespace obcalc
