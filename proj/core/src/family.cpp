#include "chvatal/family.hpp"

#include <algorithm>

namespace chvatal {

Family::Family(GroundSet ground, std::vector<Face> faces)
    : ground_(std::move(ground)), faces_(std::move(faces)) {
    const Face all = ground_.all();
    for (Face f : faces_) {
        if (f.empty())
            throw PreconditionError("the empty face cannot be stored in a family");
        if (!f.subset_of(all))
            throw PreconditionError("face is not contained in the ground set");
    }
    std::sort(faces_.begin(), faces_.end(), FaceLess{});
    faces_.erase(std::unique(faces_.begin(), faces_.end()), faces_.end());
}

long long Family::total_size() const {
    long long total = 0;
    for (Face f : faces_) total += f.size();
    return total;
}

int Family::rank() const {
    // faces are sorted by size first
    return faces_.empty() ? 0 : faces_.back().size();
}

bool Family::contains(Face f) const {
    return std::binary_search(faces_.begin(), faces_.end(), f, FaceLess{});
}

Face Family::support() const {
    Face s;
    for (Face f : faces_) s = s | f;
    return s;
}

Family Family::with(Face f) const {
    if (f.empty())
        throw PreconditionError("the empty face cannot be stored in a family");
    if (!f.subset_of(ground_.all()))
        throw PreconditionError("face is not contained in the ground set");
    if (contains(f)) return *this;
    Family out;
    out.ground_ = ground_;
    out.faces_ = faces_;
    out.faces_.insert(
        std::upper_bound(out.faces_.begin(), out.faces_.end(), f, FaceLess{}), f);
    return out;
}

Family Family::without(Face f) const {
    Family out;
    out.ground_ = ground_;
    out.faces_ = faces_;
    auto it = std::lower_bound(out.faces_.begin(), out.faces_.end(), f, FaceLess{});
    if (it != out.faces_.end() && *it == f) out.faces_.erase(it);
    return out;
}

bool Family::subfamily_of(const Family& other) const {
    for (Face f : faces_)
        if (!other.contains(f)) return false;
    return true;
}

bool is_intersecting(const Family& family) {
    const auto& faces = family.faces();
    for (std::size_t i = 0; i < faces.size(); ++i)
        for (std::size_t j = i + 1; j < faces.size(); ++j)
            if (!faces[i].intersects(faces[j])) return false;
    return true;
}

int rank(const Family& family) { return family.rank(); }

} // namespace chvatal
