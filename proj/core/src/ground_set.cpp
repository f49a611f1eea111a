#include "chvatal/ground_set.hpp"

#include <algorithm>

namespace chvatal {

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (static_cast<int>(labels_.size()) > kMaxVertices)
        throw PreconditionError("ground set exceeds capacity of " +
                                std::to_string(kMaxVertices) + " vertices");
    std::sort(labels_.begin(), labels_.end());
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i].empty())
            throw PreconditionError("empty vertex label");
        if (i > 0 && labels_[i] == labels_[i - 1])
            throw PreconditionError("duplicate vertex label '" + labels_[i] + "'");
    }
}

GroundSet GroundSet::alphabetic(int n) {
    if (n < 0 || n > kMaxVertices)
        throw PreconditionError("ground size out of range");
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        if (i < 26)
            labels.emplace_back(1, static_cast<char>('a' + i));
        else
            labels.push_back("v" + std::to_string(i));
    }
    return GroundSet(std::move(labels));
}

const std::string& GroundSet::label(int id) const {
    if (id < 0 || id >= size())
        throw PreconditionError("vertex id out of range");
    return labels_[static_cast<std::size_t>(id)];
}

int GroundSet::id_of(std::string_view label) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label) return -1;
    return static_cast<int>(it - labels_.begin());
}

Face GroundSet::all() const {
    if (labels_.empty()) return Face();
    if (size() == kMaxVertices) return Face::from_bits(~std::uint64_t{0});
    return Face::from_bits((std::uint64_t{1} << size()) - 1);
}

} // namespace chvatal
