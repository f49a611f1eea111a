#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "chvatal/face.hpp"

namespace chvatal {

/// An ordered set of vertex labels. Labels are kept sorted; the internal
/// vertex id of a label is its index in the sorted order, so ids are dense
/// in 0..n-1 and stable for a given label set.
class GroundSet {
public:
    GroundSet() = default;

    /// Throws PreconditionError on duplicate or empty labels, or if there
    /// are more than kMaxVertices of them.
    explicit GroundSet(std::vector<std::string> labels);

    /// n vertices labelled "a", "b", ..., "z", "v26", "v27", ...
    static GroundSet alphabetic(int n);

    int size() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int id) const;

    /// Id of a label, or -1 if the label is unknown.
    int id_of(std::string_view label) const;

    /// The face containing every vertex.
    Face all() const;

    bool operator==(const GroundSet&) const = default;

private:
    std::vector<std::string> labels_;
};

} // namespace chvatal
