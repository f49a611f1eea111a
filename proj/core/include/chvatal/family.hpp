#pragma once

#include <vector>

#include "chvatal/face.hpp"
#include "chvatal/ground_set.hpp"

namespace chvatal {

/// A finite set of distinct nonempty faces over a ground set. Faces are
/// stored sorted by (size, numeric value); duplicates are merged. The empty
/// face is rejected: it can never occur in an intersecting family and no
/// star counts it, so keeping it out everywhere avoids distorted counts.
class Family {
public:
    Family() = default;
    explicit Family(GroundSet ground) : ground_(std::move(ground)) {}

    /// Sorts and dedups; throws PreconditionError if a face is empty or
    /// not contained in the ground set.
    Family(GroundSet ground, std::vector<Face> faces);

    const GroundSet& ground() const { return ground_; }
    const std::vector<Face>& faces() const { return faces_; }

    int size() const { return static_cast<int>(faces_.size()); }
    bool empty() const { return faces_.empty(); }

    /// Sum of |B| over all faces B.
    long long total_size() const;

    /// Maximum face cardinality; 0 for the empty family.
    int rank() const;

    bool contains(Face f) const;

    /// Union of all faces.
    Face support() const;

    Family with(Face f) const;
    Family without(Face f) const;

    /// True iff every face of this family is a face of `other`.
    bool subfamily_of(const Family& other) const;

    bool operator==(const Family& o) const {
        return ground_ == o.ground_ && faces_ == o.faces_;
    }

    std::vector<Face>::const_iterator begin() const { return faces_.begin(); }
    std::vector<Face>::const_iterator end() const { return faces_.end(); }

private:
    GroundSet ground_;
    std::vector<Face> faces_;
};

/// True iff every pair of faces (a face paired with itself included) has a
/// nonempty intersection. Nonempty faces always meet themselves and empty
/// faces cannot be stored, so the self-pair rule never fires here; the empty
/// family is intersecting vacuously.
bool is_intersecting(const Family& family);

/// Maximum face cardinality; 0 for the empty family.
int rank(const Family& family);

} // namespace chvatal
