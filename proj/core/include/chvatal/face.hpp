#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "chvatal/errors.hpp"

namespace chvatal {

/// Face-width capacity: the largest ground set a Face can represent.
inline constexpr int kMaxVertices = 64;

/// A subset of a ground set of at most kMaxVertices vertices, stored as a
/// 64-bit mask. Vertex ids are bit positions. All set operations are O(1).
class Face {
public:
    constexpr Face() = default;

    static constexpr Face from_bits(std::uint64_t bits) { return Face(bits); }

    static Face of(std::initializer_list<int> vertices) {
        Face f;
        for (int v : vertices) f = f.with(v);
        return f;
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    int size() const { return std::popcount(bits_); }

    constexpr bool contains(int v) const { return ((bits_ >> v) & 1u) != 0; }
    constexpr bool intersects(Face o) const { return (bits_ & o.bits_) != 0; }
    constexpr bool subset_of(Face o) const { return (bits_ & ~o.bits_) == 0; }

    constexpr Face operator&(Face o) const { return Face(bits_ & o.bits_); }
    constexpr Face operator|(Face o) const { return Face(bits_ | o.bits_); }
    /// Set difference.
    constexpr Face operator-(Face o) const { return Face(bits_ & ~o.bits_); }

    Face with(int v) const {
        require_vertex(v);
        return Face(bits_ | (std::uint64_t{1} << v));
    }
    Face without(int v) const {
        require_vertex(v);
        return Face(bits_ & ~(std::uint64_t{1} << v));
    }

    /// Smallest vertex id; face must be nonempty.
    int min_vertex() const {
        if (empty()) throw PreconditionError("min_vertex of empty face");
        return std::countr_zero(bits_);
    }

    std::vector<int> vertices() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::uint64_t b = bits_; b != 0; b &= b - 1)
            out.push_back(std::countr_zero(b));
        return out;
    }

    constexpr bool operator==(const Face&) const = default;

private:
    explicit constexpr Face(std::uint64_t bits) : bits_(bits) {}
    static void require_vertex(int v) {
        if (v < 0 || v >= kMaxVertices)
            throw PreconditionError("vertex id out of range");
    }

    std::uint64_t bits_ = 0;
};

/// Canonical face order: by (size, numeric value). Families iterate in this
/// order, which makes every trace and output deterministic.
inline bool face_less(Face a, Face b) {
    int sa = a.size(), sb = b.size();
    if (sa != sb) return sa < sb;
    return a.bits() < b.bits();
}

struct FaceLess {
    bool operator()(Face a, Face b) const { return face_less(a, b); }
};

} // namespace chvatal
