#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "chvatal/complex.hpp"
#include "chvatal/oracle.hpp"

namespace chvatal {

/// Largest ground size the exhaustive enumerator accepts. Beyond this the
/// Dedekind-number growth of downsets makes exhaustive runs hopeless.
inline constexpr int kMaxEnumeration = 6;

/// Visits every complex (downset of nonempty faces) on the ground set
/// "a".."f"[:n] exactly once, the empty complex included. Faces are decided
/// in increasing mask order and a face may be included only when all its
/// nonempty proper subsets already are, so only downsets are ever built.
/// Throws PreconditionError unless 0 <= n <= kMaxEnumeration.
void for_each_complex(int n, const std::function<void(const Complex&)>& visit);

/// A key invariant under relabeling of the used vertices: the
/// lexicographically least sorted face-mask list over all permutations of
/// the support, faces compacted to ids 0..k-1. Two complexes get equal keys
/// iff a vertex permutation maps one onto the other.
using CanonicalKey = std::vector<std::uint64_t>;
CanonicalKey canonical_form(const Complex& complex);

struct EnumerationReport {
    int n = 0;
    std::uint64_t total = 0;                 ///< complexes generated
    std::optional<std::uint64_t> canonical;  ///< classes, when reduction is on
    bool verified = false;                   ///< whether the oracle ran
    std::vector<Complex> violations;         ///< counterexamples (expected empty)
    double wall_seconds = 0.0;
};

/// Enumerates every complex on n vertices and, when `verify` is set, runs
/// the full oracle on each (each canonical representative, when `canonical`
/// is set) and collects conjecture violations. For every complex of rank
/// <= 3 with a nonempty maximum intersecting family the rank-3 certifier is
/// cross-checked against the oracle as well. `jobs` > 1 fans the stream out
/// to a worker pool; the report is identical to a serial run except for
/// wall_seconds.
EnumerationReport enumerate_complexes(int n, bool canonical, bool verify,
                                      int jobs = 1);

/// enumerate_complexes with verification on.
EnumerationReport exhaustive_verify(int n, bool canonical = false, int jobs = 1);

} // namespace chvatal
