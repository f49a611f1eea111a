#pragma once

#include <variant>
#include <vector>

#include "chvatal/family.hpp"

namespace chvatal {

/// Three distinct vertices parameterizing a flip. The flip hypothesis is
/// that every face containing v meets {a, b}.
struct FlipContext {
    int a;
    int b;
    int v;
};

/// The two residual sets of a flip:
///   r_a = { B in F : a,v in B, b not in B, B\v not in F }
///   r_b = { B in F : b,v in B, a not in B, B\v not in F }
/// They are disjoint by construction (faces of r_a contain a and avoid b,
/// faces of r_b the other way around).
struct Residuals {
    Family r_a;
    Family r_b;
};

/// Computes the residual sets. Throws HypothesisError if some face contains
/// v but avoids both a and b, and PreconditionError if a, b, v are not three
/// distinct ground-set vertices.
Residuals residuals(const Family& family, FlipContext ctx);

/// The flip: F' = F \ r_b  union  { B\v : B in r_a }.
///
/// For an intersecting input satisfying the hypothesis, F' is intersecting,
/// |F'| = |F| - |r_b| + |r_a| exactly (the faces B\v are pairwise distinct
/// and absent from F by the B\v-not-in-F clause), and every added face is a
/// subset of a face of F, so F' stays inside closure(F). The hypothesis is
/// always validated here, even when the caller already guarantees it: the
/// check is linear and the operation carries the proof.
Family flip(const Family& family, FlipContext ctx);

/// One record of a compression trace: the oriented flip that was applied,
/// the faces it removed and added, and the family size and total size
/// afterwards. Along a trace the pair (-size, total_size) strictly
/// decreases lexicographically.
struct CompressionStep {
    FlipContext ctx;
    Family removed;
    Family added;
    int size_after = 0;
    long long total_size_after = 0;
};

using CompressionTrace = std::vector<CompressionStep>;

/// compress_step outcome: the family already lies in one star...
struct InStar {
    int vertex;
};
/// ...or one flip strictly decreased the potential.
struct Improved {
    Family next;
    CompressionStep step;
};
using StepOutcome = std::variant<InStar, Improved>;

/// One compression step for an intersecting family contained in
/// st(a) union st(b).
///
/// If every face contains a (or every face contains b), returns InStar.
/// Otherwise picks the first face containing a but not b in family order
/// (such a face is inclusion-minimal among them, so it lands in a residual
/// set), takes v as its smallest vertex besides a, orients (a, b) so that
/// either |r_a| > |r_b|, or |r_a| = |r_b| with total size of r_a at most
/// that of r_b, and applies the flip. The result is Improved with
/// (-size, total_size) strictly below the input's.
///
/// Throws PreconditionError if the family is not intersecting or some face
/// avoids both a and b.
StepOutcome compress_step(const Family& family, int a, int b);

/// Result of iterated compression: a vertex w in {a, b}, a final family
/// contained in st(w) with |final| >= |input|, and the full trace. Because
/// the final family also sits inside closure(input), this witnesses
/// |input| <= |st(closure(input), w)| <= max(|st(a)|, |st(b)|).
struct CompressionResult {
    int witness;
    Family final_family;
    CompressionTrace trace;
};

/// Iterates compress_step until the family lies in one star. Terminates
/// because (-size, total_size) strictly decreases and both components are
/// bounded; a defensive step budget turns a non-decreasing step into
/// InvariantError instead of looping.
CompressionResult two_star_compress(const Family& family, int a, int b);

} // namespace chvatal
