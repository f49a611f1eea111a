#include "chvatal/transform.hpp"

#include <algorithm>

#include "chvatal/complex.hpp"
#include "chvatal/errors.hpp"

namespace chvatal {

namespace {

void require_distinct_vertices(const Family& family, FlipContext ctx) {
    const int n = family.ground().size();
    for (int v : {ctx.a, ctx.b, ctx.v})
        if (v < 0 || v >= n) throw PreconditionError("unknown vertex");
    if (ctx.a == ctx.b || ctx.a == ctx.v || ctx.b == ctx.v)
        throw PreconditionError("flip context vertices must be distinct");
}

void require_hypothesis(const Family& family, FlipContext ctx) {
    for (Face f : family)
        if (f.contains(ctx.v) && !f.contains(ctx.a) && !f.contains(ctx.b))
            throw HypothesisError("face contains v but avoids both a and b");
}

// r_a with the roles of (first, second) as given; callers swap for r_b.
std::vector<Face> residual(const Family& family, int first, int second, int v) {
    std::vector<Face> out;
    for (Face f : family) {
        if (!f.contains(first) || !f.contains(v) || f.contains(second)) continue;
        if (!family.contains(f.without(v))) out.push_back(f);
    }
    return out;
}

std::pair<int, long long> potential_pair(const Family& f) {
    return {-f.size(), f.total_size()};
}

} // namespace

Residuals residuals(const Family& family, FlipContext ctx) {
    require_distinct_vertices(family, ctx);
    require_hypothesis(family, ctx);
    return Residuals{Family(family.ground(), residual(family, ctx.a, ctx.b, ctx.v)),
                     Family(family.ground(), residual(family, ctx.b, ctx.a, ctx.v))};
}

Family flip(const Family& family, FlipContext ctx) {
    Residuals r = residuals(family, ctx);

    Family out = family;
    for (Face f : r.r_b) out = out.without(f);
    for (Face f : r.r_a) out = out.with(f.without(ctx.v));

    detail::check_invariant(
        out.size() == family.size() - r.r_b.size() + r.r_a.size(),
        "flip size |F| - |r_b| + |r_a| not exact");
    return out;
}

StepOutcome compress_step(const Family& family, int a, int b) {
    const int n = family.ground().size();
    if (a < 0 || a >= n || b < 0 || b >= n) throw PreconditionError("unknown vertex");
    if (a == b) throw PreconditionError("star vertices must be distinct");
    if (!is_intersecting(family))
        throw PreconditionError("family is not intersecting");

    bool all_a = true, all_b = true;
    for (Face f : family) {
        if (!f.contains(a)) all_a = false;
        if (!f.contains(b)) all_b = false;
        if (!f.contains(a) && !f.contains(b))
            throw PreconditionError("face avoids both star vertices");
    }
    if (all_a) return InStar{a};
    if (all_b) return InStar{b};

    // First face with a but not b, in (size, value) order. It is
    // inclusion-minimal among those faces, so it cannot lose its residual
    // membership to a smaller face.
    Face pivot;
    for (Face f : family) {
        if (f.contains(a) && !f.contains(b)) {
            pivot = f;
            break;
        }
    }
    detail::check_invariant(!pivot.empty(), "no face with a but not b");
    // pivot != {a}: a singleton {a} in an intersecting family puts every
    // face in st(a), handled above
    const int v = pivot.without(a).min_vertex();

    FlipContext ctx{a, b, v};
    Residuals r = residuals(family, ctx);
    detail::check_invariant(!r.r_a.empty(), "pivot face missing from its residual");

    const bool swap_roles =
        r.r_a.size() < r.r_b.size() ||
        (r.r_a.size() == r.r_b.size() && r.r_a.total_size() > r.r_b.total_size());
    if (swap_roles) {
        std::swap(ctx.a, ctx.b);
        std::swap(r.r_a, r.r_b);
    }

    Family next = family;
    for (Face f : r.r_b) next = next.without(f);
    Family added(family.ground());
    for (Face f : r.r_a) {
        Face shrunk = f.without(ctx.v);
        added = added.with(shrunk);
        next = next.with(shrunk);
    }

    detail::check_invariant(potential_pair(next) < potential_pair(family),
                            "compression step failed to decrease the potential");

    return Improved{next, CompressionStep{ctx, r.r_b, added, next.size(),
                                          next.total_size()}};
}

CompressionResult two_star_compress(const Family& family, int a, int b) {
    // (-size, total_size) strictly decreases per step and both components
    // are bounded by the closure, so this many steps can never be reached
    const int n = family.ground().size();
    const std::uint64_t budget =
        std::uint64_t{1} + (std::uint64_t{1} << std::min(n, 24)) *
                               static_cast<std::uint64_t>(std::max(n, 1));

    CompressionResult result;
    Family current = family;
    for (std::uint64_t steps = 0;; ++steps) {
        if (steps > budget)
            throw InvariantError("compression step budget exhausted");
        StepOutcome outcome = compress_step(current, a, b);
        if (const auto* done = std::get_if<InStar>(&outcome)) {
            result.witness = done->vertex;
            result.final_family = std::move(current);
            break;
        }
        auto& improved = std::get<Improved>(outcome);
        result.trace.push_back(std::move(improved.step));
        current = std::move(improved.next);
    }

    detail::check_invariant(result.final_family.size() >= family.size(),
                            "compression lost faces");
    for (Face f : result.final_family)
        detail::check_invariant(f.contains(result.witness),
                                "final family escapes the witness star");
    return result;
}

} // namespace chvatal
