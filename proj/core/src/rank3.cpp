#include "chvatal/rank3.hpp"

#include <algorithm>
#include <cstddef>
#include <iterator>
#include <string>
#include <utility>
#include <vector>

#include "chvatal/errors.hpp"
#include "chvatal/transform.hpp"

namespace chvatal {

namespace {

void require_triangles(const Family& family) {
    for (Face f : family)
        if (f.size() != 3)
            throw PreconditionError("family must consist of triangles only");
    if (!is_intersecting(family))
        throw PreconditionError("family must be intersecting");
}

std::vector<Face> face_difference(const Family& x, const Family& y) {
    std::vector<Face> out;
    std::set_difference(x.faces().begin(), x.faces().end(), y.faces().begin(),
                        y.faces().end(), std::back_inserter(out), FaceLess{});
    return out;
}

/// Checks shared by the three case transformations. Each output must be
/// intersecting, at least as large as its input, and lie inside the closure
/// of its input; a violation means the transformation itself is broken.
Family checked_case_output(const Family& input, Family output) {
    detail::check_invariant(is_intersecting(output),
                            "transformation output must remain intersecting");
    detail::check_invariant(output.size() >= input.size(),
                            "transformation output must not shrink");
    detail::check_invariant(output.subfamily_of(closure(input).faces),
                            "transformation output must stay inside the closure of its input");
    return output;
}

} // namespace

DanglingSet dangling(const Family& family, Face base, int at) {
    if (!family.contains(base))
        throw PreconditionError("base face does not belong to the family");
    if (!base.contains(at))
        throw PreconditionError("vertex is not contained in the base face");
    std::vector<Face> hits;
    const Face pin = Face::of({at});
    for (Face t : family)
        if ((t & base) == pin) hits.push_back(t);
    return DanglingSet{base, at, Family(family.ground(), std::move(hits))};
}

std::optional<Family> lemma_all_case1(const Family& family) {
    require_triangles(family);
    for (Face t : family) {
        for (int c : t.vertices()) {
            DanglingSet d = dangling(family, t, c);
            if (d.triangles.size() > 1) continue;
            // The lone dangler (if any) is the only face meeting t exactly
            // at c, so after trading it for the opposite edge every face
            // still meets that edge.
            Family next = family;
            for (Face tau : d.triangles) next = next.without(tau);
            next = next.with(t.without(c));
            return checked_case_output(family, next);
        }
    }
    return std::nullopt;
}

std::optional<Family> lemma_all_case2(const Family& family) {
    require_triangles(family);
    if (family.empty()) return std::nullopt;
    const auto& faces = family.faces();
    for (std::size_t i = 0; i < faces.size(); ++i)
        for (std::size_t j = i + 1; j < faces.size(); ++j)
            if ((faces[i] & faces[j]).size() >= 2) return std::nullopt;

    // Every other triangle meets the first one in exactly one vertex, so a
    // most popular vertex of it carries at least a third of them; keeping
    // its star plus two edges per kept triangle can only grow the family.
    const Face t = faces.front();
    int a = -1;
    int best = -1;
    for (int v : t.vertices()) {
        int count = 0;
        for (Face f : family) count += f.contains(v) ? 1 : 0;
        if (count > best) {
            a = v;
            best = count;
        }
    }

    Family next(family.ground());
    next = next.with(t);
    for (Face f : family) {
        if (f == t || !f.contains(a)) continue;
        next = next.with(f);
        for (int w : f.without(a).vertices()) next = next.with(Face::of({a, w}));
    }
    Family out = checked_case_output(family, next);
    for (Face f : out)
        detail::check_invariant(f.contains(a), "the kept faces must all share the popular vertex");
    return out;
}

std::optional<Family> lemma_all_case3(const Family& family) {
    require_triangles(family);
    if (family.empty()) return std::nullopt;
    const Complex cx = closure(family);
    if (graph_is_complete(cx)) return std::nullopt;

    const std::vector<int> verts = family.support().vertices();
    int c = -1;
    int v = -1;
    for (std::size_t i = 0; i < verts.size() && c < 0; ++i) {
        for (std::size_t j = i + 1; j < verts.size(); ++j) {
            if (!cx.faces.contains(Face::of({verts[i], verts[j]}))) {
                c = verts[i];
                v = verts[j];
                break;
            }
        }
    }
    detail::check_invariant(c >= 0, "an incomplete graph must have a missing edge");

    Face t;
    for (Face f : family) {
        if (f.contains(c)) {
            t = f;
            break;
        }
    }
    detail::check_invariant(!t.empty(), "every support vertex must lie in some face");

    // s = the vertices of t that share a face with v. Faces through v avoid
    // c (no cv edge exists), so s sits inside the opposite edge of t; it is
    // nonempty because faces through v still have to meet t.
    Face s;
    for (Face f : family)
        if (f.contains(v)) s = s | (f & t);
    const Face ab = t.without(c);
    detail::check_invariant(!s.empty(), "faces through the non-edge endpoint must meet the chosen triangle");
    detail::check_invariant(s.subset_of(ab), "no face may span the missing edge");

    Family next = family;
    if (s.size() == 1) {
        // Faces avoiding both s and v cannot meet any face through v at all,
        // so the edges cut from the faces through v meet everything.
        const int p = s.min_vertex();
        for (Face f : family)
            if (f.contains(p) && f.contains(v)) next = next.with(f.without(v));
    } else {
        const int p = ab.min_vertex();
        const int q = ab.without(p).min_vertex();
        const Residuals r = residuals(family, FlipContext{p, q, v});
        if (r.r_a.empty() && r.r_b.empty()) {
            // Both residuals empty forces t+v to be the only face through v,
            // so the opposite edge of t meets every face.
            next = next.with(ab);
        } else if (r.r_a.size() >= r.r_b.size()) {
            next = flip(family, FlipContext{p, q, v});
        } else {
            next = flip(family, FlipContext{q, p, v});
        }
    }
    Family out = checked_case_output(family, next);
    detail::check_invariant(out.faces().front().size() == 2,
                            "the transformation must produce an edge");
    return out;
}

Certificate certify_rank3(const Family& family) {
    if (family.empty()) throw PreconditionError("cannot certify an empty family");
    if (!is_intersecting(family)) throw PreconditionError("family is not intersecting");
    if (family.rank() > 3) throw PreconditionError("family rank exceeds 3");

    const Complex complex0 = closure(family);
    Certificate cert;
    cert.family_size = family.size();
    Family current = family;

    auto record = [&](std::string rule, const Family& before, const Family& after) {
        CertificateStep step;
        step.rule = std::move(rule);
        step.faces_in = Family(before.ground(), face_difference(before, after));
        step.faces_out = Family(before.ground(), face_difference(after, before));
        cert.steps.push_back(std::move(step));
    };
    auto check_progress = [&](const Family& next, const Family& prev) {
        detail::check_invariant(is_intersecting(next), "intermediate family must be intersecting");
        detail::check_invariant(next.size() >= prev.size(), "intermediate family must not shrink");
        detail::check_invariant(next.subfamily_of(complex0.faces),
                                "intermediate family must stay inside the closure of the input");
    };

    const int budget = complex0.size() + 1;
    bool done = false;
    for (int iter = 0; !done; ++iter) {
        detail::check_invariant(iter < budget, "certification must finish within the step budget");
        const Face smallest = current.faces().front();

        if (smallest.size() == 1) {
            cert.witness = smallest.min_vertex();
            for (Face f : current)
                detail::check_invariant(f.contains(cert.witness),
                                        "a singleton member forces every face through its vertex");
            record("singleton", current, current);
            done = true;
        } else if (smallest.size() == 2) {
            const int a = smallest.min_vertex();
            const int b = smallest.without(a).min_vertex();
            const CompressionResult res = two_star_compress(current, a, b);
            Family replay = current;
            for (const CompressionStep& s : res.trace) {
                Family next = replay;
                for (Face f : s.removed) next = next.without(f);
                for (Face f : s.added) next = next.with(f);
                check_progress(next, replay);
                record("flip", replay, next);
                replay = next;
            }
            detail::check_invariant(replay == res.final_family,
                                    "compression trace must replay to its final family");
            current = res.final_family;
            cert.witness = res.witness;
            for (Face f : current)
                detail::check_invariant(f.contains(cert.witness), "compression must end inside one star");
            record("in_star", current, current);
            done = true;
        } else {
            for (Face f : current)
                detail::check_invariant(f.size() == 3, "only triangles may remain at this point");

            if (auto next = lemma_all_case1(current)) {
                check_progress(*next, current);
                record("case1", current, *next);
                current = *next;
                continue;
            }
            if (auto next = lemma_all_case2(current)) {
                check_progress(*next, current);
                Face common = current.ground().all();
                for (Face f : *next) common = common & f;
                detail::check_invariant(!common.empty(), "the star restriction must share a vertex");
                cert.witness = common.min_vertex();
                record("case2", current, *next);
                current = *next;
                done = true;
                continue;
            }
            if (auto next = lemma_all_case3(current)) {
                check_progress(*next, current);
                record("case3", current, *next);
                current = *next;
                continue;
            }

            // No case applies: two triangles share an edge, the graph is
            // complete, and every vertex of every triangle has at least two
            // danglers. Transformations all introduce an edge, so this point
            // is only reachable before any step has been taken.
            detail::check_invariant(cert.steps.empty() && current == family,
                                    "the shared-edge endgame can only occur before any transformation");

            const auto& fs = current.faces();
            Face first;
            Face second;
            bool found = false;
            for (std::size_t i = 0; i < fs.size() && !found; ++i) {
                for (std::size_t j = i + 1; j < fs.size(); ++j) {
                    if ((fs[i] & fs[j]).size() == 2) {
                        first = fs[i];
                        second = fs[j];
                        found = true;
                        break;
                    }
                }
            }
            detail::check_invariant(found, "two triangles must share an edge here");

            const Face shared = first & second;
            const int c = (first - shared).min_vertex();
            const int x = (second - shared).min_vertex();
            const DanglingSet d = dangling(current, first, c);
            detail::check_invariant(d.triangles.size() >= 2,
                                    "every triangle vertex must carry at least two danglers here");
            for (Face tau : d.triangles)
                detail::check_invariant(tau.contains(x),
                                        "danglers at the off-edge vertex must contain its counterpart");

            if (d.triangles.size() >= 3) {
                // A face missing both c and x would have to contain the
                // third vertex of all three danglers and still meet the base
                // triangle, which a triangle cannot do.
                const Face cover = Face::of({c, x});
                for (Face f : current)
                    detail::check_invariant(f.intersects(cover),
                                            "every face must meet the covering edge");
                Family next = current.with(cover);
                check_progress(next, current);
                record("add_cover_edge", current, next);
                current = next;
                continue;
            }

            const Face tau1 = d.triangles.faces()[0];
            const Face tau2 = d.triangles.faces()[1];
            const Face six = first | second | tau1 | tau2;
            detail::check_invariant(six.size() == 6, "the endgame must span exactly six vertices");
            detail::check_invariant(current.support() == six,
                                    "no vertex may survive outside the six endgame vertices");
            detail::check_invariant(current.size() <= 10,
                                    "at most one triangle per complementary pair fits on six vertices");
            cert.witness = c;
            detail::check_invariant(star_size(complex0, c) >= 10,
                                    "the endgame witness star must hold at least ten faces");
            record("six_vertex_endgame", current, current);
            done = true;
        }
    }

    cert.final_family = current;
    detail::check_invariant(cert.witness >= 0, "a witness must be chosen");
    cert.star_size = star_size(complex0, cert.witness);
    detail::check_invariant(cert.family_size <= cert.star_size,
                            "the input family must not exceed the witness star");
    return cert;
}

} // namespace chvatal
