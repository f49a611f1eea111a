#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "chvatal/complex.hpp"
#include "chvatal/enumerate.hpp"
#include "chvatal/errors.hpp"
#include "chvatal/family.hpp"
#include "chvatal/rank3.hpp"

namespace testutil {

/// Ground set with one single-character label per input character.
inline chvatal::GroundSet make_ground(const std::string& chars) {
    std::vector<std::string> labels;
    labels.reserve(chars.size());
    for (char ch : chars) labels.emplace_back(1, ch);
    return chvatal::GroundSet(std::move(labels));
}

inline chvatal::Face face_in(const chvatal::GroundSet& ground, const std::string& chars) {
    chvatal::Face face;
    for (char ch : chars) face = face.with(ground.id_of(std::string(1, ch)));
    return face;
}

/// fam("abcx", {"abc", "abx"}) builds the family {abc, abx} over ground a..x.
inline chvatal::Family fam(const std::string& vertex_chars,
                           std::initializer_list<std::string> faces) {
    chvatal::GroundSet ground = make_ground(vertex_chars);
    std::vector<chvatal::Face> fs;
    for (const std::string& s : faces) fs.push_back(face_in(ground, s));
    return chvatal::Family(std::move(ground), std::move(fs));
}

/// All nonempty vertex subsets of [n] passing `keep`, shuffled.
template <typename Pred>
std::vector<std::uint64_t> shuffled_masks(std::mt19937_64& rng, int n, Pred&& keep) {
    std::vector<std::uint64_t> masks;
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m)
        if (keep(m)) masks.push_back(m);
    std::shuffle(masks.begin(), masks.end(), rng);
    return masks;
}

/// Walks `order` adding each face that keeps the family intersecting, until
/// `target` faces are collected. Never produces a non-intersecting family.
inline chvatal::Family grow_intersecting(const chvatal::GroundSet& ground,
                                         const std::vector<std::uint64_t>& order,
                                         std::size_t target) {
    std::vector<chvatal::Face> picked;
    for (std::uint64_t m : order) {
        if (picked.size() >= target) break;
        const chvatal::Face f = chvatal::Face::from_bits(m);
        bool compatible = true;
        for (chvatal::Face p : picked)
            if (!p.intersects(f)) {
                compatible = false;
                break;
            }
        if (compatible) picked.push_back(f);
    }
    return chvatal::Family(ground, std::move(picked));
}

/// Full-subset-scan maximum intersecting subfamily size. Only for small
/// face counts; deliberately artless so it can referee the clique search.
inline int naive_max_intersecting(const chvatal::Complex& complex) {
    const auto& faces = complex.faces.faces();
    const int m = static_cast<int>(faces.size());
    if (m > 20) throw chvatal::PreconditionError("naive scan is limited to 20 faces");
    std::vector<std::uint32_t> compat(m, 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (faces[i].intersects(faces[j])) compat[i] |= std::uint32_t{1} << j;
    int best = 0;
    for (std::uint32_t pick = 0; pick < (std::uint32_t{1} << m); ++pick) {
        bool ok = true;
        for (std::uint32_t rest = pick; rest && ok;) {
            const int i = std::countr_zero(rest);
            rest &= rest - 1;
            ok = (pick & ~compat[i]) == 0;
        }
        if (ok) best = std::max(best, std::popcount(pick));
    }
    return best;
}

/// Downset count over the nonempty subsets of [n] by sheer enumeration of
/// all candidate face sets. n <= 4 only (2^15 candidates).
inline std::uint64_t count_downsets_direct(int n) {
    if (n < 0 || n > 4) throw chvatal::PreconditionError("direct count is limited to n <= 4");
    const int k = (1 << n) - 1;
    std::uint64_t count = 0;
    for (std::uint32_t set = 0; set < (std::uint32_t{1} << k); ++set) {
        bool downset = true;
        for (int m = 1; m <= k && downset; ++m) {
            if (!(set >> (m - 1) & 1)) continue;
            for (int sub = (m - 1) & m; sub > 0; sub = (sub - 1) & m)
                if (!(set >> (sub - 1) & 1)) {
                    downset = false;
                    break;
                }
        }
        if (downset) ++count;
    }
    return count;
}

/// Downset count via the doubling bijection: a downset of subsets of
/// [k+1] is a pair (d0, d1) of downsets of subsets of [k] with d1 <= d0
/// (members with the new vertex, after removing it, must also be members).
/// Returns the count over nonempty subsets, i.e. the full-lattice count
/// minus one. Supports n <= 6; independent of the enumerator's DFS.
inline std::uint64_t count_downsets_doubling(int n) {
    if (n < 0 || n > 6) throw chvatal::PreconditionError("doubling count is limited to n <= 6");
    std::vector<std::uint64_t> level = {0, 1}; // downsets of the lattice {{}}
    int k = 0;
    while (k < n && k < 5) {
        std::vector<std::uint64_t> up;
        for (std::uint64_t d0 : level)
            for (std::uint64_t d1 : level)
                if ((d1 & ~d0) == 0) up.push_back(d0 | (d1 << (1 << k)));
        level = std::move(up);
        ++k;
    }
    if (k == n) return level.size() - 1;
    std::uint64_t pairs = 0;
    for (std::uint64_t d0 : level)
        for (std::uint64_t d1 : level)
            if ((d1 & ~d0) == 0) ++pairs;
    return pairs - 1;
}

/// True iff a permutation of 0..n-1 maps the faces of one complex onto the
/// faces of the other.
inline bool isomorphic_bruteforce(const chvatal::Complex& x, const chvatal::Complex& y, int n) {
    if (x.faces.size() != y.faces.size()) return false;
    std::vector<std::uint64_t> want;
    for (chvatal::Face f : y.faces) want.push_back(f.bits());
    std::sort(want.begin(), want.end());
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    do {
        std::vector<std::uint64_t> mapped;
        for (chvatal::Face f : x.faces) {
            std::uint64_t bits = f.bits();
            std::uint64_t out = 0;
            while (bits) {
                const int b = std::countr_zero(bits);
                bits &= bits - 1;
                out |= std::uint64_t{1} << perm[b];
            }
            mapped.push_back(out);
        }
        std::sort(mapped.begin(), mapped.end());
        if (mapped == want) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

/// Replays and audits a certificate against its input family: every
/// intermediate stays intersecting, inside closure(input), and never
/// shrinks; the final family matches; star_size and family_size are honest;
/// and the certified inequality holds. Returns the failure reason or "".
inline std::string audit_certificate(const chvatal::Family& input,
                                     const chvatal::Certificate& cert) {
    using namespace chvatal;
    const Complex closed = closure(input);
    if (cert.family_size != input.size()) return "family_size is not |input|";
    if (cert.witness < 0 || cert.witness >= input.ground().size()) return "witness out of range";
    if (star_size(closed, cert.witness) != cert.star_size) return "star_size is not |st(closure, witness)|";
    if (cert.family_size > cert.star_size) return "certified inequality fails";
    Family current = input;
    for (const CertificateStep& step : cert.steps) {
        Family next = current;
        for (Face f : step.faces_in) next = next.without(f);
        for (Face f : step.faces_out) next = next.with(f);
        if (!is_intersecting(next)) return "intermediate not intersecting";
        if (!next.subfamily_of(closed.faces)) return "intermediate escapes the closure";
        if (next.size() < current.size()) return "intermediate shrank";
        current = next;
    }
    if (!(current == cert.final_family)) return "steps do not replay to final_family";
    return "";
}

} // namespace testutil
