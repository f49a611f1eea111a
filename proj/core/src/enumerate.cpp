#include "chvatal/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <unordered_set>
#include <utility>
#include <vector>

#include "chvatal/errors.hpp"
#include "chvatal/rank3.hpp"

namespace chvatal {

namespace {

/// Bit i-1 of a state word says whether face-mask i is in the complex, so a
/// whole complex on n <= 6 vertices is one uint64_t.
using State = std::uint64_t;

/// req[m] = the state bits of every nonempty proper submask of m. Because
/// submasks have smaller values, deciding masks in increasing order with
/// this gate builds exactly the downsets.
std::vector<State> submask_requirements(int mask_count) {
    std::vector<State> req(static_cast<std::size_t>(mask_count) + 1, 0);
    for (int m = 1; m <= mask_count; ++m)
        for (int sub = (m - 1) & m; sub > 0; sub = (sub - 1) & m)
            req[m] |= State{1} << (sub - 1);
    return req;
}

template <typename Emit>
void dfs(const std::vector<State>& req, int last_mask, int mask, State chosen, Emit&& emit) {
    if (mask > last_mask) {
        emit(chosen);
        return;
    }
    dfs(req, last_mask, mask + 1, chosen, emit);
    const State need = req[mask];
    if ((chosen & need) == need)
        dfs(req, last_mask, mask + 1, chosen | (State{1} << (mask - 1)), emit);
}

Complex build_complex(const GroundSet& ground, State chosen, int mask_count) {
    std::vector<Face> faces;
    for (int m = 1; m <= mask_count; ++m)
        if (chosen >> (m - 1) & 1) faces.push_back(Face::from_bits(static_cast<std::uint64_t>(m)));
    std::vector<Face> generators;
    for (std::size_t i = 0; i < faces.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < faces.size() && maximal; ++j)
            if (j != i && faces[i].subset_of(faces[j])) maximal = false;
        if (maximal) generators.push_back(faces[i]);
    }
    return Complex{Family(ground, std::move(faces)), Family(ground, std::move(generators))};
}

struct KeyHash {
    std::size_t operator()(const CanonicalKey& key) const {
        std::uint64_t h = 1469598103934665603ull;
        for (std::uint64_t w : key) {
            h ^= w;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

/// Results of one enumeration slice, merged in slice order afterwards.
struct Partial {
    std::uint64_t total = 0;
    std::vector<CanonicalKey> keys;
    std::vector<Complex> violations;
};

void check_certifier_against_oracle(const Complex& complex, const Verdict& verdict) {
    if (complex.faces.rank() > 3 || verdict.max_intersecting_size == 0) return;
    const Certificate cert = certify_rank3(verdict.max_intersecting_witness);
    detail::check_invariant(cert.family_size == verdict.max_intersecting_size,
                            "the certified family must be the oracle's optimum");
    detail::check_invariant(cert.star_size <= verdict.max_star_size,
                            "a certificate star cannot beat the complex's best star");
}

} // namespace

void for_each_complex(int n, const std::function<void(const Complex&)>& visit) {
    if (n < 0 || n > kMaxEnumeration)
        throw PreconditionError("enumeration supports 0 to 6 vertices");
    const GroundSet ground = GroundSet::alphabetic(n);
    const int mask_count = (1 << n) - 1;
    const std::vector<State> req = submask_requirements(mask_count);
    dfs(req, mask_count, 1, 0,
        [&](State chosen) { visit(build_complex(ground, chosen, mask_count)); });
}

CanonicalKey canonical_form(const Complex& complex) {
    const std::vector<int> support = complex.faces.support().vertices();
    const int k = static_cast<int>(support.size());
    std::vector<int> compact_of(kMaxVertices, -1);
    for (int i = 0; i < k; ++i) compact_of[support[i]] = i;

    std::vector<std::uint64_t> masks;
    masks.reserve(complex.faces.faces().size());
    for (Face f : complex.faces) {
        std::uint64_t m = 0;
        for (int v : f.vertices()) m |= std::uint64_t{1} << compact_of[v];
        masks.push_back(m);
    }

    std::vector<int> perm(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) perm[i] = i;
    CanonicalKey best;
    bool have = false;
    std::vector<std::uint64_t> mapped(masks.size());
    do {
        for (std::size_t t = 0; t < masks.size(); ++t) {
            std::uint64_t m = masks[t];
            std::uint64_t out = 0;
            while (m) {
                const int b = std::countr_zero(m);
                m &= m - 1;
                out |= std::uint64_t{1} << perm[b];
            }
            mapped[t] = out;
        }
        std::sort(mapped.begin(), mapped.end());
        if (!have || mapped < best) {
            best = mapped;
            have = true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

EnumerationReport enumerate_complexes(int n, bool canonical, bool verify, int jobs) {
    if (n < 0 || n > kMaxEnumeration)
        throw PreconditionError("enumeration supports 0 to 6 vertices");
    if (jobs < 1) throw PreconditionError("jobs must be at least 1");

    const auto started = std::chrono::steady_clock::now();
    const GroundSet ground = GroundSet::alphabetic(n);
    const int mask_count = (1 << n) - 1;
    const std::vector<State> req = submask_requirements(mask_count);

    // Slices are DFS prefixes over the first masks; deciding them first and
    // finishing each slice independently reproduces the serial DFS order
    // once the slices are merged in prefix order.
    const int split = jobs == 1 ? 0 : std::min(mask_count, 12);
    std::vector<State> prefixes;
    dfs(req, split, 1, 0, [&](State chosen) { prefixes.push_back(chosen); });

    const bool fast_count = !canonical && !verify;
    std::vector<Partial> partials(prefixes.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto work = [&]() {
        try {
            for (;;) {
                const std::size_t slice = next.fetch_add(1);
                if (slice >= prefixes.size()) return;
                Partial& out = partials[slice];
                std::unordered_set<CanonicalKey, KeyHash> seen;
                dfs(req, mask_count, split + 1, prefixes[slice], [&](State chosen) {
                    ++out.total;
                    if (fast_count) return;
                    const Complex complex = build_complex(ground, chosen, mask_count);
                    bool fresh = true;
                    if (canonical) {
                        CanonicalKey key = canonical_form(complex);
                        fresh = seen.insert(key).second;
                        if (fresh) out.keys.push_back(std::move(key));
                    }
                    if (verify && fresh) {
                        const Verdict verdict = verify_chvatal(complex);
                        if (!verdict.holds) out.violations.push_back(complex);
                        check_certifier_against_oracle(complex, verdict);
                    }
                });
            }
        } catch (...) {
            const std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
        }
    };

    if (jobs == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        const std::size_t workers = std::min<std::size_t>(jobs, prefixes.size());
        pool.reserve(workers);
        for (std::size_t i = 0; i < workers; ++i) pool.emplace_back(work);
        for (std::thread& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    EnumerationReport report;
    report.n = n;
    report.verified = verify;
    std::unordered_set<CanonicalKey, KeyHash> classes;
    std::unordered_set<CanonicalKey, KeyHash> violating_classes;
    for (const Partial& part : partials) {
        report.total += part.total;
        for (const CanonicalKey& key : part.keys) classes.insert(key);
        for (const Complex& bad : part.violations) {
            if (canonical && !violating_classes.insert(canonical_form(bad)).second) continue;
            report.violations.push_back(bad);
        }
    }
    if (canonical) report.canonical = classes.size();
    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return report;
}

EnumerationReport exhaustive_verify(int n, bool canonical, int jobs) {
    return enumerate_complexes(n, canonical, true, jobs);
}

} // namespace chvatal
