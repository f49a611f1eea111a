#include <benchmark/benchmark.h>

#include "chvatal/complex.hpp"
#include "chvatal/enumerate.hpp"
#include "chvatal/oracle.hpp"
#include "chvatal/rank3.hpp"
#include "chvatal/transform.hpp"

using namespace chvatal;

namespace {

Family face_list(int n, std::initializer_list<std::initializer_list<int>> faces) {
    std::vector<Face> fs;
    for (const auto& f : faces) fs.push_back(Face::of(f));
    return Family(GroundSet::alphabetic(n), std::move(fs));
}

// Ten triangles on six vertices covering every pair exactly twice; the
// densest rank-3 certification instance.
Family endgame_family() {
    return face_list(6, {{0, 1, 2}, {0, 1, 3}, {2, 3, 4}, {2, 3, 5},
                         {0, 2, 4}, {0, 3, 5}, {0, 4, 5}, {1, 3, 4},
                         {1, 4, 5}, {1, 2, 5}});
}

// 25 faces on ten vertices, each holding two of the three core vertices;
// intersecting, covered by st(a) and st(b), and far from being one star.
Family two_star_family() {
    std::vector<Face> faces = {Face::of({0, 1}), Face::of({0, 2}),
                               Face::of({1, 2}), Face::of({0, 1, 2})};
    for (int x = 3; x < 10; ++x) {
        faces.push_back(Face::of({0, 1, x}));
        faces.push_back(Face::of({0, 2, x}));
        faces.push_back(Face::of({1, 2, x}));
    }
    return Family(GroundSet::alphabetic(10), std::move(faces));
}

Complex full_complex(int n) {
    const GroundSet ground = GroundSet::alphabetic(n);
    const Face top = ground.all();
    return closure(Family(ground, {top}));
}

void BM_Closure(benchmark::State& state) {
    const Family f = endgame_family();
    for (auto _ : state) {
        const Complex c = closure(f);
        benchmark::DoNotOptimize(c.faces.size());
    }
}
BENCHMARK(BM_Closure);

void BM_MaxIntersectingFull(benchmark::State& state) {
    const Complex c = full_complex(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        const IntersectingMax best = max_intersecting(c);
        benchmark::DoNotOptimize(best.size);
    }
}
BENCHMARK(BM_MaxIntersectingFull)->Arg(4)->Arg(5)->Arg(6);

void BM_VerdictEndgameClosure(benchmark::State& state) {
    const Complex c = closure(endgame_family());
    for (auto _ : state) {
        const Verdict v = verify_chvatal(c);
        benchmark::DoNotOptimize(v.holds);
    }
}
BENCHMARK(BM_VerdictEndgameClosure);

void BM_TwoStarCompress(benchmark::State& state) {
    const Family f = two_star_family();
    for (auto _ : state) {
        const CompressionResult res = two_star_compress(f, 0, 1);
        benchmark::DoNotOptimize(res.final_family.size());
    }
}
BENCHMARK(BM_TwoStarCompress);

void BM_CertifyRank3(benchmark::State& state) {
    const Family f = endgame_family();
    for (auto _ : state) {
        const Certificate cert = certify_rank3(f);
        benchmark::DoNotOptimize(cert.star_size);
    }
}
BENCHMARK(BM_CertifyRank3);

void BM_CertifyFano(benchmark::State& state) {
    const Family f = face_list(7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5},
                                   {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
    for (auto _ : state) {
        const Certificate cert = certify_rank3(f);
        benchmark::DoNotOptimize(cert.star_size);
    }
}
BENCHMARK(BM_CertifyFano);

void BM_CanonicalForm(benchmark::State& state) {
    const Complex c = closure(face_list(6, {{0, 1, 2}, {0, 1, 3}, {2, 3, 4}, {2, 3, 5}}));
    for (auto _ : state) {
        const CanonicalKey key = canonical_form(c);
        benchmark::DoNotOptimize(key.size());
    }
}
BENCHMARK(BM_CanonicalForm);

void BM_Enumerate(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        const EnumerationReport report = enumerate_complexes(n, false, false);
        benchmark::DoNotOptimize(report.total);
    }
}
BENCHMARK(BM_Enumerate)->Arg(4)->Arg(5);

void BM_ExhaustiveVerify(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        const EnumerationReport report = exhaustive_verify(n);
        benchmark::DoNotOptimize(report.violations.size());
    }
}
BENCHMARK(BM_ExhaustiveVerify)->Arg(3)->Arg(4);

} // namespace

BENCHMARK_MAIN();
