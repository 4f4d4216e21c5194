// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Intentionally a plain binary (not doctest) so the per-criterion
// report is the whole output.
#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "primegraph/graphcore.hpp"
#include "primegraph/groupdata.hpp"
#include "primegraph/numtheory.hpp"
#include "primegraph/verify.hpp"

namespace gd = pg::groupdata;
namespace gc = pg::graphcore;
namespace nt = pg::numtheory;
namespace vf = pg::verify;
using u64 = std::uint64_t;

namespace {

int g_failures = 0;

void run(int number, const char* title, const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    std::printf("criterion %2d [%s] %s%s%s\n", number, ok ? "PASS" : "FAIL", title,
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++g_failures;
}

double best_of_3_ms(const std::function<void()>& f) {
    double best = 1e9;
    for (int i = 0; i < 3; ++i) {
        auto t0 = std::chrono::steady_clock::now();
        f();
        auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

bool same_edge_set(const gc::SimpleGraph& g, std::vector<std::pair<u64, u64>> want) {
    std::sort(want.begin(), want.end());
    return g.edges() == want;
}

}  // namespace

int main() {
    const auto& table = gd::NamedGroupTable::bundled();

    run(1, "Delta(PSL2(29)) vs Gamma, and 2.A6 reversed, < 1 ms", [&](std::string& d) {
        bool ok = true;
        double ms = best_of_3_ms([&] {
            auto cd29 = gd::psl2_degrees(29);
            auto delta = gc::build_prime_graph(cd29);
            auto tri = gc::find_triangle(delta);
            ok = ok && tri.has_value() && *tri == std::array<u64, 3>{2, 3, 5};
            ok = ok && !gc::find_triangle(gc::build_degree_graph(cd29)).has_value();

            auto a6 = gd::named_degrees("2.A6");
            ok = ok && !gc::find_triangle(gc::build_prime_graph(a6)).has_value();
            auto gtri = gc::find_triangle(gc::build_degree_graph(a6));
            ok = ok && gtri.has_value() && *gtri == std::array<u64, 3>{4, 8, 10};
        });
        d = "best " + std::to_string(ms) + " ms";
        return ok && ms < 1.0;
    });

    run(2, "Delta(PSL2(64)): exact vertices/edges, 3 components, Figure A Second, < 1 ms",
        [&](std::string& d) {
            bool ok = true;
            double ms = best_of_3_ms([&] {
                auto g = gc::build_prime_graph(gd::psl2_degrees(64));
                ok = ok && g.graph.vertices() == std::vector<u64>{2, 3, 5, 7, 13};
                ok = ok && same_edge_set(g.graph, {{3, 7}, {5, 13}});
                ok = ok && gc::connected_components(g).size() == 3;
                ok = ok && gc::figure_a_match(g) == gc::FigureA::Second;
            });
            d = "best " + std::to_string(ms) + " ms";
            return ok && ms < 1.0;
        });

    run(3, "A5 x 23^(1+2):11 and PSL2(8) x 23^(1+2):11 are both K_{2,3} (Figure A First)",
        [&](std::string&) {
            auto k = gd::named_degrees("23^(1+2):11");
            for (const auto& base : {gd::named_degrees("A5"), gd::psl2_degrees(8)}) {
                auto g = gc::build_prime_graph(gd::product_degrees(base, k));
                if (gc::figure_a_match(g) != gc::FigureA::First) return false;
                if (gc::connected_components(g).size() != 1) return false;
                if (gc::find_triangle(g).has_value()) return false;
                auto shapes = gc::shape_predicates(g);
                if (shapes.complete_bipartite != std::pair<std::size_t, std::size_t>{2, 3})
                    return false;
            }
            return true;
        });

    run(4, "psl2-even scan to f = 24: no counterexamples, < 10 s", [&](std::string& d) {
        auto t0 = std::chrono::steady_clock::now();
        auto rep = vf::scan_psl2_even(24);
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        d = std::to_string(s) + " s, " + std::to_string(rep.instances.size()) + " instances";
        if (!rep.success() || s >= 10.0) return false;
        // every 5-vertex triangle-free instance is Second with f >= 6
        for (const auto& r : rep.instances) {
            if (!r.triangle_free || r.rho_size != 5) continue;
            unsigned f = static_cast<unsigned>(std::stoul(r.descriptor.substr(7)));
            if (r.figure_a != gc::FigureA::Second || f < 6) return false;
        }
        return true;
    });

    run(5, "psl2-odd scan to q = 10000: no counterexamples, < 30 s", [&](std::string& d) {
        auto t0 = std::chrono::steady_clock::now();
        auto rep = vf::scan_psl2_odd(10000);
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        d = std::to_string(s) + " s, " + std::to_string(rep.instances.size()) + " instances";
        if (!rep.success() || s >= 30.0) return false;
        for (const auto& r : rep.instances) {
            if (r.components != 2) return false;
            if (r.triangle_free && r.rho_size > 4) return false;
        }
        return true;
    });

    run(6, "excluded families: triangles / >= 3-cliques everywhere; data gaps flagged",
        [&](std::string&) {
            vf::ScanConfig cfg;  // suzuki q^2 <= 2^13, psl3 q <= 100
            auto rep = vf::verify_excluded_simple_families(cfg, table);
            if (!rep.success()) return false;
            auto g = gc::build_prime_graph(table.entry("PSL3(3)").degree_set);
            if (g.graph.vertices() != std::vector<u64>{2, 3, 13} || g.graph.edge_count() != 3)
                return false;
            // the gap path: a table missing required entries must report, not pass
            std::string tmp = "/tmp/pg_acceptance_gap.txt";
            std::FILE* f = std::fopen(tmp.c_str(), "w");
            if (!f) return false;
            std::fputs("A5;1,3,4,5;external-table\n", f);
            std::fclose(f);
            auto reduced = gd::NamedGroupTable::load(tmp);
            auto gap = vf::verify_excluded_simple_families(cfg, reduced);
            return !gap.success() && !gap.data_gaps.empty();
        });

    run(7, "zsigmondy sweep a in [2,10], n in [2,20] with divisibility verification",
        [&](std::string&) {
            for (u64 a = 2; a <= 10; ++a)
                for (unsigned n = 2; n <= 20; ++n) {
                    auto z = nt::zsigmondy(a, n);
                    bool exceptional = (a == 2 && n == 6) || (n == 2 && ((a + 1) & a) == 0);
                    if (z.has_value() == exceptional) return false;
                    if (!z) continue;
                    nt::u128 pw = 1;
                    for (unsigned m = 1; m < n; ++m) {
                        pw *= a;
                        if ((pw - 1) % *z == 0) return false;
                    }
                    pw *= a;
                    if ((pw - 1) % *z != 0) return false;
                }
            return true;
        });

    run(8, "ratio check: non-prime-power for every eligible (f, b) with f <= 60", [&](std::string& d) {
        auto r62 = nt::ratio_prime_power_check(6, 2);
        if (r62.is_prime_power ||
            r62.ratio.factors != std::map<nt::u128, unsigned>{{3, 1}, {7, 1}, {13, 1}})
            return false;
        int checked = 0;
        for (unsigned f = 6; f <= 60; ++f)
            for (unsigned b = 1; b < f; ++b) {
                if (f % b != 0) continue;
                unsigned n = f / b;
                if (n < 3 || n % 2 == 0 || !nt::is_prime(n)) continue;
                auto r = nt::ratio_prime_power_check(f, b);
                ++checked;
                if (r.is_prime_power) {
                    d = "prime power at f=" + std::to_string(f) + " b=" + std::to_string(b);
                    return false;
                }
            }
        d = std::to_string(checked) + " pairs";
        return checked > 0;
    });

    run(9, "property suite: triangle oracle, join law, {1,6,10,15}, palfy brute force",
        [&](std::string&) {
            std::mt19937_64 rng(20260823);
            const std::vector<u64> primes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

            // (a) find_triangle vs brute-force triple enumeration
            std::uniform_int_distribution<std::size_t> pick(0, primes.size() - 1);
            std::uniform_int_distribution<int> ndegs(1, 12);
            for (int iter = 0; iter < 1000; ++iter) {
                std::vector<u64> degs;
                int k = ndegs(rng);
                for (int i = 0; i < k; ++i) {
                    u64 v = primes[pick(rng)];
                    while (rng() % 2 == 0 && v * primes[pick(rng)] <= 1000000)
                        v *= primes[pick(rng)];
                    degs.push_back(v);
                }
                auto dset = gd::make_degree_set(degs);
                auto g = gc::build_prime_graph(dset);
                bool brute = false;
                const auto& vs = g.graph.vertices();
                auto adjacent = [&](u64 p, u64 q) {
                    for (u64 deg : dset.degrees)
                        if (deg % (p * q) == 0) return true;
                    return false;
                };
                for (std::size_t i = 0; i < vs.size() && !brute; ++i)
                    for (std::size_t j = i + 1; j < vs.size() && !brute; ++j)
                        for (std::size_t l = j + 1; l < vs.size() && !brute; ++l)
                            brute = adjacent(vs[i], vs[j]) && adjacent(vs[i], vs[l]) &&
                                    adjacent(vs[j], vs[l]);
                if (gc::find_triangle(g).has_value() != brute) return false;
            }

            // (b) join law on 200 coprime-support pairs
            for (int iter = 0; iter < 200; ++iter) {
                std::vector<u64> low{2, 3, 5, 7, 11}, high{13, 17, 19, 23, 29};
                auto sample = [&](const std::vector<u64>& pool) {
                    std::vector<u64> degs;
                    std::uniform_int_distribution<std::size_t> pp(0, pool.size() - 1);
                    int k = 1 + static_cast<int>(rng() % 4);
                    for (int i = 0; i < k; ++i) {
                        u64 v = pool[pp(rng)];
                        if (rng() % 2 == 0) v *= pool[pp(rng)];
                        degs.push_back(v);
                    }
                    return gd::make_degree_set(degs);
                };
                auto a = sample(low), b = sample(high);
                auto prod = gc::build_prime_graph(gd::product_degrees(a, b));
                auto ga = gc::build_prime_graph(a), gb = gc::build_prime_graph(b);
                // join: union of both graphs plus every cross edge
                std::vector<u64> verts = ga.graph.vertices();
                verts.insert(verts.end(), gb.graph.vertices().begin(), gb.graph.vertices().end());
                std::sort(verts.begin(), verts.end());
                auto want = ga.graph.edges();
                for (auto e : gb.graph.edges()) want.push_back(e);
                for (u64 u : ga.graph.vertices())
                    for (u64 v : gb.graph.vertices()) want.push_back({std::min(u, v), std::max(u, v)});
                std::sort(want.begin(), want.end());
                if (prod.graph.vertices() != verts || prod.graph.edges() != want) return false;
            }

            // (c) the {1,6,10,15} witness
            auto w = gc::build_prime_graph(gd::make_degree_set({6, 10, 15}));
            for (u64 deg : std::vector<u64>{6, 10, 15})
                if (nt::prime_support(deg).size() > 2) return false;
            if (!gc::find_triangle(w).has_value()) return false;

            // (d) palfy vs brute force up to |rho| = 10
            for (int iter = 0; iter < 300; ++iter) {
                std::vector<u64> degs;
                int k = 1 + static_cast<int>(rng() % 6);
                for (int i = 0; i < k; ++i) {
                    u64 v = primes[pick(rng) % 10];
                    if (rng() % 2 == 0) v *= primes[pick(rng) % 10];
                    degs.push_back(v);
                }
                auto dset = gd::make_degree_set(degs);
                auto res = vf::check_palfy(dset);
                // brute force over all prime triples
                std::set<u64> rho;
                for (u64 deg : dset.degrees)
                    for (auto p : nt::prime_support(deg)) rho.insert(static_cast<u64>(p));
                std::vector<u64> r(rho.begin(), rho.end());
                bool brute = true;
                for (std::size_t i = 0; i < r.size() && brute; ++i)
                    for (std::size_t j = i + 1; j < r.size() && brute; ++j)
                        for (std::size_t l = j + 1; l < r.size() && brute; ++l) {
                            bool covered = false;
                            std::array<u64, 3> t{r[i], r[j], r[l]};
                            for (std::size_t x = 0; x < 3 && !covered; ++x)
                                for (std::size_t y = x + 1; y < 3 && !covered; ++y)
                                    for (u64 deg : dset.degrees)
                                        if (deg % (t[x] * t[y]) == 0) covered = true;
                            if (!covered) brute = false;
                        }
                if (res.satisfied != brute) return false;
            }
            return true;
        });

    run(10, "classify: the full verdict table with re-verified witnesses", [&](std::string&) {
        using K = vf::ClassificationVerdict::Kind;
        auto verdict = [&](std::vector<u64> vs, std::vector<std::pair<u64, u64>> es) {
            return vf::classify(gc::prime_graph_from_edges(vs, es), table);
        };
        auto c5 = verdict({2, 3, 5, 7, 11}, {{2, 3}, {3, 5}, {5, 7}, {7, 11}, {11, 2}});
        if (c5.kind != K::ProvenImpossible) return false;
        auto p4 = verdict({2, 3, 5, 7}, {{2, 3}, {3, 5}, {5, 7}});
        if (p4.kind != K::ProvenImpossible) return false;
        auto sq = verdict({2, 3, 5, 7}, {{2, 3}, {3, 5}, {5, 7}, {7, 2}});
        if (sq.kind != K::OccursSolvableOnly) return false;
        auto tri = verdict({2, 3, 5}, {{2, 3}, {2, 5}, {3, 5}});
        if (tri.kind != K::OccursWithWitness || !tri.witness ||
            gd::describe(*tri.witness) != "PSL3(3)")
            return false;
        auto c6 = verdict({2, 3, 5, 7, 11, 13}, {{2, 3}, {3, 5}, {5, 7}, {7, 11}, {11, 13}, {13, 2}});
        if (c6.kind != K::ProvenImpossible) return false;
        auto k23 = verdict({2, 3, 5, 7, 11}, {{2, 5}, {2, 7}, {2, 11}, {3, 5}, {3, 7}, {3, 11}});
        return k23.kind == K::OccursWithWitness && k23.witness.has_value();
    });

    std::printf("%s: %d criterion failure(s)\n", g_failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
                g_failures);
    return g_failures == 0 ? 0 : 1;
}
