// Acceptance suite: one pass/fail line per criterion, exit 1 on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "arrovian/domain_io.hpp"
#include "arrovian/search.hpp"
#include "arrovian/seedstream.hpp"

using namespace arrovian;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& what, bool ok, double ms) {
    std::printf("%s criterion %2d: %s (%.0f ms)\n", ok ? "PASS" : "FAIL", criterion, what.c_str(),
                ms);
    if (!ok)
        ++g_failures;
}

void run(int criterion, const std::string& what, const std::function<bool()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note = what;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note += std::string(" [exception: ") + e.what() + "]";
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                    .count();
    report(criterion, note, ok, ms);
}

AlternativeSet alts3() { return AlternativeSet({"x", "y", "z"}); }
AlternativeSet alts4() { return AlternativeSet({"w", "x", "y", "z"}); }

Domain unrestricted(const AlternativeSet& alts, int voters) {
    auto rs = enumerate_rankings(alts);
    std::vector<Profile> ps;
    std::vector<int> idx(static_cast<size_t>(voters), 0);
    for (;;) {
        std::vector<Ranking> prof;
        for (int i = 0; i < voters; ++i)
            prof.push_back(rs[static_cast<size_t>(idx[static_cast<size_t>(i)])]);
        ps.push_back(Profile(std::move(prof)));
        int i = voters - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] + 1 == static_cast<int>(rs.size()))
            idx[static_cast<size_t>(i--)] = 0;
        if (i < 0)
            break;
        ++idx[static_cast<size_t>(i)];
    }
    return Domain(alts, voters, std::move(ps));
}

std::vector<Alt> all_alts(const AlternativeSet& alts) {
    std::vector<Alt> xs(static_cast<size_t>(alts.size()));
    for (size_t i = 0; i < xs.size(); ++i)
        xs[i] = static_cast<Alt>(i);
    return xs;
}

// Naive oracle for criterion 2's cross-check: sweep every assignment over
// the free vertices (usable while 2^free <= 2^20).
std::vector<std::string> naive_sweep(NervePtr nv) {
    std::vector<int> free_ids;
    std::vector<std::int8_t> base(static_cast<size_t>(nv->vertex_count()), 0);
    for (int id = 0; id < nv->vertex_count(); ++id) {
        const Label& u = nv->vertex(id);
        if (u.sigma.is_all_plus())
            base[static_cast<size_t>(id)] = +1;
        else if (u.sigma.is_all_minus())
            base[static_cast<size_t>(id)] = -1;
        else
            free_ids.push_back(id);
    }
    if (free_ids.size() > 20)
        throw std::runtime_error("sweep too large");
    std::vector<std::string> out;
    for (std::uint64_t bits = 0; bits < (1ull << free_ids.size()); ++bits) {
        std::vector<std::int8_t> signs = base;
        for (size_t i = 0; i < free_ids.size(); ++i)
            signs[static_cast<size_t>(free_ids[i])] = ((bits >> i) & 1ull) ? -1 : +1;
        ChromaticMap f(nv, std::move(signs));
        if (map_satisfies_unanimity(f) && is_simplicial(f))
            out.push_back(f.sign_string());
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::string> sign_strings(const std::vector<ChromaticMap>& maps) {
    std::vector<std::string> out;
    for (const auto& m : maps)
        out.push_back(m.sign_string());
    return out;
}

bool verdict_matches(const Domain& d, int want_maps, bool cross_check) {
    Verdict v = arrow_verdict(d);
    if (!v.inconsistent || v.maps_found != want_maps)
        return false;
    for (const auto& ds : v.dictator_sets)
        if (ds.empty())
            return false;
    if (cross_check) {
        auto nv = std::make_shared<const Nerve>(d);
        if (sign_strings(v.maps) != naive_sweep(nv))
            return false;
    }
    return true;
}

} // namespace

int main() {
    // 1. structure counts
    run(1, "structure counts of the ranking and profile nerves", [] {
        SocialNerve s3(alts3());
        if (s3.vertex_count() != 6 || s3.facet_count() != 6 || !s3.is_pure() ||
            s3.dimension() != 2)
            return false;
        SocialNerve s4(alts4());
        if (s4.vertex_count() != 12 || s4.facet_count() != 24 || !s4.is_pure() ||
            s4.dimension() != 5)
            return false;
        Nerve n32(unrestricted(alts3(), 2));
        return n32.vertex_count() == 12 && n32.facet_count() == 36;
    });

    // 2. classical verdicts at desk scale, cross-checked against the sweep
    run(2, "unrestricted verdicts: (3,2)->2 maps, (3,3)->3, (4,2)->2", [] {
        Verdict v32 = arrow_verdict(unrestricted(alts3(), 2));
        if (!v32.inconsistent || v32.maps_found != 2 ||
            v32.dictator_sets != std::vector<std::vector<int>>{{1}, {2}})
            return false;
        if (!verdict_matches(unrestricted(alts3(), 2), 2, true))
            return false;
        if (!verdict_matches(unrestricted(alts3(), 3), 3, true))
            return false;
        return verdict_matches(unrestricted(alts4(), 2), 2, true);
    });

    // 3. generalized impossibility on seeded witness domains
    run(3, "100+ seeded witness domains are all inconsistent", [] {
        int checked = 0;
        for (int m : {3, 4}) {
            AlternativeSet alts = m == 3 ? alts3() : alts4();
            for (int n : {2, 3}) {
                for (std::uint64_t seed = 0; seed < 26; ++seed) {
                    SeedBits bits(seed);
                    Domain d = gen_ptdt_domain(alts, n, bits);
                    if (!in_pt(d).member || !in_dt(d).member)
                        return false;
                    if (!arrow_verdict(d).inconsistent)
                        return false;
                    ++checked;
                }
            }
        }
        return checked >= 100;
    });

    // 4. upward closure and the super-Arrovian probe
    run(4, "29 one-profile extensions (3,2) and 200 random k<=3 extensions (3,3)", [] {
        ZeroBits z32;
        Domain wit32 = gen_ptdt_domain(alts3(), 2, z32);
        if (wit32.size() != 7)
            return false;
        ProbeReport ones = super_arrovian_probe(wit32, 1, 0, 0);
        if (!ones.exhaustive || ones.extensions_tested != 29 || !ones.all_inconsistent)
            return false;
        // membership survives every one-profile extension
        {
            auto rs = enumerate_rankings(alts3());
            for (const auto& r1 : rs)
                for (const auto& r2 : rs) {
                    Profile p({r1, r2});
                    if (wit32.contains(p))
                        continue;
                    std::vector<Profile> ps = wit32.profiles();
                    ps.push_back(p);
                    Domain ext(alts3(), 2, std::move(ps));
                    if (!check_upward_closure(wit32, ext))
                        return false;
                }
        }
        ZeroBits z33;
        Domain wit33 = gen_ptdt_domain(alts3(), 3, z33);
        auto rs = enumerate_rankings(alts3());
        SplitMix64 rng(2024);
        for (int t = 0; t < 200; ++t) {
            int k = 1 + static_cast<int>(rng.next() % 3);
            std::vector<Profile> ps = wit33.profiles();
            for (int j = 0; j < k; ++j) {
                std::vector<Ranking> prof;
                for (int i = 0; i < 3; ++i)
                    prof.push_back(rs[static_cast<size_t>(rng.next() % rs.size())]);
                ps.push_back(Profile(std::move(prof)));
            }
            Domain ext(alts3(), 3, std::move(ps));
            if (!check_upward_closure(wit33, ext))
                return false;
            if (!arrow_verdict(ext).inconsistent)
                return false;
        }
        return true;
    });

    // 5. bijection round trips on every enumerable instance
    run(5, "bijection suite round trips (m<=4, n<=3, |D|<=40)", [] {
        std::vector<Domain> corpus;
        corpus.push_back(unrestricted(alts3(), 2));
        for (int m : {3, 4}) {
            AlternativeSet alts = m == 3 ? alts3() : alts4();
            for (int n : {2, 3}) {
                for (std::uint64_t seed : {0ull, 7ull}) {
                    SeedBits bits(seed);
                    corpus.push_back(gen_ptdt_domain(alts, n, bits));
                }
                // random small domains
                auto rs = enumerate_rankings(alts);
                SplitMix64 rng(static_cast<std::uint64_t>(100 * m + n));
                for (int size : {1, 5, 17, 40}) {
                    std::vector<Profile> ps;
                    for (int i = 0; i < size; ++i) {
                        std::vector<Ranking> prof;
                        for (int v = 0; v < n; ++v)
                            prof.push_back(rs[static_cast<size_t>(rng.next() % rs.size())]);
                        ps.push_back(Profile(std::move(prof)));
                    }
                    corpus.push_back(Domain(alts, n, std::move(ps)));
                }
            }
        }
        for (const auto& d : corpus) {
            if (d.size() > 40)
                continue;
            const int m = d.alternatives().size();
            auto nv = std::make_shared<const Nerve>(d);
            // ranking bijection
            for (const auto& r : enumerate_rankings(d.alternatives()))
                if (!(h_social(g_social(r), m) == r))
                    return false;
            // pair bijections over every subset of size >= 2
            for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
                std::vector<Alt> y;
                for (Alt a = 0; a < m; ++a)
                    if ((mask >> a) & 1u)
                        y.push_back(a);
                if (y.size() < 2)
                    continue;
                Domain restricted = restrict_domain(d, y);
                std::set<Simplex> image;
                for (const auto& sp : restricted.profiles()) {
                    Simplex gs = g_sub(sp, y);
                    image.insert(gs);
                    if (!(h_sub(*nv, gs) == sp))
                        return false;
                }
                if (image.size() != static_cast<size_t>(restricted.size()))
                    return false;
                for (const auto& gs : image)
                    if (!(g_sub(h_sub(*nv, gs), y) == gs))
                        return false;
            }
            // table/map bijection on the enumerated maps and the projections
            auto maps = enumerate_unanimous_maps(nv);
            for (const auto& f : maps) {
                SwfTable t = to_swf_table(f);
                if (!(to_chromatic_map(t, nv) == f))
                    return false;
            }
            for (int voter = 0; voter < d.voters(); ++voter) {
                SwfTable F = SwfTable::projection(d, voter);
                if (!(to_swf_table(to_chromatic_map(F, nv)) == F))
                    return false;
            }
        }
        return true;
    });

    // 6. predicate equivalence across the table/map bijection
    run(6, "unanimity and dictator sets agree across the bijection", [] {
        // exhaustively on tiny domains
        std::vector<Domain> tiny = {
            Domain(alts3(), 2, {Profile({Ranking({0, 1, 2}), Ranking({2, 1, 0})})}),
            Domain(alts3(), 2,
                   {Profile({Ranking({0, 1, 2}), Ranking({2, 0, 1})}),
                    Profile({Ranking({1, 2, 0}), Ranking({1, 0, 2})})}),
            Domain(alts3(), 2,
                   {Profile({Ranking({0, 1, 2}), Ranking({0, 1, 2})}),
                    Profile({Ranking({2, 1, 0}), Ranking({0, 2, 1})}),
                    Profile({Ranking({1, 0, 2}), Ranking({1, 0, 2})})}),
        };
        for (const auto& d : tiny) {
            auto nv = std::make_shared<const Nerve>(d);
            auto rs = enumerate_rankings(d.alternatives());
            std::vector<int> idx(static_cast<size_t>(d.size()), 0);
            for (;;) {
                std::vector<Ranking> outs;
                for (int i = 0; i < d.size(); ++i)
                    outs.push_back(rs[static_cast<size_t>(idx[static_cast<size_t>(i)])]);
                SwfTable F(d, std::move(outs));
                if (satisfies_iia(F)) {
                    ChromaticMap f = to_chromatic_map(F, nv);
                    if (map_satisfies_unanimity(f) != satisfies_unanimity(F))
                        return false;
                    if (dictators(f) != dictators(F))
                        return false;
                    if (!(to_swf_table(f) == F))
                        return false;
                }
                int i = d.size() - 1;
                while (i >= 0 && idx[static_cast<size_t>(i)] + 1 == static_cast<int>(rs.size()))
                    idx[static_cast<size_t>(i--)] = 0;
                if (i < 0)
                    break;
                ++idx[static_cast<size_t>(i)];
            }
        }
        // sampled IIA tables on larger domains: projections, constants and
        // every enumerated map's table
        std::vector<Domain> larger = {unrestricted(alts3(), 2), unrestricted(alts3(), 3)};
        ZeroBits zeros;
        larger.push_back(gen_ptdt_domain(alts4(), 2, zeros));
        for (const auto& d : larger) {
            auto nv = std::make_shared<const Nerve>(d);
            std::vector<SwfTable> tables;
            for (int v = 0; v < d.voters(); ++v)
                tables.push_back(SwfTable::projection(d, v));
            for (const auto& r : enumerate_rankings(d.alternatives()))
                tables.push_back(SwfTable::constant(d, r));
            for (const auto& f : enumerate_unanimous_maps(nv))
                tables.push_back(to_swf_table(f));
            for (const auto& F : tables) {
                ChromaticMap f = to_chromatic_map(F, nv);
                if (map_satisfies_unanimity(f) != satisfies_unanimity(F))
                    return false;
                if (dictators(f) != dictators(F))
                    return false;
            }
        }
        return true;
    });

    // 7. ultrafilter machinery by exhaustive family sweep
    run(7, "all families on n<=3 voters yield exactly n principal ultrafilters", [] {
        for (int n = 1; n <= 3; ++n) {
            auto ultras = enumerate_ultrafilters(n);
            if (static_cast<int>(ultras.size()) != n)
                return false;
            std::set<int> principals;
            for (const auto& fam : ultras)
                principals.insert(principal_element(fam, n));
            if (static_cast<int>(principals.size()) != n)
                return false;
        }
        return true;
    });

    // 8. lemma audit over every witness domain and the unrestricted ones
    run(8, "audit reports zero failures (witness domains and unrestricted, m<=4, n<=3)", [] {
        std::vector<Domain> domains;
        for (int m : {3, 4}) {
            AlternativeSet alts = m == 3 ? alts3() : alts4();
            for (int n : {2, 3}) {
                for (std::uint64_t seed : {0ull, 1ull, 5ull}) {
                    SeedBits bits(seed);
                    domains.push_back(gen_ptdt_domain(alts, n, bits));
                }
                domains.push_back(unrestricted(alts, n));
            }
        }
        for (const auto& d : domains) {
            auto nv = std::make_shared<const Nerve>(d);
            auto maps = enumerate_unanimous_maps(nv);
            if (maps.empty())
                return false;
            if (!audit_lemmas(d, nv, maps).all_passed())
                return false;
        }
        return true;
    });

    // 9. diversity forces a value-restriction violation when n >= 3
    run(9, "every generated member domain with n>=3 violates value restriction", [] {
        for (int m : {3, 4}) {
            AlternativeSet alts = m == 3 ? alts3() : alts4();
            auto xs = all_alts(alts);
            for (std::uint64_t seed = 0; seed < 25; ++seed) {
                SeedBits bits(seed);
                Domain d = gen_ptdt_domain(alts, 3, bits);
                bool found = false;
                for (const auto& p : d.profiles())
                    if (!is_value_restricted(p, xs)) {
                        found = true;
                        break;
                    }
                if (!found)
                    return false;
            }
        }
        return true;
    });

    // 10. the consistency witness
    run(10, "{(xyz, zyx)} is consistent with a concrete non-dictatorial map", [] {
        Domain d(alts3(), 2, {Profile({Ranking({0, 1, 2}), Ranking({2, 1, 0})})});
        Verdict v = arrow_verdict(d);
        if (v.inconsistent || !v.witness_index)
            return false;
        const ChromaticMap& w = v.maps[static_cast<size_t>(*v.witness_index)];
        return dictators(w).empty() && is_simplicial(w) && map_satisfies_unanimity(w);
    });

    std::printf("%s: %d criteria failed\n", g_failures == 0 ? "ALL PASS" : "FAILURES",
                g_failures);
    return g_failures == 0 ? 0 : 1;
}
