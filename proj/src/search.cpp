#include "arrovian/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <map>
#include <set>
#include <thread>

#include "arrovian/seedstream.hpp"

namespace arrovian {

namespace {

// One transitivity constraint: the signs of the (a,b), (b,c), (a,c) vertices
// of some facet, a < b < c. Forbidden images are the two cyclic tournaments
// (+,+,-) and (-,-,+).
struct Clause {
    std::array<int, 3> v; // vertex ids for ab, bc, ac
};

struct Searcher {
    const Nerve* nerve;
    std::vector<Clause> clauses;
    std::vector<std::vector<int>> watch; // vertex id -> clause indices
    std::vector<int> order;              // free vertices, most-constrained first
    std::vector<std::int8_t> base;       // pinned assignment, 0 = unassigned

    std::uint64_t nodes = 0;
    std::uint64_t prunes = 0;
    std::vector<std::vector<std::int8_t>> found;

    explicit Searcher(const Nerve& nv) : nerve(&nv) {
        const int m = nv.alternatives().size();
        const int total = nv.vertex_count();
        base.assign(static_cast<size_t>(total), 0);

        // Unanimity pins both unanimous spellings of every pair.
        for (int id = 0; id < total; ++id) {
            const Label& u = nv.vertex(id);
            if (u.sigma.is_all_plus())
                base[static_cast<size_t>(id)] = +1;
            else if (u.sigma.is_all_minus())
                base[static_cast<size_t>(id)] = -1;
        }

        std::set<std::array<int, 3>> dedup;
        for (int f = 0; f < nv.facet_count(); ++f)
            for (Alt a = 0; a < m; ++a)
                for (Alt b = a + 1; b < m; ++b)
                    for (Alt c = b + 1; c < m; ++c)
                        dedup.insert({nv.facet_vertex(f, a, b), nv.facet_vertex(f, b, c),
                                      nv.facet_vertex(f, a, c)});
        clauses.reserve(dedup.size());
        for (const auto& t : dedup)
            clauses.push_back(Clause{t});

        watch.assign(static_cast<size_t>(total), {});
        for (size_t ci = 0; ci < clauses.size(); ++ci)
            for (int id : clauses[ci].v)
                watch[static_cast<size_t>(id)].push_back(static_cast<int>(ci));

        std::vector<int> touched(static_cast<size_t>(total), 0);
        for (int f = 0; f < nv.facet_count(); ++f)
            for (int id : nv.facet(f))
                ++touched[static_cast<size_t>(id)];
        for (int id = 0; id < total; ++id)
            if (base[static_cast<size_t>(id)] == 0)
                order.push_back(id);
        std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
            return touched[static_cast<size_t>(x)] > touched[static_cast<size_t>(y)];
        });
    }

    // Assigns value and runs unit propagation; appends every assignment made
    // to the trail. Returns false on conflict.
    bool assign(std::vector<std::int8_t>& asg, std::vector<int>& trail, int id,
                std::int8_t value) {
        if (asg[static_cast<size_t>(id)] != 0)
            return asg[static_cast<size_t>(id)] == value;
        asg[static_cast<size_t>(id)] = value;
        trail.push_back(id);
        size_t head = trail.size() - 1;
        while (head < trail.size()) {
            int cur = trail[head++];
            for (int ci : watch[static_cast<size_t>(cur)]) {
                const auto& v = clauses[static_cast<size_t>(ci)].v;
                std::int8_t sab = asg[static_cast<size_t>(v[0])];
                std::int8_t sbc = asg[static_cast<size_t>(v[1])];
                std::int8_t sac = asg[static_cast<size_t>(v[2])];
                int unknowns = (sab == 0) + (sbc == 0) + (sac == 0);
                if (unknowns == 0) {
                    if ((sab > 0 && sbc > 0 && sac < 0) || (sab < 0 && sbc < 0 && sac > 0))
                        return false;
                    continue;
                }
                if (unknowns > 1)
                    continue;
                // the unknown sign is forced exactly when the two known ones
                // complete a cyclic pattern either way
                int forced_id = -1;
                std::int8_t forced = 0;
                if (sab == 0) {
                    if (sbc > 0 && sac < 0) {
                        forced_id = v[0];
                        forced = -1;
                    } else if (sbc < 0 && sac > 0) {
                        forced_id = v[0];
                        forced = +1;
                    }
                } else if (sbc == 0) {
                    if (sab > 0 && sac < 0) {
                        forced_id = v[1];
                        forced = -1;
                    } else if (sab < 0 && sac > 0) {
                        forced_id = v[1];
                        forced = +1;
                    }
                } else { // sac unknown
                    if (sab > 0 && sbc > 0) {
                        forced_id = v[2];
                        forced = +1;
                    } else if (sab < 0 && sbc < 0) {
                        forced_id = v[2];
                        forced = -1;
                    }
                }
                if (forced_id >= 0) {
                    std::int8_t prev = asg[static_cast<size_t>(forced_id)];
                    if (prev == 0) {
                        asg[static_cast<size_t>(forced_id)] = forced;
                        trail.push_back(forced_id);
                    } else if (prev != forced) {
                        return false;
                    }
                }
            }
        }
        return true;
    }

    void undo(std::vector<std::int8_t>& asg, std::vector<int>& trail, size_t mark) {
        while (trail.size() > mark) {
            asg[static_cast<size_t>(trail.back())] = 0;
            trail.pop_back();
        }
    }

    void dfs(std::vector<std::int8_t>& asg, std::vector<int>& trail, size_t pos) {
        while (pos < order.size() && asg[static_cast<size_t>(order[pos])] != 0)
            ++pos;
        if (pos == order.size()) {
            found.push_back(asg);
            return;
        }
        int id = order[pos];
        for (std::int8_t s : {std::int8_t(+1), std::int8_t(-1)}) {
            ++nodes;
            size_t mark = trail.size();
            if (assign(asg, trail, id, s))
                dfs(asg, trail, pos + 1);
            else
                ++prunes;
            undo(asg, trail, mark);
        }
    }
};

int resolve_split_depth(size_t free_vars, int threads) {
    if (threads <= 1 || free_vars < 14)
        return 0;
    int k = 0;
    while ((1 << k) < 4 * threads && k < 8 && static_cast<size_t>(k) + 8 < free_vars)
        ++k;
    return k;
}

} // namespace

std::vector<ChromaticMap> enumerate_unanimous_maps(NervePtr nerve, SearchStats* stats,
                                                   int threads) {
    if (!nerve)
        throw PreconditionError("enumeration needs a nerve");
    Searcher s(*nerve);

    // propagate the unanimity pins before any decision
    std::vector<std::int8_t> asg(static_cast<size_t>(nerve->vertex_count()), 0);
    std::vector<int> trail;
    bool consistent = true;
    for (int id = 0; id < nerve->vertex_count() && consistent; ++id)
        if (s.base[static_cast<size_t>(id)] != 0)
            consistent = s.assign(asg, trail, id, s.base[static_cast<size_t>(id)]);

    std::vector<std::vector<std::int8_t>> results;
    std::uint64_t nodes = s.nodes, prunes = s.prunes;
    int workers = 1;
    if (consistent) {
        const int split = resolve_split_depth(s.order.size(), threads);
        if (split == 0) {
            s.dfs(asg, trail, 0);
            results = std::move(s.found);
            nodes = s.nodes;
            prunes = s.prunes;
        } else {
            // split the top `split` decision levels into independent tasks
            std::vector<int> split_vars;
            for (int id : s.order) {
                if (asg[static_cast<size_t>(id)] == 0)
                    split_vars.push_back(id);
                if (static_cast<int>(split_vars.size()) == split)
                    break;
            }
            struct Task {
                std::vector<std::int8_t> asg;
                std::vector<std::vector<std::int8_t>> found;
                std::uint64_t nodes = 0, prunes = 0;
            };
            std::vector<Task> tasks;
            for (std::uint32_t bits = 0; bits < (1u << split_vars.size()); ++bits) {
                std::vector<std::int8_t> branch = asg;
                std::vector<int> btrail;
                bool ok = true;
                for (size_t i = 0; i < split_vars.size() && ok; ++i) {
                    std::int8_t v = ((bits >> i) & 1u) ? -1 : +1;
                    ++nodes;
                    ok = s.assign(branch, btrail, split_vars[i], v);
                }
                if (ok)
                    tasks.push_back(Task{std::move(branch), {}, 0, 0});
                else
                    ++prunes;
            }
            const int nthreads = std::min<int>(threads, std::max<size_t>(tasks.size(), 1));
            workers = nthreads;
            std::vector<std::thread> pool;
            std::atomic<size_t> next{0};
            auto run = [&]() {
                Searcher local(*nerve); // clauses/order identical; independent counters
                for (;;) {
                    size_t t = next.fetch_add(1);
                    if (t >= tasks.size())
                        break;
                    std::vector<int> ltrail;
                    local.found.clear();
                    local.nodes = local.prunes = 0;
                    local.dfs(tasks[t].asg, ltrail, 0);
                    tasks[t].found = std::move(local.found);
                    tasks[t].nodes = local.nodes;
                    tasks[t].prunes = local.prunes;
                }
            };
            for (int i = 0; i < nthreads; ++i)
                pool.emplace_back(run);
            for (auto& th : pool)
                th.join();
            for (auto& t : tasks) {
                nodes += t.nodes;
                prunes += t.prunes;
                for (auto& f : t.found)
                    results.push_back(std::move(f));
            }
        }
    }

    std::vector<ChromaticMap> maps;
    maps.reserve(results.size());
    for (auto& signs : results)
        maps.emplace_back(nerve, std::move(signs));
    std::sort(maps.begin(), maps.end(), [](const ChromaticMap& a, const ChromaticMap& b) {
        return a.sign_string() < b.sign_string();
    });
    if (stats) {
        stats->nodes = nodes;
        stats->prunes = prunes;
        stats->workers = workers;
    }
    return maps;
}

Verdict arrow_verdict(const Domain& d, int threads) {
    if (d.alternatives().size() < 3 || d.voters() < 2)
        throw PreconditionError("the Arrow verdict needs at least 3 alternatives and 2 voters");
    Verdict v;
    auto nerve = std::make_shared<const Nerve>(d);
    v.maps = enumerate_unanimous_maps(nerve, &v.stats, threads);
    v.maps_found = static_cast<int>(v.maps.size());
    v.inconsistent = true;
    for (size_t i = 0; i < v.maps.size(); ++i) {
        v.dictator_sets.push_back(dictators(v.maps[i]));
        if (v.dictator_sets.back().empty() && !v.witness_index) {
            v.witness_index = static_cast<int>(i);
            v.inconsistent = false;
        }
    }
    return v;
}

namespace {

std::string coalition_str(const Coalition& g) {
    std::string out = "{";
    auto ms = g.members();
    for (size_t i = 0; i < ms.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(ms[i]);
    }
    return out + "}";
}

std::vector<std::vector<Alt>> subsets_ge2(int m) {
    std::vector<std::vector<Alt>> out;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        std::vector<Alt> ys;
        for (Alt a = 0; a < m; ++a)
            if ((mask >> a) & 1u)
                ys.push_back(a);
        if (ys.size() >= 2)
            out.push_back(std::move(ys));
    }
    return out;
}

} // namespace

std::int64_t AuditReport::failure_count() const {
    std::int64_t n = 0;
    for (const auto& c : checks)
        n += static_cast<std::int64_t>(c.failures.size());
    return n;
}

AuditReport audit_lemmas(const Domain& d, NervePtr nerve, const std::vector<ChromaticMap>& maps) {
    if (!nerve || !(nerve->domain() == d))
        throw PreconditionError("audit needs the nerve built from the audited domain");
    for (const auto& f : maps)
        if (!(f.nerve().domain() == d))
            throw PreconditionError("audited maps must live on the audited domain's nerve");
    const int m = d.alternatives().size();
    const int n = d.voters();
    const auto& names = d.alternatives();
    const std::uint32_t full = (1u << n) - 1u;
    AuditReport report;

    auto fail_limit = [](AuditCheck& c, std::string msg) {
        if (c.failures.size() < 32)
            c.failures.push_back(std::move(msg));
        else if (c.failures.size() == 32)
            c.failures.push_back("... further failures elided");
    };

    // Shared precomputation.
    auto triples = all_triples(m);
    std::vector<Domain> restricted;
    for (const auto& t : triples)
        restricted.push_back(restrict_domain(d, t));
    // block presence per (proper coalition mask, triple, i)
    std::map<std::pair<std::uint32_t, size_t>, std::pair<bool, bool>> blocks;
    for (std::uint32_t g = 1; g < full; ++g)
        for (size_t t = 0; t < triples.size(); ++t) {
            Coalition gc(g, n);
            auto b1 = gen_d1(names, triples[t], gc);
            auto b2 = gen_d2(names, triples[t], gc);
            auto in = [&](const TripleProfileSet& b) {
                for (const auto& p : b.profiles)
                    if (!restricted[t].contains(p))
                        return false;
                return true;
            };
            blocks[{g, t}] = {in(b1), in(b2)};
        }
    std::vector<CoalitionFamily> fams;
    fams.reserve(maps.size());
    for (const auto& f : maps)
        fams.push_back(almost_decisive_family(f));
    const bool pt_member = m >= 3 && n >= 2 && in_pt(d).member;
    const bool dt_member = m >= 3 && n >= 2 && in_dt(d).member;
    const bool nx_member = in_nx_class(d);
    auto ys = subsets_ge2(m);

    // --- complement sign: almost-decisiveness of G over Y forces the
    // complement's vertices on Y-pairs to the negative side.
    {
        AuditCheck c{"complement-sign", 0, {}};
        for (size_t mi = 0; mi < maps.size(); ++mi) {
            const auto& f = maps[mi];
            for (std::uint32_t g = 0; g <= full; ++g) {
                Coalition gc(g, n);
                for (const auto& y : ys) {
                    if (!is_almost_decisive(f, gc, y))
                        continue;
                    ++c.instances;
                    for (Alt a : y)
                        for (Alt b : y)
                            if (a != b && !complement_sign_lemma_check(f, gc, a, b))
                                fail_limit(c, "map " + std::to_string(mi) + " G=" +
                                                  coalition_str(gc) + " pair (" + names.name(a) +
                                                  "," + names.name(b) + ")");
                }
            }
        }
        report.checks.push_back(std::move(c));
    }

    // --- ultrafilter to dictator.
    {
        AuditCheck c{"ultrafilter-dictator", 0, {}};
        for (size_t mi = 0; mi < maps.size(); ++mi) {
            if (!is_ultrafilter(fams[mi], n).ok)
                continue;
            ++c.instances;
            int dpick = principal_element(fams[mi], n);
            auto ds = dictators(maps[mi]);
            if (!std::binary_search(ds.begin(), ds.end(), dpick))
                fail_limit(c, "map " + std::to_string(mi) + ": principal element " +
                                  std::to_string(dpick) + " is not a dictator");
        }
        report.checks.push_back(std::move(c));
    }

    // --- unanimity triangle exclusion: a triangle with a unanimous (a,b)
    // vertex never maps its other edge onto {U_bc^+, U_ca^+}.
    {
        AuditCheck c{"unanimity-triangle-exclusion", 0, {}};
        std::set<std::tuple<Alt, Alt, Alt, std::uint32_t, std::uint32_t>> instances;
        for (int fi = 0; fi < d.size(); ++fi) {
            const Profile& p = d.profile(fi);
            for (Alt a = 0; a < m; ++a)
                for (Alt b = 0; b < m; ++b) {
                    if (a == b || !pair_sign_vector(p, a, b).is_all_plus())
                        continue;
                    for (Alt cc = 0; cc < m; ++cc) {
                        if (cc == a || cc == b)
                            continue;
                        instances.insert({a, b, cc, pair_sign_vector(p, b, cc).plus_mask(),
                                          pair_sign_vector(p, cc, a).plus_mask()});
                    }
                }
        }
        for (size_t mi = 0; mi < maps.size(); ++mi) {
            const auto& f = maps[mi];
            for (const auto& [a, b, cc, sbc, sca] : instances) {
                ++c.instances;
                if (f.sign_of(b, cc, SignVector(sbc, n)) == +1 &&
                    f.sign_of(cc, a, SignVector(sca, n)) == +1)
                    fail_limit(c, "map " + std::to_string(mi) + " triangle on (" + names.name(a) +
                                      "," + names.name(b) + "," + names.name(cc) + ")");
            }
        }
        report.checks.push_back(std::move(c));
    }

    // --- polarized-block edge exclusion and non-DbT images.
    {
        AuditCheck c4{"polarized-edge-exclusion", 0, {}};
        AuditCheck c5{"non-dbt-image", 0, {}};
        for (std::uint32_t g = 1; g < full; ++g) {
            Coalition gc(g, n);
            SignVector sg = SignVector::for_coalition(gc);
            SignVector sgc = sg.negated();
            for (size_t t = 0; t < triples.size(); ++t) {
                auto [has1, has2] = blocks[{g, t}];
                if (!has1 && !has2)
                    continue;
                const auto& tr = triples[t];
                std::array<std::array<Alt, 3>, 6> perms = {{{tr[0], tr[1], tr[2]},
                                                            {tr[0], tr[2], tr[1]},
                                                            {tr[1], tr[0], tr[2]},
                                                            {tr[1], tr[2], tr[0]},
                                                            {tr[2], tr[0], tr[1]},
                                                            {tr[2], tr[1], tr[0]}}};
                for (size_t mi = 0; mi < maps.size(); ++mi) {
                    const auto& f = maps[mi];
                    for (const auto& pm : perms) {
                        Alt a = pm[0], b = pm[1], cc = pm[2];
                        for (int i : {1, 2}) {
                            if ((i == 1 && !has1) || (i == 2 && !has2))
                                continue;
                            ++c4.instances;
                            std::int8_t bad = i == 1 ? -1 : +1;
                            if (f.sign_of(a, cc, sg) == bad && f.sign_of(b, a, sgc) == bad)
                                fail_limit(c4, "map " + std::to_string(mi) + " B" +
                                                   std::to_string(i) + "(" + coalition_str(gc) +
                                                   ") edge {U(" + names.name(a) + names.name(cc) +
                                                   ")^G, U(" + names.name(b) + names.name(a) +
                                                   ")^Gc}");
                            if (f.sign_of(a, cc, sgc) == -bad && f.sign_of(b, a, sg) == -bad)
                                fail_limit(c4, "map " + std::to_string(mi) + " B" +
                                                   std::to_string(i) + "(" + coalition_str(gc) +
                                                   ") edge {U(" + names.name(a) + names.name(cc) +
                                                   ")^Gc, U(" + names.name(b) + names.name(a) +
                                                   ")^G}");
                        }
                        // both edge families must land on non-DbT edges
                        ++c5.instances;
                        if (f.sign_of(b, cc, sg) == f.sign_of(a, b, sgc) ||
                            f.sign_of(b, cc, sgc) == f.sign_of(a, b, sg))
                            fail_limit(c5, "map " + std::to_string(mi) + " (" +
                                               coalition_str(gc) + ") triple (" + names.name(a) +
                                               "," + names.name(b) + "," + names.name(cc) + ")");
                    }
                }
            }
        }
        report.checks.push_back(std::move(c4));
        report.checks.push_back(std::move(c5));
    }

    // --- triple dichotomy: a present block decides G or G^c over the triple.
    {
        AuditCheck c{"triple-dichotomy", 0, {}};
        for (size_t t = 0; t < triples.size(); ++t) {
            for (std::uint32_t g = 0; g <= full; ++g) {
                bool applicable = g == 0 || g == full;
                if (!applicable) {
                    auto [has1, has2] = blocks[{g, t}];
                    applicable = has1 || has2;
                }
                if (!applicable)
                    continue;
                Coalition gc(g, n);
                for (size_t mi = 0; mi < maps.size(); ++mi) {
                    ++c.instances;
                    if (!is_almost_decisive(maps[mi], gc, triples[t]) &&
                        !is_almost_decisive(maps[mi], gc.complement(), triples[t]))
                        fail_limit(c, "map " + std::to_string(mi) + " G=" + coalition_str(gc) +
                                          " triple (" + names.name(triples[t][0]) + "," +
                                          names.name(triples[t][1]) + "," +
                                          names.name(triples[t][2]) + ")");
                }
            }
        }
        report.checks.push_back(std::move(c));
    }

    // --- contagion: one positive coalition vertex spreads to
    // almost-decisiveness everywhere (needs the polarization class).
    {
        AuditCheck c{"decisiveness-contagion", 0, {}};
        if (pt_member) {
            for (size_t mi = 0; mi < maps.size(); ++mi) {
                const auto& f = maps[mi];
                for (std::uint32_t g = 1; g < full; ++g) {
                    Coalition gc(g, n);
                    SignVector sg = SignVector::for_coalition(gc);
                    for (Alt a = 0; a < m; ++a)
                        for (Alt b = 0; b < m; ++b) {
                            if (a == b || f.sign_of(a, b, sg) != +1)
                                continue;
                            ++c.instances;
                            if (!is_almost_decisive(f, gc))
                                fail_limit(c, "map " + std::to_string(mi) + " G=" +
                                                  coalition_str(gc) + " from pair (" +
                                                  names.name(a) + "," + names.name(b) + ")");
                        }
                }
            }
        }
        report.checks.push_back(std::move(c));
    }

    // --- coalition dichotomy over the whole alternative set.
    {
        AuditCheck c{"coalition-dichotomy", 0, {}};
        if (pt_member) {
            for (size_t mi = 0; mi < maps.size(); ++mi)
                for (std::uint32_t g = 0; g <= full; ++g) {
                    ++c.instances;
                    Coalition gc(g, n);
                    if (!is_almost_decisive(maps[mi], gc) &&
                        !is_almost_decisive(maps[mi], gc.complement()))
                        fail_limit(c, "map " + std::to_string(mi) + " G=" + coalition_str(gc));
                }
        }
        report.checks.push_back(std::move(c));
    }

    // --- intersection closure of the almost-decisive family.
    {
        AuditCheck c{"intersection-closure", 0, {}};
        if (pt_member && dt_member) {
            for (size_t mi = 0; mi < maps.size(); ++mi)
                for (std::uint32_t g : fams[mi].masks)
                    for (std::uint32_t h : fams[mi].masks) {
                        ++c.instances;
                        if (!fams[mi].contains(g & h))
                            fail_limit(c, "map " + std::to_string(mi) + " G=" +
                                              coalition_str(Coalition(g, n)) + " G'=" +
                                              coalition_str(Coalition(h, n)));
                    }
        }
        report.checks.push_back(std::move(c));
    }

    // --- superset closure, the derived fourth family property: it follows
    // from the three ultrafilter properties, so it must hold whenever they do.
    {
        AuditCheck c{"superset-closure", 0, {}};
        for (size_t mi = 0; mi < maps.size(); ++mi) {
            if (!is_ultrafilter(fams[mi], n).ok)
                continue;
            for (std::uint32_t b : fams[mi].masks)
                for (std::uint32_t sup = b;; sup = (sup + 1) | b) {
                    ++c.instances;
                    if (!fams[mi].contains(sup))
                        fail_limit(c, "map " + std::to_string(mi) + " B=" +
                                          coalition_str(Coalition(b, n)) + " superset " +
                                          coalition_str(Coalition(sup, n)));
                    if (sup == full)
                        break;
                }
        }
        report.checks.push_back(std::move(c));
    }

    // --- the empty coalition is excluded exactly when a unanimity vertex
    // exists.
    {
        AuditCheck c{"empty-coalition-exclusion", 0, {}};
        for (size_t mi = 0; mi < maps.size(); ++mi) {
            ++c.instances;
            if ((!fams[mi].contains(0)) != nx_member)
                fail_limit(c, "map " + std::to_string(mi));
        }
        report.checks.push_back(std::move(c));
    }

    // --- the diversity condition's simplex form agrees with its voter
    // pattern form: the three pairwise constraints pin every voter's triple
    // ranking, so the two searches must find the same coalition pairs.
    {
        AuditCheck c{"diversity-pattern-equivalence", 0, {}};
        if (m >= 3 && n >= 2) {
            auto pattern_exists = [&](std::uint32_t gm, std::uint32_t hm) {
                for (const auto& p : d.profiles())
                    for (const auto& tr : triples) {
                        for (int rot = 0; rot < 6; ++rot) {
                            static const std::array<std::array<int, 3>, 6> kPerm = {
                                {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
                            Alt a = tr[static_cast<size_t>(kPerm[static_cast<size_t>(rot)][0])];
                            Alt b = tr[static_cast<size_t>(kPerm[static_cast<size_t>(rot)][1])];
                            Alt cc = tr[static_cast<size_t>(kPerm[static_cast<size_t>(rot)][2])];
                            bool ok = true;
                            for (int i = 0; i < n && ok; ++i) {
                                bool ing = (gm >> i) & 1u, inh = (hm >> i) & 1u;
                                const Ranking& r = p.ranking(i);
                                if (ing && inh)
                                    ok = r.prefers(a, b) && r.prefers(b, cc);
                                else if (ing)
                                    ok = r.prefers(cc, a) && r.prefers(a, b);
                                else if (inh)
                                    ok = r.prefers(b, cc) && r.prefers(cc, a);
                                else
                                    ok = r.prefers(cc, b) && r.prefers(b, a);
                            }
                            if (ok)
                                return true;
                        }
                    }
                return false;
            };
            auto simplex_exists = [&](std::uint32_t gm, std::uint32_t hm) {
                SignVector sg(gm, n), sh(hm, n), sr(~(gm & hm), n);
                for (const auto& p : d.profiles())
                    for (Alt a = 0; a < m; ++a)
                        for (Alt b = 0; b < m; ++b)
                            for (Alt cc = 0; cc < m; ++cc) {
                                if (a == b || b == cc || a == cc)
                                    continue;
                                if (pair_sign_vector(p, a, b) == sg &&
                                    pair_sign_vector(p, b, cc) == sh &&
                                    pair_sign_vector(p, cc, a) == sr)
                                    return true;
                            }
                return false;
            };
            for (std::uint32_t gm = 1; gm <= full; ++gm)
                for (std::uint32_t hm = 1; hm <= full; ++hm) {
                    if ((gm & ~hm) == 0 || (hm & ~gm) == 0)
                        continue;
                    ++c.instances;
                    if (simplex_exists(gm, hm) != pattern_exists(gm, hm))
                        fail_limit(c, "G=" + coalition_str(Coalition(gm, n)) + " G'=" +
                                          coalition_str(Coalition(hm, n)));
                }
        }
        report.checks.push_back(std::move(c));
    }

    // --- vertex existence dichotomy: a sigma^G vertex on Y exists iff G and
    // G^c are not both almost-decisive over Y.
    {
        AuditCheck c{"vertex-existence-dichotomy", 0, {}};
        for (std::uint32_t g = 0; g <= full; ++g) {
            Coalition gc(g, n);
            for (const auto& y : ys) {
                bool exists = in_gy_class(d, gc, y);
                for (size_t mi = 0; mi < maps.size(); ++mi) {
                    ++c.instances;
                    bool both = is_almost_decisive(maps[mi], gc, y) &&
                                is_almost_decisive(maps[mi], gc.complement(), y);
                    if (exists != !both)
                        fail_limit(c, "map " + std::to_string(mi) + " G=" + coalition_str(gc));
                }
            }
        }
        report.checks.push_back(std::move(c));
    }

    return report;
}

namespace {

std::uint64_t choose_capped(std::uint64_t c, int k, std::uint64_t cap) {
    std::uint64_t out = 1;
    for (int i = 0; i < k; ++i) {
        if (out > cap)
            return cap + 1;
        out = out * (c - static_cast<std::uint64_t>(i)) / static_cast<std::uint64_t>(i + 1);
    }
    return out;
}

} // namespace

ProbeReport super_arrovian_probe(const Domain& d, int k, std::uint64_t trials, std::uint64_t seed,
                                 std::uint64_t budget, int threads) {
    if (k < 0)
        throw PreconditionError("extension size must be non-negative");
    const int m = d.alternatives().size();
    const int n = d.voters();
    double space = 1;
    for (int i = 2; i <= m; ++i)
        space *= i;
    space = std::pow(space, n);
    if (space > 2e6)
        throw PreconditionError("probe needs an enumerable profile space");

    // complement of D inside the unrestricted domain
    std::vector<Profile> complement;
    {
        auto rs = enumerate_rankings(d.alternatives());
        std::vector<int> idx(static_cast<size_t>(n), 0);
        for (;;) {
            std::vector<Ranking> prof;
            prof.reserve(static_cast<size_t>(n));
            for (int i = 0; i < n; ++i)
                prof.push_back(rs[static_cast<size_t>(idx[static_cast<size_t>(i)])]);
            Profile p(std::move(prof));
            if (!d.contains(p))
                complement.push_back(std::move(p));
            int i = n - 1;
            while (i >= 0 && idx[static_cast<size_t>(i)] + 1 == static_cast<int>(rs.size()))
                idx[static_cast<size_t>(i--)] = 0;
            if (i < 0)
                break;
            ++idx[static_cast<size_t>(i)];
        }
    }

    ProbeReport report;
    report.add = k;
    report.trials = trials;
    report.all_inconsistent = true;
    auto test_extension = [&](const std::vector<const Profile*>& ext) {
        std::vector<Profile> ps = d.profiles();
        for (const Profile* p : ext)
            ps.push_back(*p);
        Domain dp(d.alternatives(), n, std::move(ps));
        ++report.extensions_tested;
        if (!arrow_verdict(dp, threads).inconsistent) {
            report.all_inconsistent = false;
            std::string msg = "consistent after adding:";
            for (const Profile* p : ext)
                msg += " (" + profile_str(*p, d.alternatives()) + ")";
            if (report.failures.size() < 32)
                report.failures.push_back(std::move(msg));
        }
    };

    const std::uint64_t c = complement.size();
    if (k == 0) {
        report.exhaustive = true;
        test_extension({});
    } else if (static_cast<std::uint64_t>(k) <= c &&
               choose_capped(c, k, budget) <= budget) {
        report.exhaustive = true;
        std::vector<int> idx(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i)
            idx[static_cast<size_t>(i)] = i;
        for (;;) {
            std::vector<const Profile*> ext;
            for (int i : idx)
                ext.push_back(&complement[static_cast<size_t>(i)]);
            test_extension(ext);
            int i = k - 1;
            while (i >= 0 && idx[static_cast<size_t>(i)] == static_cast<int>(c) - k + i)
                --i;
            if (i < 0)
                break;
            ++idx[static_cast<size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
        }
    } else {
        if (static_cast<std::uint64_t>(k) > c)
            throw PreconditionError("extension size exceeds the number of available profiles");
        report.exhaustive = false;
        SplitMix64 rng(seed);
        for (std::uint64_t t = 0; t < trials; ++t) {
            std::vector<int> picked;
            while (static_cast<int>(picked.size()) < k) {
                int cand = static_cast<int>(rng.next() % c);
                if (std::find(picked.begin(), picked.end(), cand) == picked.end())
                    picked.push_back(cand);
            }
            std::vector<const Profile*> ext;
            for (int i : picked)
                ext.push_back(&complement[static_cast<size_t>(i)]);
            test_extension(ext);
        }
    }
    return report;
}

} // namespace arrovian
