#include <doctest.h>

#include <algorithm>

#include "arrovian/swf.hpp"
#include "test_util.hpp"

using namespace arrovian;
using namespace arrovian::test;

namespace {

// Borda count, ties broken by voter 1's order. IIA is expected to fail.
SwfTable borda_voter1_ties(const Domain& d) {
    const int m = d.alternatives().size();
    std::vector<Ranking> outputs;
    for (const auto& p : d.profiles()) {
        std::vector<int> score(static_cast<size_t>(m), 0);
        for (const auto& r : p.rankings())
            for (Alt a = 0; a < m; ++a)
                score[static_cast<size_t>(a)] += m - 1 - r.position_of(a);
        std::vector<Alt> order(static_cast<size_t>(m));
        for (Alt a = 0; a < m; ++a)
            order[static_cast<size_t>(a)] = a;
        std::stable_sort(order.begin(), order.end(), [&](Alt a, Alt b) {
            if (score[static_cast<size_t>(a)] != score[static_cast<size_t>(b)])
                return score[static_cast<size_t>(a)] > score[static_cast<size_t>(b)];
            return p.ranking(0).prefers(a, b);
        });
        outputs.push_back(Ranking(std::move(order)));
    }
    return SwfTable(d, std::move(outputs));
}

NervePtr nerve_of(const Domain& d) { return std::make_shared<const Nerve>(d); }

} // namespace

TEST_CASE("IIA predicate") {
    auto a3 = xyz();
    Domain u = unrestricted(a3, 2);
    CHECK(satisfies_iia(SwfTable::constant(u, rk(a3, "xyz"))));
    CHECK(satisfies_iia(SwfTable::projection(u, 0)));
    CHECK_FALSE(satisfies_iia(borda_voter1_ties(u)));
    auto violation = find_iia_violation(borda_voter1_ties(u));
    REQUIRE(violation.has_value());
    // the witness really does agree on the pair and differ on it in the output
    const Profile& p = u.profile(violation->profile_i);
    const Profile& q = u.profile(violation->profile_j);
    SwfTable borda = borda_voter1_ties(u);
    CHECK(pair_sign_vector(p, violation->a, violation->b) ==
          pair_sign_vector(q, violation->a, violation->b));
    CHECK(borda.output(violation->profile_i).prefers(violation->a, violation->b) !=
          borda.output(violation->profile_j).prefers(violation->a, violation->b));
}

TEST_CASE("unanimity predicate on tables") {
    auto a3 = xyz();
    Domain u = unrestricted(a3, 2);
    CHECK(satisfies_unanimity(SwfTable::projection(u, 0)));
    CHECK_FALSE(satisfies_unanimity(SwfTable::constant(u, rk(a3, "xyz"))));
    // vacuous on a domain with no unanimous pair
    Domain anti = dom(a3, 2, {{"xyz", "zyx"}});
    CHECK(satisfies_unanimity(SwfTable::constant(anti, rk(a3, "yxz"))));
}

TEST_CASE("unanimity predicate on maps honors the quotient") {
    auto a3 = xyz();
    // domain whose only canonical vertices carry all-minus sigmas: a
    // unanimous profile ranked against the index order
    Domain d = dom(a3, 2, {{"zyx", "zyx"}});
    auto nv = nerve_of(d);
    REQUIRE(nv->vertex_count() == 3);
    for (const auto& v : nv->vertices())
        CHECK(v.sigma.is_all_minus());
    // f must send each U_ab^{--} to U_ab^-; the all-plus assignment would
    // double-count the quotient
    ChromaticMap good(nv, {-1, -1, -1});
    ChromaticMap bad(nv, {+1, +1, +1});
    CHECK(map_satisfies_unanimity(good));
    CHECK_FALSE(map_satisfies_unanimity(bad));
}

TEST_CASE("dictators on tables") {
    auto a3 = xyz();
    Domain u = unrestricted(a3, 2);
    CHECK(dictators(SwfTable::projection(u, 0)) == std::vector<int>{1});
    CHECK(dictators(SwfTable::projection(u, 1)) == std::vector<int>{2});
    CHECK(dictators(SwfTable::constant(u, rk(a3, "xyz"))).empty());

    // both voters echoed on a single unanimous profile
    Domain single = dom(a3, 2, {{"xyz", "xyz"}});
    CHECK(dictators(SwfTable::constant(single, rk(a3, "xyz"))) == std::vector<int>{1, 2});

    // output matching neither voter
    Domain anti = dom(a3, 2, {{"xyz", "zyx"}});
    CHECK(dictators(SwfTable::constant(anti, rk(a3, "yxz"))).empty());
}

TEST_CASE("table-to-map direction") {
    auto a3 = xyz();
    Domain u = unrestricted(a3, 2);
    auto nv = nerve_of(u);

    ChromaticMap m1 = to_chromatic_map(SwfTable::projection(u, 0), nv);
    ChromaticMap m2 = to_chromatic_map(SwfTable::projection(u, 1), nv);
    for (int id = 0; id < nv->vertex_count(); ++id) {
        CHECK(m1.sign_at(id) == (nv->vertex(id).sigma.plus(0) ? +1 : -1));
        CHECK(m2.sign_at(id) == (nv->vertex(id).sigma.plus(1) ? +1 : -1));
    }

    Domain anti = dom(a3, 2, {{"xyz", "zyx"}});
    auto anv = nerve_of(anti);
    ChromaticMap mc = to_chromatic_map(SwfTable::constant(anti, rk(a3, "xyz")), anv);
    Ranking out = rk(a3, "xyz");
    for (int id = 0; id < anv->vertex_count(); ++id) {
        const Label& v = anv->vertex(id);
        CHECK(mc.sign_at(id) == (out.prefers(v.a, v.b) ? +1 : -1));
    }

    // IIA violation is a named precondition failure
    CHECK_THROWS_AS(to_chromatic_map(borda_voter1_ties(u), nv), PreconditionError);
}

TEST_CASE("sign_of negates non-canonical spellings") {
    auto a3 = xyz();
    Domain d = dom(a3, 2, {{"xyz", "zyx"}});
    auto nv = nerve_of(d);
    ChromaticMap f(nv, {+1, -1, +1});
    SignVector pm(0b01, 2);
    CHECK(f.sign_of(0, 1, pm) == +1);
    CHECK(f.sign_of(1, 0, pm.negated()) == -1); // same vertex, flipped orientation
    CHECK(f.sign_of(0, 1, SignVector::all_plus(2)) == 0); // not a vertex
}

TEST_CASE("map-to-table direction and the consistency witness") {
    auto a3 = xyz();
    Domain anti = dom(a3, 2, {{"xyz", "zyx"}});
    auto nv = nerve_of(anti);
    // vertices sorted: U[x,y][+-], U[x,z][+-], U[y,z][+-]
    ChromaticMap f(nv, {+1, +1, -1});
    SwfTable t = to_swf_table(f);
    CHECK(ranking_str(t.output(0), a3) == "x>z>y");
    CHECK(dictators(f).empty());

    // a cyclic image is rejected with the offending facet named
    Domain u = unrestricted(a3, 2);
    auto unv = nerve_of(u);
    std::vector<std::int8_t> signs(static_cast<size_t>(unv->vertex_count()), 0);
    // send every vertex on (x,y) and (y,z) to + and every (x,z) vertex to -
    for (int id = 0; id < unv->vertex_count(); ++id) {
        const Label& v = unv->vertex(id);
        signs[static_cast<size_t>(id)] = (v.a == 0 && v.b == 2) ? -1 : +1;
    }
    ChromaticMap cyc(unv, std::move(signs));
    CHECK_FALSE(is_simplicial(cyc));
    CHECK_THROWS_WITH_AS(to_swf_table(cyc), doctest::Contains("intransitive"),
                         PreconditionError);
}

TEST_CASE("is_simplicial") {
    auto a3 = xyz();
    Domain u = unrestricted(a3, 2);
    auto nv = nerve_of(u);
    // following one voter is always simplicial
    std::vector<std::int8_t> signs;
    for (const auto& v : nv->vertices())
        signs.push_back(v.sigma.plus(0) ? +1 : -1);
    CHECK(is_simplicial(ChromaticMap(nv, std::move(signs))));

    // m=2: facets are vertices, everything is simplicial
    AlternativeSet a2({"x", "y"});
    Domain d2 = unrestricted(a2, 2);
    auto nv2 = nerve_of(d2);
    for (std::uint32_t bits = 0; bits < (1u << nv2->vertex_count()); ++bits) {
        std::vector<std::int8_t> s;
        for (int i = 0; i < nv2->vertex_count(); ++i)
            s.push_back(((bits >> i) & 1u) ? +1 : -1);
        CHECK(is_simplicial(ChromaticMap(nv2, std::move(s))));
    }
}

TEST_CASE("bijection round trips on dictatorial tables") {
    auto a3 = xyz();
    Domain u = unrestricted(a3, 2);
    auto nv = nerve_of(u);
    for (int voter : {0, 1}) {
        SwfTable F = SwfTable::projection(u, voter);
        ChromaticMap f = to_chromatic_map(F, nv);
        CHECK(to_swf_table(f) == F);
        CHECK(to_chromatic_map(to_swf_table(f), nv) == f);
    }
}

TEST_CASE("map/table predicate equivalence on an exhaustive tiny corpus") {
    auto a3 = xyz();
    // every table on a 2-profile domain, filtered to the IIA ones
    Domain d = dom(a3, 2, {{"xyz", "zxy"}, {"yzx", "yxz"}});
    auto nv = nerve_of(d);
    auto rs = enumerate_rankings(a3);
    int iia_count = 0;
    for (const auto& r1 : rs)
        for (const auto& r2 : rs) {
            SwfTable F(d, {r1, r2});
            if (!satisfies_iia(F))
                continue;
            ++iia_count;
            ChromaticMap f = to_chromatic_map(F, nv);
            CHECK(map_satisfies_unanimity(f) == satisfies_unanimity(F));
            CHECK(dictators(f) == dictators(F));
            CHECK(to_swf_table(f) == F);
            CHECK(to_chromatic_map(to_swf_table(f), nv) == f);
        }
    CHECK(iia_count > 0);
}
