#include <doctest.h>

#include <algorithm>
#include <set>

#include "arrovian/preferences.hpp"
#include "test_util.hpp"

using namespace arrovian;
using namespace arrovian::test;

namespace {

// Independent oracle for value restriction: materialize the induced triple
// rankings and scan every (alternative, position) slot.
bool value_restricted_oracle(const Profile& p, const std::vector<Alt>& y) {
    const int k = static_cast<int>(y.size());
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            for (int l = j + 1; l < k; ++l) {
                std::vector<Alt> triple = {y[static_cast<size_t>(i)], y[static_cast<size_t>(j)],
                                           y[static_cast<size_t>(l)]};
                bool found = false;
                for (int slot = 0; slot < 9 && !found; ++slot) {
                    Alt who = triple[static_cast<size_t>(slot / 3)];
                    int pos = slot % 3;
                    bool ever = false;
                    for (const auto& r : p.rankings()) {
                        Ranking rr = restrict_ranking(r, triple);
                        int where = 0;
                        for (; where < 3; ++where)
                            if (triple[static_cast<size_t>(rr.at(where))] == who)
                                break;
                        if (where == pos) {
                            ever = true;
                            break;
                        }
                    }
                    if (!ever)
                        found = true;
                }
                if (!found)
                    return false;
            }
    return true;
}

} // namespace

TEST_CASE("enumerate_rankings counts and order") {
    AlternativeSet one({"x"});
    auto r1 = enumerate_rankings(one);
    CHECK(r1.size() == 1);

    auto a3 = xyz();
    auto r3 = enumerate_rankings(a3);
    REQUIRE(r3.size() == 6);
    // lexicographic by index: xyz, xzy, yxz, yzx, zxy, zyx
    CHECK(ranking_str(r3[0], a3) == "x>y>z");
    CHECK(ranking_str(r3[1], a3) == "x>z>y");
    CHECK(ranking_str(r3[3], a3) == "y>z>x");
    CHECK(ranking_str(r3[5], a3) == "z>y>x");

    auto a4 = wxyz();
    CHECK(enumerate_rankings(a4).size() == 24);
}

TEST_CASE("restrict_ranking") {
    auto a4 = wxyz();
    auto a3 = xyz();
    Ranking r = rk(a4, "wxyz");
    std::vector<Alt> y = {a4.index_of("x"), a4.index_of("y"), a4.index_of("z")};
    std::sort(y.begin(), y.end());
    Ranking restricted = restrict_ranking(r, y);
    CHECK(ranking_str(restricted, a3) == "x>y>z");

    // restriction to the full set is the identity
    Ranking full = rk(a3, "xyz");
    auto xs = all_alts(a3);
    CHECK(restrict_ranking(full, xs) == full);

    // (zyxw, {w,x}) -> xw
    Ranking r2 = rk(a4, "zyxw");
    std::vector<Alt> wx = {a4.index_of("w"), a4.index_of("x")};
    std::sort(wx.begin(), wx.end());
    Ranking rr = restrict_ranking(r2, wx);
    AlternativeSet sub = subset_alternatives(a4, wx);
    CHECK(ranking_str(rr, sub) == "x>w");

    CHECK_THROWS_AS(restrict_ranking(r2, std::vector<Alt>{}), PreconditionError);
    CHECK_THROWS_AS(restrict_ranking(full, std::vector<Alt>{0, 7}), PreconditionError);
}

TEST_CASE("restriction identity and composition properties") {
    auto a4 = wxyz();
    for (const auto& r : enumerate_rankings(a4)) {
        CHECK(restrict_ranking(r, all_alts(a4)) == r);
        // Z = {x,z} inside Y = {x,y,z}: restricting twice equals once
        std::vector<Alt> y = {1, 2, 3};
        std::vector<Alt> z_in_y = {0, 2};  // positions of {x,z} within Y's indexing
        std::vector<Alt> z = {1, 3};
        CHECK(restrict_ranking(restrict_ranking(r, y), z_in_y) == restrict_ranking(r, z));
    }
}

TEST_CASE("restrict_profile and restrict_domain") {
    auto a4 = wxyz();
    auto a3 = xyz();
    Profile p = prof(a4, {"wxyz", "xwzy"});
    std::vector<Alt> y = {1, 2, 3}; // x,y,z
    Profile sub = restrict_profile(p, y);
    CHECK(ranking_str(sub.ranking(0), a3) == "x>y>z");
    CHECK(ranking_str(sub.ranking(1), a3) == "x>z>y");

    // restriction is a set image: both profiles collapse to one
    Domain d = dom(a3, 2, {{"xyz", "xzy"}, {"xzy", "xzy"}});
    std::vector<Alt> xy = {0, 1};
    Domain rd = restrict_domain(d, xy);
    CHECK(rd.size() == 1);

    Domain same = restrict_domain(d, all_alts(a3));
    CHECK(same == d);
}

TEST_CASE("value restriction examples") {
    auto a3 = xyz();
    auto xs = all_alts(a3);
    CHECK_FALSE(is_value_restricted(prof(a3, {"xyz", "yzx", "zxy"}), xs)); // Condorcet cycle
    CHECK(is_value_restricted(prof(a3, {"xyz", "xzy"}), xs));              // x never bottom
    CHECK(is_value_restricted(prof(a3, {"xyz", "xyz", "xyz"}), xs));       // unanimous

    std::vector<Alt> pair = {0, 1};
    CHECK_THROWS_AS(is_value_restricted(prof(a3, {"xyz"}), pair), PreconditionError);
}

TEST_CASE("value restriction agrees with the brute-force oracle") {
    auto a4 = wxyz();
    auto xs4 = all_alts(a4);
    // all profiles with m=4 is 24^n; scan n=2 fully and a slice of n=3
    auto rs = enumerate_rankings(a4);
    for (const auto& r1 : rs)
        for (const auto& r2 : rs) {
            Profile p({r1, r2});
            CHECK(is_value_restricted(p, xs4) == value_restricted_oracle(p, xs4));
        }
    auto a3 = xyz();
    auto xs3 = all_alts(a3);
    auto rs3 = enumerate_rankings(a3);
    for (const auto& r1 : rs3)
        for (const auto& r2 : rs3)
            for (const auto& r3 : rs3) {
                Profile p({r1, r2, r3});
                CHECK(is_value_restricted(p, xs3) == value_restricted_oracle(p, xs3));
            }
    // the full m=4, n=3 space
    int mismatches = 0;
    for (const auto& r1 : rs)
        for (const auto& r2 : rs)
            for (const auto& r3 : rs) {
                Profile p({r1, r2, r3});
                if (is_value_restricted(p, xs4) != value_restricted_oracle(p, xs4))
                    ++mismatches;
            }
    CHECK(mismatches == 0);
}

TEST_CASE("pair_sign_vector") {
    auto a3 = xyz();
    Profile p = prof(a3, {"xyz", "zyx"});
    CHECK(pair_sign_vector(p, 0, 1).str() == "+-");
    CHECK(pair_sign_vector(p, 1, 0).str() == "-+");
    Profile u = prof(a3, {"xyz", "xyz"});
    CHECK(pair_sign_vector(u, 0, 2).str() == "++");
    CHECK_THROWS_AS(pair_sign_vector(p, 1, 1), PreconditionError);
}

TEST_CASE("pair sign negation property") {
    auto a3 = xyz();
    auto rs = enumerate_rankings(a3);
    for (const auto& r1 : rs)
        for (const auto& r2 : rs) {
            Profile p({r1, r2});
            for (Alt a = 0; a < 3; ++a)
                for (Alt b = 0; b < 3; ++b) {
                    if (a == b)
                        continue;
                    CHECK(pair_sign_vector(p, b, a) == pair_sign_vector(p, a, b).negated());
                }
        }
}

TEST_CASE("domain canonicalization") {
    auto a3 = xyz();
    Domain d = dom(a3, 2, {{"zyx", "xyz"}, {"xyz", "zyx"}, {"zyx", "xyz"}});
    CHECK(d.size() == 2); // deduplicated
    CHECK(std::is_sorted(d.profiles().begin(), d.profiles().end()));
    CHECK(d.contains(prof(a3, {"xyz", "zyx"})));
    CHECK_FALSE(d.contains(prof(a3, {"xyz", "xyz"})));
    CHECK_THROWS_AS(Domain(a3, 2, {}), PreconditionError);
}

TEST_CASE("sign vector ordering and rendering") {
    SignVector pp = SignVector::all_plus(2);
    SignVector pm(0b01, 2), mp(0b10, 2), mm = SignVector::all_minus(2);
    CHECK(pp.str() == "++");
    CHECK(pm.str() == "+-");
    CHECK(mp.str() == "-+");
    CHECK(pp < pm);
    CHECK(pm < mp);
    CHECK(mp < mm);
    CHECK(pm.negated() == mp);
    CHECK(SignVector::for_coalition(Coalition(0b01, 2)) == pm);
}

TEST_CASE("coalition helpers") {
    Coalition g(0b101, 3);
    CHECK(g.members() == std::vector<int>{1, 3});
    CHECK(g.complement().members() == std::vector<int>{2});
    CHECK(g.size() == 2);
    CHECK_FALSE(g.full());
    CHECK(Coalition(0b111, 3).full());
}
