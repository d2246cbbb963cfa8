#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "arrovian/swf.hpp"

namespace arrovian {

/// A set of coalitions over the voters 1..n, as sorted coalition bitmasks.
/// Ultrafilter properties are checked, not enforced.
struct CoalitionFamily {
    int voters = 0;
    std::vector<std::uint32_t> masks; // sorted, unique

    CoalitionFamily() = default;
    CoalitionFamily(int n, std::vector<std::uint32_t> ms);

    bool contains(std::uint32_t mask) const;
    int size() const { return static_cast<int>(masks.size()); }
    bool operator==(const CoalitionFamily& o) const = default;
};

/// G is almost-decisive over the ordered pair (a,b) w.r.t. f: the vertex
/// U_ab^{sigma^G} maps to U_ab^+ whenever it exists (vacuously true when it
/// does not).
bool is_almost_decisive(const ChromaticMap& f, const Coalition& g, Alt a, Alt b);
/// ... over every ordered pair from Y.
bool is_almost_decisive(const ChromaticMap& f, const Coalition& g, std::span<const Alt> y);
/// ... over every ordered pair of alternatives (Y = X).
bool is_almost_decisive(const ChromaticMap& f, const Coalition& g);

/// All 2^n coalitions that are almost-decisive (over X) w.r.t. f.
CoalitionFamily almost_decisive_family(const ChromaticMap& f);

/// Outcome of the three-property ultrafilter check. violated_property is 0
/// when all hold, otherwise the first failing property (1: empty set
/// excluded, 2: B or B^c present, 3: closed under intersection) with the
/// witnessing set(s).
struct UltrafilterCheck {
    bool ok = false;
    int violated_property = 0;
    std::uint32_t witness_b = 0;
    std::uint32_t witness_b2 = 0;

    std::string describe(int voters) const;
};

UltrafilterCheck is_ultrafilter(const CoalitionFamily& fam, int voters);

/// The unique voter d with fam = {B : d in B}; requires an ultrafilter.
int principal_element(const CoalitionFamily& fam, int voters); // 1-based

/// The complement-side consequence of almost-decisiveness: when G is
/// almost-decisive over some Y containing {a,b}, the vertex
/// U_ab^{sigma^{G^c}} must map to U_ab^-. True also when the vertex is
/// absent (vacuous).
bool complement_sign_lemma_check(const ChromaticMap& f, const Coalition& g, Alt a, Alt b);

/// Decisiveness proper (G forces a over b regardless of G^c): every vertex
/// U_ab^{sigma} with sigma_+ on all of G maps to +. Hook only; the formal
/// development never uses it.
bool is_decisive(const ChromaticMap& f, const Coalition& g, Alt a, Alt b);

/// Exhaustive sweep over all 2^(2^n) families; n <= 4. Returns the
/// ultrafilters in ascending family order.
std::vector<CoalitionFamily> enumerate_ultrafilters(int voters);

} // namespace arrovian
