#include "arrovian/decisive.hpp"

#include <algorithm>

namespace arrovian {

namespace {

std::string mask_str(std::uint32_t mask, int voters) {
    std::string out = "{";
    bool first = true;
    for (int i = 0; i < voters; ++i)
        if ((mask >> i) & 1u) {
            if (!first)
                out += ",";
            out += std::to_string(i + 1);
            first = false;
        }
    return out + "}";
}

} // namespace

CoalitionFamily::CoalitionFamily(int n, std::vector<std::uint32_t> ms)
    : voters(n), masks(std::move(ms)) {
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
}

bool CoalitionFamily::contains(std::uint32_t mask) const {
    return std::binary_search(masks.begin(), masks.end(), mask);
}

bool is_almost_decisive(const ChromaticMap& f, const Coalition& g, Alt a, Alt b) {
    std::int8_t s = f.sign_of(a, b, SignVector::for_coalition(g));
    return s == 0 || s == +1; // vacuous when the vertex is absent
}

bool is_almost_decisive(const ChromaticMap& f, const Coalition& g, std::span<const Alt> y) {
    for (Alt a : y)
        for (Alt b : y)
            if (a != b && !is_almost_decisive(f, g, a, b))
                return false;
    return true;
}

bool is_almost_decisive(const ChromaticMap& f, const Coalition& g) {
    const int m = f.nerve().alternatives().size();
    for (Alt a = 0; a < m; ++a)
        for (Alt b = 0; b < m; ++b)
            if (a != b && !is_almost_decisive(f, g, a, b))
                return false;
    return true;
}

CoalitionFamily almost_decisive_family(const ChromaticMap& f) {
    const int n = f.nerve().voters();
    std::vector<std::uint32_t> masks;
    for (std::uint32_t g = 0; g < (1u << n); ++g)
        if (is_almost_decisive(f, Coalition(g, n)))
            masks.push_back(g);
    return CoalitionFamily(n, std::move(masks));
}

std::string UltrafilterCheck::describe(int voters) const {
    switch (violated_property) {
    case 0:
        return "ultrafilter";
    case 1:
        return "property 1 fails: the empty set belongs to the family";
    case 2:
        return "property 2 fails at B=" + mask_str(witness_b, voters) + ": neither B nor B^c belongs";
    case 3:
        return "property 3 fails: " + mask_str(witness_b, voters) + " and " +
               mask_str(witness_b2, voters) + " belong but their intersection does not";
    default:
        return "unknown";
    }
}

UltrafilterCheck is_ultrafilter(const CoalitionFamily& fam, int voters) {
    if (voters < 1 || voters > 31)
        throw PreconditionError("ultrafilter check supports 1..31 voters");
    const std::uint32_t full = (1u << voters) - 1u;
    UltrafilterCheck out;
    if (fam.contains(0)) {
        out.violated_property = 1;
        return out;
    }
    for (std::uint32_t b = 0; b <= full; ++b)
        if (!fam.contains(b) && !fam.contains(~b & full)) {
            out.violated_property = 2;
            out.witness_b = b;
            return out;
        }
    for (std::uint32_t b : fam.masks)
        for (std::uint32_t b2 : fam.masks)
            if (!fam.contains(b & b2)) {
                out.violated_property = 3;
                out.witness_b = b;
                out.witness_b2 = b2;
                return out;
            }
    out.ok = true;
    return out;
}

int principal_element(const CoalitionFamily& fam, int voters) {
    auto check = is_ultrafilter(fam, voters);
    if (!check.ok)
        throw PreconditionError("family is not an ultrafilter: " + check.describe(voters));
    // the intersection of all members is the principal singleton
    std::uint32_t inter = (1u << voters) - 1u;
    for (std::uint32_t b : fam.masks)
        inter &= b;
    for (int i = 0; i < voters; ++i)
        if (inter == (1u << i))
            return i + 1;
    throw PreconditionError("family has no principal element"); // unreachable for ultrafilters
}

bool complement_sign_lemma_check(const ChromaticMap& f, const Coalition& g, Alt a, Alt b) {
    std::int8_t s = f.sign_of(a, b, SignVector::for_coalition(g.complement()));
    return s == 0 || s == -1;
}

bool is_decisive(const ChromaticMap& f, const Coalition& g, Alt a, Alt b) {
    const int n = f.nerve().voters();
    for (std::uint32_t outside = 0; outside < (1u << n); ++outside) {
        if (outside & g.mask)
            continue; // only vary voters outside G
        SignVector sigma(g.mask | outside, n);
        std::int8_t s = f.sign_of(a, b, sigma);
        if (s == -1)
            return false;
    }
    return true;
}

std::vector<CoalitionFamily> enumerate_ultrafilters(int voters) {
    if (voters < 1 || voters > 4)
        throw PreconditionError("exhaustive family enumeration supports 1..4 voters");
    const int subsets = 1 << voters;
    std::vector<CoalitionFamily> out;
    for (std::uint64_t fam_bits = 0; fam_bits < (1ull << subsets); ++fam_bits) {
        std::vector<std::uint32_t> masks;
        for (int b = 0; b < subsets; ++b)
            if ((fam_bits >> b) & 1ull)
                masks.push_back(static_cast<std::uint32_t>(b));
        if (masks.empty())
            continue; // an ultrafilter is a non-empty collection
        CoalitionFamily fam(voters, std::move(masks));
        if (is_ultrafilter(fam, voters).ok)
            out.push_back(std::move(fam));
    }
    return out;
}

} // namespace arrovian
