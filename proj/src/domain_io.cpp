#include "arrovian/domain_io.hpp"

#include <fstream>
#include <optional>
#include <set>
#include <sstream>

namespace arrovian {

namespace {

std::string strip_comment(std::string_view line) {
    size_t hash = line.find('#');
    std::string out(line.substr(0, hash));
    return out;
}

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok)
        out.push_back(tok);
    return out;
}

} // namespace

ParsedDomain parse_domain(std::string_view text) {
    std::optional<AlternativeSet> alts;
    std::optional<int> voters;
    std::vector<Profile> profiles;
    std::set<Profile> seen;
    std::vector<std::string> warnings;

    int lineno = 0;
    size_t start = 0;
    while (start <= text.size()) {
        size_t nl = text.find('\n', start);
        std::string_view raw = text.substr(start, nl == std::string_view::npos ? nl : nl - start);
        ++lineno;
        std::string line = strip_comment(raw);
        auto toks = tokens(line);
        if (!toks.empty()) {
            if (toks[0] == "alternatives:") {
                if (alts)
                    throw ParseError("duplicate alternatives header", lineno);
                if (toks.size() < 2)
                    throw ParseError("alternatives header needs at least one name", lineno);
                try {
                    alts.emplace(std::vector<std::string>(toks.begin() + 1, toks.end()));
                } catch (const PreconditionError& e) {
                    throw ParseError(e.what(), lineno);
                }
            } else if (toks[0] == "voters:") {
                if (voters)
                    throw ParseError("duplicate voters header", lineno);
                if (toks.size() != 2)
                    throw ParseError("voters header needs exactly one count", lineno);
                try {
                    voters = std::stoi(toks[1]);
                } catch (...) {
                    throw ParseError("voters count is not a number", lineno);
                }
                if (*voters < 1 || *voters > 31)
                    throw ParseError("voters count must be between 1 and 31", lineno);
            } else {
                if (!alts || !voters)
                    throw ParseError("profile line before the alternatives/voters headers", lineno);
                if (static_cast<int>(toks.size()) != *voters)
                    throw ParseError("expected " + std::to_string(*voters) + " rankings, found " +
                                         std::to_string(toks.size()),
                                     lineno);
                std::vector<Ranking> rs;
                rs.reserve(toks.size());
                for (const auto& t : toks) {
                    try {
                        rs.push_back(ranking_from_str(t, *alts));
                    } catch (const ParseError& e) {
                        throw ParseError(e.what(), lineno);
                    }
                }
                Profile p(std::move(rs));
                if (seen.insert(p).second)
                    profiles.push_back(std::move(p));
                else
                    warnings.push_back("line " + std::to_string(lineno) +
                                       ": duplicate profile ignored");
            }
        }
        if (nl == std::string_view::npos)
            break;
        start = nl + 1;
    }

    if (!alts)
        throw ParseError("missing alternatives header");
    if (!voters)
        throw ParseError("missing voters header");
    if (profiles.empty())
        throw ParseError("domain file has no profiles");
    return ParsedDomain{Domain(*alts, *voters, std::move(profiles)), std::move(warnings)};
}

std::string serialize_domain(const Domain& d) {
    std::ostringstream out;
    out << "alternatives:";
    for (const auto& n : d.alternatives().names())
        out << ' ' << n;
    out << "\nvoters: " << d.voters() << '\n';
    for (const auto& p : d.profiles())
        out << profile_str(p, d.alternatives()) << '\n';
    return out.str();
}

ParsedDomain load_domain_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_domain(buf.str());
}

void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ParseError("cannot write file: " + path);
    out << content;
}

} // namespace arrovian
