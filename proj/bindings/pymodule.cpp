#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "arrovian/domain_io.hpp"
#include "arrovian/report.hpp"
#include "arrovian/seedstream.hpp"

namespace py = pybind11;
using namespace arrovian;

namespace {

py::object json_to_py(const Json& j) {
    switch (j.type()) {
    case nlohmann::detail::value_t::null:
        return py::none();
    case nlohmann::detail::value_t::boolean:
        return py::bool_(j.get<bool>());
    case nlohmann::detail::value_t::number_integer:
        return py::int_(j.get<long long>());
    case nlohmann::detail::value_t::number_unsigned:
        return py::int_(j.get<unsigned long long>());
    case nlohmann::detail::value_t::number_float:
        return py::float_(j.get<double>());
    case nlohmann::detail::value_t::string:
        return py::str(j.get<std::string>());
    case nlohmann::detail::value_t::array: {
        py::list out;
        for (const auto& item : j)
            out.append(json_to_py(item));
        return out;
    }
    case nlohmann::detail::value_t::object: {
        py::dict out;
        for (auto it = j.begin(); it != j.end(); ++it)
            out[py::str(it.key())] = json_to_py(it.value());
        return out;
    }
    default:
        return py::none();
    }
}

Domain make_domain(const std::vector<std::string>& names, int voters,
                   const std::vector<std::vector<std::string>>& profiles) {
    AlternativeSet alts(names);
    std::vector<Profile> ps;
    for (const auto& prof : profiles) {
        std::vector<Ranking> rs;
        for (const auto& text : prof)
            rs.push_back(ranking_from_str(text, alts));
        ps.push_back(Profile(std::move(rs)));
    }
    return Domain(std::move(alts), voters, std::move(ps));
}

std::vector<std::vector<std::string>> domain_profiles(const Domain& d) {
    std::vector<std::vector<std::string>> out;
    for (const auto& p : d.profiles()) {
        std::vector<std::string> row;
        for (const auto& r : p.rankings())
            row.push_back(ranking_str(r, d.alternatives()));
        out.push_back(std::move(row));
    }
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "nerve complexes, chromatic map enumeration and Arrow verdicts";
    m.attr("__version__") = std::string(kToolVersion);

    py::register_exception<ParseError>(m, "DomainParseError", PyExc_ValueError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);

    py::class_<Domain>(m, "Domain")
        .def(py::init(&make_domain), py::arg("alternatives"), py::arg("voters"),
             py::arg("profiles"))
        .def_property_readonly("alternatives",
                               [](const Domain& d) { return d.alternatives().names(); })
        .def_property_readonly("voters", &Domain::voters)
        .def_property_readonly("profiles", &domain_profiles)
        .def("__len__", &Domain::size)
        .def("__eq__", [](const Domain& a, const Domain& b) { return a == b; })
        .def("__repr__", [](const Domain& d) {
            return "<Domain m=" + std::to_string(d.alternatives().size()) + " n=" +
                   std::to_string(d.voters()) + " profiles=" + std::to_string(d.size()) + ">";
        });

    py::class_<Nerve, std::shared_ptr<Nerve>>(m, "Nerve")
        .def_property_readonly("vertex_count", &Nerve::vertex_count)
        .def_property_readonly("facet_count", &Nerve::facet_count)
        .def_property_readonly("dimension", &Nerve::dimension)
        .def_property_readonly("vertex_names",
                               [](const Nerve& nv) {
                                   std::vector<std::string> out;
                                   for (const auto& u : nv.vertices())
                                       out.push_back(vertex_name(u, nv.alternatives()));
                                   return out;
                               })
        .def("skeleton_counts",
             [](const Nerve& nv, int l) {
                 std::vector<int> counts(static_cast<size_t>(l) + 1, 0);
                 nv.for_each_simplex(
                     l, [&](std::span<const int> s) { ++counts[s.size() - 1]; });
                 return counts;
             },
             py::arg("l"))
        .def("to_dot", [](const Nerve& nv) { return to_dot(nv); });

    m.def("parse_domain", [](const std::string& text) { return parse_domain(text).domain; },
          py::arg("text"));
    m.def("serialize_domain", &serialize_domain, py::arg("domain"));
    m.def("enumerate_rankings", [](const std::vector<std::string>& names) {
        AlternativeSet alts(names);
        std::vector<std::string> out;
        for (const auto& r : enumerate_rankings(alts))
            out.push_back(ranking_str(r, alts));
        return out;
    });
    m.def("build_nerve", [](const Domain& d) { return std::make_shared<Nerve>(d); });
    m.def("social_nerve_counts", [](const std::vector<std::string>& names) {
        SocialNerve nv((AlternativeSet(names)));
        py::dict out;
        out["vertices"] = nv.vertex_count();
        out["facets"] = nv.facet_count();
        out["dimension"] = nv.dimension();
        out["pure"] = nv.is_pure();
        return out;
    });
    m.def(
        "enumerate_maps",
        [](const Domain& d, int threads) {
            auto nerve = std::make_shared<const Nerve>(d);
            auto maps = enumerate_unanimous_maps(nerve, nullptr, threads);
            py::list out;
            for (const auto& map : maps)
                out.append(json_to_py(json_map(map, false)));
            return out;
        },
        py::arg("domain"), py::arg("threads") = 1);
    m.def(
        "arrow_verdict",
        [](const Domain& d, int threads) {
            auto v = arrow_verdict(d, threads);
            return json_to_py(json_verdict(v, d, false));
        },
        py::arg("domain"), py::arg("threads") = 1);
    m.def(
        "check_domain",
        [](const Domain& d, const std::string& cls) {
            Json result;
            if (cls == "nx") {
                result["verdict"] = in_nx_class(d) ? "member" : "non-member";
            } else if (cls == "pt" || cls == "dt" || cls == "ptdt") {
                bool member = true;
                if (cls != "dt") {
                    auto cert = in_pt(d);
                    member = member && cert.member;
                    result["pt"] = json_certificate(cert, d.alternatives());
                }
                if (cls != "pt") {
                    auto cert = in_dt(d);
                    member = member && cert.member;
                    result["dt"] = json_certificate(cert, d.alternatives());
                }
                result["verdict"] = member ? "member" : "non-member";
            } else {
                throw PreconditionError("unknown class: " + cls);
            }
            return json_to_py(result);
        },
        py::arg("domain"), py::arg("cls"));
    m.def(
        "gen_domain",
        [](const std::vector<std::string>& names, int voters, std::uint64_t seed) {
            AlternativeSet alts(names);
            SeedBits bits(seed);
            return gen_ptdt_domain(alts, voters, bits);
        },
        py::arg("alternatives"), py::arg("voters"), py::arg("seed"));
    m.def(
        "audit",
        [](const Domain& d, int threads) {
            auto nerve = std::make_shared<const Nerve>(d);
            auto maps = enumerate_unanimous_maps(nerve, nullptr, threads);
            return json_to_py(json_audit(audit_lemmas(d, nerve, maps)));
        },
        py::arg("domain"), py::arg("threads") = 1);
    m.def(
        "probe_super",
        [](const Domain& d, int add, std::uint64_t trials, std::uint64_t seed) {
            return json_to_py(json_probe(super_arrovian_probe(d, add, trials, seed)));
        },
        py::arg("domain"), py::arg("add"), py::arg("trials"), py::arg("seed") = 0);
    m.def("ultrafilters", [](int voters) {
        py::list out;
        for (const auto& fam : enumerate_ultrafilters(voters)) {
            py::dict jf;
            jf["principal"] = principal_element(fam, voters);
            py::list members;
            for (auto mask : fam.masks)
                members.append(Coalition(mask, voters).members());
            jf["family"] = members;
            out.append(jf);
        }
        return out;
    });
    m.def("splitmix64", [](std::uint64_t seed, int count) {
        SplitMix64 rng(seed);
        std::vector<std::uint64_t> out;
        for (int i = 0; i < count; ++i)
            out.push_back(rng.next());
        return out;
    });
    m.def("is_value_restricted", [](const Domain& d, int profile_index) {
        std::vector<Alt> xs(static_cast<size_t>(d.alternatives().size()));
        for (size_t i = 0; i < xs.size(); ++i)
            xs[i] = static_cast<Alt>(i);
        return is_value_restricted(d.profile(profile_index), xs);
    });
}
