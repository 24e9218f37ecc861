#include <posetext/classify.hh>
#include <posetext/errors.hh>
#include <posetext/extension.hh>
#include <posetext/json_io.hh>
#include <posetext/oracle.hh>
#include <posetext/theorems.hh>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
namespace pt = posetext;

namespace
{
    // Documents cross the boundary as JSON text; the Python side decodes them.

    auto parse(const std::string & text) -> pt::Json
    {
        try {
            return pt::Json::parse(text);
        }
        catch (const nlohmann::json::parse_error & e) {
            throw pt::Error{ pt::ErrorKind::parse_error, e.what() };
        }
    }

    auto poset(const std::string & doc) -> pt::Poset
    {
        return pt::poset_from_json(parse(doc));
    }

    auto classify_json(const std::string & doc) -> std::string
    {
        auto p = poset(doc);
        return pt::report_to_json(p, pt::classify(p)).dump();
    }

    auto extend_json(const std::string & doc, const std::string & mode, const std::string & base_dir)
        -> std::optional<std::string>
    {
        auto m = pt::map_from_json(parse(doc), base_dir);
        std::optional<pt::MonotoneMap> g;
        if (mode == "lower")
            g = pt::lower_extension(m.map);
        else if (mode == "upper")
            g = pt::upper_extension(m.map);
        else if (mode == "greedy")
            g = pt::extend_greedy(m.map);
        else if (mode == "any")
            g = pt::extend_exists(m.map);
        else if (mode == "extremes")
            g = pt::extend_preserving_extremes(m.map);
        else
            throw pt::Error{ pt::ErrorKind::invalid_argument, "unknown mode '" + mode + "'" };
        if (! g)
            return std::nullopt;
        return pt::map_to_json(*g, m.domain_ref, m.codomain_ref).dump();
    }

    auto enumerate_json(const std::string & doc, const std::string & base_dir, std::size_t cap) -> std::string
    {
        auto m = pt::map_from_json(parse(doc), base_dir);
        return pt::family_to_json(pt::enumerate_extensions(m.map, cap)).dump();
    }

    auto verify_json(const std::string & id, std::optional<std::size_t> max_size, std::optional<std::uint64_t> cap)
        -> std::string
    {
        auto caps = pt::oracle::default_caps(id);
        if (max_size)
            caps.domain_size = caps.codomain_size = *max_size;
        if (cap)
            caps.instance_cap = *cap;
        return pt::oracle::result_to_json(pt::oracle::check_theorem(id, caps)).dump();
    }

    auto count_posets(std::size_t n, bool labeled) -> std::size_t
    {
        std::size_t count = 0;
        pt::oracle::for_each_poset(n, labeled ? pt::oracle::PosetMode::labeled : pt::oracle::PosetMode::up_to_isomorphism,
            [&] (const pt::Poset &) {
                ++count;
                return true;
            });
        return count;
    }

    auto generate(std::size_t n, bool labeled) -> std::vector<std::string>
    {
        std::vector<std::string> out;
        pt::oracle::for_each_poset(n, labeled ? pt::oracle::PosetMode::labeled : pt::oracle::PosetMode::up_to_isomorphism,
            [&] (const pt::Poset & p) {
                out.push_back(pt::poset_to_json(p).dump());
                return true;
            });
        return out;
    }

    auto normalise(const std::string & doc) -> std::string
    {
        return pt::poset_to_json(poset(doc)).dump();
    }
}

PYBIND11_MODULE(_posetext, m)
{
    m.doc() = "Finite posets and isotone map extension";

    auto error = py::register_exception<pt::Error>(m, "PosetError", PyExc_ValueError);
    (void) error;

    m.def("classify", &classify_json, py::arg("poset"));
    m.def("normalise", &normalise, py::arg("poset"), "Poset document with covers reduced.");
    m.def("extend", &extend_json, py::arg("map"), py::arg("mode"), py::arg("base_dir") = ".");
    m.def("enumerate", &enumerate_json, py::arg("map"), py::arg("base_dir") = ".",
        py::arg("cap") = pt::default_family_cap);
    m.def("verify", &verify_json, py::arg("theorem"), py::arg("max_size") = py::none(), py::arg("cap") = py::none());
    m.def("theorem_ids", &pt::oracle::theorem_ids);
    m.def("count_posets", &count_posets, py::arg("n"), py::arg("labeled") = true);
    m.def("generate", &generate, py::arg("n"), py::arg("labeled") = true);
}
