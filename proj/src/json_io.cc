#include <posetext/errors.hh>
#include <posetext/json_io.hh>

#include <fstream>
#include <sstream>

using std::string;
using std::vector;
namespace fs = std::filesystem;

namespace posetext
{
    namespace
    {
        auto parse_failure(const string & what) -> Error
        {
            return Error{ ErrorKind::parse_error, what };
        }

        auto labels_json(const Poset & p, const ElementSet & s) -> Json
        {
            Json out = Json::array();
            for (auto e : s)
                out.push_back(p.label(e));
            return out;
        }

        auto missing_name(MissingBound m) -> const char *
        {
            switch (m) {
                case MissingBound::sup:  return "sup";
                case MissingBound::inf:  return "inf";
                case MissingBound::none: break;
            }
            return "none";
        }

        auto lattice_witness(const Poset & p, const LatticeCheck & c) -> Json
        {
            if (c.holds || ! c.witness)
                return nullptr;
            return Json{ { "missing", missing_name(c.missing) }, { "elements", labels_json(p, *c.witness) } };
        }

        auto betweenness_witness(const Poset & p, const BetweennessCheck & c) -> Json
        {
            if (c.holds)
                return nullptr;
            return Json{ { "lower", labels_json(p, *c.lower) }, { "upper", labels_json(p, *c.upper) } };
        }
    }

    auto poset_from_json(const Json & doc) -> Poset
    {
        if (! doc.is_object())
            throw parse_failure("poset document must be an object");
        if (! doc.contains("elements") || ! doc["elements"].is_array())
            throw parse_failure("poset document needs an \"elements\" array");

        vector<string> labels;
        for (auto & e : doc["elements"]) {
            if (! e.is_string())
                throw parse_failure("element labels must be strings");
            labels.push_back(e.get<string>());
        }

        vector<LabelPair> covers;
        if (doc.contains("covers")) {
            if (! doc["covers"].is_array())
                throw parse_failure("\"covers\" must be an array");
            for (auto & c : doc["covers"]) {
                if (! c.is_array() || c.size() != 2 || ! c[0].is_string() || ! c[1].is_string())
                    throw parse_failure("each cover must be a pair of labels");
                covers.emplace_back(c[0].get<string>(), c[1].get<string>());
            }
        }
        return Poset::from_covers(std::move(labels), covers);
    }

    auto poset_to_json(const Poset & p) -> Json
    {
        Json covers = Json::array();
        for (auto [a, b] : p.covers())
            covers.push_back(Json::array({ p.label(a), p.label(b) }));
        return Json{ { "elements", p.labels() }, { "covers", covers } };
    }

    auto read_json_file(const fs::path & path) -> Json
    {
        std::ifstream in(path);
        if (! in)
            throw parse_failure("cannot open '" + path.string() + "'");
        std::stringstream buffer;
        buffer << in.rdbuf();
        try {
            return Json::parse(buffer.str());
        }
        catch (const nlohmann::json::parse_error & e) {
            throw parse_failure(path.string() + ": " + e.what());
        }
    }

    auto read_poset_file(const fs::path & path) -> Poset
    {
        return poset_from_json(read_json_file(path));
    }

    auto poset_from_reference(const Json & ref, const fs::path & base_dir) -> Poset
    {
        if (ref.is_string())
            return read_poset_file(base_dir / ref.get<string>());
        return poset_from_json(ref);
    }

    auto map_from_json(const Json & doc, const fs::path & base_dir) -> MapDocument
    {
        if (! doc.is_object())
            throw parse_failure("map document must be an object");
        for (auto key : { "domain", "codomain", "map" })
            if (! doc.contains(key))
                throw parse_failure(string{ "map document needs a \"" } + key + "\" field");
        if (! doc["map"].is_object())
            throw parse_failure("\"map\" must be an object from domain labels to codomain labels");

        auto domain = share(poset_from_reference(doc["domain"], base_dir));
        auto codomain = share(poset_from_reference(doc["codomain"], base_dir));

        vector<LabelPair> pairs;
        for (auto & [k, v] : doc["map"].items()) {
            if (! v.is_string())
                throw parse_failure("map values must be codomain labels");
            pairs.emplace_back(k, v.get<string>());
        }
        return MapDocument{ MonotoneMap::from_labels(domain, codomain, pairs), doc["domain"], doc["codomain"] };
    }

    auto assignment_to_json(const MonotoneMap & f) -> Json
    {
        Json out = Json::object();
        for (Element x = 0 ; x < f.domain().size() ; ++x)
            if (f.defined(x))
                out[f.domain().label(x)] = f.codomain().label(f[x]);
        return out;
    }

    auto map_to_json(const MonotoneMap & f, const Json & domain_ref, const Json & codomain_ref) -> Json
    {
        return Json{ { "domain", domain_ref }, { "codomain", codomain_ref }, { "map", assignment_to_json(f) } };
    }

    auto map_to_json(const MonotoneMap & f) -> Json
    {
        return map_to_json(f, poset_to_json(f.domain()), poset_to_json(f.codomain()));
    }

    auto report_to_json(const Poset & p, const ClassificationReport & r) -> Json
    {
        Json components = Json::array();
        for (auto & c : r.components)
            components.push_back(labels_json(p, c));

        Json z = nullptr;
        if (r.z_embedding) {
            z = Json::object();
            for (Element x = 0 ; x < p.size() ; ++x)
                z[p.label(x)] = (*r.z_embedding)[x];
        }

        Json local = nullptr;
        if (! r.local_complete_lattice) {
            auto [lo, hi] = *r.local_complete_lattice_check.interval;
            local = lattice_witness(p, r.local_complete_lattice_check.failure);
            local["interval"] = Json::array({ p.label(lo), p.label(hi) });
        }

        return Json{
            { "size", r.size },
            { "chain", r.chain },
            { "lattice", r.lattice },
            { "complete_lattice", r.complete_lattice },
            { "quasilattice", r.quasilattice },
            { "local_complete_lattice", r.local_complete_lattice },
            { "local_quasilattice", r.local_quasilattice },
            { "z_embeddable", r.z_embeddable },
            { "components", components },
            { "z_embedding", z },
            { "witnesses", {
                { "lattice", lattice_witness(p, r.lattice_check) },
                { "quasilattice", betweenness_witness(p, r.quasilattice_check) },
                { "local_complete_lattice", local },
                { "local_quasilattice", betweenness_witness(p, r.local_quasilattice_check) } } }
        };
    }

    auto family_to_json(const ExtensionFamily & family) -> Json
    {
        Json members = Json::array();
        for (std::size_t i = 0 ; i < family.size() ; ++i)
            members.push_back(assignment_to_json(family.member(i)));

        auto bottom = family.bottom(), top = family.top();
        bool lattice = ! family.empty() && is_lattice(family.as_poset()).holds;
        return Json{
            { "size", family.size() },
            { "lattice", lattice },
            { "bottom", bottom ? assignment_to_json(family.member(*bottom)) : Json(nullptr) },
            { "top", top ? assignment_to_json(family.member(*top)) : Json(nullptr) },
            { "members", members }
        };
    }
}
