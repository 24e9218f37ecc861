#ifndef POSETEXT_JSON_IO_HH
#define POSETEXT_JSON_IO_HH

#include <posetext/classify.hh>
#include <posetext/extension.hh>
#include <posetext/monotone_map.hh>

#include <json.hpp>

#include <filesystem>
#include <string>

// Document formats:
//
//   poset:  {"elements": ["a", "b", ...], "covers": [["a", "b"], ...]}
//   map:    {"domain": <poset or path>, "codomain": <poset or path>, "map": {"a": "y1", ...}}
//
// Paths inside a map document are resolved against the directory holding it.
// Covers on input may be redundant; on output they are the transitive reduction.

namespace posetext
{
    using Json = nlohmann::ordered_json;

    auto poset_from_json(const Json & doc) -> Poset;
    auto poset_to_json(const Poset & p) -> Json;

    auto read_json_file(const std::filesystem::path & path) -> Json;
    auto read_poset_file(const std::filesystem::path & path) -> Poset;

    /// A poset given either inline or as a path string relative to base_dir.
    auto poset_from_reference(const Json & ref, const std::filesystem::path & base_dir) -> Poset;

    struct MapDocument
    {
        MonotoneMap map;

        /// The domain and codomain fields exactly as given, for echoing back.
        Json domain_ref, codomain_ref;
    };

    auto map_from_json(const Json & doc, const std::filesystem::path & base_dir) -> MapDocument;

    /// {"a": "y1", ...} for the defined part, keys in domain order.
    auto assignment_to_json(const MonotoneMap & f) -> Json;

    auto map_to_json(const MonotoneMap & f, const Json & domain_ref, const Json & codomain_ref) -> Json;

    /// Inline domain and codomain documents.
    auto map_to_json(const MonotoneMap & f) -> Json;

    auto report_to_json(const Poset & p, const ClassificationReport & report) -> Json;

    auto family_to_json(const ExtensionFamily & family) -> Json;
}

#endif
