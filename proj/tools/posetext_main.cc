// posetext: command-line front end.
//
// Exit codes: 0 success or pass, 1 no extension or failed check, 2 bad input.
// Results go to stdout as JSON; diagnostics go to stderr.

#include <posetext/errors.hh>
#include <posetext/extension.hh>
#include <posetext/json_io.hh>
#include <posetext/oracle.hh>
#include <posetext/theorems.hh>

#include <CLI11.hpp>

#include <iostream>
#include <random>
#include <sstream>

namespace pt = posetext;
namespace fs = std::filesystem;

namespace
{
    enum Exit
    {
        ok = 0,
        negative = 1,
        bad_input = 2
    };

    void emit(const pt::Json & doc)
    {
        std::cout << doc.dump(2) << '\n';
    }

    auto split_labels(const std::string & text) -> std::vector<std::string>
    {
        std::vector<std::string> out;
        std::stringstream in(text);
        for (std::string item ; std::getline(in, item, ',') ;)
            if (! item.empty())
                out.push_back(item);
        return out;
    }

    struct MapArgs
    {
        std::string map_file;
        std::string domain_file;
        std::string codomain_file;

        void attach(CLI::App & cmd)
        {
            cmd.add_option("map", map_file, "map document")->required()->check(CLI::ExistingFile);
            cmd.add_option("--domain", domain_file, "poset file overriding the map's domain")->check(CLI::ExistingFile);
            cmd.add_option("--codomain", codomain_file, "poset file overriding the map's codomain")->check(CLI::ExistingFile);
        }

        auto load() const -> pt::MapDocument
        {
            auto doc = pt::read_json_file(map_file);
            if (doc.is_object()) {
                if (! domain_file.empty())
                    doc["domain"] = fs::absolute(domain_file).string();
                if (! codomain_file.empty())
                    doc["codomain"] = fs::absolute(codomain_file).string();
            }
            return pt::map_from_json(doc, fs::path(map_file).parent_path());
        }
    };

    auto run_classify(const std::string & file) -> int
    {
        auto p = pt::read_poset_file(file);
        emit(pt::report_to_json(p, pt::classify(p)));
        return ok;
    }

    auto run_extend(const MapArgs & args, const std::string & mode, const std::string & order) -> int
    {
        auto doc = args.load();
        auto & f = doc.map;

        std::optional<pt::MonotoneMap> g;
        if (mode == "lower")
            g = pt::lower_extension(f);
        else if (mode == "upper")
            g = pt::upper_extension(f);
        else if (mode == "any")
            g = pt::extend_exists(f);
        else if (mode == "extremes")
            g = pt::extend_preserving_extremes(f);
        else if (order.empty())
            g = pt::extend_greedy(f);
        else {
            std::vector<pt::Element> sequence;
            for (auto & label : split_labels(order))
                sequence.push_back(f.domain().index_of(label));
            g = pt::extend_greedy(f, std::span<const pt::Element>(sequence));
        }

        if (! g) {
            emit("none");
            return negative;
        }
        emit(pt::map_to_json(*g, doc.domain_ref, doc.codomain_ref));
        return ok;
    }

    auto run_enumerate(const MapArgs & args, std::size_t cap) -> int
    {
        auto doc = args.load();
        emit(pt::family_to_json(pt::enumerate_extensions(doc.map, cap)));
        return ok;
    }

    auto run_verify(const std::string & id, std::optional<std::size_t> max_size, std::optional<std::uint64_t> cap) -> int
    {
        auto caps = pt::oracle::default_caps(id);
        if (max_size)
            caps.domain_size = caps.codomain_size = *max_size;
        if (cap)
            caps.instance_cap = *cap;
        auto result = pt::oracle::check_theorem(id, caps);
        emit(pt::oracle::result_to_json(result));
        return result.pass ? ok : negative;
    }

    auto run_gen(std::size_t n, std::size_t count, std::uint64_t seed, const std::string & mode) -> int
    {
        namespace oc = pt::oracle;
        auto line = [] (const pt::Poset & p) { std::cout << pt::poset_to_json(p).dump() << '\n'; };

        if (mode == "random") {
            std::mt19937_64 rng(seed);
            for (std::size_t i = 0 ; i < count ; ++i)
                line(oc::random_poset(n, rng));
            return ok;
        }

        auto labeled = mode == "exhaustive";
        auto cap = labeled ? oc::labeled_cap : oc::isomorphism_cap;
        if (n > cap)
            throw pt::Error{ pt::ErrorKind::cap_exceeded,
                "exhaustive generation is limited to " + std::to_string(cap) + " elements" };
        oc::for_each_poset(n, labeled ? oc::PosetMode::labeled : oc::PosetMode::up_to_isomorphism,
            [&] (const pt::Poset & p) {
                line(p);
                return true;
            });
        return ok;
    }
}

auto main(int argc, char ** argv) -> int
{
    CLI::App app{ "Finite posets: classification, isotone extension and exhaustive checks" };
    app.require_subcommand(1);

    std::string classify_file;
    auto classify = app.add_subcommand("classify", "classify a poset document");
    classify->add_option("file", classify_file, "poset document")->required()->check(CLI::ExistingFile);

    MapArgs extend_args;
    std::string mode = "any", order;
    auto extend = app.add_subcommand("extend", "extend a partial isotone map to its whole domain");
    extend_args.attach(*extend);
    extend->add_option("--mode", mode, "lower, upper, greedy, any or extremes")
        ->check(CLI::IsMember({ "lower", "upper", "greedy", "any", "extremes" }));
    extend->add_option("--order", order, "comma-separated processing order for greedy");

    MapArgs enumerate_args;
    std::size_t family_cap = pt::default_family_cap;
    auto enumerate = app.add_subcommand("enumerate", "list every isotone extension");
    enumerate_args.attach(*enumerate);
    enumerate->add_option("--cap", family_cap, "bound on candidate assignments");

    std::string theorem;
    std::optional<std::size_t> max_size;
    std::optional<std::uint64_t> instance_cap;
    auto verify = app.add_subcommand("verify", "check a registered statement exhaustively");
    verify->add_option("--theorem", theorem, "registry id")->required();
    verify->add_option("--max-size", max_size, "size bound for both domain and codomain");
    verify->add_option("--cap", instance_cap, "bound on examined instances");

    std::size_t n = 3, count = 1;
    std::uint64_t seed = 0;
    std::string gen_mode = "random";
    auto gen = app.add_subcommand("gen", "generate posets, one JSON document per line");
    gen->add_option("--n", n, "number of elements")->required();
    gen->add_option("--count", count, "number of random posets");
    gen->add_option("--seed", seed, "random seed");
    gen->add_option("--mode", gen_mode, "random, exhaustive (labeled) or canonical (up to isomorphism)")
        ->check(CLI::IsMember({ "random", "exhaustive", "canonical" }));

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        return app.exit(e) == 0 ? ok : bad_input;
    }

    try {
        if (*classify)
            return run_classify(classify_file);
        if (*extend)
            return run_extend(extend_args, mode, order);
        if (*enumerate)
            return run_enumerate(enumerate_args, family_cap);
        if (*verify)
            return run_verify(theorem, max_size, instance_cap);
        return run_gen(n, count, seed, gen_mode);
    }
    catch (const pt::Error & e) {
        std::cerr << "error: " << e.what() << '\n';
        return bad_input;
    }
}
