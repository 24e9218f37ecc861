#ifndef POSETEXT_TESTS_BRUTE_HH
#define POSETEXT_TESTS_BRUTE_HH

// Definitions straight from the order relation, used to cross-check the
// bitset implementations. Deliberately naive.

#include <posetext/errors.hh>
#include <posetext/json_io.hh>
#include <posetext/oracle.hh>

#include <optional>
#include <random>
#include <string>
#include <vector>

namespace brute
{
    using posetext::Element;
    using posetext::ElementSet;
    using posetext::Poset;

    template <class F>
    auto error_kind(F && f) -> std::optional<posetext::ErrorKind>
    {
        try {
            f();
        }
        catch (const posetext::Error & e) {
            return e.kind();
        }
        return std::nullopt;
    }

    inline auto minorants(const Poset & p, const ElementSet & s) -> std::vector<Element>
    {
        std::vector<Element> out;
        for (Element y = 0 ; y < p.size() ; ++y) {
            bool ok = true;
            for (auto a : s.members())
                ok = ok && p.leq(y, a);
            if (ok)
                out.push_back(y);
        }
        return out;
    }

    inline auto majorants(const Poset & p, const ElementSet & s) -> std::vector<Element>
    {
        std::vector<Element> out;
        for (Element y = 0 ; y < p.size() ; ++y) {
            bool ok = true;
            for (auto a : s.members())
                ok = ok && p.leq(a, y);
            if (ok)
                out.push_back(y);
        }
        return out;
    }

    inline auto least_in(const Poset & p, const std::vector<Element> & xs) -> std::optional<Element>
    {
        for (auto c : xs) {
            bool ok = true;
            for (auto d : xs)
                ok = ok && p.leq(c, d);
            if (ok)
                return c;
        }
        return std::nullopt;
    }

    inline auto greatest_in(const Poset & p, const std::vector<Element> & xs) -> std::optional<Element>
    {
        for (auto c : xs) {
            bool ok = true;
            for (auto d : xs)
                ok = ok && p.leq(d, c);
            if (ok)
                return c;
        }
        return std::nullopt;
    }

    inline auto sup(const Poset & p, const ElementSet & s) -> std::optional<Element>
    {
        return least_in(p, majorants(p, s));
    }

    inline auto inf(const Poset & p, const ElementSet & s) -> std::optional<Element>
    {
        return greatest_in(p, minorants(p, s));
    }

    inline auto isotone(const Poset & x, const Poset & y, const std::vector<Element> & f) -> bool
    {
        for (Element a = 0 ; a < x.size() ; ++a)
            for (Element b = 0 ; b < x.size() ; ++b)
                if (f[a] != posetext::no_element && f[b] != posetext::no_element && x.leq(a, b) && ! y.leq(f[a], f[b]))
                    return false;
        return true;
    }

    /// Every nonempty subset has both bounds.
    inline auto complete_lattice(const Poset & p) -> bool
    {
        if (p.empty())
            return false;
        for (std::uint64_t m = 1 ; m < (std::uint64_t{ 1 } << p.size()) ; ++m) {
            auto s = ElementSet::from_mask(p.size(), m);
            if (! sup(p, s) || ! inf(p, s))
                return false;
        }
        return true;
    }

    inline auto chain(std::size_t n) -> Poset
    {
        std::vector<posetext::ElementPair> pairs;
        for (Element i = 0 ; i + 1 < n ; ++i)
            pairs.emplace_back(i, i + 1);
        return Poset::from_pairs(posetext::oracle::default_labels(n), pairs);
    }

    inline auto antichain(std::size_t n) -> Poset
    {
        return Poset::from_pairs(posetext::oracle::default_labels(n), {});
    }

    inline auto fixture(const std::string & name) -> Poset
    {
        return posetext::read_poset_file(std::string{ POSETEXT_FIXTURES } + "/" + name + ".json");
    }

    inline auto fixture_map(const std::string & name) -> posetext::MapDocument
    {
        std::filesystem::path dir{ POSETEXT_FIXTURES };
        return posetext::map_from_json(posetext::read_json_file(dir / (name + ".json")), dir);
    }

    /// Uniform random partial map that is isotone on its domain of definition.
    inline auto random_partial_map(const posetext::PosetPtr & x, const posetext::PosetPtr & y, std::mt19937_64 & rng)
        -> posetext::MonotoneMap
    {
        std::uniform_int_distribution<std::uint64_t> masks(0, (std::uint64_t{ 1 } << x->size()) - 1);
        while (true) {
            auto a = ElementSet::from_mask(x->size(), masks(rng));
            std::vector<std::vector<Element>> found;
            posetext::oracle::for_each_partial_isotone_map(*x, a, *y, [&] (std::span<const Element> f) {
                found.emplace_back(f.begin(), f.end());
                return true;
            });
            if (found.empty())
                continue;
            std::uniform_int_distribution<std::size_t> pick(0, found.size() - 1);
            return posetext::MonotoneMap{ x, y, found[pick(rng)] };
        }
    }
}

#endif
