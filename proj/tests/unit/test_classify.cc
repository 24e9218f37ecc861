#include <brute.hh>

#include <posetext/classify.hh>
#include <posetext/errors.hh>
#include <posetext/oracle.hh>

#include <doctest.h>

#include <map>

using namespace posetext;
using brute::error_kind;

namespace
{
    struct Expected
    {
        bool chain, lattice, quasilattice, local_complete_lattice, z_embeddable;
    };

    // The six element poset bottom < p, q < m1, m2 < top: p and q have two
    // minimal upper bounds, so the whole interval is not a lattice.
    auto double_bowtie() -> Poset
    {
        return Poset::from_covers({ "bot", "p", "q", "m1", "m2", "top" },
            { { "bot", "p" }, { "bot", "q" }, { "p", "m1" }, { "p", "m2" }, { "q", "m1" }, { "q", "m2" },
              { "m1", "top" }, { "m2", "top" } });
    }
}

TEST_SUITE("classify")
{
    TEST_CASE("fixture table")
    {
        std::map<std::string, Expected> table{
            { "c3",      { true, true, true, true, true } },
            { "c2",      { true, true, true, true, true } },
            { "a2",      { false, false, false, true, true } },
            { "v",       { false, false, false, true, false } },
            { "lambda",  { false, false, false, true, false } },
            { "diamond", { false, true, true, true, false } },
            { "bowtie",  { false, false, false, true, false } },
        };
        for (auto & [name, e] : table) {
            CAPTURE(name);
            auto r = classify(brute::fixture(name));
            CHECK(r.chain == e.chain);
            CHECK(r.lattice == e.lattice);
            CHECK(r.complete_lattice == e.lattice);
            CHECK(r.quasilattice == e.quasilattice);
            CHECK(r.local_complete_lattice == e.local_complete_lattice);
            CHECK(r.local_quasilattice == e.local_complete_lattice);
            CHECK(r.z_embeddable == e.z_embeddable);
        }
    }

    TEST_CASE("lattice witnesses name the missing bound")
    {
        auto a2 = brute::fixture("a2");
        auto c = is_lattice(a2);
        CHECK_FALSE(c.holds);
        CHECK(c.missing == MissingBound::sup);
        CHECK(*c.witness == a2.all());

        auto lambda = brute::fixture("lambda");
        auto l = is_lattice(lambda);
        CHECK(l.missing == MissingBound::inf);
        CHECK(*l.witness == lambda.subset({ "a", "b" }));

        CHECK(error_kind([] { is_lattice(Poset::from_pairs({}, {})); }) == ErrorKind::empty_poset);
    }

    TEST_CASE("quasilattice witness for the bowtie")
    {
        auto b = brute::fixture("bowtie");
        auto q = is_quasilattice(b);
        REQUIRE_FALSE(q.holds);
        for (auto lo : *q.lower)
            for (auto hi : *q.upper)
                CHECK(b.leq(lo, hi));
        CHECK((up_cone(b, *q.lower) & down_cone(b, *q.upper)).empty());
    }

    TEST_CASE("the full check matches the exhaustive subset check")
    {
        for (auto & p : oracle::posets_up_to_isomorphism(1, 6))
            CHECK(is_complete_lattice(p) == is_complete_lattice_exhaustive(p));
        for (auto & p : oracle::posets_up_to_isomorphism(1, 4))
            CHECK(is_complete_lattice(p) == brute::complete_lattice(p));
        CHECK(error_kind([] { is_complete_lattice_exhaustive(brute::chain(16)); }) == ErrorKind::size_cap_exceeded);
    }

    TEST_CASE("finite quasilattices are exactly the lattices")
    {
        for (auto & p : oracle::posets_up_to_isomorphism(1, 6))
            CHECK(is_quasilattice(p).holds == is_lattice(p).holds);
    }

    TEST_CASE("size-bounded quasilattice checks")
    {
        auto a2 = brute::fixture("a2");
        CHECK(is_quasilattice(a2, 2).holds);
        CHECK_FALSE(is_quasilattice(a2, 3).holds);

        // singletons on both sides always have something in between
        auto b = brute::fixture("bowtie");
        CHECK(is_quasilattice(b, 2).holds);
        CHECK_FALSE(is_quasilattice(b, 3).holds);
    }

    TEST_CASE("local complete lattices")
    {
        for (auto & p : oracle::posets_up_to_isomorphism(1, 5))
            CHECK(is_local_complete_lattice(p).holds);

        auto p = double_bowtie();
        auto c = is_local_complete_lattice(p);
        REQUIRE_FALSE(c.holds);
        CHECK(*c.interval == ElementPair{ p.index_of("bot"), p.index_of("top") });
        CHECK(c.failure.missing == MissingBound::sup);
        CHECK(*c.failure.witness == p.subset({ "p", "q" }));
    }

    TEST_CASE("local quasilattice agrees with local complete lattice")
    {
        for (auto & p : oracle::posets_up_to_isomorphism(1, 6))
            CHECK(is_local_quasilattice(p).holds == is_local_complete_lattice(p).holds);

        auto p = double_bowtie();
        auto q = is_local_quasilattice(p);
        REQUIRE_FALSE(q.holds);
        CHECK_FALSE(down_cone(p, *q.lower | *q.upper).empty());
        CHECK_FALSE(up_cone(p, *q.lower | *q.upper).empty());
    }

    TEST_CASE("counterexample search over small posets")
    {
        auto lattice_to_quasi = [] (const Poset & p) { return ! is_lattice(p).holds || is_quasilattice(p).holds; };
        auto quasi_to_lattice = [] (const Poset & p) { return ! is_quasilattice(p).holds || is_lattice(p).holds; };
        CHECK_FALSE(oracle::find_counterexample(lattice_to_quasi, 5));
        CHECK_FALSE(oracle::find_counterexample(quasi_to_lattice, 5));

        // the first poset that is a local complete lattice without being a lattice is the two-element antichain
        auto local_to_lattice = [] (const Poset & p) { return ! is_local_complete_lattice(p).holds || is_lattice(p).holds; };
        auto found = oracle::find_counterexample(local_to_lattice, 5);
        REQUIRE(found);
        CHECK(oracle::isomorphic(*found, brute::antichain(2)));

        // among connected posets the first is a three-element V or its dual
        auto connected = [&] (const Poset & p) { return components(p).size() != 1 || local_to_lattice(p); };
        auto first_connected = oracle::find_counterexample(connected, 5);
        REQUIRE(first_connected);
        CHECK((oracle::isomorphic(*first_connected, brute::fixture("v"))
            || oracle::isomorphic(*first_connected, brute::fixture("lambda"))));

        // the bowtie violates the implication too
        CHECK_FALSE(local_to_lattice(brute::fixture("bowtie")));
    }
}

TEST_SUITE("components")
{
    TEST_CASE("cardinal sums split into their parts")
    {
        auto p = cardinal_sum(brute::chain(2), brute::fixture("v"));
        auto parts = components(p);
        REQUIRE(parts.size() == 2);
        CHECK(parts[0].members() == std::vector<Element>{ 0, 1 });
        CHECK(parts[1].members() == std::vector<Element>{ 2, 3, 4 });
        CHECK(components(brute::antichain(3)).size() == 3);
        CHECK(components(brute::fixture("bowtie")).size() == 1);
    }

    TEST_CASE("z embedding values")
    {
        auto z = z_embedding(brute::chain(3));
        REQUIRE(z);
        CHECK(*z == std::vector<std::int64_t>{ 0, 1, 2 });

        auto two = z_embedding(cardinal_sum(brute::chain(2), brute::chain(2)));
        REQUIRE(two);
        CHECK(*two == std::vector<std::int64_t>{ 0, 1, 3, 4 });

        auto down = z_embedding(Poset::from_covers({ "a", "b" }, { { "b", "a" } }));
        REQUIRE(down);
        CHECK(*down == std::vector<std::int64_t>{ 0, -1 });

        CHECK_FALSE(z_embedding(brute::fixture("v")));
    }

    TEST_CASE("z embeddings exist exactly for unions of chains and are order embeddings")
    {
        for (auto & p : oracle::posets_up_to_isomorphism(1, 6)) {
            auto parts = components(p);
            bool chains = std::ranges::all_of(parts, [&] (const ElementSet & c) { return is_chain(induced(p, c)); });
            auto z = z_embedding(p);
            CHECK(z.has_value() == chains);
            if (! z)
                continue;
            for (Element a = 0 ; a < p.size() ; ++a)
                for (Element b = 0 ; b < p.size() ; ++b) {
                    if (a != b)
                        CHECK((*z)[a] != (*z)[b]);
                    if (p.less(a, b))
                        CHECK((*z)[a] < (*z)[b]);
                }
        }
    }

    TEST_CASE("antichain enumeration")
    {
        auto d = brute::fixture("diamond");
        std::vector<std::uint64_t> seen;
        for_each_antichain(d, d.all(), std::nullopt, [&] (const ElementSet & s) {
            seen.push_back(s.mask());
            return true;
        });
        std::ranges::sort(seen);
        CHECK(seen == std::vector<std::uint64_t>{ 0, 1, 2, 4, 6, 8 });

        std::size_t small = 0;
        for_each_antichain(d, d.all(), 2, [&] (const ElementSet & s) {
            CHECK(s.count() < 2);
            ++small;
            return true;
        });
        CHECK(small == 5);
    }
}
