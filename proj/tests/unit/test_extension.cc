#include <brute.hh>

#include <posetext/classify.hh>
#include <posetext/errors.hh>
#include <posetext/extension.hh>

#include <doctest.h>

#include <random>

using namespace posetext;
using brute::error_kind;

namespace
{
    auto labels_of(const MonotoneMap & g) -> std::vector<std::string>
    {
        std::vector<std::string> out;
        for (auto y : g.assignment())
            out.push_back(y == no_element ? "-" : g.codomain().label(y));
        return out;
    }

    auto make(const Poset & x, const Poset & y, std::vector<LabelPair> pairs) -> MonotoneMap
    {
        return MonotoneMap::from_labels(share(x), share(y), pairs);
    }

    auto random_instance(std::mt19937_64 & rng, std::size_t max_x, std::size_t max_y) -> MonotoneMap
    {
        auto x = share(oracle::random_poset(1 + rng() % max_x, rng));
        auto y = share(oracle::random_poset(1 + rng() % max_y, rng));
        return brute::random_partial_map(x, y, rng);
    }
}

TEST_SUITE("monotone maps")
{
    TEST_CASE("construction checks ranges only")
    {
        auto c3 = share(brute::fixture("c3"));
        auto c2 = share(brute::fixture("c2"));
        MonotoneMap backwards{ c3, c2, { 1, no_element, 0 } };
        CHECK_FALSE(check_isotone(backwards));
        CHECK(error_kind([&] { MonotoneMap(c3, c2, { 0, 0, 2 }); }) == ErrorKind::invalid_argument);
        CHECK(error_kind([&] { MonotoneMap(c3, c2, { 0 }); }) == ErrorKind::invalid_argument);
        CHECK(error_kind([&] { MonotoneMap::from_labels(c3, c2, { { "a", "0" }, { "a", "1" } }); })
            == ErrorKind::duplicate_label);
    }

    TEST_CASE("isotonicity agrees with the pairwise definition")
    {
        std::mt19937_64 rng(21);
        for (int trial = 0 ; trial < 300 ; ++trial) {
            auto x = oracle::random_poset(1 + trial % 5, rng);
            auto y = oracle::random_poset(1 + trial % 4, rng);
            std::vector<Element> f(x.size());
            for (auto & v : f)
                v = rng() % (y.size() + 1) == y.size() ? no_element : rng() % y.size();
            CHECK(check_isotone(x, y, f) == brute::isotone(x, y, f));
        }
    }
}

TEST_SUITE("lower and upper extensions")
{
    TEST_CASE("chain example")
    {
        auto f = brute::fixture_map("c3_c2_map").map;
        CHECK(labels_of(lower_extension(f)) == std::vector<std::string>{ "0", "0", "1" });
        CHECK(labels_of(upper_extension(f)) == std::vector<std::string>{ "0", "1", "1" });
    }

    TEST_CASE("empty domain of definition uses the extremes of the codomain")
    {
        auto f = MonotoneMap{ share(brute::fixture("v")), share(brute::fixture("diamond")) };
        CHECK(labels_of(lower_extension(f)) == std::vector<std::string>{ "0", "0", "0" });
        CHECK(labels_of(upper_extension(f)) == std::vector<std::string>{ "1", "1", "1" });
    }

    TEST_CASE("preconditions")
    {
        auto into_bowtie = make(brute::fixture("c3"), brute::fixture("bowtie"), { { "a", "a" } });
        CHECK(error_kind([&] { lower_extension(into_bowtie); }) == ErrorKind::codomain_not_complete_lattice);
        CHECK(error_kind([&] { upper_extension(into_bowtie); }) == ErrorKind::codomain_not_complete_lattice);

        auto backwards = make(brute::fixture("c3"), brute::fixture("c2"), { { "a", "1" }, { "c", "0" } });
        CHECK(error_kind([&] { lower_extension(backwards); }) == ErrorKind::input_not_isotone);
        CHECK(error_kind([&] { extend_exists(backwards); }) == ErrorKind::input_not_isotone);
        CHECK(error_kind([&] { extend_greedy(backwards); }) == ErrorKind::input_not_isotone);
        CHECK(error_kind([&] { enumerate_extensions(backwards); }) == ErrorKind::input_not_isotone);
    }

    TEST_CASE("least and greatest of the family, pointwise")
    {
        std::mt19937_64 rng(8);
        int checked = 0;
        while (checked < 300) {
            auto f = random_instance(rng, 5, 5);
            if (! is_complete_lattice(f.codomain()))
                continue;
            ++checked;
            auto lo = lower_extension(f), hi = upper_extension(f);
            auto family = enumerate_extensions(f);
            REQUIRE_FALSE(family.empty());
            auto & y = f.codomain();
            for (Element x = 0 ; x < f.domain().size() ; ++x) {
                auto column = y.none();
                for (std::size_t i = 0 ; i < family.size() ; ++i)
                    column.insert(family.assignment(i)[x]);
                CHECK(inf_of(y, column) == lo[x]);
                CHECK(sup_of(y, column) == hi[x]);
            }
        }
    }

    TEST_CASE("upper extension is the dual of the lower one")
    {
        std::mt19937_64 rng(13);
        int checked = 0;
        while (checked < 200) {
            auto f = random_instance(rng, 5, 5);
            if (! is_complete_lattice(f.codomain()))
                continue;
            ++checked;
            auto transported = lower_extension(f.dualised());
            CHECK(std::ranges::equal(transported.assignment(), upper_extension(f).assignment()));
        }
    }
}

TEST_SUITE("search and greedy")
{
    TEST_CASE("obstruction on the V")
    {
        auto f = brute::fixture_map("l6_map").map;
        CHECK_FALSE(extend_exists(f));
        CHECK_FALSE(extend_greedy(f));
        CHECK(enumerate_extensions(f).empty());
    }

    TEST_CASE("empty domain of definition gives a constant map")
    {
        auto f = MonotoneMap{ share(brute::fixture("diamond")), share(brute::fixture("a2")) };
        auto g = extend_exists(f);
        REQUIRE(g);
        CHECK(labels_of(*g) == std::vector<std::string>{ "a", "a", "a", "a" });
    }

    TEST_CASE("search succeeds exactly when enumeration is nonempty")
    {
        std::mt19937_64 rng(17);
        for (int trial = 0 ; trial < 600 ; ++trial) {
            auto f = random_instance(rng, 6, 5);
            auto g = extend_exists(f);
            auto family = enumerate_extensions(f);
            CHECK(g.has_value() == ! family.empty());
            if (g)
                CHECK(is_isotone_extension(f, *g));
            auto h = extend_greedy(f);
            if (h) {
                CHECK(is_isotone_extension(f, *h));
                CHECK(g.has_value());
            }
        }
    }

    TEST_CASE("greedy never fails into lattices, whatever the order")
    {
        std::mt19937_64 rng(19);
        int checked = 0;
        while (checked < 300) {
            auto f = random_instance(rng, 6, 5);
            if (! is_lattice(f.codomain()).holds)
                continue;
            ++checked;
            std::vector<Element> order;
            for (Element x = 0 ; x < f.domain().size() ; ++x)
                if (! f.defined(x))
                    order.push_back(x);
            std::ranges::shuffle(order, rng);
            auto g = extend_greedy(f, std::span<const Element>(order));
            REQUIRE(g);
            CHECK(is_isotone_extension(f, *g));
        }
    }

    TEST_CASE("greedy can fail where an extension exists")
    {
        // c3 with only the top fixed, into the V: the least candidate is taken at each step
        auto f = make(brute::fixture("c3"), brute::fixture("v"), { { "c", "a" } });
        auto g = extend_greedy(f);
        REQUIRE(g);
        CHECK(labels_of(*g) == std::vector<std::string>{ "0", "0", "a" });

        // Lambda into the antichain with a fixed: greedy gives b the least-index value, which leaves
        // nothing above both images for c. Mapping everything to the image of a works.
        auto h = make(brute::fixture("lambda"), brute::fixture("a2"), { { "a", "b" } });
        CHECK_FALSE(extend_greedy(h));
        auto any = extend_exists(h);
        REQUIRE(any);
        CHECK(labels_of(*any) == std::vector<std::string>{ "b", "b", "b" });

        std::vector<Element> c_last{ 1, 2 }, reversed{ 2, 1 };
        CHECK_FALSE(extend_greedy(h, std::span<const Element>(c_last)));
        auto lucky = extend_greedy(h, std::span<const Element>(reversed));
        REQUIRE(lucky);
        CHECK(is_isotone_extension(h, *lucky));
    }

    TEST_CASE("greedy order validation")
    {
        auto f = brute::fixture_map("c3_c2_map").map;
        std::vector<Element> bad{ 0 };
        CHECK(error_kind([&] { extend_greedy(f, std::span<const Element>(bad)); }) == ErrorKind::invalid_argument);
        std::vector<Element> good{ 1 };
        CHECK(extend_greedy(f, std::span<const Element>(good)));
    }
}

TEST_SUITE("chain components")
{
    TEST_CASE("retraction formula examples")
    {
        auto c3 = share(brute::fixture("c3"));
        auto g = extend_chain_components(c3, c3->subset({ "a", "c" }), 0);
        CHECK(labels_of(g) == std::vector<std::string>{ "a", "a", "c" });

        auto whole = extend_chain_components(c3, c3->all(), 0);
        CHECK(labels_of(whole) == std::vector<std::string>{ "a", "b", "c" });

        auto sum = share(cardinal_sum(brute::chain(2), Poset::from_covers({ "x", "y" }, { { "x", "y" } })));
        auto h = extend_chain_components(sum, sum->subset({ "b" }), 1);
        CHECK(labels_of(h) == std::vector<std::string>{ "b", "b", "b", "b" });

        auto low = extend_chain_components(sum, sum->subset({ "b", "y" }), 1);
        CHECK(labels_of(low) == std::vector<std::string>{ "b", "b", "y", "y" });
    }

    TEST_CASE("preconditions")
    {
        auto v = share(brute::fixture("v"));
        CHECK(error_kind([&] { extend_chain_components(v, v->subset({ "a" }), 1); }) == ErrorKind::component_not_chain);
        auto c3 = share(brute::fixture("c3"));
        CHECK(error_kind([&] { extend_chain_components(c3, c3->none(), 0); }) == ErrorKind::empty_a);
        CHECK(error_kind([&] { extend_chain_components(c3, c3->subset({ "a" }), 2); }) == ErrorKind::invalid_argument);
    }
}

TEST_SUITE("extreme-preserving extension")
{
    TEST_CASE("bowtie window")
    {
        auto f = brute::fixture_map("bowtie_map").map;
        auto g = extend_preserving_extremes(f);
        REQUIRE(g);
        CHECK(is_isotone_extension(f, *g));
        auto b = (*g)[1];
        CHECK((f.codomain().label(b) == "a" || f.codomain().label(b) == "c"));
    }

    TEST_CASE("stays within the interval on random lattices")
    {
        std::mt19937_64 rng(23);
        int checked = 0;
        while (checked < 200) {
            auto f = random_instance(rng, 6, 5);
            auto a = f.defined_on();
            if (a.empty() || ! least_of(f.domain(), a) || ! greatest_of(f.domain(), a))
                continue;
            ++checked;
            auto g = extend_preserving_extremes(f);
            if (is_local_complete_lattice(f.codomain()).holds)
                REQUIRE(g);
            if (! g)
                continue;
            CHECK(is_isotone_extension(f, *g));
            auto lo = f[*least_of(f.domain(), a)], hi = f[*greatest_of(f.domain(), a)];
            for (auto v : g->assignment())
                CHECK((f.codomain().leq(lo, v) && f.codomain().leq(v, hi)));
        }
    }

    TEST_CASE("fails on a non-local complete lattice")
    {
        // Y: bot < p, q < m1, m2 < top. X: the same shape with a single element s between the two
        // levels, so s must sit above p and q and below m1 and m2.
        auto y = Poset::from_covers({ "bot", "p", "q", "m1", "m2", "top" },
            { { "bot", "p" }, { "bot", "q" }, { "p", "m1" }, { "p", "m2" }, { "q", "m1" }, { "q", "m2" },
              { "m1", "top" }, { "m2", "top" } });
        auto x = Poset::from_covers({ "0", "x1", "x2", "s", "y1", "y2", "1" },
            { { "0", "x1" }, { "0", "x2" }, { "x1", "s" }, { "x2", "s" }, { "s", "y1" }, { "s", "y2" },
              { "y1", "1" }, { "y2", "1" } });
        auto f = make(x, y, { { "0", "bot" }, { "x1", "p" }, { "x2", "q" }, { "y1", "m1" }, { "y2", "m2" }, { "1", "top" } });
        CHECK_FALSE(extend_preserving_extremes(f));
        CHECK_FALSE(extend_exists(f));
    }

    TEST_CASE("needs extremes in the domain of definition")
    {
        auto f = make(brute::fixture("v"), brute::fixture("c2"), { { "a", "0" }, { "b", "1" } });
        CHECK(error_kind([&] { extend_preserving_extremes(f); }) == ErrorKind::no_extremes_in_a);
        auto empty = MonotoneMap{ share(brute::fixture("v")), share(brute::fixture("c2")) };
        CHECK(error_kind([&] { extend_preserving_extremes(empty); }) == ErrorKind::no_extremes_in_a);
    }
}

TEST_SUITE("extension families")
{
    TEST_CASE("chain example")
    {
        auto f = brute::fixture_map("c3_c2_map").map;
        auto family = enumerate_extensions(f);
        REQUIRE(family.size() == 2);
        CHECK(labels_of(family.member(0)) == std::vector<std::string>{ "0", "0", "1" });
        CHECK(labels_of(family.member(1)) == std::vector<std::string>{ "0", "1", "1" });
        CHECK(family.bottom() == 0);
        CHECK(family.top() == 1);
        CHECK(family.leq(0, 1));
        CHECK_FALSE(family.leq(1, 0));
        CHECK(family.as_poset().labels() == std::vector<std::string>{ "g0", "g1" });
    }

    TEST_CASE("total maps have a family of one")
    {
        auto c3 = share(brute::fixture("c3"));
        auto f = MonotoneMap{ c3, c3, { 0, 1, 2 } };
        CHECK(enumerate_extensions(f).size() == 1);
    }

    TEST_CASE("cap")
    {
        auto f = MonotoneMap{ share(brute::antichain(8)), share(brute::chain(6)) };
        CHECK(error_kind([&] { enumerate_extensions(f); }) == ErrorKind::cap_exceeded);
        auto g = MonotoneMap{ share(brute::antichain(5)), share(brute::chain(4)) };
        CHECK(error_kind([&] { enumerate_extensions(g, 1000); }) == ErrorKind::cap_exceeded);
        CHECK(enumerate_extensions(g, 1024).size() == 1024);
    }
}
