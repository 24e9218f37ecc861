#include <posetext/errors.hh>
#include <posetext/oracle.hh>
#include <posetext/theorems.hh>

#include <algorithm>
#include <chrono>
#include <fmt/format.h>
#include <functional>
#include <map>

using std::optional;
using std::string;
using std::vector;

namespace posetext::oracle
{
    namespace
    {
        using Reason = optional<string>;

        struct Entry
        {
            TheoremCaps caps;
            std::size_t limit;
        };

        auto registry() -> const std::map<string, Entry> &
        {
            static const std::map<string, Entry> entries{
                { "t4",    { { 4, 4, 2'000'000 }, 5 } },
                { "c2.11", { { 4, 4, 2'000'000 }, 5 } },
                { "c6",    { { 4, 5, 2'000'000 }, 6 } },
                { "t5",    { { 3, 3, 2'000'000 }, 4 } },
                { "l6",    { { 5, 5, 2'000'000 }, 6 } },
                { "l3",    { { 5, 5, 2'000'000 }, 6 } },
                { "t10",   { { 4, 4, 2'000'000 }, 6 } },
                { "s43",   { { 5, 5, 2'000'000 }, 6 } },
                { "t46",   { { 4, 4, 2'000'000 }, 5 } },
                { "t53",   { { 4, 4, 2'000'000 }, 5 } },
            };
            return entries;
        }

        auto entry(const string & id) -> const Entry &
        {
            auto it = registry().find(id);
            if (it == registry().end())
                throw Error{ ErrorKind::unknown_theorem_id, "'" + id + "'" };
            return it->second;
        }

        auto universe_text(const string & id, const TheoremCaps & c) -> string
        {
            auto x = c.domain_size, y = c.codomain_size;
            if (id == "t4" || id == "t46" || id == "t53")
                return fmt::format("nonempty Y up to isomorphism with |Y| <= {}; X up to isomorphism with |X| <= {}; "
                        "every A of X; every isotone f: A -> Y", y, x);
            if (id == "c2.11")
                return fmt::format("complete lattices Y with |Y| <= {}; X up to isomorphism with |X| <= {}; every A; "
                        "every isotone f with at most 10000 extensions", y, x);
            if (id == "c6")
                return fmt::format("lattices Y with |Y| <= {}; X up to isomorphism with |X| <= {}; every A; every isotone f", y, x);
            if (id == "t5")
                return fmt::format("A up to isomorphism with |A| <= {}; Y up to isomorphism with |Y| <= {}; "
                        "X containing A with |X| <= |A| + 2; every isotone f: A -> Y", x, y);
            if (id == "l6")
                return fmt::format("connected non-chain X up to isomorphism with |X| <= {}; every incomparable pair", x);
            if (id == "l3")
                return fmt::format("complete lattices X up to isomorphism with |X| <= {}; every nonempty A", x);
            if (id == "t10")
                return fmt::format("X up to isomorphism with |X| <= {}; every nonempty A", x);
            return fmt::format("every labeled poset with at most {} elements", x);
        }

        struct Context
        {
            TheoremCaps caps;
            std::uint64_t checked = 0;
            bool counting = true;

            void tick()
            {
                if (counting && ++checked > caps.instance_cap)
                    throw Error{ ErrorKind::cap_exceeded,
                        fmt::format("universe exceeds the instance cap of {}", caps.instance_cap) };
            }
        };

        auto shared_classes(std::size_t lo, std::size_t hi) -> vector<PosetPtr>
        {
            vector<PosetPtr> out;
            if (lo > hi)
                return out;
            for (auto & p : posets_up_to_isomorphism(lo, hi))
                out.push_back(share(p));
            return out;
        }

        auto sequence(std::span<const Element> s) -> vector<Element>
        {
            return { s.begin(), s.end() };
        }

        /// Every (A, f) over each domain, A ascending by bitmask, f lexicographic.
        auto for_each_instance(const vector<PosetPtr> & domains, const PosetPtr & y,
                const std::function<auto (const Poset &, const ElementSet &) -> bool> & accept,
                const std::function<auto (const MonotoneMap &) -> bool> & visit) -> bool
        {
            for (auto & x : domains)
                for (std::uint64_t mask = 0 ; mask < (std::uint64_t{ 1 } << x->size()) ; ++mask) {
                    auto a = ElementSet::from_mask(x->size(), mask);
                    if (! accept(*x, a))
                        continue;
                    bool go = for_each_partial_isotone_map(*x, a, *y, [&] (std::span<const Element> s) {
                        return visit(MonotoneMap{ x, y, sequence(s) });
                    });
                    if (! go)
                        return false;
                }
            return true;
        }

        auto any_subset(const Poset &, const ElementSet &) -> bool { return true; }

        auto has_extremes(const Poset & x, const ElementSet & a) -> bool
        {
            return least_of(x, a) && greatest_of(x, a);
        }

        auto identity_on(const PosetPtr & x, const ElementSet & a) -> MonotoneMap
        {
            vector<Element> assignment(x->size(), no_element);
            Element i = 0;
            for (auto e : a)
                assignment[e] = i++;
            return MonotoneMap{ x, share(induced(*x, a)), std::move(assignment) };
        }

        /// The down-set lattice of induced(y, window), mapped back onto window on its image.
        auto embedding_witness(const PosetPtr & y, const ElementSet & window) -> MonotoneMap
        {
            auto members = window.members();
            auto emb = downset_embedding(induced(*y, window));
            auto x = share(std::move(emb.lattice));
            vector<Element> assignment(x->size(), no_element);
            for (std::size_t i = 0 ; i < members.size() ; ++i)
                assignment[emb.image[i]] = members[i];
            return MonotoneMap{ x, y, std::move(assignment) };
        }

        auto pointwise_leq(const Poset & y, std::span<const Element> lo, std::span<const Element> hi) -> bool
        {
            for (std::size_t i = 0 ; i < lo.size() ; ++i)
                if (! y.leq(lo[i], hi[i]))
                    return false;
            return true;
        }

        // Per-instance checks. Each returns why the instance violates the
        // statement, or nothing when it conforms.

        auto t4_instance(const MonotoneMap & f) -> Reason
        {
            auto g = extend_exists(f);
            if (! g || ! is_isotone_extension(f, *g))
                return "no isotone extension into a complete lattice";
            auto lo = lower_extension(f), hi = upper_extension(f);
            if (! is_isotone_extension(f, lo))
                return "lower extension is not an isotone extension";
            if (! is_isotone_extension(f, hi))
                return "upper extension is not an isotone extension";
            auto family = enumerate_extensions(f);
            if (family.empty())
                return "enumeration found no extension";
            for (std::size_t i = 0 ; i < family.size() ; ++i) {
                auto & m = family.assignment(i);
                if (! pointwise_leq(f.codomain(), lo.assignment(), m))
                    return "an extension lies below the lower extension";
                if (! pointwise_leq(f.codomain(), m, hi.assignment()))
                    return "an extension lies above the upper extension";
            }
            return std::nullopt;
        }

        constexpr std::size_t family_lattice_cap = 10'000;

        auto c211_instance(const MonotoneMap & f) -> Reason
        {
            auto family = enumerate_extensions(f);
            if (family.size() > family_lattice_cap)
                return std::nullopt;
            if (family.empty())
                return "empty extension family";
            if (! is_lattice(family.as_poset()).holds)
                return "extension family is not a lattice under the pointwise order";
            auto lo = lower_extension(f), hi = upper_extension(f);
            auto bottom = family.bottom(), top = family.top();
            if (! bottom || ! std::ranges::equal(family.assignment(*bottom), lo.assignment()))
                return "family bottom differs from the lower extension";
            if (! top || ! std::ranges::equal(family.assignment(*top), hi.assignment()))
                return "family top differs from the upper extension";
            return std::nullopt;
        }

        auto c6_instance(const MonotoneMap & f) -> Reason
        {
            auto g = extend_exists(f);
            if (! g || ! is_isotone_extension(f, *g))
                return "no isotone extension into a finite lattice";
            if (! is_isotone_extension(f, lower_extension(f)))
                return "lower extension is not an isotone extension";
            return std::nullopt;
        }

        auto exists_instance(const MonotoneMap & f) -> Reason
        {
            auto g = extend_exists(f);
            if (! g || ! is_isotone_extension(f, *g))
                return "no isotone extension";
            return std::nullopt;
        }

        auto l6_instance(const MonotoneMap & f) -> Reason
        {
            if (extend_exists(f))
                return "identity on an incomparable pair extends";
            return std::nullopt;
        }

        auto l3_instance(const MonotoneMap & f) -> Reason
        {
            if (extend_exists(f) && ! is_complete_lattice(f.codomain()))
                return "retract is not a complete lattice";
            return std::nullopt;
        }

        auto all_chains(const Poset & x) -> bool
        {
            return std::ranges::all_of(components(x), [&] (const ElementSet & c) { return is_chain(induced(x, c)); });
        }

        /// Expected retraction value, in terms of elements of x.
        auto chain_formula(const Poset & x, const ElementSet & a, const ElementSet & component, Element e, Element fallback)
            -> Element
        {
            auto in_a = a & component;
            if (in_a.empty())
                return fallback;
            auto below = x.down_set(e) & in_a;
            if (! below.empty())
                return *sup_of(x, below);
            return *inf_of(x, in_a);
        }

        auto t10_instance(const MonotoneMap & f) -> Reason
        {
            auto & x = f.domain();
            if (! all_chains(x))
                return std::nullopt;
            auto g = extend_exists(f);
            if (! g || ! is_isotone_extension(f, *g))
                return "identity on A has no extension although every component is a chain";

            auto a = f.defined_on();
            auto fallback = a.first();
            auto h = extend_chain_components(f.domain_ptr(), a, fallback);
            if (! is_isotone_extension(f, h))
                return "chain-component retraction is not an isotone extension";
            auto members = a.members();
            for (auto & c : components(x))
                for (auto e : c)
                    if (members[h[e]] != chain_formula(x, a, c, e, fallback))
                        return "chain-component retraction differs from the componentwise formula";
            return std::nullopt;
        }

        auto t46_instance(const MonotoneMap & f) -> Reason
        {
            auto g = extend_exists(f);
            if (! g || ! is_isotone_extension(f, *g))
                return "no isotone extension into a quasilattice";
            auto h = extend_greedy(f);
            if (! h)
                return "greedy extension failed on a quasilattice";
            if (! is_isotone_extension(f, *h))
                return "greedy result is not an isotone extension";
            return std::nullopt;
        }

        auto t53_instance(const MonotoneMap & f) -> Reason
        {
            auto a = f.defined_on();
            auto & x = f.domain();
            auto & y = f.codomain();
            auto g = extend_preserving_extremes(f);
            if (! g)
                return "no extreme-preserving extension into a local complete lattice";
            if (! is_isotone_extension(f, *g))
                return "extreme-preserving result is not an isotone extension";
            auto lo = f[*least_of(x, a)], hi = f[*greatest_of(x, a)];
            for (Element e = 0 ; e < x.size() ; ++e)
                if (! y.leq(lo, (*g)[e]) || ! y.leq((*g)[e], hi))
                    return "extreme-preserving result leaves the interval";
            return std::nullopt;
        }

        auto instance_check(const string & id, const MonotoneMap & f) -> Reason
        {
            if (id == "t4")    return t4_instance(f);
            if (id == "c2.11") return c211_instance(f);
            if (id == "c6")    return c6_instance(f);
            if (id == "t5")    return exists_instance(f);
            if (id == "l6")    return l6_instance(f);
            if (id == "l3")    return l3_instance(f);
            if (id == "t10")   return t10_instance(f);
            if (id == "t46")   return t46_instance(f);
            if (id == "t53")   return t53_instance(f);
            throw Error{ ErrorKind::unknown_theorem_id, "'" + id + "' has no map-level check" };
        }

        // Whole-poset checks for the converse directions.

        /// Y is not a complete lattice: some capped instance, or the down-set lattice of Y, must fail to extend.
        auto t4_converse(Context & ctx, const PosetPtr & y, const vector<PosetPtr> & domains) -> Reason
        {
            bool found = false;
            for_each_instance(domains, y, any_subset, [&] (const MonotoneMap & f) {
                ctx.tick();
                found = ! extend_exists(f);
                return ! found;
            });
            if (found || ! extend_exists(embedding_witness(y, y->all())))
                return std::nullopt;
            return "every map into a poset that is not a complete lattice extends";
        }

        /// Y is not a quasilattice: some instance must fail both to extend and to extend greedily.
        auto t46_converse(Context & ctx, const PosetPtr & y, const vector<PosetPtr> & domains) -> Reason
        {
            bool found = false;
            for_each_instance(domains, y, any_subset, [&] (const MonotoneMap & f) {
                ctx.tick();
                found = ! extend_exists(f) && ! extend_greedy(f);
                return ! found;
            });
            if (found)
                return std::nullopt;
            auto w = embedding_witness(y, y->all());
            if (! extend_exists(w) && ! extend_greedy(w))
                return std::nullopt;
            return "every map into a poset that is not a quasilattice extends";
        }

        /// Y is not a local complete lattice: some instance with extremes must fail.
        auto t53_converse(Context & ctx, const PosetPtr & y, const vector<PosetPtr> & domains) -> Reason
        {
            bool found = false;
            for_each_instance(domains, y, has_extremes, [&] (const MonotoneMap & f) {
                ctx.tick();
                found = ! extend_preserving_extremes(f);
                return ! found;
            });
            if (found)
                return std::nullopt;
            auto [lo, hi] = *is_local_complete_lattice(*y).interval;
            if (! extend_preserving_extremes(embedding_witness(y, interval(*y, lo, hi))))
                return std::nullopt;
            return "every map into a poset that is not a local complete lattice extends within its extremes";
        }

        /// Posets containing a as their first |a| points, with up to two extra points.
        auto superposets(const Poset & a) -> vector<PosetPtr>
        {
            vector<PosetPtr> out{ share(a) };
            auto first = one_point_extensions(a);
            for (auto & p : first) {
                out.push_back(share(p));
                for (auto & q : one_point_extensions(p))
                    out.push_back(share(q));
            }
            return out;
        }

        auto lift(const Poset & x, std::span<const Element> f) -> vector<Element>
        {
            vector<Element> out(x.size(), no_element);
            std::ranges::copy(f, out.begin());
            return out;
        }

        /// A is not a complete lattice: some Y, f and X must fail.
        auto t5_converse(Context & ctx, const PosetPtr & a, const vector<PosetPtr> & codomains) -> Reason
        {
            auto xs = superposets(*a);
            for (auto & y : codomains)
                for (auto & f : enumerate_isotone_maps(*a, *y))
                    for (auto & x : xs) {
                        ctx.tick();
                        if (! extend_exists(MonotoneMap{ x, y, lift(*x, f) }))
                            return std::nullopt;
                    }

            auto emb = downset_embedding(*a);
            auto x = share(std::move(emb.lattice));
            vector<Element> assignment(x->size(), no_element);
            for (std::size_t i = 0 ; i < a->size() ; ++i)
                assignment[emb.image[i]] = i;
            if (! extend_exists(MonotoneMap{ x, a, std::move(assignment) }))
                return std::nullopt;
            return "every map out of a poset that is not a complete lattice extends";
        }

        /// Not every component is a chain: some identity map must fail to extend.
        auto t10_converse(Context & ctx, const PosetPtr & x) -> Reason
        {
            for (std::uint64_t mask = 1 ; mask < (std::uint64_t{ 1 } << x->size()) ; ++mask) {
                ctx.tick();
                if (! extend_exists(identity_on(x, ElementSet::from_mask(x->size(), mask))))
                    return std::nullopt;
            }
            return "identity extends for every A although some component is not a chain";
        }

        auto s43_check(const Poset & p) -> Reason
        {
            if (is_quasilattice(p).holds != is_lattice(p).holds)
                return "quasilattice and lattice classification disagree";
            return std::nullopt;
        }

        auto poset_check(Context & ctx, const string & id, const PosetPtr & p) -> Reason
        {
            auto & c = ctx.caps;
            if (id == "t4")  return t4_converse(ctx, p, shared_classes(1, c.domain_size));
            if (id == "t46") return t46_converse(ctx, p, shared_classes(1, c.domain_size));
            if (id == "t53") return t53_converse(ctx, p, shared_classes(1, c.domain_size));
            if (id == "t5")  return t5_converse(ctx, p, shared_classes(1, c.codomain_size));
            if (id == "t10") return t10_converse(ctx, p);
            if (id == "s43") return s43_check(*p);
            throw Error{ ErrorKind::unknown_theorem_id, "'" + id + "' has no poset-level check" };
        }

        auto map_counterexample(const string & direction, const string & reason, const MonotoneMap & f) -> Json
        {
            return Json{
                { "direction", direction },
                { "reason", reason },
                { "domain", poset_to_json(f.domain()) },
                { "codomain", poset_to_json(f.codomain()) },
                { "map", assignment_to_json(f) }
            };
        }

        auto poset_counterexample(const string & direction, const string & reason, const Poset & p) -> Json
        {
            return Json{ { "direction", direction }, { "reason", reason }, { "poset", poset_to_json(p) } };
        }

        /// Runs check over the instances, returning the first failure as a counterexample.
        auto first_failure(Context & ctx, const vector<PosetPtr> & domains, const PosetPtr & y,
                const std::function<auto (const Poset &, const ElementSet &) -> bool> & accept,
                const std::function<auto (const MonotoneMap &) -> Reason> & check) -> optional<Json>
        {
            optional<Json> out;
            for_each_instance(domains, y, accept, [&] (const MonotoneMap & f) {
                ctx.tick();
                if (auto r = check(f))
                    out = map_counterexample("forward", *r, f);
                return ! out;
            });
            return out;
        }

        // Theorem drivers, each returning the first counterexample found.

        using Driver = std::function<auto (Context &) -> optional<Json>>;

        auto codomain_driver(const string & id,
                const std::function<auto (const Poset &) -> bool> & forward_holds,
                const std::function<auto (const Poset &, const ElementSet &) -> bool> & accept,
                bool converse) -> Driver
        {
            return [=] (Context & ctx) -> optional<Json> {
                auto domains = shared_classes(1, ctx.caps.domain_size);
                for (auto & y : shared_classes(1, ctx.caps.codomain_size)) {
                    if (forward_holds(*y)) {
                        auto check = [&] (const MonotoneMap & f) { return instance_check(id, f); };
                        if (auto ce = first_failure(ctx, domains, y, accept, check))
                            return ce;
                    }
                    else if (converse) {
                        if (auto r = poset_check(ctx, id, y))
                            return poset_counterexample("converse", *r, *y);
                    }
                }
                return std::nullopt;
            };
        }

        auto t5_driver(Context & ctx) -> optional<Json>
        {
            auto codomains = shared_classes(1, ctx.caps.codomain_size);
            for (auto & a : shared_classes(1, ctx.caps.domain_size)) {
                if (! is_complete_lattice(*a)) {
                    if (auto r = poset_check(ctx, "t5", a))
                        return poset_counterexample("converse", *r, *a);
                    continue;
                }
                auto xs = superposets(*a);
                for (auto & y : codomains)
                    for (auto & f : enumerate_isotone_maps(*a, *y))
                        for (auto & x : xs) {
                            ctx.tick();
                            MonotoneMap m{ x, y, lift(*x, f) };
                            if (auto r = exists_instance(m))
                                return map_counterexample("forward", *r, m);
                        }
            }
            return std::nullopt;
        }

        auto l6_driver(Context & ctx) -> optional<Json>
        {
            for (auto & x : shared_classes(1, ctx.caps.domain_size)) {
                if (components(*x).size() != 1 || is_chain(*x))
                    continue;
                for (Element a = 0 ; a < x->size() ; ++a)
                    for (Element b = a + 1 ; b < x->size() ; ++b) {
                        if (x->comparable(a, b))
                            continue;
                        ctx.tick();
                        auto f = identity_on(x, ElementSet(x->size(), { a, b }));
                        if (auto r = l6_instance(f))
                            return map_counterexample("forward", *r, f);
                    }
            }
            return std::nullopt;
        }

        auto l3_driver(Context & ctx) -> optional<Json>
        {
            for (auto & x : shared_classes(1, ctx.caps.domain_size)) {
                if (! is_complete_lattice(*x))
                    continue;
                for (std::uint64_t mask = 1 ; mask < (std::uint64_t{ 1 } << x->size()) ; ++mask) {
                    ctx.tick();
                    auto f = identity_on(x, ElementSet::from_mask(x->size(), mask));
                    if (auto r = l3_instance(f))
                        return map_counterexample("forward", *r, f);
                }
            }
            return std::nullopt;
        }

        auto t10_driver(Context & ctx) -> optional<Json>
        {
            for (auto & x : shared_classes(1, ctx.caps.domain_size)) {
                if (! all_chains(*x)) {
                    if (auto r = poset_check(ctx, "t10", x))
                        return poset_counterexample("converse", *r, *x);
                    continue;
                }
                for (std::uint64_t mask = 1 ; mask < (std::uint64_t{ 1 } << x->size()) ; ++mask) {
                    ctx.tick();
                    auto f = identity_on(x, ElementSet::from_mask(x->size(), mask));
                    if (auto r = t10_instance(f))
                        return map_counterexample("forward", *r, f);
                }
            }
            return std::nullopt;
        }

        auto s43_driver(Context & ctx) -> optional<Json>
        {
            optional<Json> out;
            for (std::size_t n = 1 ; n <= ctx.caps.domain_size && ! out ; ++n)
                for_each_poset(n, PosetMode::labeled, [&] (const Poset & p) {
                    ctx.tick();
                    if (auto r = s43_check(p))
                        out = poset_counterexample("forward", *r, p);
                    return ! out;
                });
            return out;
        }

        auto driver(const string & id) -> Driver
        {
            auto complete = [] (const Poset & p) { return is_complete_lattice(p); };
            if (id == "t4")    return codomain_driver(id, complete, any_subset, true);
            if (id == "c2.11") return codomain_driver(id, complete, any_subset, false);
            if (id == "c6")    return codomain_driver(id, complete, any_subset, false);
            if (id == "t46")
                return codomain_driver(id, [] (const Poset & p) { return is_quasilattice(p).holds; }, any_subset, true);
            if (id == "t53")
                return codomain_driver(id, [] (const Poset & p) { return is_local_complete_lattice(p).holds; },
                        has_extremes, true);
            if (id == "t5")  return t5_driver;
            if (id == "l6")  return l6_driver;
            if (id == "l3")  return l3_driver;
            if (id == "t10") return t10_driver;
            return s43_driver;
        }
    }

    auto theorem_ids() -> const vector<string> &
    {
        static const vector<string> ids{ "t4", "c2.11", "c6", "t5", "l6", "l3", "t10", "s43", "t46", "t53" };
        return ids;
    }

    auto default_caps(const string & id) -> TheoremCaps
    {
        return entry(id).caps;
    }

    auto size_limit(const string & id) -> std::size_t
    {
        return entry(id).limit;
    }

    auto check_theorem(const string & id, optional<TheoremCaps> caps) -> TheoremCheckResult
    {
        auto & e = entry(id);
        Context ctx{ caps.value_or(e.caps) };
        if (ctx.caps.domain_size > e.limit || ctx.caps.codomain_size > e.limit)
            throw Error{ ErrorKind::cap_exceeded, fmt::format("'{}' accepts sizes up to {}", id, e.limit) };

        auto start = std::chrono::steady_clock::now();
        auto counterexample = driver(id)(ctx);
        auto elapsed = std::chrono::steady_clock::now() - start;

        TheoremCheckResult result;
        result.theorem = id;
        result.universe = universe_text(id, ctx.caps);
        result.caps = ctx.caps;
        result.pass = ! counterexample;
        result.checked = ctx.checked;
        result.counterexample = std::move(counterexample);
        result.millis = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
        return result;
    }

    auto replay(const TheoremCheckResult & result) -> bool
    {
        if (result.pass || ! result.counterexample)
            return false;
        auto & ce = *result.counterexample;
        if (ce.contains("map"))
            return instance_check(result.theorem, map_from_json(ce, {}).map).has_value();

        Context ctx{ result.caps };
        ctx.counting = false;
        return poset_check(ctx, result.theorem, share(poset_from_json(ce["poset"]))).has_value();
    }

    auto result_to_json(const TheoremCheckResult & result) -> Json
    {
        Json out{
            { "theorem", result.theorem },
            { "universe", result.universe },
            { "caps", {
                { "max_domain", result.caps.domain_size },
                { "max_codomain", result.caps.codomain_size },
                { "instance_cap", result.caps.instance_cap } } },
            { "pass", result.pass },
            { "checked", result.checked }
        };
        if (result.counterexample)
            out["counterexample"] = *result.counterexample;
        out["millis"] = result.millis;
        return out;
    }
}
