#include <posetext/classify.hh>
#include <posetext/errors.hh>

#include <deque>

using std::optional;
using std::vector;

namespace posetext
{
    namespace
    {
        // sup and inf of every pair, with bounds taken inside `within`
        auto check_pairs(const Poset & p, const ElementSet & within) -> LatticeCheck
        {
            for (auto a : within)
                for (auto b = within.next_after(a) ; b != no_element ; b = within.next_after(b)) {
                    auto above = p.up_set(a) & p.up_set(b) & within;
                    if (! least_of(p, above))
                        return LatticeCheck{ false, ElementSet(p.size(), { a, b }), MissingBound::sup };
                    auto below = p.down_set(a) & p.down_set(b) & within;
                    if (! greatest_of(p, below))
                        return LatticeCheck{ false, ElementSet(p.size(), { a, b }), MissingBound::inf };
                }
            return LatticeCheck{ true, std::nullopt, MissingBound::none };
        }

        auto antichains_from(const Poset & p, ElementSet & current, std::size_t current_size, const ElementSet & allowed,
                optional<std::size_t> max_size, const std::function<auto (const ElementSet &) -> bool> & visit) -> bool
        {
            if (max_size && current_size + 1 >= *max_size)
                return true;
            for (auto e : allowed) {
                current.insert(e);
                if (! visit(current))
                    return false;
                auto next_allowed = allowed - p.up_set(e) - p.down_set(e);
                for (auto r = next_allowed.first() ; r != no_element && r < e ; r = next_allowed.next_after(r))
                    next_allowed.erase(r);
                if (! antichains_from(p, current, current_size + 1, next_allowed, max_size, visit))
                    return false;
                current.erase(e);
            }
            return true;
        }

        auto check_betweenness(const Poset & p, optional<std::size_t> size_bound, bool bounded_only) -> BetweennessCheck
        {
            BetweennessCheck result{ true, std::nullopt, std::nullopt };
            for_each_antichain(p, p.all(), size_bound, [&] (const ElementSet & lower) -> bool {
                auto majorants = up_cone(p, lower);
                return for_each_antichain(p, majorants, size_bound, [&] (const ElementSet & upper) -> bool {
                    if (bounded_only) {
                        auto both = lower | upper;
                        if (down_cone(p, both).empty() || up_cone(p, both).empty())
                            return true;
                    }
                    if ((majorants & down_cone(p, upper)).empty()) {
                        result = BetweennessCheck{ false, lower, upper };
                        return false;
                    }
                    return true;
                });
            });
            return result;
        }
    }

    auto is_chain(const Poset & p) -> bool
    {
        for (Element i = 0 ; i < p.size() ; ++i)
            if ((p.up_set(i) | p.down_set(i)).count() != p.size())
                return false;
        return true;
    }

    auto is_lattice(const Poset & p) -> LatticeCheck
    {
        if (p.empty())
            throw Error{ ErrorKind::empty_poset, "lattice check on the empty poset" };

        auto result = check_pairs(p, p.all());
        if (! result)
            return result;
        if (! least(p))
            return LatticeCheck{ false, p.none(), MissingBound::sup };
        if (! greatest(p))
            return LatticeCheck{ false, p.none(), MissingBound::inf };
        return result;
    }

    auto is_complete_lattice(const Poset & p) -> bool
    {
        return ! p.empty() && is_lattice(p).holds;
    }

    auto is_complete_lattice_exhaustive(const Poset & p) -> bool
    {
        if (p.size() > exhaustive_lattice_cap)
            throw Error{ ErrorKind::size_cap_exceeded, "exhaustive subset check is limited to "
                + std::to_string(exhaustive_lattice_cap) + " elements" };
        if (p.empty())
            return false;

        std::uint64_t subsets = std::uint64_t{ 1 } << p.size();
        for (std::uint64_t mask = 1 ; mask < subsets ; ++mask) {
            auto s = ElementSet::from_mask(p.size(), mask);
            if (! sup_of(p, s) || ! inf_of(p, s))
                return false;
        }
        return true;
    }

    auto for_each_antichain(const Poset & p, const ElementSet & within, optional<std::size_t> max_size,
            const std::function<auto (const ElementSet &) -> bool> & visit) -> bool
    {
        if (max_size && *max_size == 0)
            return true;
        auto current = p.none();
        if (! visit(current))
            return false;
        return antichains_from(p, current, 0, within, max_size, visit);
    }

    auto is_quasilattice(const Poset & p, optional<std::size_t> size_bound) -> BetweennessCheck
    {
        return check_betweenness(p, size_bound, false);
    }

    auto is_local_quasilattice(const Poset & p, optional<std::size_t> size_bound) -> BetweennessCheck
    {
        return check_betweenness(p, size_bound, true);
    }

    auto is_local_complete_lattice(const Poset & p) -> IntervalCheck
    {
        for (Element lo = 0 ; lo < p.size() ; ++lo)
            for (auto hi : p.up_set(lo)) {
                auto failure = check_pairs(p, interval(p, lo, hi));
                if (! failure)
                    return IntervalCheck{ false, ElementPair{ lo, hi }, failure };
            }
        return IntervalCheck{ true, std::nullopt, LatticeCheck{ true, std::nullopt, MissingBound::none } };
    }

    auto components(const Poset & p) -> vector<ElementSet>
    {
        vector<ElementSet> result;
        auto unvisited = p.all();
        while (! unvisited.empty()) {
            auto start = unvisited.first();
            auto component = p.none();
            std::deque<Element> queue{ start };
            component.insert(start);
            unvisited.erase(start);
            while (! queue.empty()) {
                auto x = queue.front();
                queue.pop_front();
                auto neighbours = (p.up_set(x) | p.down_set(x)) & unvisited;
                for (auto y : neighbours) {
                    component.insert(y);
                    unvisited.erase(y);
                    queue.push_back(y);
                }
            }
            result.push_back(std::move(component));
        }
        return result;
    }

    auto z_embedding(const Poset & p) -> optional<vector<std::int64_t>>
    {
        auto parts = components(p);
        vector<std::int64_t> result(p.size(), 0);
        std::int64_t next_free = 0;
        bool first_component = true;

        for (auto & part : parts) {
            auto rank = [&] (Element x) { return static_cast<std::int64_t>((p.down_set(x) & part).count()) - 1; };

            for (auto x : part)
                if (((p.up_set(x) | p.down_set(x)) & part) != part)
                    return std::nullopt;

            auto anchor = part.first();
            std::int64_t anchor_value = first_component ? 0 : next_free + rank(anchor);
            std::int64_t highest = anchor_value;
            for (auto x : part) {
                result[x] = anchor_value + rank(x) - rank(anchor);
                highest = std::max(highest, result[x]);
            }
            next_free = highest + 2;
            first_component = false;
        }
        return result;
    }

    auto classify(const Poset & p) -> ClassificationReport
    {
        ClassificationReport r;
        r.size = p.size();
        r.chain = is_chain(p);

        if (p.empty())
            r.lattice_check = LatticeCheck{ false, p.none(), MissingBound::sup };
        else
            r.lattice_check = is_lattice(p);
        r.lattice = r.lattice_check.holds;
        r.complete_lattice = is_complete_lattice(p);

        r.quasilattice_check = is_quasilattice(p);
        r.quasilattice = r.quasilattice_check.holds;
        r.local_complete_lattice_check = is_local_complete_lattice(p);
        r.local_complete_lattice = r.local_complete_lattice_check.holds;
        r.local_quasilattice_check = is_local_quasilattice(p);
        r.local_quasilattice = r.local_quasilattice_check.holds;

        r.components = components(p);
        r.z_embedding = z_embedding(p);
        r.z_embeddable = r.z_embedding.has_value();
        return r;
    }
}
