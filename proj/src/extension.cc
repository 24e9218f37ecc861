#include <posetext/classify.hh>
#include <posetext/errors.hh>
#include <posetext/extension.hh>

#include <algorithm>
#include <string>

using std::optional;
using std::vector;

namespace posetext
{
    namespace
    {
        auto require_isotone(const MonotoneMap & f) -> void
        {
            if (! check_isotone(f))
                throw Error{ ErrorKind::input_not_isotone, "the partial map is not isotone on its domain of definition" };
        }

        auto require_complete_codomain(const MonotoneMap & f) -> void
        {
            if (! is_complete_lattice(f.codomain()))
                throw Error{ ErrorKind::codomain_not_complete_lattice, "codomain is not a complete lattice" };
        }

        // Values allowed at x given the assigned elements: above every image from
        // below x, below every image from above x.
        auto candidates(const MonotoneMap & f, std::span<const Element> assignment, Element x) -> ElementSet
        {
            auto & X = f.domain();
            auto & Y = f.codomain();
            auto result = Y.all();
            for (auto t : X.down_set(x))
                if (t != x && assignment[t] != no_element)
                    result &= Y.up_set(assignment[t]);
            for (auto t : X.up_set(x))
                if (t != x && assignment[t] != no_element)
                    result &= Y.down_set(assignment[t]);
            return result;
        }

        struct Search
        {
            const Poset & X;
            const Poset & Y;
            vector<Element> assignment;
            vector<ElementSet> domains;
            vector<Element> order;

            // fail-first: the unassigned element with fewest candidates, ties broken by position in order
            auto pick() const -> optional<Element>
            {
                optional<Element> best;
                std::size_t best_count = 0;
                for (auto x : order)
                    if (assignment[x] == no_element) {
                        auto c = domains[x].count();
                        if (! best || c < best_count) {
                            best = x;
                            best_count = c;
                        }
                    }
                return best;
            }

            auto solve() -> bool
            {
                auto next = pick();
                if (! next)
                    return true;
                auto x = *next;

                auto options = domains[x];
                for (auto y : options) {
                    auto saved = domains;
                    assignment[x] = y;
                    bool consistent = true;
                    for (auto z : order) {
                        if (assignment[z] != no_element)
                            continue;
                        if (X.less(x, z))
                            domains[z] &= Y.up_set(y);
                        else if (X.less(z, x))
                            domains[z] &= Y.down_set(y);
                        else
                            continue;
                        if (domains[z].empty()) {
                            consistent = false;
                            break;
                        }
                    }
                    if (consistent && solve())
                        return true;
                    assignment[x] = no_element;
                    domains = std::move(saved);
                }
                return false;
            }
        };

        auto extension_search(const MonotoneMap & f) -> optional<vector<Element>>
        {
            auto & X = f.domain();
            Search search{ X, f.codomain(), vector<Element>(f.assignment().begin(), f.assignment().end()), { }, { } };
            search.domains.assign(X.size(), ElementSet(f.codomain().size()));

            for (auto x : linear_extension(X))
                if (! f.defined(x)) {
                    search.order.push_back(x);
                    search.domains[x] = candidates(f, f.assignment(), x);
                    if (search.domains[x].empty())
                        return std::nullopt;
                }

            if (! search.solve())
                return std::nullopt;
            return search.assignment;
        }
    }

    auto lower_extension(const MonotoneMap & f) -> MonotoneMap
    {
        require_complete_codomain(f);
        require_isotone(f);

        auto & X = f.domain();
        auto & Y = f.codomain();
        vector<Element> result(X.size());
        for (Element x = 0 ; x < X.size() ; ++x) {
            auto images = Y.none();
            for (auto t : X.down_set(x))
                if (f.defined(t))
                    images.insert(f[t]);
            result[x] = *sup_of(Y, images);
        }
        return MonotoneMap{ f.domain_ptr(), f.codomain_ptr(), std::move(result) };
    }

    auto upper_extension(const MonotoneMap & f) -> MonotoneMap
    {
        require_complete_codomain(f);
        require_isotone(f);

        auto & X = f.domain();
        auto & Y = f.codomain();
        vector<Element> result(X.size());
        for (Element x = 0 ; x < X.size() ; ++x) {
            auto images = Y.none();
            for (auto t : X.up_set(x))
                if (f.defined(t))
                    images.insert(f[t]);
            result[x] = *inf_of(Y, images);
        }
        return MonotoneMap{ f.domain_ptr(), f.codomain_ptr(), std::move(result) };
    }

    auto extend_greedy(const MonotoneMap & f, optional<std::span<const Element>> order) -> optional<MonotoneMap>
    {
        require_isotone(f);
        auto & X = f.domain();
        auto & Y = f.codomain();

        vector<Element> steps;
        if (order) {
            auto seen = X.none();
            for (auto x : *order) {
                if (x >= X.size() || f.defined(x) || seen.contains(x))
                    throw Error{ ErrorKind::invalid_argument, "greedy order must list each undefined element exactly once" };
                seen.insert(x);
                steps.push_back(x);
            }
            if (seen != X.all() - f.defined_on())
                throw Error{ ErrorKind::invalid_argument, "greedy order must list each undefined element exactly once" };
        }
        else {
            for (auto x : linear_extension(X))
                if (! f.defined(x))
                    steps.push_back(x);
        }

        vector<Element> assignment(f.assignment().begin(), f.assignment().end());
        for (auto x : steps) {
            auto valid = candidates(f, assignment, x);
            if (valid.empty())
                return std::nullopt;
            assignment[x] = minimal_elements(Y, valid).first();
        }
        return MonotoneMap{ f.domain_ptr(), f.codomain_ptr(), std::move(assignment) };
    }

    auto extend_exists(const MonotoneMap & f) -> optional<MonotoneMap>
    {
        require_isotone(f);
        auto found = extension_search(f);
        if (! found)
            return std::nullopt;
        return MonotoneMap{ f.domain_ptr(), f.codomain_ptr(), std::move(*found) };
    }

    auto extend_chain_components(const PosetPtr & domain, const ElementSet & a, Element fallback) -> MonotoneMap
    {
        auto & X = *domain;
        if (a.universe() != X.size())
            throw Error{ ErrorKind::invalid_argument, "subset does not belong to the domain" };
        if (a.empty())
            throw Error{ ErrorKind::empty_a, "the subset to retract onto is empty" };
        if (! a.contains(fallback))
            throw Error{ ErrorKind::invalid_argument, "fallback element is not in the subset" };

        auto parts = components(X);
        for (auto & part : parts)
            for (auto x : part)
                if (((X.up_set(x) | X.down_set(x)) & part) != part)
                    throw Error{ ErrorKind::component_not_chain, "component containing '" + X.label(x) + "' is not a chain" };

        // position of each member of a inside induced(X, a)
        vector<Element> position(X.size(), no_element);
        Element next = 0;
        for (auto t : a)
            position[t] = next++;

        vector<Element> assignment(X.size());
        for (auto & part : parts) {
            auto local = a & part;
            for (auto x : part) {
                if (local.empty())
                    assignment[x] = position[fallback];
                else {
                    auto below = X.down_set(x) & local;
                    auto target = below.empty() ? least_of(X, local) : greatest_of(X, below);
                    assignment[x] = position[*target];
                }
            }
        }
        return MonotoneMap{ domain, share(induced(X, a)), std::move(assignment) };
    }

    auto extend_preserving_extremes(const MonotoneMap & f) -> optional<MonotoneMap>
    {
        auto & X = f.domain();
        auto & Y = f.codomain();
        auto defined = f.defined_on();
        auto low = least_of(X, defined), high = greatest_of(X, defined);
        if (! low || ! high)
            throw Error{ ErrorKind::no_extremes_in_a, "the defined part has no least or no greatest element" };
        require_isotone(f);

        auto window = interval(Y, f[*low], f[*high]);
        vector<Element> position(Y.size(), no_element), member;
        for (auto y : window) {
            position[y] = member.size();
            member.push_back(y);
        }

        vector<Element> restricted(X.size(), no_element);
        for (auto x : defined)
            restricted[x] = position[f[x]];

        MonotoneMap into_window{ f.domain_ptr(), share(induced(Y, window)), std::move(restricted) };
        auto found = extension_search(into_window);
        if (! found)
            return std::nullopt;

        vector<Element> result(X.size());
        for (Element x = 0 ; x < X.size() ; ++x)
            result[x] = member[(*found)[x]];
        return MonotoneMap{ f.domain_ptr(), f.codomain_ptr(), std::move(result) };
    }

    ExtensionFamily::ExtensionFamily(MonotoneMap base, vector<vector<Element>> members) :
        _base(std::move(base)),
        _members(std::move(members))
    {
    }

    auto ExtensionFamily::member(std::size_t i) const -> MonotoneMap
    {
        return MonotoneMap{ _base.domain_ptr(), _base.codomain_ptr(), _members[i] };
    }

    auto ExtensionFamily::leq(std::size_t i, std::size_t j) const -> bool
    {
        auto & Y = _base.codomain();
        for (Element x = 0 ; x < _members[i].size() ; ++x)
            if (! Y.leq(_members[i][x], _members[j][x]))
                return false;
        return true;
    }

    auto ExtensionFamily::as_poset() const -> Poset
    {
        auto n = _members.size();
        vector<std::string> labels;
        vector<ElementSet> up(n, ElementSet(n));
        for (std::size_t i = 0 ; i < n ; ++i) {
            labels.push_back("g" + std::to_string(i));
            for (std::size_t j = 0 ; j < n ; ++j)
                if (leq(i, j))
                    up[i].insert(j);
        }
        return Poset::from_order(std::move(labels), std::move(up));
    }

    auto ExtensionFamily::bottom() const -> optional<std::size_t>
    {
        for (std::size_t i = 0 ; i < _members.size() ; ++i) {
            bool below_all = true;
            for (std::size_t j = 0 ; j < _members.size() && below_all ; ++j)
                below_all = leq(i, j);
            if (below_all)
                return i;
        }
        return std::nullopt;
    }

    auto ExtensionFamily::top() const -> optional<std::size_t>
    {
        for (std::size_t i = 0 ; i < _members.size() ; ++i) {
            bool above_all = true;
            for (std::size_t j = 0 ; j < _members.size() && above_all ; ++j)
                above_all = leq(j, i);
            if (above_all)
                return i;
        }
        return std::nullopt;
    }

    auto enumerate_extensions(const MonotoneMap & f, std::size_t cap) -> ExtensionFamily
    {
        require_isotone(f);
        auto & X = f.domain();
        auto & Y = f.codomain();

        vector<Element> free;
        for (Element x = 0 ; x < X.size() ; ++x)
            if (! f.defined(x))
                free.push_back(x);

        std::size_t combinations = 1;
        for (std::size_t i = 0 ; i < free.size() ; ++i) {
            if (Y.size() != 0 && combinations > cap / Y.size())
                throw Error{ ErrorKind::cap_exceeded, "more than " + std::to_string(cap) + " candidate assignments" };
            combinations *= Y.size();
        }
        if (combinations > cap)
            throw Error{ ErrorKind::cap_exceeded, "more than " + std::to_string(cap) + " candidate assignments" };

        vector<vector<Element>> members;
        vector<Element> assignment(f.assignment().begin(), f.assignment().end());
        if (free.empty()) {
            members.push_back(assignment);
            return ExtensionFamily{ f, std::move(members) };
        }
        if (Y.empty())
            return ExtensionFamily{ f, std::move(members) };

        for (auto x : free)
            assignment[x] = 0;

        // odometer over the free elements, last free element fastest, giving lexicographic order
        while (true) {
            if (check_isotone(X, Y, assignment))
                members.push_back(assignment);

            auto i = free.size();
            while (i > 0) {
                auto x = free[i - 1];
                if (++assignment[x] < Y.size())
                    break;
                assignment[x] = 0;
                --i;
            }
            if (i == 0)
                break;
        }
        return ExtensionFamily{ f, std::move(members) };
    }
}
