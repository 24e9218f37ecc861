#include <posetext/errors.hh>
#include <posetext/monotone_map.hh>

using std::vector;

namespace posetext
{
    MonotoneMap::MonotoneMap(PosetPtr domain, PosetPtr codomain, vector<Element> assignment) :
        _domain(std::move(domain)),
        _codomain(std::move(codomain)),
        _assignment(std::move(assignment))
    {
        if (! _domain || ! _codomain)
            throw Error{ ErrorKind::invalid_argument, "map needs both a domain and a codomain" };
        if (_assignment.size() != _domain->size())
            throw Error{ ErrorKind::invalid_argument, "assignment length differs from the domain size" };
        for (auto y : _assignment)
            if (y != no_element && y >= _codomain->size())
                throw Error{ ErrorKind::invalid_argument, "assignment points outside the codomain" };
    }

    MonotoneMap::MonotoneMap(PosetPtr domain, PosetPtr codomain) :
        MonotoneMap(domain, std::move(codomain), vector<Element>(domain ? domain->size() : 0, no_element))
    {
    }

    auto MonotoneMap::from_labels(PosetPtr domain, PosetPtr codomain, const vector<LabelPair> & pairs) -> MonotoneMap
    {
        vector<Element> assignment(domain->size(), no_element);
        for (auto & [x, y] : pairs) {
            auto xi = domain->index_of(x);
            if (assignment[xi] != no_element)
                throw Error{ ErrorKind::duplicate_label, "'" + x + "' is assigned twice" };
            assignment[xi] = codomain->index_of(y);
        }
        return MonotoneMap{ std::move(domain), std::move(codomain), std::move(assignment) };
    }

    auto MonotoneMap::defined_on() const -> ElementSet
    {
        ElementSet result(_assignment.size());
        for (Element x = 0 ; x < _assignment.size() ; ++x)
            if (_assignment[x] != no_element)
                result.insert(x);
        return result;
    }

    auto MonotoneMap::is_total() const -> bool
    {
        for (auto y : _assignment)
            if (y == no_element)
                return false;
        return true;
    }

    auto MonotoneMap::with_codomain(PosetPtr codomain) const -> MonotoneMap
    {
        return MonotoneMap{ _domain, std::move(codomain), _assignment };
    }

    auto MonotoneMap::dualised() const -> MonotoneMap
    {
        return MonotoneMap{ share(dual(*_domain)), share(dual(*_codomain)), _assignment };
    }

    auto MonotoneMap::operator== (const MonotoneMap & other) const -> bool
    {
        return _assignment == other._assignment && *_domain == *other._domain && *_codomain == *other._codomain;
    }

    auto check_isotone(const Poset & domain, const Poset & codomain, std::span<const Element> assignment) -> bool
    {
        for (Element x = 0 ; x < domain.size() ; ++x) {
            if (assignment[x] == no_element)
                continue;
            for (auto y : domain.up_set(x))
                if (assignment[y] != no_element && ! codomain.leq(assignment[x], assignment[y]))
                    return false;
        }
        return true;
    }

    auto check_isotone(const MonotoneMap & f, bool total) -> bool
    {
        if (total && ! f.is_total())
            return false;
        return check_isotone(f.domain(), f.codomain(), f.assignment());
    }

    auto is_isotone_extension(const MonotoneMap & f, const MonotoneMap & g) -> bool
    {
        if (! check_isotone(g, true))
            return false;
        for (Element x = 0 ; x < f.domain().size() ; ++x)
            if (f.defined(x) && f[x] != g[x])
                return false;
        return true;
    }
}
