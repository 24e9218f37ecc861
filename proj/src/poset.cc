#include <posetext/errors.hh>
#include <posetext/poset.hh>

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

using std::optional;
using std::string;
using std::string_view;
using std::vector;

namespace posetext
{
    namespace
    {
        auto check_unique(const vector<string> & labels) -> void
        {
            std::unordered_set<string_view> seen;
            for (auto & l : labels)
                if (! seen.insert(l).second)
                    throw Error{ ErrorKind::duplicate_label, "label '" + l + "' appears more than once" };
        }

        auto check_same_universe(const Poset & p, const ElementSet & s) -> void
        {
            if (s.universe() != p.size())
                throw Error{ ErrorKind::invalid_argument, "element set does not belong to this poset" };
        }

        auto close_and_check(const vector<string> & labels, vector<ElementSet> & up) -> void
        {
            auto n = labels.size();
            for (Element i = 0 ; i < n ; ++i)
                up[i].insert(i);

            // Warshall over bit rows
            for (Element k = 0 ; k < n ; ++k)
                for (Element i = 0 ; i < n ; ++i)
                    if (i != k && up[i].contains(k))
                        up[i] |= up[k];

            for (Element i = 0 ; i < n ; ++i)
                for (auto j : up[i])
                    if (j != i && up[j].contains(i))
                        throw Error{ ErrorKind::cycle_detected, "'" + labels[i] + "' and '" + labels[j] + "' lie on a cycle" };
        }

        auto disjoint_labels(const Poset & p, const Poset & q) -> std::pair<vector<string>, vector<string>>
        {
            std::unordered_set<string_view> left(p.labels().begin(), p.labels().end());
            bool clash = std::any_of(q.labels().begin(), q.labels().end(), [&] (auto & l) { return left.contains(l); });
            if (! clash)
                return { p.labels(), q.labels() };

            vector<string> a, b;
            for (auto & l : p.labels())
                a.push_back("0:" + l);
            for (auto & l : q.labels())
                b.push_back("1:" + l);
            return { a, b };
        }

        auto combine(const Poset & p, const Poset & q, bool p_below_q) -> Poset
        {
            auto [pl, ql] = disjoint_labels(p, q);
            auto n = p.size() + q.size();
            vector<string> labels = std::move(pl);
            labels.insert(labels.end(), ql.begin(), ql.end());

            vector<ElementSet> up(n, ElementSet(n));
            for (Element i = 0 ; i < p.size() ; ++i) {
                for (auto j : p.up_set(i))
                    up[i].insert(j);
                if (p_below_q)
                    for (Element j = 0 ; j < q.size() ; ++j)
                        up[i].insert(p.size() + j);
            }
            for (Element i = 0 ; i < q.size() ; ++i)
                for (auto j : q.up_set(i))
                    up[p.size() + i].insert(p.size() + j);

            return Poset::from_order(std::move(labels), std::move(up));
        }
    }

    Poset::Poset(vector<string> labels, vector<ElementSet> up) :
        _labels(std::move(labels)),
        _up(std::move(up))
    {
        auto n = _labels.size();
        _down.assign(n, ElementSet(n));
        for (Element i = 0 ; i < n ; ++i)
            for (auto j : _up[i])
                _down[j].insert(i);

        _upper_covers.assign(n, ElementSet(n));
        _lower_covers.assign(n, ElementSet(n));
        for (Element i = 0 ; i < n ; ++i) {
            auto strictly_above = _up[i];
            strictly_above.erase(i);
            for (auto j : strictly_above) {
                auto between = strictly_above & _down[j];
                between.erase(j);
                if (between.empty()) {
                    _upper_covers[i].insert(j);
                    _lower_covers[j].insert(i);
                }
            }
        }
    }

    auto Poset::from_covers(vector<string> labels, const vector<LabelPair> & covers) -> Poset
    {
        check_unique(labels);
        std::unordered_map<string_view, Element> index;
        for (Element i = 0 ; i < labels.size() ; ++i)
            index.emplace(labels[i], i);

        vector<ElementPair> pairs;
        pairs.reserve(covers.size());
        for (auto & [a, b] : covers) {
            auto ia = index.find(a), ib = index.find(b);
            if (ia == index.end())
                throw Error{ ErrorKind::unknown_label, "cover references unknown label '" + a + "'" };
            if (ib == index.end())
                throw Error{ ErrorKind::unknown_label, "cover references unknown label '" + b + "'" };
            pairs.emplace_back(ia->second, ib->second);
        }

        return from_pairs(std::move(labels), pairs);
    }

    auto Poset::from_pairs(vector<string> labels, const vector<ElementPair> & pairs) -> Poset
    {
        check_unique(labels);
        auto n = labels.size();
        vector<ElementSet> up(n, ElementSet(n));
        for (auto [a, b] : pairs) {
            if (a >= n || b >= n)
                throw Error{ ErrorKind::invalid_argument, "pair index out of range" };
            if (a == b)
                throw Error{ ErrorKind::cycle_detected, "'" + labels[a] + "' is declared strictly below itself" };
            up[a].insert(b);
        }
        close_and_check(labels, up);
        return Poset{ std::move(labels), std::move(up) };
    }

    auto Poset::from_order(vector<string> labels, vector<ElementSet> up) -> Poset
    {
        check_unique(labels);
        auto n = labels.size();
        if (up.size() != n)
            throw Error{ ErrorKind::invalid_argument, "relation has the wrong number of rows" };

        for (Element i = 0 ; i < n ; ++i) {
            if (up[i].universe() != n)
                throw Error{ ErrorKind::invalid_argument, "relation row has the wrong width" };
            if (! up[i].contains(i))
                throw Error{ ErrorKind::invalid_argument, "relation is not reflexive at '" + labels[i] + "'" };
        }

        for (Element i = 0 ; i < n ; ++i)
            for (auto j : up[i]) {
                if (j != i && up[j].contains(i))
                    throw Error{ ErrorKind::cycle_detected, "'" + labels[i] + "' and '" + labels[j] + "' lie on a cycle" };
                if (! up[j].is_subset_of(up[i]))
                    throw Error{ ErrorKind::invalid_argument, "relation is not transitive through '" + labels[j] + "'" };
            }

        return Poset{ std::move(labels), std::move(up) };
    }

    auto Poset::find(string_view label) const -> optional<Element>
    {
        for (Element i = 0 ; i < _labels.size() ; ++i)
            if (_labels[i] == label)
                return i;
        return std::nullopt;
    }

    auto Poset::index_of(string_view label) const -> Element
    {
        if (auto e = find(label))
            return *e;
        throw Error{ ErrorKind::unknown_label, "no element labelled '" + string{ label } + "'" };
    }

    auto Poset::covers() const -> vector<ElementPair>
    {
        vector<ElementPair> result;
        for (Element i = 0 ; i < size() ; ++i)
            for (auto j : _upper_covers[i])
                result.emplace_back(i, j);
        return result;
    }

    auto Poset::subset(const vector<string> & labels) const -> ElementSet
    {
        ElementSet result(size());
        for (auto & l : labels)
            result.insert(index_of(l));
        return result;
    }

    auto Poset::subset_labels(const ElementSet & s) const -> vector<string>
    {
        vector<string> result;
        for (auto e : s)
            result.push_back(_labels[e]);
        return result;
    }

    auto Poset::operator== (const Poset & other) const -> bool
    {
        return _labels == other._labels && _up == other._up;
    }

    auto down_cone(const Poset & p, const ElementSet & s) -> ElementSet
    {
        check_same_universe(p, s);
        auto result = p.all();
        for (auto a : s)
            result &= p.down_set(a);
        return result;
    }

    auto up_cone(const Poset & p, const ElementSet & s) -> ElementSet
    {
        check_same_universe(p, s);
        auto result = p.all();
        for (auto a : s)
            result &= p.up_set(a);
        return result;
    }

    auto least_of(const Poset & p, const ElementSet & s) -> optional<Element>
    {
        for (auto c : s)
            if (s.is_subset_of(p.up_set(c)))
                return c;
        return std::nullopt;
    }

    auto greatest_of(const Poset & p, const ElementSet & s) -> optional<Element>
    {
        for (auto c : s)
            if (s.is_subset_of(p.down_set(c)))
                return c;
        return std::nullopt;
    }

    auto minimal_elements(const Poset & p, const ElementSet & s) -> ElementSet
    {
        auto result = s;
        for (auto c : s) {
            auto below = p.down_set(c) & s;
            below.erase(c);
            if (! below.empty())
                result.erase(c);
        }
        return result;
    }

    auto maximal_elements(const Poset & p, const ElementSet & s) -> ElementSet
    {
        auto result = s;
        for (auto c : s) {
            auto above = p.up_set(c) & s;
            above.erase(c);
            if (! above.empty())
                result.erase(c);
        }
        return result;
    }

    auto sup_of(const Poset & p, const ElementSet & s) -> optional<Element>
    {
        return least_of(p, up_cone(p, s));
    }

    auto inf_of(const Poset & p, const ElementSet & s) -> optional<Element>
    {
        return greatest_of(p, down_cone(p, s));
    }

    auto least(const Poset & p) -> optional<Element>
    {
        return least_of(p, p.all());
    }

    auto greatest(const Poset & p) -> optional<Element>
    {
        return greatest_of(p, p.all());
    }

    auto interval(const Poset & p, Element lo, Element hi) -> ElementSet
    {
        return p.up_set(lo) & p.down_set(hi);
    }

    auto is_antichain(const Poset & p, const ElementSet & s) -> bool
    {
        for (auto a : s) {
            auto related = (p.up_set(a) | p.down_set(a)) & s;
            related.erase(a);
            if (! related.empty())
                return false;
        }
        return true;
    }

    auto dual(const Poset & p) -> Poset
    {
        vector<ElementSet> up;
        up.reserve(p.size());
        for (Element i = 0 ; i < p.size() ; ++i)
            up.push_back(p.down_set(i));
        return Poset::from_order(p.labels(), std::move(up));
    }

    auto induced(const Poset & p, const ElementSet & s) -> Poset
    {
        check_same_universe(p, s);
        if (s.empty())
            throw Error{ ErrorKind::empty_subset, "cannot induce a subposet on the empty set" };

        auto members = s.members();
        auto n = members.size();
        vector<string> labels;
        vector<ElementSet> up(n, ElementSet(n));
        for (Element i = 0 ; i < n ; ++i) {
            labels.push_back(p.label(members[i]));
            for (Element j = 0 ; j < n ; ++j)
                if (p.leq(members[i], members[j]))
                    up[i].insert(j);
        }
        return Poset::from_order(std::move(labels), std::move(up));
    }

    auto cardinal_sum(const Poset & p, const Poset & q) -> Poset
    {
        return combine(p, q, false);
    }

    auto lex_sum(const Poset & p, const Poset & q) -> Poset
    {
        return combine(p, q, true);
    }

    auto downset_embedding(const Poset & p, std::size_t cap) -> PowersetEmbedding
    {
        auto n = p.size();
        if (n > cap || n >= 63)
            throw Error{ ErrorKind::size_cap_exceeded, "powerset of " + std::to_string(n) + " elements exceeds the cap of "
                + std::to_string(cap) };

        std::size_t m = std::size_t{ 1 } << n;
        vector<string> labels;
        labels.reserve(m);
        for (std::size_t mask = 0 ; mask < m ; ++mask) {
            string l = "{";
            bool first = true;
            for (Element i = 0 ; i < n ; ++i)
                if ((mask >> i) & 1) {
                    if (! first)
                        l += ",";
                    l += p.label(i);
                    first = false;
                }
            labels.push_back(l + "}");
        }

        vector<ElementSet> up(m, ElementSet(m));
        for (std::size_t a = 0 ; a < m ; ++a)
            for (std::size_t b = 0 ; b < m ; ++b)
                if ((a & b) == a)
                    up[a].insert(b);

        PowersetEmbedding result{ Poset::from_order(std::move(labels), std::move(up)), { } };
        for (Element x = 0 ; x < n ; ++x)
            result.image.push_back(static_cast<Element>(p.down_set(x).mask()));
        return result;
    }

    auto immediate_predecessors(const Poset & p, Element x) -> ElementSet
    {
        return p.lower_covers(x);
    }

    auto immediate_successors(const Poset & p, Element x) -> ElementSet
    {
        return p.upper_covers(x);
    }

    auto linear_extension(const Poset & p) -> vector<Element>
    {
        auto n = p.size();
        vector<std::size_t> pending(n);
        for (Element i = 0 ; i < n ; ++i)
            pending[i] = p.lower_covers(i).count();

        vector<Element> result;
        result.reserve(n);
        auto available = p.none();
        for (Element i = 0 ; i < n ; ++i)
            if (pending[i] == 0)
                available.insert(i);

        while (! available.empty()) {
            auto next = available.first();
            available.erase(next);
            result.push_back(next);
            for (auto succ : p.upper_covers(next))
                if (--pending[succ] == 0)
                    available.insert(succ);
        }
        return result;
    }
}
