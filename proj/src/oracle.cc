#include <posetext/errors.hh>
#include <posetext/oracle.hh>

#include <algorithm>
#include <bit>
#include <set>
#include <string>
#include <tuple>

using std::uint64_t;
using std::vector;

namespace posetext::oracle
{
    namespace
    {
        // up[i] holds bit j iff i <= j; at most 8 elements
        struct Order
        {
            std::size_t n = 0;
            vector<uint64_t> up;
        };

        auto bit(std::size_t i) -> uint64_t { return uint64_t{ 1 } << i; }

        auto down_masks(const Order & o) -> vector<uint64_t>
        {
            vector<uint64_t> down(o.n, 0);
            for (std::size_t i = 0 ; i < o.n ; ++i)
                for (std::size_t j = 0 ; j < o.n ; ++j)
                    if (o.up[i] & bit(j))
                        down[j] |= bit(i);
            return down;
        }

        auto to_poset(const Order & o) -> Poset
        {
            vector<ElementSet> up;
            up.reserve(o.n);
            for (auto m : o.up)
                up.push_back(ElementSet::from_mask(o.n, m));
            return Poset::from_order(default_labels(o.n), std::move(up));
        }

        auto from_poset(const Poset & p) -> Order
        {
            if (p.size() > 8)
                throw Error{ ErrorKind::size_cap_exceeded, "canonical forms are limited to 8 elements" };
            Order o{ p.size(), { } };
            for (Element i = 0 ; i < p.size() ; ++i)
                o.up.push_back(p.up_set(i).mask());
            return o;
        }

        auto is_down_closed(uint64_t mask, const vector<uint64_t> & down) -> bool
        {
            for (std::size_t i = 0 ; i < down.size() ; ++i)
                if ((mask & bit(i)) && (down[i] & ~mask))
                    return false;
            return true;
        }

        auto is_up_closed(uint64_t mask, const vector<uint64_t> & up) -> bool
        {
            return is_down_closed(mask, up);
        }

        // every order on n+1 points whose first n points induce `base`, new point last
        template <typename Visit_>
        auto extend_by_one(const Order & base, Visit_ && visit) -> bool
        {
            auto m = base.n;
            auto down = down_masks(base);
            for (uint64_t d = 0 ; d < bit(m) ; ++d) {
                if (! is_down_closed(d, down))
                    continue;
                uint64_t allowed = bit(m) - 1;
                for (std::size_t i = 0 ; i < m ; ++i)
                    if (d & bit(i))
                        allowed &= base.up[i] & ~bit(i);
                allowed &= ~d;

                // subsets of allowed, including the empty one
                uint64_t u = 0;
                while (true) {
                    if (is_up_closed(u, base.up)) {
                        Order next{ m + 1, base.up };
                        next.up.push_back(bit(m) | 0);
                        for (std::size_t i = 0 ; i < m ; ++i) {
                            if (d & bit(i))
                                next.up[i] |= bit(m) | u;
                            if (u & bit(i))
                                next.up[m] |= bit(i);
                        }
                        if (! visit(next))
                            return false;
                    }
                    if (u == allowed)
                        break;
                    u = (u - allowed) & allowed;
                }
            }
            return true;
        }

        auto labeled_level(std::size_t n) -> vector<Order>
        {
            vector<Order> level{ Order{ 0, { } } };
            for (std::size_t k = 0 ; k < n ; ++k) {
                vector<Order> next;
                for (auto & o : level)
                    extend_by_one(o, [&] (const Order & e) { next.push_back(e); return true; });
                level = std::move(next);
            }
            return level;
        }

        auto code_of(const Order & o, const vector<std::size_t> & perm) -> uint64_t
        {
            uint64_t code = 0;
            for (std::size_t i = 0 ; i < o.n ; ++i)
                for (std::size_t j = 0 ; j < o.n ; ++j)
                    if (i != j && (o.up[perm[i]] & bit(perm[j])))
                        code |= uint64_t{ 1 } << (i * o.n + j);
            return code;
        }

        auto order_code(const Order & o) -> uint64_t
        {
            auto n = o.n;
            if (n > 8)
                throw Error{ ErrorKind::size_cap_exceeded, "canonical forms are limited to 8 elements" };
            auto down = down_masks(o);

            vector<std::size_t> by_depth(n);
            for (std::size_t i = 0 ; i < n ; ++i)
                by_depth[i] = i;
            std::sort(by_depth.begin(), by_depth.end(), [&] (auto a, auto b) {
                return std::popcount(down[a]) < std::popcount(down[b]);
            });
            vector<int> height(n, 0);
            for (auto x : by_depth)
                for (std::size_t y = 0 ; y < n ; ++y)
                    if (y != x && (down[x] & bit(y)))
                        height[x] = std::max(height[x], height[y] + 1);

            using Key = std::tuple<int, int, int>;
            auto key = [&] (std::size_t x) -> Key {
                return { std::popcount(down[x]), std::popcount(o.up[x]), height[x] };
            };

            vector<std::size_t> sorted(n);
            for (std::size_t i = 0 ; i < n ; ++i)
                sorted[i] = i;
            std::sort(sorted.begin(), sorted.end(), [&] (auto a, auto b) {
                return key(a) < key(b) || (key(a) == key(b) && a < b);
            });

            vector<std::pair<std::size_t, std::size_t>> classes;
            for (std::size_t i = 0 ; i < n ; ) {
                auto j = i;
                while (j < n && key(sorted[j]) == key(sorted[i]))
                    ++j;
                if (j - i > 8)
                    throw Error{ ErrorKind::size_cap_exceeded, "refinement class larger than 8 elements" };
                classes.emplace_back(i, j);
                i = j;
            }

            uint64_t best = ~uint64_t{ 0 };
            auto perm = sorted;
            std::function<void (std::size_t)> permute = [&] (std::size_t c) {
                if (c == classes.size()) {
                    best = std::min(best, code_of(o, perm));
                    return;
                }
                auto [lo, hi] = classes[c];
                std::sort(perm.begin() + lo, perm.begin() + hi);
                do
                    permute(c + 1);
                while (std::next_permutation(perm.begin() + lo, perm.begin() + hi));
            };
            permute(0);
            return n == 0 ? 0 : best;
        }

        auto order_from_code(std::size_t n, uint64_t code) -> Order
        {
            Order o{ n, vector<uint64_t>(n, 0) };
            for (std::size_t i = 0 ; i < n ; ++i) {
                o.up[i] |= bit(i);
                for (std::size_t j = 0 ; j < n ; ++j)
                    if (code & (uint64_t{ 1 } << (i * n + j)))
                        o.up[i] |= bit(j);
            }
            return o;
        }

        auto iso_level(std::size_t n) -> std::set<uint64_t>
        {
            std::set<uint64_t> level{ 0 };
            for (std::size_t k = 0 ; k < n ; ++k) {
                std::set<uint64_t> next;
                for (auto code : level) {
                    auto base = order_from_code(k, code);
                    auto down = down_masks(base);
                    // new element placed maximal: every order arises by removing a maximal element
                    for (uint64_t d = 0 ; d < bit(k) ; ++d) {
                        if (! is_down_closed(d, down))
                            continue;
                        Order e{ k + 1, base.up };
                        e.up.push_back(bit(k));
                        for (std::size_t i = 0 ; i < k ; ++i)
                            if (d & bit(i))
                                e.up[i] |= bit(k);
                        next.insert(order_code(e));
                    }
                }
                level = std::move(next);
            }
            return level;
        }

        auto isotone_by_filter(const Poset & x, const Poset & y, const vector<Element> & a) -> bool
        {
            for (Element i = 0 ; i < x.size() ; ++i)
                for (Element j = 0 ; j < x.size() ; ++j)
                    if (a[i] != no_element && a[j] != no_element && x.leq(i, j) && ! y.leq(a[i], a[j]))
                        return false;
            return true;
        }
    }

    auto default_labels(std::size_t n) -> vector<std::string>
    {
        vector<std::string> labels;
        for (std::size_t i = 0 ; i < n ; ++i)
            labels.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i)) : "e" + std::to_string(i));
        return labels;
    }

    auto for_each_poset(std::size_t n, PosetMode mode, const std::function<auto (const Poset &) -> bool> & visit) -> bool
    {
        if (mode == PosetMode::labeled) {
            if (n > labeled_cap)
                throw Error{ ErrorKind::size_cap_exceeded, "labeled enumeration is limited to "
                    + std::to_string(labeled_cap) + " elements" };
            if (n == 0)
                return visit(Poset::from_order({ }, { }));
            for (auto & base : labeled_level(n - 1)) {
                bool go_on = extend_by_one(base, [&] (const Order & o) { return visit(to_poset(o)); });
                if (! go_on)
                    return false;
            }
            return true;
        }

        if (n > isomorphism_cap)
            throw Error{ ErrorKind::size_cap_exceeded, "enumeration up to isomorphism is limited to "
                + std::to_string(isomorphism_cap) + " elements" };
        for (auto code : iso_level(n))
            if (! visit(to_poset(order_from_code(n, code))))
                return false;
        return true;
    }

    auto enumerate_posets(std::size_t n, PosetMode mode) -> vector<Poset>
    {
        vector<Poset> result;
        for_each_poset(n, mode, [&] (const Poset & p) { result.push_back(p); return true; });
        return result;
    }

    auto posets_up_to_isomorphism(std::size_t lo, std::size_t hi) -> vector<Poset>
    {
        vector<Poset> result;
        for (auto n = lo ; n <= hi ; ++n)
            for_each_poset(n, PosetMode::up_to_isomorphism, [&] (const Poset & p) { result.push_back(p); return true; });
        return result;
    }

    auto one_point_extensions(const Poset & base) -> vector<Poset>
    {
        auto o = from_poset(base);
        vector<Poset> result;
        extend_by_one(o, [&] (const Order & e) {
            auto labels = base.labels();
            std::string fresh = "n" + std::to_string(base.size());
            while (base.find(fresh))
                fresh += "'";
            labels.push_back(fresh);
            vector<ElementSet> up;
            for (auto m : e.up)
                up.push_back(ElementSet::from_mask(e.n, m));
            result.push_back(Poset::from_order(std::move(labels), std::move(up)));
            return true;
        });
        return result;
    }

    auto count_orders_by_relation_filter(std::size_t n) -> uint64_t
    {
        if (n > 5)
            throw Error{ ErrorKind::size_cap_exceeded, "relation filter is limited to 5 elements" };
        vector<std::pair<std::size_t, std::size_t>> off_diagonal;
        for (std::size_t i = 0 ; i < n ; ++i)
            for (std::size_t j = 0 ; j < n ; ++j)
                if (i != j)
                    off_diagonal.emplace_back(i, j);

        uint64_t count = 0;
        for (uint64_t r = 0 ; r < (uint64_t{ 1 } << off_diagonal.size()) ; ++r) {
            bool rel[5][5] = { };
            for (std::size_t i = 0 ; i < n ; ++i)
                rel[i][i] = true;
            for (std::size_t k = 0 ; k < off_diagonal.size() ; ++k)
                if ((r >> k) & 1)
                    rel[off_diagonal[k].first][off_diagonal[k].second] = true;

            bool ok = true;
            for (std::size_t i = 0 ; i < n && ok ; ++i)
                for (std::size_t j = 0 ; j < n && ok ; ++j) {
                    if (i != j && rel[i][j] && rel[j][i])
                        ok = false;
                    for (std::size_t k = 0 ; k < n && ok ; ++k)
                        if (rel[i][j] && rel[j][k] && ! rel[i][k])
                            ok = false;
                }
            if (ok)
                ++count;
        }
        return count;
    }

    auto canonical_code(const Poset & p) -> uint64_t
    {
        return order_code(from_poset(p));
    }

    auto canonical_form(const Poset & p) -> Poset
    {
        return to_poset(order_from_code(p.size(), canonical_code(p)));
    }

    auto isomorphic(const Poset & p, const Poset & q) -> bool
    {
        return p.size() == q.size() && canonical_code(p) == canonical_code(q);
    }

    auto random_poset(std::size_t n, std::mt19937_64 & rng, double density) -> Poset
    {
        vector<Element> perm(n);
        for (Element i = 0 ; i < n ; ++i)
            perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);

        std::bernoulli_distribution related(density);
        vector<ElementPair> pairs;
        for (std::size_t i = 0 ; i < n ; ++i)
            for (std::size_t j = i + 1 ; j < n ; ++j)
                if (related(rng))
                    pairs.emplace_back(perm[i], perm[j]);
        return Poset::from_pairs(default_labels(n), pairs);
    }

    auto enumerate_isotone_maps(const Poset & x, const Poset & y, uint64_t cap) -> vector<vector<Element>>
    {
        uint64_t total = 1;
        for (std::size_t i = 0 ; i < x.size() ; ++i) {
            if (y.size() != 0 && total > cap / y.size())
                throw Error{ ErrorKind::cap_exceeded, "more than " + std::to_string(cap) + " assignments" };
            total *= y.size();
        }

        vector<vector<Element>> result;
        if (total == 0)
            return result;
        vector<Element> a(x.size(), 0);
        while (true) {
            if (isotone_by_filter(x, y, a))
                result.push_back(a);
            auto i = x.size();
            while (i > 0) {
                if (++a[i - 1] < y.size())
                    break;
                a[i - 1] = 0;
                --i;
            }
            if (i == 0)
                break;
        }
        return result;
    }

    auto count_isotone_maps_recursive(const Poset & x, const Poset & y) -> uint64_t
    {
        auto order = linear_extension(x);
        vector<Element> image(x.size(), no_element);
        std::function<auto (std::size_t) -> uint64_t> count = [&] (std::size_t k) -> uint64_t {
            if (k == order.size())
                return 1;
            auto e = order[k];
            auto allowed = y.all();
            for (auto t : x.down_set(e))
                if (t != e)
                    allowed &= y.up_set(image[t]);
            uint64_t total = 0;
            for (auto v : allowed) {
                image[e] = v;
                total += count(k + 1);
            }
            image[e] = no_element;
            return total;
        };
        return count(0);
    }

    auto for_each_partial_isotone_map(const Poset & x, const ElementSet & defined, const Poset & y,
            const std::function<auto (std::span<const Element>) -> bool> & visit) -> bool
    {
        auto members = defined.members();
        vector<Element> a(x.size(), no_element);
        if (members.empty())
            return visit(a);
        if (y.empty())
            return true;

        for (auto m : members)
            a[m] = 0;
        while (true) {
            if (isotone_by_filter(x, y, a) && ! visit(a))
                return false;
            auto i = members.size();
            while (i > 0) {
                if (++a[members[i - 1]] < y.size())
                    break;
                a[members[i - 1]] = 0;
                --i;
            }
            if (i == 0)
                return true;
        }
    }

    auto find_counterexample(const std::function<auto (const Poset &) -> bool> & predicate, std::size_t max_n)
        -> std::optional<Poset>
    {
        std::optional<Poset> found;
        for (std::size_t n = 1 ; n <= max_n && ! found ; ++n)
            for_each_poset(n, PosetMode::up_to_isomorphism, [&] (const Poset & p) {
                if (predicate(p))
                    return true;
                found = p;
                return false;
            });
        return found;
    }
}
