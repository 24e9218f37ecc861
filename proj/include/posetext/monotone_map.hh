#ifndef POSETEXT_MONOTONE_MAP_HH
#define POSETEXT_MONOTONE_MAP_HH

#include <posetext/poset.hh>

#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace posetext
{
    using PosetPtr = std::shared_ptr<const Poset>;

    inline auto share(Poset p) -> PosetPtr
    {
        return std::make_shared<const Poset>(std::move(p));
    }

    /**
     * A partial map from a domain poset to a codomain poset. assignment()[x]
     * is the image index of x, or no_element where the map is undefined.
     *
     * Construction checks only that indices are in range; whether the map
     * is isotone is a property queried through check_isotone.
     */
    class MonotoneMap
    {
        private:
            PosetPtr _domain, _codomain;
            std::vector<Element> _assignment;

        public:
            MonotoneMap(PosetPtr domain, PosetPtr codomain, std::vector<Element> assignment);

            /// The empty map, defined nowhere.
            MonotoneMap(PosetPtr domain, PosetPtr codomain);

            /// Builds from (domain label, codomain label) pairs. Throws UnknownLabel.
            static auto from_labels(PosetPtr domain, PosetPtr codomain,
                    const std::vector<LabelPair> & pairs) -> MonotoneMap;

            auto domain() const -> const Poset & { return *_domain; }
            auto codomain() const -> const Poset & { return *_codomain; }
            auto domain_ptr() const -> const PosetPtr & { return _domain; }
            auto codomain_ptr() const -> const PosetPtr & { return _codomain; }

            auto assignment() const -> std::span<const Element> { return _assignment; }

            auto defined(Element x) const -> bool { return _assignment[x] != no_element; }

            /// Image of x, or no_element.
            auto operator[] (Element x) const -> Element { return _assignment[x]; }

            auto defined_on() const -> ElementSet;
            auto is_total() const -> bool;

            /// Same assignment over a new codomain; indices must stay in range.
            auto with_codomain(PosetPtr codomain) const -> MonotoneMap;

            /// Same assignment, both posets dualised.
            auto dualised() const -> MonotoneMap;

            /// Same posets (by value) and same assignment.
            auto operator== (const MonotoneMap & other) const -> bool;
    };

    /// x <= y in the defined part implies f(x) <= f(y); with total, also f defined everywhere.
    auto check_isotone(const MonotoneMap & f, bool total = false) -> bool;

    /// Index-level form of check_isotone for hot loops. Undefined entries are no_element.
    auto check_isotone(const Poset & domain, const Poset & codomain, std::span<const Element> assignment) -> bool;

    /// g is total, isotone, and agrees with f wherever f is defined.
    auto is_isotone_extension(const MonotoneMap & f, const MonotoneMap & g) -> bool;
}

#endif
