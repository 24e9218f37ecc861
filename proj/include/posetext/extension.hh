#ifndef POSETEXT_EXTENSION_HH
#define POSETEXT_EXTENSION_HH

#include <posetext/monotone_map.hh>

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace posetext
{
    /**
     * Least isotone extension: x goes to the sup of the images of the defined
     * elements below x, or to the least element of the codomain when there
     * are none.
     *
     * Throws CodomainNotCompleteLattice or InputNotIsotone.
     */
    auto lower_extension(const MonotoneMap & f) -> MonotoneMap;

    /// Greatest isotone extension; the dual of lower_extension.
    auto upper_extension(const MonotoneMap & f) -> MonotoneMap;

    /**
     * Assigns the undefined elements one at a time, in `order` if given and
     * in linear-extension order otherwise. Each element gets a value above
     * the images of its assigned lower neighbours and below those of its
     * assigned upper neighbours: the least-index minimal such value.
     *
     * Always succeeds when the codomain is a quasilattice. An empty result
     * means the greedy choices got stuck, not that no extension exists.
     *
     * Throws InputNotIsotone, or InvalidArgument when `order` is not a
     * permutation of the undefined elements.
     */
    auto extend_greedy(const MonotoneMap & f, std::optional<std::span<const Element>> order = std::nullopt)
        -> std::optional<MonotoneMap>;

    /// Complete backtracking search for any isotone extension. Throws InputNotIsotone.
    auto extend_exists(const MonotoneMap & f) -> std::optional<MonotoneMap>;

    /**
     * Retraction of a poset whose components are chains onto a nonempty
     * subset a: on a component meeting a, x goes to the greatest member of
     * a below x in that component, or the least member of a in that
     * component when none lies below; components missing a go to fallback.
     *
     * The result maps into induced(*domain, a), whose element i is the i-th
     * member of a. Throws ComponentNotChain, EmptyA, or InvalidArgument when
     * fallback is not in a.
     */
    auto extend_chain_components(const PosetPtr & domain, const ElementSet & a, Element fallback) -> MonotoneMap;

    /**
     * An isotone extension g with f(a_least) <= g(x) <= f(a_greatest) for all
     * x, found by searching into that interval of the codomain.
     *
     * Throws NoExtremesInA when the defined part lacks a least or greatest
     * element, or InputNotIsotone.
     */
    auto extend_preserving_extremes(const MonotoneMap & f) -> std::optional<MonotoneMap>;

    inline constexpr std::size_t default_family_cap = 1'000'000;

    /// All isotone total extensions of a base map, in lexicographic order of assignment.
    class ExtensionFamily
    {
        private:
            MonotoneMap _base;
            std::vector<std::vector<Element>> _members;

        public:
            ExtensionFamily(MonotoneMap base, std::vector<std::vector<Element>> members);

            auto base() const -> const MonotoneMap & { return _base; }
            auto size() const -> std::size_t { return _members.size(); }
            auto empty() const -> bool { return _members.empty(); }

            auto assignment(std::size_t i) const -> const std::vector<Element> & { return _members[i]; }
            auto member(std::size_t i) const -> MonotoneMap;

            /// Pointwise order: member i <= member j at every domain element.
            auto leq(std::size_t i, std::size_t j) const -> bool;

            /// The family as a poset under the pointwise order, members labelled by position.
            auto as_poset() const -> Poset;

            auto bottom() const -> std::optional<std::size_t>;
            auto top() const -> std::optional<std::size_t>;
    };

    /**
     * Every isotone total extension, by filtering all assignments of the
     * undefined elements. Throws CapExceeded when the number of candidate
     * assignments, |Y|^|X \ A|, exceeds cap; InputNotIsotone.
     */
    auto enumerate_extensions(const MonotoneMap & f, std::size_t cap = default_family_cap) -> ExtensionFamily;
}

#endif
