#ifndef POSETEXT_POSET_HH
#define POSETEXT_POSET_HH

#include <posetext/element_set.hh>

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace posetext
{
    using LabelPair = std::pair<std::string, std::string>;
    using ElementPair = std::pair<Element, Element>;

    /**
     * An immutable finite partial order. Elements carry unique opaque string
     * labels and are addressed by their dense index in input order. The order
     * is stored closed, as one up-set and one down-set bit row per element,
     * with the cover relation derived once at construction.
     */
    class Poset
    {
        private:
            std::vector<std::string> _labels;
            std::vector<ElementSet> _up, _down;
            std::vector<ElementSet> _upper_covers, _lower_covers;

            Poset(std::vector<std::string> labels, std::vector<ElementSet> up);

        public:
            Poset() = default;

            /// Reflexive-transitive closure of the given cover pairs (a, b) meaning a < b.
            static auto from_covers(std::vector<std::string> labels, const std::vector<LabelPair> & covers) -> Poset;

            /// As from_covers, with pairs given by index.
            static auto from_pairs(std::vector<std::string> labels, const std::vector<ElementPair> & pairs) -> Poset;

            /// Takes up[i] = { j : i <= j } as given and checks the order axioms without closing.
            static auto from_order(std::vector<std::string> labels, std::vector<ElementSet> up) -> Poset;

            auto size() const -> std::size_t { return _labels.size(); }
            auto empty() const -> bool { return _labels.empty(); }

            auto label(Element e) const -> const std::string & { return _labels[e]; }
            auto labels() const -> const std::vector<std::string> & { return _labels; }

            auto find(std::string_view label) const -> std::optional<Element>;

            /// As find, but throws UnknownLabel.
            auto index_of(std::string_view label) const -> Element;

            auto leq(Element a, Element b) const -> bool { return _up[a].contains(b); }
            auto less(Element a, Element b) const -> bool { return a != b && leq(a, b); }
            auto comparable(Element a, Element b) const -> bool { return leq(a, b) || leq(b, a); }

            /// Principal up-set { y : x <= y }.
            auto up_set(Element x) const -> const ElementSet & { return _up[x]; }

            /// Principal down-set { y : y <= x }.
            auto down_set(Element x) const -> const ElementSet & { return _down[x]; }

            auto upper_covers(Element x) const -> const ElementSet & { return _upper_covers[x]; }
            auto lower_covers(Element x) const -> const ElementSet & { return _lower_covers[x]; }

            /// Transitive reduction, ordered by lower element then upper element.
            auto covers() const -> std::vector<ElementPair>;

            auto all() const -> ElementSet { return ElementSet::full(size()); }
            auto none() const -> ElementSet { return ElementSet(size()); }

            /// Set of the elements carrying the given labels; throws UnknownLabel.
            auto subset(const std::vector<std::string> & labels) const -> ElementSet;

            auto subset_labels(const ElementSet & s) const -> std::vector<std::string>;

            /// Same labels in the same order and the same relation.
            auto operator== (const Poset & other) const -> bool;
    };

    /// Minorants: { y : y <= a for all a in s }; all of p when s is empty.
    auto down_cone(const Poset & p, const ElementSet & s) -> ElementSet;

    /// Majorants: { y : a <= y for all a in s }; all of p when s is empty.
    auto up_cone(const Poset & p, const ElementSet & s) -> ElementSet;

    auto least_of(const Poset & p, const ElementSet & s) -> std::optional<Element>;
    auto greatest_of(const Poset & p, const ElementSet & s) -> std::optional<Element>;

    auto minimal_elements(const Poset & p, const ElementSet & s) -> ElementSet;
    auto maximal_elements(const Poset & p, const ElementSet & s) -> ElementSet;

    /// Least majorant of s. For empty s this is the least element of p, if any.
    auto sup_of(const Poset & p, const ElementSet & s) -> std::optional<Element>;

    /// Greatest minorant of s. For empty s this is the greatest element of p, if any.
    auto inf_of(const Poset & p, const ElementSet & s) -> std::optional<Element>;

    auto least(const Poset & p) -> std::optional<Element>;
    auto greatest(const Poset & p) -> std::optional<Element>;

    /// Closed interval [lo, hi]; empty unless lo <= hi.
    auto interval(const Poset & p, Element lo, Element hi) -> ElementSet;

    auto is_antichain(const Poset & p, const ElementSet & s) -> bool;

    /// Same elements with the order reversed.
    auto dual(const Poset & p) -> Poset;

    /// Subposet on s, elements kept in index order. Throws EmptySubset.
    auto induced(const Poset & p, const ElementSet & s) -> Poset;

    /// Disjoint union with no relations across the parts.
    auto cardinal_sum(const Poset & p, const Poset & q) -> Poset;

    /// Disjoint union with every element of p below every element of q.
    auto lex_sum(const Poset & p, const Poset & q) -> Poset;

    struct PowersetEmbedding
    {
        /// Subsets of p's ground set ordered by inclusion; element index is the subset bitmask.
        Poset lattice;

        /// image[x] is the lattice element for the principal down-set of x.
        std::vector<Element> image;
    };

    inline constexpr std::size_t default_embedding_cap = 10;

    /// Embeds p into its powerset lattice by x -> down_set(x). Throws SizeCapExceeded above cap.
    auto downset_embedding(const Poset & p, std::size_t cap = default_embedding_cap) -> PowersetEmbedding;

    auto immediate_predecessors(const Poset & p, Element x) -> ElementSet;
    auto immediate_successors(const Poset & p, Element x) -> ElementSet;

    /// Topological order; among available elements the smallest index goes first.
    auto linear_extension(const Poset & p) -> std::vector<Element>;
}

#endif
