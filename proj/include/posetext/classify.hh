#ifndef POSETEXT_CLASSIFY_HH
#define POSETEXT_CLASSIFY_HH

#include <posetext/poset.hh>

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace posetext
{
    enum class MissingBound
    {
        none,
        sup,
        inf
    };

    struct LatticeCheck
    {
        bool holds = false;

        /// On failure, a subset of at most two elements lacking `missing`. An empty
        /// witness means the poset lacks a least (sup) or greatest (inf) element.
        std::optional<ElementSet> witness;
        MissingBound missing = MissingBound::none;

        explicit operator bool() const { return holds; }
    };

    /// Pair of antichains lower <= upper that admits no element in between.
    struct BetweennessCheck
    {
        bool holds = false;
        std::optional<ElementSet> lower, upper;

        explicit operator bool() const { return holds; }
    };

    struct IntervalCheck
    {
        bool holds = false;

        /// On failure, the interval [bottom, top] and the lattice failure inside it,
        /// with witness indices referring to the full poset.
        std::optional<ElementPair> interval;
        LatticeCheck failure;

        explicit operator bool() const { return holds; }
    };

    auto is_chain(const Poset & p) -> bool;

    /// Every pair has a sup and an inf, and there are least and greatest elements. Throws EmptyPoset.
    auto is_lattice(const Poset & p) -> LatticeCheck;

    /// For a finite poset: nonempty and a lattice.
    auto is_complete_lattice(const Poset & p) -> bool;

    inline constexpr std::size_t exhaustive_lattice_cap = 15;

    /// Checks sup and inf of every nonempty subset directly. Throws SizeCapExceeded above 15 elements.
    auto is_complete_lattice_exhaustive(const Poset & p) -> bool;

    /**
     * For every pair of antichains A, B with every a <= every b (empty sides
     * included) some y satisfies a <= y <= b throughout. With a size bound k
     * only pairs with |A| < k and |B| < k are examined.
     */
    auto is_quasilattice(const Poset & p, std::optional<std::size_t> size_bound = std::nullopt) -> BetweennessCheck;

    /// Every interval [lo, hi] with lo <= hi is a lattice.
    auto is_local_complete_lattice(const Poset & p) -> IntervalCheck;

    /// As is_quasilattice, restricted to pairs whose union has both a minorant and a majorant.
    auto is_local_quasilattice(const Poset & p, std::optional<std::size_t> size_bound = std::nullopt) -> BetweennessCheck;

    /// Classes of the transitive closure of comparability, ordered by least index.
    auto components(const Poset & p) -> std::vector<ElementSet>;

    /**
     * Integer numbering of the elements when every component is a chain:
     * the least-index element of the first component sits at 0, neighbours
     * within a chain differ by one, and later components occupy disjoint
     * ranges with a gap of one integer between consecutive ranges.
     */
    auto z_embedding(const Poset & p) -> std::optional<std::vector<std::int64_t>>;

    /// Calls visit on every antichain inside `within` with fewer than max_size members, empty first.
    /// Stops early when visit returns false; returns false iff stopped.
    auto for_each_antichain(const Poset & p, const ElementSet & within, std::optional<std::size_t> max_size,
            const std::function<auto (const ElementSet &) -> bool> & visit) -> bool;

    struct ClassificationReport
    {
        std::size_t size = 0;
        bool chain = false;
        bool lattice = false;
        bool complete_lattice = false;
        bool quasilattice = false;
        bool local_complete_lattice = false;
        bool local_quasilattice = false;
        bool z_embeddable = false;

        LatticeCheck lattice_check;
        BetweennessCheck quasilattice_check;
        IntervalCheck local_complete_lattice_check;
        BetweennessCheck local_quasilattice_check;

        std::vector<ElementSet> components;
        std::optional<std::vector<std::int64_t>> z_embedding;
    };

    auto classify(const Poset & p) -> ClassificationReport;
}

#endif
