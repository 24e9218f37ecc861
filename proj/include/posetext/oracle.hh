#ifndef POSETEXT_ORACLE_HH
#define POSETEXT_ORACLE_HH

#include <posetext/poset.hh>

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <vector>

// Brute-force machinery over small posets. Nothing in here calls into the
// extension module; the theorem registry (theorems.hh) is what ties the two
// together.

namespace posetext::oracle
{
    enum class PosetMode
    {
        labeled,
        up_to_isomorphism
    };

    inline constexpr std::size_t labeled_cap = 6;
    inline constexpr std::size_t isomorphism_cap = 7;

    /**
     * Visits every partial order on n points: each labeled order exactly once,
     * or one canonical representative per isomorphism class in increasing
     * canonical_code order. Elements are labelled a, b, c, ...
     *
     * Stops when visit returns false. Throws SizeCapExceeded above the cap for
     * the mode.
     */
    auto for_each_poset(std::size_t n, PosetMode mode, const std::function<auto (const Poset &) -> bool> & visit) -> bool;

    auto enumerate_posets(std::size_t n, PosetMode mode) -> std::vector<Poset>;

    /// Representatives of every isomorphism class with lo..hi elements.
    auto posets_up_to_isomorphism(std::size_t lo, std::size_t hi) -> std::vector<Poset>;

    /// Posets on |base| + extra points whose first |base| points induce base exactly.
    auto one_point_extensions(const Poset & base) -> std::vector<Poset>;

    /// Counts reflexive, antisymmetric, transitive relations by filtering all relations. n <= 5.
    auto count_orders_by_relation_filter(std::size_t n) -> std::uint64_t;

    /**
     * Isomorphism-invariant code: the strict order matrix, read row-major,
     * minimised over the relabellings that respect the (down-set size,
     * up-set size, height) refinement. At most 8 elements; throws
     * SizeCapExceeded when a refinement class exceeds 8 elements.
     */
    auto canonical_code(const Poset & p) -> std::uint64_t;

    /// The poset rebuilt from its canonical code, labelled a, b, c, ...
    auto canonical_form(const Poset & p) -> Poset;

    auto isomorphic(const Poset & p, const Poset & q) -> bool;

    /// Labels a, b, c, ... for up to 26 elements, then e26, e27, ...
    auto default_labels(std::size_t n) -> std::vector<std::string>;

    /// Random order: each pair of a random permutation is related with the given probability, then closed.
    auto random_poset(std::size_t n, std::mt19937_64 & rng, double density = 0.35) -> Poset;

    inline constexpr std::uint64_t default_map_cap = 1'000'000;

    /// Every isotone total map, by filtering all |Y|^|X| assignments. Lexicographic order.
    auto enumerate_isotone_maps(const Poset & x, const Poset & y, std::uint64_t cap = default_map_cap)
        -> std::vector<std::vector<Element>>;

    /// Counts isotone maps by assigning elements along a linear extension.
    auto count_isotone_maps_recursive(const Poset & x, const Poset & y) -> std::uint64_t;

    /// Visits every isotone map defined exactly on `defined`, lifted to an assignment over x.
    auto for_each_partial_isotone_map(const Poset & x, const ElementSet & defined, const Poset & y,
            const std::function<auto (std::span<const Element>) -> bool> & visit) -> bool;

    /// Smallest n, then first canonical code, among 1..max_n for which the predicate fails.
    auto find_counterexample(const std::function<auto (const Poset &) -> bool> & predicate, std::size_t max_n)
        -> std::optional<Poset>;
}

#endif
