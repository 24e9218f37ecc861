#ifndef POSETEXT_THEOREMS_HH
#define POSETEXT_THEOREMS_HH

#include <posetext/json_io.hh>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace posetext::oracle
{
    /**
     * Bounds on a theorem's universe. domain_size bounds the posets X that
     * maps are extended over (or the single poset a statement is about);
     * codomain_size bounds the target posets Y. instance_cap bounds the
     * number of instances examined.
     */
    struct TheoremCaps
    {
        std::size_t domain_size = 4;
        std::size_t codomain_size = 4;
        std::uint64_t instance_cap = 2'000'000;
    };

    struct TheoremCheckResult
    {
        std::string theorem;
        std::string universe;
        TheoremCaps caps;
        bool pass = false;
        std::uint64_t checked = 0;

        /// Present iff pass is false.
        std::optional<Json> counterexample;

        std::int64_t millis = 0;
    };

    /// Registry ids: t4, c2.11, c6, t5, l6, l3, t10, s43, t46, t53.
    auto theorem_ids() -> const std::vector<std::string> &;

    /// Throws UnknownTheoremId.
    auto default_caps(const std::string & id) -> TheoremCaps;

    /// Largest size accepted for either bound of the theorem. Throws UnknownTheoremId.
    auto size_limit(const std::string & id) -> std::size_t;

    /**
     * Exhaustively checks both directions of the statement over the capped
     * universe, stopping at the first violation in enumeration order.
     *
     * Throws UnknownTheoremId, or CapExceeded when a bound exceeds the
     * theorem's size limit or the universe exceeds instance_cap.
     */
    auto check_theorem(const std::string & id, std::optional<TheoremCaps> caps = std::nullopt) -> TheoremCheckResult;

    /// Re-runs the failing instance of a result; true iff it still fails.
    auto replay(const TheoremCheckResult & result) -> bool;

    auto result_to_json(const TheoremCheckResult & result) -> Json;
}

#endif
