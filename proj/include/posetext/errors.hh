#ifndef POSETEXT_ERRORS_HH
#define POSETEXT_ERRORS_HH

#include <stdexcept>
#include <string>
#include <string_view>

namespace posetext
{
    enum class ErrorKind
    {
        duplicate_label,
        unknown_label,
        cycle_detected,
        empty_subset,
        size_cap_exceeded,
        empty_poset,
        codomain_not_complete_lattice,
        input_not_isotone,
        component_not_chain,
        empty_a,
        no_extremes_in_a,
        cap_exceeded,
        unknown_theorem_id,
        parse_error,
        invalid_argument
    };

    /// Stable CamelCase name, as printed by the CLI.
    auto to_string(ErrorKind kind) -> std::string_view;

    class Error : public std::runtime_error
    {
        public:
            Error(ErrorKind kind, const std::string & message);

            auto kind() const noexcept -> ErrorKind { return _kind; }

        private:
            ErrorKind _kind;
    };
}

#endif
