#include <posetext/errors.hh>

namespace posetext
{
    auto to_string(ErrorKind kind) -> std::string_view
    {
        switch (kind) {
            case ErrorKind::duplicate_label:               return "DuplicateLabel";
            case ErrorKind::unknown_label:                 return "UnknownLabel";
            case ErrorKind::cycle_detected:                return "CycleDetected";
            case ErrorKind::empty_subset:                  return "EmptySubset";
            case ErrorKind::size_cap_exceeded:             return "SizeCapExceeded";
            case ErrorKind::empty_poset:                   return "EmptyPoset";
            case ErrorKind::codomain_not_complete_lattice: return "CodomainNotCompleteLattice";
            case ErrorKind::input_not_isotone:             return "InputNotIsotone";
            case ErrorKind::component_not_chain:           return "ComponentNotChain";
            case ErrorKind::empty_a:                       return "EmptyA";
            case ErrorKind::no_extremes_in_a:              return "NoExtremesInA";
            case ErrorKind::cap_exceeded:                  return "CapExceeded";
            case ErrorKind::unknown_theorem_id:            return "UnknownTheoremId";
            case ErrorKind::parse_error:                   return "ParseError";
            case ErrorKind::invalid_argument:              return "InvalidArgument";
        }
        return "Unknown";
    }

    Error::Error(ErrorKind kind, const std::string & message) :
        std::runtime_error(std::string{ to_string(kind) } + ": " + message),
        _kind(kind)
    {
    }
}
