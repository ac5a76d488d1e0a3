#include "fqlab/error.hpp"

namespace fqlab {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::NotPrime: return "NotPrime";
        case ErrorKind::EvenPrime: return "EvenPrime";
        case ErrorKind::CapExceeded: return "CapExceeded";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::NotCoprime: return "NotCoprime";
        case ErrorKind::LengthMismatch: return "LengthMismatch";
        case ErrorKind::ParamDomain: return "ParamDomain";
    }
    return "Unknown";
}

}  // namespace fqlab
