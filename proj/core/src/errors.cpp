#include "wfrac/errors.hpp"

namespace wfrac {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::domain: return "domain";
        case ErrorKind::accuracy: return "accuracy";
        case ErrorKind::convergence: return "convergence";
        case ErrorKind::admissibility: return "admissibility";
        case ErrorKind::no_crossing: return "no-crossing";
        case ErrorKind::io: return "io";
    }
    return "unknown";
}

}  // namespace wfrac
