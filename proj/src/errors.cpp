#include "pointint/errors.hpp"

namespace pointint {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::configuration: return "configuration";
    case ErrorKind::domain: return "domain";
    case ErrorKind::numeric: return "numeric";
    case ErrorKind::singular: return "singular";
    case ErrorKind::conditioning: return "conditioning";
    case ErrorKind::not_psd: return "not_psd";
    case ErrorKind::spectrum_hit: return "spectrum_hit";
    case ErrorKind::resonance: return "resonance";
    case ErrorKind::unsupported: return "unsupported";
    case ErrorKind::evaluation: return "evaluation";
  }
  return "unknown";
}

}  // namespace pointint
