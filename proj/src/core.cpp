#include "ppsim/core.hpp"

#include <cstdlib>

namespace ppsim {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::config: return "config";
    case ErrorKind::invalid_lattice: return "invalid-lattice";
    case ErrorKind::domain: return "domain";
    case ErrorKind::dimension: return "dimension";
    case ErrorKind::degeneracy: return "degeneracy";
    case ErrorKind::numerical_state: return "numerical-state";
    case ErrorKind::precision: return "precision";
    case ErrorKind::no_tpp: return "no-tpp";
    case ErrorKind::no_minimum: return "no-minimum";
    case ErrorKind::ambiguous: return "ambiguous";
    case ErrorKind::size: return "size";
    case ErrorKind::feature: return "feature";
    case ErrorKind::geometry: return "geometry";
  }
  return "unknown";
}

int default_precision_digits() {
  const char* s = std::getenv("PPSIM_PRECISION_DIGITS");
  if (!s || !*s) return 16;
  char* end = nullptr;
  long v = std::strtol(s, &end, 10);
  if (*end != '\0' || v < 8 || v > 2000)
    throw Error(ErrorKind::config, std::string("PPSIM_PRECISION_DIGITS must be an integer in [8, 2000], got '") + s + "'");
  return static_cast<int>(v);
}

}  // namespace ppsim
