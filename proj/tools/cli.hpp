#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "pointint/model.hpp"
#include "pointint/spectral.hpp"

namespace pointint::cli {

inline constexpr const char* kToolName = "pointint";
inline constexpr const char* kToolVersion = "0.1.0";

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,  // numerical failure not covered below
  kExitUsage = 2,    // bad flags or invalid config
  kExitStrict = 3,   // warnings escalated by --strict
  kExitSpectrumHit = 4,
};

/// Invalid job configuration; path names the first offending field,
/// e.g. "coupling.alpha[1]".
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string path, const std::string& what)
      : std::runtime_error(path + ": " + what), path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

struct ReducedPair {
  CMatrix C;
  CMatrix D;
};

using Json = nlohmann::ordered_json;

struct JobConfig {
  Json source;  // the parsed file, echoed in the envelope
  PointConfiguration config;
  std::string coupling;   // alpha | cd | krein | friedrichs
  BoundaryPair pair;
  std::optional<RVector> alpha;
  std::optional<ReducedPair> reduced_pair;
  ScanOptions scan;
};

/// Shape-checks a config object and builds the problem. Throws ConfigError.
JobConfig parse_job(const Json& j);

JobConfig load_job(const std::string& path);

/// Complex matrices as nested arrays of [re, im] pairs.
Json to_json(const CMatrix& a);
Json to_json(Complex z);

/// Entry point shared by the executable and the tests.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pointint::cli
