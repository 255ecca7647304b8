#pragma once

#include <stdexcept>
#include <string>

namespace emn {

// The OS randomness facility could not satisfy a request. Never silently
// replaced by a PRNG.
class EntropyUnavailable : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// A sample is too short to satisfy a test's validity precondition.
class InsufficientSample : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// A sample is degenerate for the requested statistic (e.g. zero variance).
class DegenerateSample : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// A numerical routine failed to converge within its iteration budget.
class NumericFailure : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace emn
