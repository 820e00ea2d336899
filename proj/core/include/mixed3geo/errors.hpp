#pragma once

#include <stdexcept>
#include <string>

namespace mixed3geo {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Jet arithmetic hit a value outside its domain (division by zero,
// nonpositive radicand).
struct DegenerateValue : Error {
  using Error::Error;
};

struct SamplingExhausted : Error {
  using Error::Error;
};

struct StencilOutOfDomain : Error {
  using Error::Error;
};

struct NotSkewAdjoint : Error {
  using Error::Error;
};

// Indefinite Gram-Schmidt found no pivot with |g(v,v)| above threshold.
struct NullPivot : Error {
  using Error::Error;
};

struct DegenerateMetric : Error {
  using Error::Error;
};

struct DegeneratePlane : Error {
  using Error::Error;
};

struct DegenerateVertical : Error {
  using Error::Error;
};

struct DimensionError : Error {
  using Error::Error;
};

struct BadSeedPoint : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

}  // namespace mixed3geo
