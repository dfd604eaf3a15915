#ifndef FUNKDISC_ERRORS_H_
#define FUNKDISC_ERRORS_H_

#include <stdexcept>
#include <string>

namespace funkdisc {

// Every failure raised by the library derives from GeometryError so callers
// (the CLI in particular) can map the whole family onto one exit code.
class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A point is outside its chart (or too close to the chart boundary).
class DomainError : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

// A 3-vector handed to a surface model is not tangent to the surface.
class TangencyError : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

class ZeroVectorError : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

class ZeroCovectorError : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

// Requested quantity is not defined for this model.
class UnsupportedModel : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

// Two points coincide (to working precision) where a chord is required.
class DegenerateError : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

class NoIntersectionError : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

class EmptyLevelSetError : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

// MAX/MIN Laplacians divide by |x|.
class OriginSingularityError : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

}  // namespace funkdisc

#endif  // FUNKDISC_ERRORS_H_
