#pragma once

#include <stdexcept>
#include <string>

namespace backerr {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string &what)
      : std::runtime_error(what) {}
};

// ratfun layer
struct PoleAtPoint : Error {
    explicit PoleAtPoint(const std::string &what = "denominator vanishes at evaluation point")
      : Error(what) {}
};
struct SeriesAtPole : Error {
    explicit SeriesAtPole(const std::string &what = "denominator vanishes at 0, no Maclaurin series")
      : Error(what) {}
};

// method construction
struct UnknownBuiltin : Error {
    explicit UnknownBuiltin(const std::string &what)
      : Error(what) {}
};
struct BadParams : Error {
    explicit BadParams(const std::string &what)
      : Error(what) {}
};
struct BadSpec : Error {
    explicit BadSpec(const std::string &what)
      : Error(what) {}
};
struct DegenerateSystem : Error {
    explicit DegenerateSystem(const std::string &what = "tau linear system is singular")
      : Error(what) {}
};

// backward error analysis
struct ZeroArgument : Error {
    explicit ZeroArgument(const std::string &what = "zero argument where nonzero required")
      : Error(what) {}
};
struct ZeroMu : Error {
    explicit ZeroMu(const std::string &what = "mu = 0 is excluded")
      : Error(what) {}
};
struct SingularTarget : Error {
    explicit SingularTarget(const std::string &what = "interpolant would have to pass through zero")
      : Error(what) {}
};
struct ZeroStart : Error {
    explicit ZeroStart(const std::string &what = "step starts at y = 0, relative error undefined")
      : Error(what) {}
};
struct ZeroLambda : Error {
    explicit ZeroLambda(const std::string &what = "lambda = 0 gives no test problem")
      : Error(what) {}
};
struct SingularInRange : Error {
    explicit SingularInRange(const std::string &what = "R vanishes at a sampled step size")
      : Error(what) {}
};
struct InconsistentMethod : Error {
    explicit InconsistentMethod(const std::string &what = "R(0) != 1, method is not consistent")
      : Error(what) {}
};

// oracle
struct NoFeasibleControl : Error {
    explicit NoFeasibleControl(const std::string &what = "target ratio is zero, no finite control reaches it")
      : Error(what) {}
};

// field / io
struct EmptyLevels : Error {
    explicit EmptyLevels(const std::string &what = "contour level list is empty")
      : Error(what) {}
};
struct IoFailure : Error {
    explicit IoFailure(const std::string &what)
      : Error(what) {}
};
struct BadFile : Error {
    explicit BadFile(const std::string &what)
      : Error(what) {}
};

} // namespace backerr
