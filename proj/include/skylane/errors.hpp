#ifndef SKYLANE_ERRORS_HPP
#define SKYLANE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace skylane {

/// Base class for all skylane failures.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

#define SKYLANE_DEFINE_ERROR(Name)                                            \
  class Name : public Error {                                                 \
  public:                                                                      \
    using Error::Error;                                                        \
  }

// airspace
SKYLANE_DEFINE_ERROR(ObstacleTouchesBoundary);
// flow field
SKYLANE_DEFINE_ERROR(SingularPoint);
SKYLANE_DEFINE_ERROR(InconsistentCorners);
SKYLANE_DEFINE_ERROR(SolverDiverged);
SKYLANE_DEFINE_ERROR(PhiAbsent);
// corridors
SKYLANE_DEFINE_ERROR(LevelOnObstacle);
SKYLANE_DEFINE_ERROR(BrokenContour);
SKYLANE_DEFINE_ERROR(DegeneratePolyline);
// planner
SKYLANE_DEFINE_ERROR(HorizonTooSmall);
SKYLANE_DEFINE_ERROR(NoFiniteValueAtStart);
SKYLANE_DEFINE_ERROR(RolloutStalled);
// engine
SKYLANE_DEFINE_ERROR(ReplanInfeasible);
SKYLANE_DEFINE_ERROR(NoPathAvailable);
SKYLANE_DEFINE_ERROR(SnapFailure);
SKYLANE_DEFINE_ERROR(UnknownUas);
// io
SKYLANE_DEFINE_ERROR(ParseError);
SKYLANE_DEFINE_ERROR(SchemaViolation);
SKYLANE_DEFINE_ERROR(MissingArtifact);

#undef SKYLANE_DEFINE_ERROR

}  // namespace skylane

#endif  // SKYLANE_ERRORS_HPP
