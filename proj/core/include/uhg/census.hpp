#ifndef UHG_CENSUS_HPP
#define UHG_CENSUS_HPP

#include <string>
#include <vector>

#include "uhg/field.hpp"

namespace uhg {

struct CircleCount {
  std::string center;
  long k = 0;
  long points = 0;
};

// Exhaustive counts over the projective plane of an odd prime field.
struct CensusReport {
  long p = 0;
  long total_points = 0;
  long null_points = 0;
  long null_lines = 0;
  long form_square = 0;     // points with nonzero square self-form
  long form_nonsquare = 0;  // points with nonsquare self-form
  std::vector<CircleCount> circles;

  std::string str() const;
};

// Enumerates all p^2+p+1 points and lines.  With circles, tallies the
// cardinality of every circle q(x, a) = k for one center per nonzero square
// class of the self-form.
CensusReport census(long p, bool with_circles);

}  // namespace uhg

#endif
