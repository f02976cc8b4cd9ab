#pragma once

#include <stdexcept>
#include <string>

namespace hypercheck {

// Numeric series left its convergence disc or hit the term cap.
class SeriesDiverges : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A lower hypergeometric parameter is zero or a negative integer.
class ParameterPole : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A terminating series has a vanishing denominator at a live index, or the
// closed form it is compared against is undefined.
class DegenerateParameters : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class RangeError : public std::range_error {
 public:
  using std::range_error::range_error;
};

}  // namespace hypercheck
