#pragma once

#include <stdexcept>
#include <string>

namespace classcoupler {

// A caller broke an interface contract (layout, arity, class pairing).
class Contract_violation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Data for which the class minima are undefined (zero sample variance and the like).
class Degenerate_data : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Config_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace classcoupler
