#pragma once

#include <stdexcept>
#include <string>

namespace ospxp {

struct InvalidParameter : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DimensionTooSmall : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotUnitarizable : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct UnknownGenerator : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DegenerateChain : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ospxp
