#pragma once

#include <stdexcept>

namespace qhd {

/// A computation was refused because its input exceeds a size guard.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qhd
