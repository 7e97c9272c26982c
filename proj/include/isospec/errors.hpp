#ifndef ISOSPEC_ERRORS_HPP
#define ISOSPEC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace isospec {

/// Thrown when an exhaustive operation would exceed its configured cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace isospec

#endif
