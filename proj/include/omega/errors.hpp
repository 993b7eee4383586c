#ifndef OMEGA_ERRORS_HPP
#define OMEGA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace omega {

// Thrown when an operation would exceed a configured size cap. The caller
// can usually retry with a counting or log-space variant instead of full
// enumeration. Contract violations (bad arguments, inconsistent state)
// throw std::domain_error instead.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace omega

#endif  // OMEGA_ERRORS_HPP
