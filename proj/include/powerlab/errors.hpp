// include/powerlab/errors.hpp
#ifndef POWERLAB_ERRORS_HPP
#define POWERLAB_ERRORS_HPP

#include <stdexcept>

namespace powerlab {

/// A parameter violates a stated domain constraint. The message names the
/// constraint, e.g. "ell <= max(eps, 1-eps)".
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace powerlab

#endif  // POWERLAB_ERRORS_HPP
