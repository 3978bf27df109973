#pragma once

#include <stdexcept>
#include <string>

namespace caskbridge {

/// Base of every exception thrown by the library. Each module derives its own
/// error types from this so callers can catch a whole module's failures or a
/// single condition.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace caskbridge
