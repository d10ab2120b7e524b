#pragma once

#include <stdexcept>
#include <string>

namespace fdanova {

/// Raised for problems with user-supplied data or files (CLI exit code 2).
class data_error : public std::runtime_error {
public:
  explicit data_error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a numerical routine cannot proceed (rank deficiency,
/// non-PSD kernel, singular Gram matrix).
class numeric_error : public std::runtime_error {
public:
  explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fdanova
