#pragma once

#include <stdexcept>
#include <string>

namespace dali {

// Error categories map 1:1 onto CLI exit codes.
enum class ErrorCategory {
    io = 2,
    parse = 3,
    param = 4,
    data = 5,
    empty = 6,
    dependency = 7,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorCategory category, const std::string& message)
        : std::runtime_error(message), category_(category) {}

    ErrorCategory category() const { return category_; }
    int exit_code() const { return static_cast<int>(category_); }

  private:
    ErrorCategory category_;
};

inline Error io_error(const std::string& msg) { return Error(ErrorCategory::io, msg); }
inline Error parse_error(const std::string& msg) { return Error(ErrorCategory::parse, msg); }
inline Error param_error(const std::string& msg) { return Error(ErrorCategory::param, msg); }
inline Error data_error(const std::string& msg) { return Error(ErrorCategory::data, msg); }
inline Error empty_error(const std::string& msg) { return Error(ErrorCategory::empty, msg); }
inline Error dependency_error(const std::string& msg) { return Error(ErrorCategory::dependency, msg); }

}  // namespace dali
