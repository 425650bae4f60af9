#pragma once

#include <stdexcept>
#include <string>

namespace savetx {

// Unreadable or malformed input files. The CLI maps this to exit code 2.
class FileError : public std::runtime_error {
public:
    explicit FileError(const std::string& what) : std::runtime_error(what) {}
};

// Requested computation exceeds the configured compute budget. Exit code 3.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace savetx
