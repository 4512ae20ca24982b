#pragma once

#include <stdexcept>
#include <string>

namespace ellpic {

/// A computation ran out of its configured search budget before reaching a
/// conclusive answer. Distinct from a mathematical "no": callers (and the CLI
/// exit-code taxonomy) treat this as inconclusive.
class budget_error : public std::runtime_error {
public:
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ellpic
