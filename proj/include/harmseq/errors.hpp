#pragma once

#include <stdexcept>
#include <string>

namespace harmseq {

// Input that cannot be realized at all (wrong parity, excluded length class, ...).
class UnsupportedError : public std::domain_error {
public:
    explicit UnsupportedError(const std::string& what) : std::domain_error(what) {}
};

// Malformed external input: spec strings, sequence files, table files.
class InputError : public std::runtime_error {
public:
    InputError(const std::string& what, std::size_t offset = npos)
        : std::runtime_error(what), offset_(offset) {}
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// A bounded search ran out of nodes before reaching a conclusion.
class BudgetExceededError : public std::runtime_error {
public:
    explicit BudgetExceededError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace harmseq
