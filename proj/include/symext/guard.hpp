#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace symext {

struct Guards {
    std::uint64_t max_names = 1u << 20;
    int max_poset = 64;
    int max_group = 1024;
    int max_rank = 4;
};

Guards& default_guards();

class GuardExceeded : public std::runtime_error {
   public:
    explicit GuardExceeded(const std::string& what) : std::runtime_error("guard exceeded: " + what) {}
};

class PreconditionError : public std::invalid_argument {
   public:
    explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace symext
