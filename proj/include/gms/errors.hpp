#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gms {

/// A state space or enumeration would exceed its configured size limit.
class CapExceeded : public std::runtime_error {
public:
    CapExceeded(const std::string& what, std::size_t cap)
        : std::runtime_error(what + " (cap " + std::to_string(cap) + ")"), cap_(cap) {}

    std::size_t cap() const { return cap_; }

private:
    std::size_t cap_;
};

inline constexpr std::size_t kDefaultStateCap = 5'000'000;

}  // namespace gms
