#pragma once

#include <stdexcept>
#include <string>

namespace seqsr {

/// Malformed or out-of-contract input (bad labels, F not a face, r < 2, ...).
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// An enumeration cap would be exceeded. The message names the cap.
class ResourceError : public std::runtime_error {
public:
    ResourceError(const std::string& cap, long limit, long requested)
        : std::runtime_error("resource cap '" + cap + "' exceeded: limit " + std::to_string(limit) +
                             ", requested " + std::to_string(requested)),
          cap_(cap) {}

    const std::string& cap() const noexcept { return cap_; }

private:
    std::string cap_;
};

/// Exponential-work limits shared by every module.
struct Limits {
    int max_vertices = 30;         // face enumeration, duals, decomposability
    int max_facets = 12;           // shellability search
    int max_hochster_vertices = 16;
    int max_koszul_vertices = 8;
};

inline void require_cap(const char* cap, long limit, long requested) {
    if (requested > limit) throw ResourceError(cap, limit, requested);
}

}  // namespace seqsr
