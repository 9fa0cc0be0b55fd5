#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>

#include "sdgamma/errors.hpp"

namespace sdgamma {

// All counting in this library is exact. No floating point anywhere.
using Int = boost::multiprecision::cpp_int;

using Vertex = std::uint32_t;

inline std::string to_string(const Int& v) { return v.str(); }

inline std::optional<std::uint64_t> to_uint64(const Int& v) {
    if (v < 0 || v > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
    return v.convert_to<std::uint64_t>();
}

// Strict conversion used when a count has to be materialized.
inline std::uint64_t to_uint64_checked(const Int& v, const char* what) {
    auto r = to_uint64(v);
    if (!r) throw capacity_error(std::string(what) + ": value " + v.str() + " does not fit in 64 bits");
    return *r;
}

}  // namespace sdgamma
