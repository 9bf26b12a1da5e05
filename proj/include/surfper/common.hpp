#ifndef SURFPER_COMMON_HPP
#define SURFPER_COMMON_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace surfper {

// Exact arithmetic everywhere: the whole artifact is integer identities, so
// rounding is never acceptable.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using IntVec = std::vector<Int>;

enum class Orientation { preserving, reversing };

inline const char* to_string(Orientation o) {
    return o == Orientation::preserving ? "preserving" : "reversing";
}

// Orientation behaviour of f^i given the orientation of f: an iterate reverses
// orientation exactly when f reverses and i is odd.  Callers always pass f's
// own orientation plus i; they never classify the iterate themselves.
inline bool iterate_reverses(Orientation o, long long i) {
    return o == Orientation::reversing && (i % 2 != 0);
}

struct NonIntegralError : std::runtime_error {
    std::size_t index;  // 1-based position of the offending coefficient
    NonIntegralError(std::size_t idx, const std::string& what)
        : std::runtime_error(what), index(idx) {}
};

struct ConstraintError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline long long to_ll(const Int& v) { return static_cast<long long>(v); }

}  // namespace surfper

#endif
