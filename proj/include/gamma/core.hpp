#pragma once

// Shared scalar type and failure modes for the gamma library.
//
// All coefficient arithmetic is exact: Int is an arbitrary-precision signed
// integer.  Counting functions never overflow; there is no floating point
// anywhere in the library.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace gamma_m {

using Int = boost::multiprecision::cpp_int;

// Thrown when an operation would materialize a combinatorially explosive set
// (rearrangements, block decompositions, large partition lists).  Guards are
// explicit parameters with the defaults below; callers may raise them
// deliberately, nothing is ever truncated silently.
class guard_error : public std::runtime_error {
public:
    explicit guard_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown by multiplicity-table operations: malformed tables and lookups the
// table does not determine.
class table_error : public std::runtime_error {
public:
    explicit table_error(const std::string& what) : std::runtime_error(what) {}
};

// Operations that enumerate all rearrangements of a partition (or derived
// sets) refuse above this length: ell! grows too fast to materialize.
inline constexpr int default_enumeration_guard = 12;

// partitions_of refuses above this size; p(50) is ~204k partitions.
inline constexpr int default_partitions_guard = 50;

// Symbolic determinants refuse above this dimension.
inline constexpr int default_determinant_guard = 14;

}  // namespace gamma_m
