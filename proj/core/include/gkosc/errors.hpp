#pragma once

#include <stdexcept>
#include <string>

namespace gkosc {

// Thrown when a requested x^{-alpha} integral diverges at the origin, i.e.
// alpha >= 2*gamma_p = 2 + sqrt(1+4A).
class DomainDiverges : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Thrown for negative basis indices or otherwise out-of-range integer inputs.
class InvalidIndex : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Thrown when the explicit-entry table is asked for an index pair it does not
// cover (the table spans m,n <= 3).
class IndexOutOfTable : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Thrown when the cyclic Jacobi eigensolver fails to reach its off-diagonal
// tolerance within the sweep limit.
class NoConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gkosc
