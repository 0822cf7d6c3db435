#ifndef TORIC_LATTICE_HPP
#define TORIC_LATTICE_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "toric/matrix.hpp"

namespace toric {

using bigint = boost::multiprecision::cpp_int;

// Basis of the integer kernel ker_Z(A), computed by column reduction to
// Hermite form with exact arithmetic. Basis size = cols - rank(A).
std::vector<std::vector<bigint>> integer_kernel_exact(const IntMatrix& A);

// Same basis narrowed to machine integers; throws resource_error if an
// entry does not fit.
std::vector<std::vector<long long>> integer_kernel(const IntMatrix& A);

} // namespace toric

#endif
