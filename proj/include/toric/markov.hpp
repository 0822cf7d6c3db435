#ifndef TORIC_MARKOV_HPP
#define TORIC_MARKOV_HPP

#include <vector>

#include "toric/ideal.hpp"
#include "toric/matrix.hpp"

namespace toric {

struct MarkovResult {
    std::vector<Binomial> basis;        // minimal generating set, sorted
    std::map<int, std::size_t> degree_histogram;
    int max_degree = 0;
    std::size_t kernel_rank = 0;
    std::size_t groebner_size = 0;      // reduced grevlex basis of the full ideal
};

// Minimal binomial generating set of the toric ideal I_A: lattice kernel,
// lattice-basis ideal, saturation by every variable, then minimalization.
// Requires A nonnegative with no zero column (so column sums give a
// positive grading).
MarkovResult markov_basis_full(const IntMatrix& A, const Budget* budget = nullptr);

std::vector<Binomial> markov_basis(const IntMatrix& A, const Budget* budget = nullptr);

// Reduced grevlex Groebner basis of I_A.
GroebnerBasis toric_groebner(const IntMatrix& A, const Budget* budget = nullptr);

} // namespace toric

#endif
