#include "toric/markov.hpp"

#include "toric/lattice.hpp"

namespace toric {

namespace {

std::vector<Binomial> lattice_basis_ideal(const IntMatrix& A) {
    for (std::size_t j = 0; j < A.cols; ++j) {
        bool nonzero = false;
        for (std::size_t i = 0; i < A.rows; ++i)
            if (A.at(i, j) != 0) {
                if (A.at(i, j) < 0)
                    throw validation_error("markov_basis: matrix must be nonnegative");
                nonzero = true;
            }
        if (!nonzero)
            throw validation_error("markov_basis: zero column (variable maps to the constant 1)");
    }
    auto kernel = integer_kernel(A);
    std::vector<Binomial> gens;
    gens.reserve(kernel.size());
    for (const auto& v : kernel) {
        Binomial b;
        b.plus.assign(A.cols, 0);
        b.minus.assign(A.cols, 0);
        for (std::size_t j = 0; j < A.cols; ++j) {
            if (v[j] > 0) b.plus[j] = static_cast<int>(v[j]);
            if (v[j] < 0) b.minus[j] = static_cast<int>(-v[j]);
        }
        gens.push_back(std::move(b));
    }
    return gens;
}

} // namespace

GroebnerBasis toric_groebner(const IntMatrix& A, const Budget* budget) {
    auto saturated = saturate_all(lattice_basis_ideal(A), A.cols, column_sums(A), budget);
    return buchberger(std::move(saturated), MonomialOrder::grevlex(A.cols), budget);
}

MarkovResult markov_basis_full(const IntMatrix& A, const Budget* budget) {
    MarkovResult res;
    auto gens = lattice_basis_ideal(A);
    res.kernel_rank = gens.size();
    auto saturated = saturate_all(std::move(gens), A.cols, column_sums(A), budget);
    GroebnerBasis gb = buchberger(std::move(saturated), MonomialOrder::grevlex(A.cols), budget);
    res.groebner_size = gb.size();

    MinimalizeResult min = minimalize(gb.elements, gb.order, budget);
    res.basis = std::move(min.generators);
    res.degree_histogram = std::move(min.degree_histogram);
    res.max_degree = min.max_degree;
    sort_binomials(res.basis, gb.order);
    return res;
}

std::vector<Binomial> markov_basis(const IntMatrix& A, const Budget* budget) {
    return markov_basis_full(A, budget).basis;
}

} // namespace toric
