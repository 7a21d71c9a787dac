#pragma once

#include <optional>
#include <vector>

#include "treeweights/rational.hpp"

namespace treeweights {

// Solution set of A x = b over the rationals: x = particular + span(null_basis).
struct AffineSolutionSpace {
    bool consistent = false;
    std::vector<Rational> particular;
    std::vector<std::vector<Rational>> null_basis;
};

// Gauss-Jordan over exact rationals.
AffineSolutionSpace solve_exact(std::vector<std::vector<Rational>> matrix,
                                std::vector<Rational> rhs);

// Whether the affine space meets the strictly positive orthant, decided by
// Fourier-Motzkin elimination on the free coefficients.
bool has_positive_point(const AffineSolutionSpace& space);

// A deterministic strictly positive point of the space, when one exists:
// free coefficients are chosen innermost-first at interval midpoints.
std::optional<std::vector<Rational>> positive_point(const AffineSolutionSpace& space);

}  // namespace treeweights
