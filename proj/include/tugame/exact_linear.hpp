#ifndef TUGAME_EXACT_LINEAR_HPP
#define TUGAME_EXACT_LINEAR_HPP

#include "tugame/rational.hpp"

#include <optional>
#include <vector>

namespace tugame {

/// Sparse-friendly row of a linear equation: Σ coefficients[j] x_j = rhs.
struct LinearEquation {
	std::vector<Rational> coefficients;
	Rational rhs;
};

struct LinearSolution {
	std::size_t unknowns = 0;
	std::size_t rank = 0;
	bool consistent = true;
	/// Present iff the system is consistent and has full column rank.
	std::optional<std::vector<Rational>> values;

	std::size_t nullity() const { return unknowns - rank; }
};

/// Fraction-free (Bareiss) row reduction of the integer-scaled system
/// followed by exact back substitution when the solution is unique.
LinearSolution solve_exact(const std::vector<LinearEquation>& equations, std::size_t unknowns);

}  // namespace tugame

#endif  // TUGAME_EXACT_LINEAR_HPP
