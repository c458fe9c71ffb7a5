#ifndef TUGAME_FINITE_CLASSES_HPP
#define TUGAME_FINITE_CLASSES_HPP

#include "tugame/game.hpp"
#include "tugame/shapley.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tugame {

// Exhaustive checks on explicitly listed (finite) classes of games. Games are
// referred to by their index in the input span.

struct EmpClosureViolation {
	std::size_t game = 0;
	Coalition s;
	Player k = 0;
};

struct EmpClosureResult {
	bool closed = true;
	/// First (v, S, k) without a witness, scanning games in order, S by
	/// ascending mask and k ascending.
	std::optional<EmpClosureViolation> violation;
};

/// For every v in A, every equivalence class S of v (∅ included) and every
/// k ∉ S, some w in A has S ∪ {k} as an equivalence class and w'_k = v'_k.
EmpClosureResult check_emp_closed_finite(std::span<const Game> games);

/// Same check restricted to the members of `subset` (bit g = game g).
bool is_emp_closed_subset(std::span<const Game> games, std::uint64_t subset);

struct HypothesesWitness {
	std::size_t game = 0;
	Player k = 0;
	std::uint64_t closed_subset = 0;
	std::size_t w = 0;
	/// z[i-1] for i ≠ k; the entry for k is unused.
	std::vector<std::size_t> z;
};

struct HypothesesReport {
	bool holds = true;
	std::string reading;
	std::vector<HypothesesWitness> witnesses;
	std::optional<std::pair<std::size_t, Player>> first_failure;

	std::string str() const;
};

inline constexpr std::size_t kHypothesesGuard = 16;

/// For every v in A and k: some EMP-closed B ⊆ A, some w in A with
/// w'_k = v'_k, and for each i ≠ k some z(i) in B with z(i)'_i = w'_i. One B
/// serves all i of a given (v, k). Throws GuardExceeded if |A| > max_games.
HypothesesReport check_theorem1_hypotheses_finite(std::span<const Game> games, std::size_t max_games = kHypothesesGuard);

/// Extra constraint ψ_player(games[game]) = value.
struct PayoffPin {
	std::size_t game = 0;
	Player player = 0;
	Rational value;
};

struct AxiomSystemResult {
	enum class Status { Unique, Underdetermined, Infeasible };

	Status status = Status::Unique;
	std::size_t unknowns = 0;
	std::size_t equations = 0;
	std::size_t rank = 0;
	std::optional<SolutionTable> solution;

	std::size_t nullity() const { return unknowns - rank; }
	std::string str() const;
};

/// Solves the linear system of PO, ETP and EMP constraints over the unknowns
/// ψ_i(v), v in A. Unique iff the rank is n·|A|.
AxiomSystemResult solve_axiom_system(std::span<const Game> games, std::span<const PayoffPin> pins = {});

}  // namespace tugame

#endif  // TUGAME_FINITE_CLASSES_HPP
