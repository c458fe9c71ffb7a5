#ifndef TUGAME_SHAPLEY_HPP
#define TUGAME_SHAPLEY_HPP

#include "tugame/game.hpp"

#include <vector>

namespace tugame {

inline constexpr int kShapleyGuard = 12;
inline constexpr int kPermutationGuard = 10;

/// Shapley value by the subset formula
///   φ_i(v) = Σ_{S ⊆ N∖{i}} v'_i(S) |S|! (n-|S|-1)! / n!
/// Throws GuardExceeded when n > max_players.
Allocation shapley(const Game& v, int max_players = kShapleyGuard);

/// Average of marginal-contribution vectors over all n! arrival orders.
/// Independent of `shapley`; used as its oracle.
Allocation shapley_permutation_oracle(const Game& v, int max_players = kPermutationGuard);

/// The weight |S|!(n-|S|-1)!/n! for a coalition of size s not containing i.
Rational shapley_weight(int n, int s);

/// Σ a_i = v(N).
bool check_PO(const Game& v, const Allocation& a);

/// Equal payoffs for every pair of equivalent players.
bool check_ETP(const Game& v, const Allocation& a);

struct EmpVerdict {
	bool holds = true;
	/// False when v'_i ≠ w'_i, i.e. the implication holds vacuously.
	bool applicable = false;
};

/// (v'_i = w'_i) ⇒ (av_i = aw_i).
EmpVerdict check_EMP_pair(const Game& v, const Game& w, Player i, const Allocation& av, const Allocation& aw);

/// Payoff rows of a solution restricted to a finite list of games; row g
/// belongs to game g of the list it was computed for.
struct SolutionTable {
	std::vector<Allocation> rows;
	friend bool operator==(const SolutionTable&, const SolutionTable&) = default;
};

}  // namespace tugame

#endif  // TUGAME_SHAPLEY_HPP
