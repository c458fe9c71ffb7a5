#ifndef TUGAME_EQUIVALENCE_HPP
#define TUGAME_EQUIVALENCE_HPP

#include "tugame/game.hpp"

#include <string>
#include <vector>

namespace tugame {

/// Disjoint blocks covering the player set, each listed by ascending
/// smallest member.
struct Partition {
	std::vector<Coalition> blocks;

	/// "{1,2} {3}"
	std::string str() const;
	friend bool operator==(const Partition&, const Partition&) = default;
};

/// i ~ j in v: v'_i(S) = v'_j(S) for every S avoiding both players.
bool players_equivalent(const Game& v, Player i, Player j);

/// Every pair of members is equivalent. Vacuously true for |S| ≤ 1.
bool is_equivalence_class(const Game& v, Coalition s);

/// Quotient of the player set by ~. Throws std::logic_error if the relation
/// turns out not to be transitive on v.
Partition finest_partition(const Game& v);

/// For all T, Z with T∖S = Z∖S and |T| = |Z|: v(T) = v(Z).
bool lemma1_value_characterization(const Game& v, Coalition s);

/// For all T, Z ⊆ N∖{k} with T∖S = Z∖S and |T| = |Z|: v'_k(T) = v'_k(Z).
/// Throws PreconditionError unless S is an equivalence class in v and k ∉ S.
bool corollary2_check(const Game& v, Coalition s, Player k);

}  // namespace tugame

#endif  // TUGAME_EQUIVALENCE_HPP
