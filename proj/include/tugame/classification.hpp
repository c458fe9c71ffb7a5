#ifndef TUGAME_CLASSIFICATION_HPP
#define TUGAME_CLASSIFICATION_HPP

#include "tugame/game.hpp"

#include <array>
#include <optional>
#include <set>
#include <string_view>

namespace tugame {

enum class GameClass {
	Essential,
	Convex,
	StrictlyConvex,
	Superadditive,
	StrictlySuperadditive,
	WeaklySuperadditive,
	StrictlyWeaklySuperadditive,
	Monotonic,
	StrictlyMonotonic,
	Additive,
	WeaklySubadditive,
	StrictlyWeaklySubadditive,
	Subadditive,
	StrictlySubadditive,
	Concave,
	StrictlyConcave,
};

inline constexpr std::array<GameClass, 16> kAllGameClasses = {
    GameClass::Essential,
    GameClass::Convex,
    GameClass::StrictlyConvex,
    GameClass::Superadditive,
    GameClass::StrictlySuperadditive,
    GameClass::WeaklySuperadditive,
    GameClass::StrictlyWeaklySuperadditive,
    GameClass::Monotonic,
    GameClass::StrictlyMonotonic,
    GameClass::Additive,
    GameClass::WeaklySubadditive,
    GameClass::StrictlyWeaklySubadditive,
    GameClass::Subadditive,
    GameClass::StrictlySubadditive,
    GameClass::Concave,
    GameClass::StrictlyConcave,
};

/// Kebab-case name, e.g. "strictly-weakly-superadditive".
std::string_view to_string(GameClass c);
std::optional<GameClass> parse_game_class(std::string_view name);

/// Non-strict counterpart of a strict tag, if any.
std::optional<GameClass> relaxed(GameClass c);

/// Tag obtained by swapping the super/sub (convex/concave) side. Essential,
/// Monotonic and Additive have no mirror.
std::optional<GameClass> mirrored(GameClass c);

/// Exhaustive check of the defining quantifier for the class.
bool is_member(const Game& v, GameClass c);

/// Every tag whose predicate holds, each evaluated independently.
std::set<GameClass> classify(const Game& v);

/// Convexity (or concavity with `concave`) through marginal contributions:
/// for all i and Z ⊂ T ⊆ N∖{i}, v'_i(Z) ≤ v'_i(T) (< when `strict`;
/// reversed when `concave`).
bool convexity_via_marginals(const Game& v, bool strict, bool concave);

}  // namespace tugame

#endif  // TUGAME_CLASSIFICATION_HPP
