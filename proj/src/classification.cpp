#include "tugame/classification.hpp"

#include <utility>

namespace tugame {

namespace {

struct ClassName {
	GameClass tag;
	std::string_view name;
};

constexpr std::array<ClassName, 16> kNames = {{
    {GameClass::Essential, "essential"},
    {GameClass::Convex, "convex"},
    {GameClass::StrictlyConvex, "strictly-convex"},
    {GameClass::Superadditive, "superadditive"},
    {GameClass::StrictlySuperadditive, "strictly-superadditive"},
    {GameClass::WeaklySuperadditive, "weakly-superadditive"},
    {GameClass::StrictlyWeaklySuperadditive, "strictly-weakly-superadditive"},
    {GameClass::Monotonic, "monotonic"},
    {GameClass::StrictlyMonotonic, "strictly-monotonic"},
    {GameClass::Additive, "additive"},
    {GameClass::WeaklySubadditive, "weakly-subadditive"},
    {GameClass::StrictlyWeaklySubadditive, "strictly-weakly-subadditive"},
    {GameClass::Subadditive, "subadditive"},
    {GameClass::StrictlySubadditive, "strictly-subadditive"},
    {GameClass::Concave, "concave"},
    {GameClass::StrictlyConcave, "strictly-concave"},
}};

enum class Cmp { Le, Lt, Ge, Gt, Eq };

bool holds(const Rational& lhs, const Rational& rhs, Cmp cmp)
{
	switch (cmp) {
	case Cmp::Le:
		return lhs <= rhs;
	case Cmp::Lt:
		return lhs < rhs;
	case Cmp::Ge:
		return lhs >= rhs;
	case Cmp::Gt:
		return lhs > rhs;
	case Cmp::Eq:
		return lhs == rhs;
	}
	return false;
}

// v(S) + v(T) against v(S ∪ T) + v(S ∩ T) for all pairs; with `crossing`
// only pairs where neither set contains the other are examined.
bool lattice_inequality(const Game& v, Cmp cmp, bool crossing)
{
	const Mask grand = v.grand().mask();
	for (Mask s = 0; s <= grand; ++s) {
		for (Mask t = s; t <= grand; ++t) {
			if (crossing && ((s & ~t) == 0 || (t & ~s) == 0)) {
				continue;
			}
			if (!holds(v[s] + v[t], v[s | t] + v[s & t], cmp)) {
				return false;
			}
		}
	}
	return true;
}

// v(S) + v(T) against v(S ∪ T) for disjoint pairs; with `nonempty` both
// sets must be nonempty.
bool disjoint_inequality(const Game& v, Cmp cmp, bool nonempty)
{
	const Mask grand = v.grand().mask();
	for (Mask s = 0; s <= grand; ++s) {
		const Mask rest = grand & ~s;
		for (Mask t = rest;; t = (t - 1) & rest) {
			if (t >= s && !(nonempty && (s == 0 || t == 0))) {
				if (!holds(v[s] + v[t], v[s | t], cmp)) {
					return false;
				}
			}
			if (t == 0) {
				break;
			}
		}
	}
	return true;
}

// v(S) + v({i}) against v(S ∪ {i}) for i ∉ S; with `nonempty` S ≠ ∅.
bool weak_inequality(const Game& v, Cmp cmp, bool nonempty)
{
	const Mask grand = v.grand().mask();
	for (Mask s = 0; s <= grand; ++s) {
		if (nonempty && s == 0) {
			continue;
		}
		for (Player i = 1; i <= v.players(); ++i) {
			const Mask bit = Coalition::singleton(i).mask();
			if ((s & bit) == 0 && !holds(v[s] + v[bit], v[s | bit], cmp)) {
				return false;
			}
		}
	}
	return true;
}

// v(S) against v(T) for S ⊆ T (S ⊂ T when `proper`).
bool monotone_inequality(const Game& v, Cmp cmp, bool proper)
{
	const Mask grand = v.grand().mask();
	for (Mask t = 0; t <= grand; ++t) {
		for (Mask s = t;; s = (s - 1) & t) {
			if (!(proper && s == t) && !holds(v[s], v[t], cmp)) {
				return false;
			}
			if (s == 0) {
				break;
			}
		}
	}
	return true;
}

bool essential(const Game& v)
{
	Rational singles;
	for (Player i = 1; i <= v.players(); ++i) {
		singles += v(Coalition::singleton(i));
	}
	return v.grand_value() > singles;
}

}  // namespace

std::string_view to_string(GameClass c)
{
	for (const auto& entry : kNames) {
		if (entry.tag == c) {
			return entry.name;
		}
	}
	return "unknown";
}

std::optional<GameClass> parse_game_class(std::string_view name)
{
	for (const auto& entry : kNames) {
		if (entry.name == name) {
			return entry.tag;
		}
	}
	return std::nullopt;
}

std::optional<GameClass> relaxed(GameClass c)
{
	switch (c) {
	case GameClass::StrictlyConvex:
		return GameClass::Convex;
	case GameClass::StrictlySuperadditive:
		return GameClass::Superadditive;
	case GameClass::StrictlyWeaklySuperadditive:
		return GameClass::WeaklySuperadditive;
	case GameClass::StrictlyMonotonic:
		return GameClass::Monotonic;
	case GameClass::StrictlyWeaklySubadditive:
		return GameClass::WeaklySubadditive;
	case GameClass::StrictlySubadditive:
		return GameClass::Subadditive;
	case GameClass::StrictlyConcave:
		return GameClass::Concave;
	default:
		return std::nullopt;
	}
}

std::optional<GameClass> mirrored(GameClass c)
{
	static constexpr std::array<std::pair<GameClass, GameClass>, 6> pairs = {{
	    {GameClass::Convex, GameClass::Concave},
	    {GameClass::StrictlyConvex, GameClass::StrictlyConcave},
	    {GameClass::Superadditive, GameClass::Subadditive},
	    {GameClass::StrictlySuperadditive, GameClass::StrictlySubadditive},
	    {GameClass::WeaklySuperadditive, GameClass::WeaklySubadditive},
	    {GameClass::StrictlyWeaklySuperadditive, GameClass::StrictlyWeaklySubadditive},
	}};
	for (const auto& [a, b] : pairs) {
		if (c == a) {
			return b;
		}
		if (c == b) {
			return a;
		}
	}
	return std::nullopt;
}

bool is_member(const Game& v, GameClass c)
{
	switch (c) {
	case GameClass::Essential:
		return essential(v);
	case GameClass::Convex:
		return lattice_inequality(v, Cmp::Le, false);
	case GameClass::StrictlyConvex:
		return lattice_inequality(v, Cmp::Lt, true);
	case GameClass::Superadditive:
		return disjoint_inequality(v, Cmp::Le, false);
	case GameClass::StrictlySuperadditive:
		return disjoint_inequality(v, Cmp::Lt, true);
	case GameClass::WeaklySuperadditive:
		return weak_inequality(v, Cmp::Le, false);
	case GameClass::StrictlyWeaklySuperadditive:
		return weak_inequality(v, Cmp::Lt, true);
	case GameClass::Monotonic:
		return monotone_inequality(v, Cmp::Le, false);
	case GameClass::StrictlyMonotonic:
		return monotone_inequality(v, Cmp::Lt, true);
	case GameClass::Additive:
		return disjoint_inequality(v, Cmp::Eq, false);
	case GameClass::WeaklySubadditive:
		return weak_inequality(v, Cmp::Ge, false);
	case GameClass::StrictlyWeaklySubadditive:
		return weak_inequality(v, Cmp::Gt, true);
	case GameClass::Subadditive:
		return disjoint_inequality(v, Cmp::Ge, false);
	case GameClass::StrictlySubadditive:
		return disjoint_inequality(v, Cmp::Gt, true);
	case GameClass::Concave:
		return lattice_inequality(v, Cmp::Ge, false);
	case GameClass::StrictlyConcave:
		return lattice_inequality(v, Cmp::Gt, true);
	}
	return false;
}

std::set<GameClass> classify(const Game& v)
{
	std::set<GameClass> out;
	for (GameClass c : kAllGameClasses) {
		if (is_member(v, c)) {
			out.insert(c);
		}
	}
	return out;
}

bool convexity_via_marginals(const Game& v, bool strict, bool concave)
{
	const Cmp cmp = concave ? (strict ? Cmp::Gt : Cmp::Ge) : (strict ? Cmp::Lt : Cmp::Le);
	const Mask grand = v.grand().mask();
	for (Player i = 1; i <= v.players(); ++i) {
		const Mask bit = Coalition::singleton(i).mask();
		const Mask others = grand & ~bit;
		for (Mask t = others;; t = (t - 1) & others) {
			const Rational at_t = v[t | bit] - v[t];
			// proper subsets Z of T
			for (Mask z = (t - 1) & t; t != 0; z = (z - 1) & t) {
				if (!holds(v[z | bit] - v[z], at_t, cmp)) {
					return false;
				}
				if (z == 0) {
					break;
				}
			}
			if (t == 0) {
				break;
			}
		}
	}
	return true;
}

}  // namespace tugame
