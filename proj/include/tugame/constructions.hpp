#ifndef TUGAME_CONSTRUCTIONS_HPP
#define TUGAME_CONSTRUCTIONS_HPP

#include "tugame/classification.hpp"
#include "tugame/game.hpp"

#include <optional>
#include <random>
#include <string_view>

namespace tugame {

/// Values given to the free coalitions of an extension, i.e. the nonempty T
/// that avoid S ∪ {k}.
struct FillStrategy {
	enum class Kind { Zero, CopyFromSource, Additive, Exponential };

	Kind kind = Kind::Zero;
	Rational constant;  ///< c* for Additive: value c*|T|
	Rational big_m;     ///< M for Exponential, recorded for traces
	Rational scale;     ///< Exponential: value scale * 3^|T|

	static FillStrategy zero() { return {}; }
	static FillStrategy copy_from_source() { return {Kind::CopyFromSource, {}, {}, {}}; }
	static FillStrategy additive(Rational c) { return {Kind::Additive, std::move(c), {}, {}}; }
	static FillStrategy exponential(Rational m, Rational scale) { return {Kind::Exponential, {}, std::move(m), std::move(scale)}; }

	Rational value(const Game& source, Coalition t) const;
};

enum class ClosureTarget { Unrestricted, Additive, StrictlyConvex, StrictlyConcave };

std::string_view to_string(ClosureTarget t);
std::optional<ClosureTarget> parse_closure_target(std::string_view name);

/// max_{T ⊂ N} |v'_k(T)| + 1.
Rational choose_M(const Game& v, Player k);

/// Grows the equivalence class S of v by player k. Coalitions meeting
/// S ∪ {k} get
///   w(T) = w(T∖(S∪{k})) + Σ_{i=1..m} v'_k((T∖(S∪{k})) ∪ {l_1..l_{i-1}})
/// with m = |(S∪{k}) ∩ T| and l_1 < l_2 < ... the members of S ∩ T; the
/// remaining nonempty coalitions come from `fill`. The result has S ∪ {k}
/// as an equivalence class and w'_k = v'_k (both verified).
Game extend_equivalence_class(const Game& v, Coalition s, Player k, const FillStrategy& fill);

/// Re-evaluates the extension sum of every coalition under `orderings`
/// random orders of S ∩ T and compares against ascending order.
bool well_definedness_check(const Game& v, Coalition s, Player k, std::mt19937_64& rng, int orderings = 5);

/// Extension that stays inside the target class. For the additive target
/// w(T) = v'_k(∅)|T|; strictly convex uses the exponential fill with scale
/// M*n; strictly concave runs the strictly convex route on the dual and
/// dualizes back. `big_m` overrides choose_M and must exceed the same bound.
Game closure_construct(const Game& v, Coalition s, Player k, ClosureTarget target,
                       const std::optional<Rational>& big_m = std::nullopt);

/// Classes handled by lemma4_w (superadditive side, essential, monotonic).
bool lemma4_supports(GameClass c);
/// Classes handled by lemma5_pipeline (subadditive side, concave).
bool lemma5_supports(GameClass c);

/// w(T) = 2Mn 3^|T| off k and w(T) = w(T∖{k}) + v'_k(T∖{k}) on k. The
/// result keeps v's class and w'_k = v'_k.
Game lemma4_w(const Game& v, Player k, GameClass tag);

/// True iff w'_i(Z) < w'_i(T) for all Z ⊂ T ⊆ N∖{i}.
bool marginal_strictly_increasing(const Game& w, Player i);

/// Same construction rooted at player i of w; the result is strictly convex
/// with z'_i = w'_i. A strictly convex game has strictly increasing
/// marginals, so w'_i must already be strictly increasing (PreconditionError
/// otherwise). Note that w'_i(Z ∪ {k}) - w'_i(Z) = v'_k(Z ∪ {i}) - v'_k(Z) for
/// w = lemma4_w(v, k), so this fails whenever v'_k is not strictly increasing.
Game lemma4_z(const Game& w, Player i);

/// Extension of the class S of v by k with the fill M n 3^|T|, M =
/// choose_M(v, k), run on the dual for subadditive-side classes. The result
/// is verified to stay in `keep`, which must be a class of lemma4_w or lemma5_pipeline.
Game big_m_closure(const Game& v, Coalition s, Player k, GameClass keep);

struct DualRouteResult {
	Game w;
	/// Construction on the dual side; w = dual(base).
	Game base;
	Player k = 0;
	GameClass tag = GameClass::Concave;
	GameClass mirrored_tag = GameClass::Convex;

	/// Strictly concave z(i) with z(i)'_i = w'_i, for i ≠ k. Requires
	/// base'_i to be strictly increasing.
	Game z(Player i) const;
};

/// Dual route for the subadditive side: dualize, apply the lemma4_w
/// construction, dualize back.
DualRouteResult lemma5_pipeline(const Game& v, Player k, GameClass tag);

}  // namespace tugame

#endif  // TUGAME_CONSTRUCTIONS_HPP
