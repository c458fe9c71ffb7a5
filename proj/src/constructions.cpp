#include "tugame/constructions.hpp"

#include "fault_injection.hpp"
#include "tugame/equivalence.hpp"
#include "tugame/errors.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace tugame {

namespace {

std::int64_t power(std::int64_t base, int exponent)
{
	std::int64_t r = 1;
	for (int e = 0; e < exponent; ++e) {
		r *= base;
	}
	return r;
}

void require_extension_input(const Game& v, Coalition s, Player k)
{
	require_player(v, k);
	require_coalition(v, s);
	if (s.contains(k)) {
		throw PreconditionError("player " + std::to_string(k) + " already belongs to " + s.str());
	}
	if (!is_equivalence_class(v, s)) {
		throw PreconditionError(s.str() + " is not an equivalence class of the input game");
	}
}

// Σ_{i=1..m} v'_k(base ∪ {l_1..l_{i-1}})
Rational extension_sum(const Game& v, Player k, Mask base, const std::vector<Player>& order, int m)
{
	const Mask bit = Coalition::singleton(k).mask();
	Rational sum;
	for (int i = 1; i <= m; ++i) {
		const int prefix = std::clamp(i - detail::kPrefixOffset, 0, static_cast<int>(order.size()));
		Mask t = base;
		for (int j = 0; j < prefix; ++j) {
			t |= Coalition::singleton(order[static_cast<std::size_t>(j)]).mask();
		}
		sum += v[t | bit] - v[t];
	}
	return sum;
}

void verify_extension(const Game& v, const Game& w, Coalition grown, Player k, const char* what)
{
	if (!same_marginals(w, v, k)) {
		throw VerificationError(std::string(what) + ": marginal contributions of player " + std::to_string(k) +
		                        " were not preserved");
	}
	if (!is_equivalence_class(w, grown)) {
		throw VerificationError(std::string(what) + ": " + grown.str() + " is not an equivalence class of the result");
	}
}

void verify_class(const Game& w, GameClass c, const char* what)
{
	if (!is_member(w, c)) {
		throw VerificationError(std::string(what) + ": result is not " + std::string(to_string(c)));
	}
}

void require_class(const Game& v, GameClass c)
{
	if (!is_member(v, c)) {
		throw PreconditionError("input game is not " + std::string(to_string(c)));
	}
}

// Shared core of lemma4_w: extension of the trivial class ∅ by k with the
// fill 2Mn 3^|T|.
Game big_m_extension(const Game& v, Player k)
{
	Rational m = choose_M(v, k);
	return extend_equivalence_class(v, Coalition(), k, FillStrategy::exponential(m, Rational(2) * m * v.players()));
}

constexpr std::array<GameClass, 8> kSuperadditiveSide = {
    GameClass::Essential,
    GameClass::Convex,
    GameClass::Superadditive,
    GameClass::StrictlySuperadditive,
    GameClass::WeaklySuperadditive,
    GameClass::StrictlyWeaklySuperadditive,
    GameClass::Monotonic,
    GameClass::StrictlyMonotonic,
};

constexpr std::array<GameClass, 5> kSubadditiveSide = {
    GameClass::WeaklySubadditive,
    GameClass::StrictlyWeaklySubadditive,
    GameClass::Subadditive,
    GameClass::StrictlySubadditive,
    GameClass::Concave,
};

}  // namespace

Rational FillStrategy::value(const Game& source, Coalition t) const
{
	switch (kind) {
	case Kind::Zero:
		return {};
	case Kind::CopyFromSource:
		return source(t);
	case Kind::Additive:
		return constant * t.size();
	case Kind::Exponential:
		return scale * power(detail::kExponentialFillBase, t.size());
	}
	return {};
}

std::string_view to_string(ClosureTarget t)
{
	switch (t) {
	case ClosureTarget::Unrestricted:
		return "unrestricted";
	case ClosureTarget::Additive:
		return "additive";
	case ClosureTarget::StrictlyConvex:
		return "strictly-convex";
	case ClosureTarget::StrictlyConcave:
		return "strictly-concave";
	}
	return "unknown";
}

std::optional<ClosureTarget> parse_closure_target(std::string_view name)
{
	for (ClosureTarget t :
	     {ClosureTarget::Unrestricted, ClosureTarget::Additive, ClosureTarget::StrictlyConvex, ClosureTarget::StrictlyConcave}) {
		if (to_string(t) == name) {
			return t;
		}
	}
	return std::nullopt;
}

Rational choose_M(const Game& v, Player k)
{
	require_player(v, k);
	const Mask grand = v.grand().mask();
	Rational largest;
	for (Mask t = 0; t < grand; ++t) {
		Rational a = marginal(v, k, Coalition(t)).abs();
		if (a > largest) {
			largest = a;
		}
	}
	return largest + 1;
}

Game extend_equivalence_class(const Game& v, Coalition s, Player k, const FillStrategy& fill)
{
	require_extension_input(v, s, k);
	if (fill.kind == FillStrategy::Kind::Exponential && fill.scale.sign() <= 0) {
		throw PreconditionError("exponential fill needs a positive scale");
	}
	const Coalition grown = s.with(k);
	const Mask grand = v.grand().mask();
	std::vector<Rational> table(static_cast<std::size_t>(grand) + 1);
	for (Mask t = 1; t <= grand; ++t) {
		const Mask base = t & ~grown.mask();
		if (base == t) {
			table[t] = fill.value(v, Coalition(t));
			continue;
		}
		// base ⊂ t, so table[base] is already final
		const int m = std::popcount(t & grown.mask());
		const auto order = Coalition(t & s.mask()).players();
		table[t] = table[base] + extension_sum(v, k, base, order, m);
	}
	Game w = Game::from_table(v.players(), std::move(table));
	verify_extension(v, w, grown, k, "extension");
	return w;
}

bool well_definedness_check(const Game& v, Coalition s, Player k, std::mt19937_64& rng, int orderings)
{
	require_extension_input(v, s, k);
	const Coalition grown = s.with(k);
	const Mask grand = v.grand().mask();
	for (Mask t = 1; t <= grand; ++t) {
		const Mask base = t & ~grown.mask();
		if (base == t) {
			continue;
		}
		const int m = std::popcount(t & grown.mask());
		auto order = Coalition(t & s.mask()).players();
		const Rational canonical = extension_sum(v, k, base, order, m);
		for (int r = 0; r < orderings && order.size() > 1; ++r) {
			std::shuffle(order.begin(), order.end(), rng);
			if (extension_sum(v, k, base, order, m) != canonical) {
				return false;
			}
		}
	}
	return true;
}

Game closure_construct(const Game& v, Coalition s, Player k, ClosureTarget target, const std::optional<Rational>& big_m)
{
	require_extension_input(v, s, k);
	const Coalition grown = s.with(k);
	switch (target) {
	case ClosureTarget::Unrestricted:
		return extend_equivalence_class(v, s, k, FillStrategy::zero());

	case ClosureTarget::Additive: {
		require_class(v, GameClass::Additive);
		const Rational c = marginal(v, k, Coalition());
		std::vector<Rational> table(v.table().size());
		for (Mask t = 1; t < table.size(); ++t) {
			table[t] = c * std::popcount(t);
		}
		Game w = Game::from_table(v.players(), std::move(table));
		verify_extension(v, w, grown, k, "additive closure");
		verify_class(w, GameClass::Additive, "additive closure");
		return w;
	}

	case ClosureTarget::StrictlyConvex: {
		require_class(v, GameClass::StrictlyConvex);
		const Rational minimal = choose_M(v, k);
		const Rational m = big_m.value_or(minimal);
		if (m <= minimal - 1) {
			throw PreconditionError("M must exceed every |v'_k(T)|, i.e. be > " + (minimal - 1).str());
		}
		Game w = extend_equivalence_class(v, s, k, FillStrategy::exponential(m, m * v.players()));
		verify_class(w, GameClass::StrictlyConvex, "strictly convex closure");
		return w;
	}

	case ClosureTarget::StrictlyConcave: {
		require_class(v, GameClass::StrictlyConcave);
		Game w = dual(closure_construct(dual(v), s, k, ClosureTarget::StrictlyConvex, big_m));
		verify_extension(v, w, grown, k, "strictly concave closure");
		verify_class(w, GameClass::StrictlyConcave, "strictly concave closure");
		return w;
	}
	}
	throw PreconditionError("unknown closure target");
}

bool lemma4_supports(GameClass c) { return std::find(kSuperadditiveSide.begin(), kSuperadditiveSide.end(), c) != kSuperadditiveSide.end(); }

bool lemma5_supports(GameClass c) { return std::find(kSubadditiveSide.begin(), kSubadditiveSide.end(), c) != kSubadditiveSide.end(); }

Game lemma4_w(const Game& v, Player k, GameClass tag)
{
	require_player(v, k);
	if (!lemma4_supports(tag)) {
		throw PreconditionError("lemma4_w does not handle " + std::string(to_string(tag)) + " games");
	}
	require_class(v, tag);
	Game w = big_m_extension(v, k);
	verify_class(w, tag, "lemma4_w");
	return w;
}

bool marginal_strictly_increasing(const Game& w, Player i)
{
	require_player(w, i);
	const Mask grand = w.grand().mask();
	const Mask bit = Coalition::singleton(i).mask();
	for (Mask z = 0; z <= grand; ++z) {
		if (z & bit) {
			continue;
		}
		for (Player j = 1; j <= w.players(); ++j) {
			const Mask t = z | Coalition::singleton(j).mask();
			if (t == z || (t & bit)) {
				continue;
			}
			if (marginal(w, i, Coalition(t)) <= marginal(w, i, Coalition(z))) {
				return false;
			}
		}
	}
	return true;
}

Game lemma4_z(const Game& w, Player i)
{
	require_player(w, i);
	if (!marginal_strictly_increasing(w, i)) {
		throw PreconditionError("no strictly convex game shares the marginal function of player " + std::to_string(i) +
		                        ": it is not strictly increasing");
	}
	Game z = big_m_extension(w, i);
	verify_class(z, GameClass::StrictlyConvex, "lemma4_z");
	return z;
}

Game big_m_closure(const Game& v, Coalition s, Player k, GameClass keep)
{
	require_extension_input(v, s, k);
	const bool dual_side = lemma5_supports(keep);
	if (!dual_side && !lemma4_supports(keep)) {
		throw PreconditionError("big-M closure does not handle " + std::string(to_string(keep)) + " games");
	}
	const Game base = dual_side ? dual(v) : v;
	const Rational m = choose_M(base, k);
	Game w = extend_equivalence_class(base, s, k, FillStrategy::exponential(m, m * v.players()));
	if (dual_side) {
		w = dual(w);
		verify_extension(v, w, s.with(k), k, "big-M closure");
	}
	verify_class(w, keep, "big-M closure");
	return w;
}

DualRouteResult lemma5_pipeline(const Game& v, Player k, GameClass tag)
{
	require_player(v, k);
	if (!lemma5_supports(tag)) {
		throw PreconditionError("lemma5_pipeline does not handle " + std::string(to_string(tag)) + " games");
	}
	require_class(v, tag);
	// The dual of v need not lie in the mirrored class, so the big-M
	// construction is applied without its class precondition and only the
	// final game is checked against `tag`.
	Game base = big_m_extension(dual(v), k);
	Game w = dual(base);
	if (!same_marginals(w, v, k)) {
		throw VerificationError("lemma5_pipeline: marginal contributions of player " + std::to_string(k) + " were not preserved");
	}
	verify_class(w, tag, "lemma5_pipeline");
	return DualRouteResult{std::move(w), std::move(base), k, tag, tag == GameClass::Concave ? GameClass::Convex : *mirrored(tag)};
}

Game DualRouteResult::z(Player i) const
{
	require_player(w, i);
	if (i == k) {
		throw PreconditionError("z(i) is only defined for players other than " + std::to_string(k));
	}
	if (!marginal_strictly_increasing(base, i)) {
		throw PreconditionError("no strictly concave game shares the marginal function of player " + std::to_string(i) +
		                        ": it is not strictly decreasing");
	}
	Game result = dual(lemma4_z(base, i));
	if (!same_marginals(result, w, i)) {
		throw VerificationError("lemma5 z(" + std::to_string(i) + "): marginal contributions were not preserved");
	}
	verify_class(result, GameClass::StrictlyConcave, "lemma5 z");
	return result;
}

}  // namespace tugame
