#include "support/generators.hpp"
#include "support/helpers.hpp"

#include "tugame/constructions.hpp"
#include "tugame/equivalence.hpp"
#include "tugame/errors.hpp"

#include <doctest.h>

using namespace tugame;
using testing::paper;

namespace {

const Game kBase3 = paper(3, {0, 0, 0, 3, 1, 2, 3});
const Game kBlocked3 = paper(3, {0, 0, 10, 50, 0, 0, 20});
const Game kBlocked4 = paper(4, {0, 0, 0, 10, 51, 51, 51, 51, 51, 51, 62, 62, 62, 62, 103});

constexpr GameClass kSuperSide[] = {
    GameClass::Essential,           GameClass::Convex,
    GameClass::Superadditive,       GameClass::StrictlySuperadditive,
    GameClass::WeaklySuperadditive, GameClass::StrictlyWeaklySuperadditive,
    GameClass::Monotonic,           GameClass::StrictlyMonotonic,
};
constexpr GameClass kSubSide[] = {
    GameClass::WeaklySubadditive, GameClass::StrictlyWeaklySubadditive, GameClass::Subadditive,
    GameClass::StrictlySubadditive, GameClass::Concave,
};

Player outside(gen::Rng& rng, int n, Coalition s)
{
	std::vector<Player> free;
	for (Player p = 1; p <= n; ++p) {
		if (!s.contains(p)) {
			free.push_back(p);
		}
	}
	return free[static_cast<std::size_t>(gen::integer(rng, 0, static_cast<int>(free.size()) - 1))];
}

// Proper nonempty S (or ∅) planted as a class of a member of `c`, and a k outside it.
struct Planted {
	Game v;
	Coalition s;
	Player k;
};

Planted plant(gen::Rng& rng, GameClass c)
{
	const int n = gen::integer(rng, 2, 5);
	Coalition s = gen::coalition(rng, n);
	if (s == Coalition::grand(n)) {
		s = s.without(gen::integer(rng, 1, n));
	}
	const Game v = gen::symmetrize(gen::member(rng, n, c), s);
	return {v, s, outside(rng, n, s)};
}

}  // namespace

TEST_SUITE("constructions")
{
	TEST_CASE("choose_M")
	{
		CHECK(choose_M(kBase3, 3) == 3);
		CHECK(choose_M(Game::zero(3), 2) == 1);
		CHECK(choose_M(kBlocked3, 3) == 31);
	}

	TEST_CASE("extension reproduces the worked examples")
	{
		const Game w = extend_equivalence_class(kBase3, Coalition::of({1}), 2, FillStrategy::zero());
		CHECK(w == paper(3, {0, 0, 0, 3, 2, 2, 4}));
		for (const FillStrategy& fill : {FillStrategy::zero(), FillStrategy::copy_from_source(), FillStrategy::additive(9),
		                                 FillStrategy::exponential(2, 7)}) {
			CHECK(extend_equivalence_class(w, Coalition::of({1, 2}), 3, fill) == paper(3, {0, 0, 0, 2, 2, 2, 3}));
		}
		CHECK(extend_equivalence_class(kBlocked3, Coalition::of({1, 2}), 3, FillStrategy::zero()) ==
		      paper(3, {10, 10, 10, 10, 10, 10, -20}));
		CHECK(extend_equivalence_class(kBlocked4, Coalition::of({1, 2, 3}), 4, FillStrategy::zero()) ==
		      paper(4, {10, 10, 10, 10, 61, 61, 61, 61, 61, 61, 72, 72, 72, 72, 113}));
	}

	TEST_CASE("fill strategies")
	{
		const Game v = paper(3, {1, 2, 4, 3, 5, 6, 7});
		CHECK(extend_equivalence_class(v, Coalition(), 1, FillStrategy::zero())(Coalition::of({2, 3})) == 0);
		CHECK(extend_equivalence_class(v, Coalition(), 1, FillStrategy::copy_from_source())(Coalition::of({2, 3})) == 6);
		CHECK(extend_equivalence_class(v, Coalition(), 1, FillStrategy::additive(5))(Coalition::of({2, 3})) == 10);
		CHECK(extend_equivalence_class(v, Coalition(), 1, FillStrategy::exponential(1, 2))(Coalition::of({2, 3})) == 18);
		CHECK_THROWS_AS(extend_equivalence_class(v, Coalition(), 1, FillStrategy::exponential(1, 0)), PreconditionError);
	}

	TEST_CASE("extension preconditions")
	{
		CHECK_THROWS_AS(extend_equivalence_class(kBase3, Coalition::of({1, 2}), 3, FillStrategy::zero()), PreconditionError);
		CHECK_THROWS_AS(extend_equivalence_class(kBase3, Coalition::of({1}), 1, FillStrategy::zero()), PreconditionError);
		CHECK_THROWS_AS(closure_construct(kBase3, Coalition::of({1}), 2, ClosureTarget::StrictlyConvex), PreconditionError);
		CHECK_THROWS_AS(closure_construct(kBase3, Coalition::of({1}), 2, ClosureTarget::Additive), PreconditionError);
		CHECK_THROWS_AS(lemma4_w(kBase3, 1, GameClass::Concave), PreconditionError);
		CHECK_THROWS_AS(lemma4_w(kBase3, 1, GameClass::Convex), PreconditionError);
		CHECK_THROWS_AS(lemma5_pipeline(kBase3, 1, GameClass::Superadditive), PreconditionError);
	}

	TEST_CASE("extension postconditions on random planted classes")
	{
		gen::Rng rng(41);
		for (int it = 0; it < 500; ++it) {
			const int n = gen::integer(rng, 2, 5);
			Coalition s = gen::coalition(rng, n);
			if (s == Coalition::grand(n)) {
				s = s.without(1);
			}
			const Game v = gen::symmetrize(gen::random_game(rng, n), s);
			const Player k = outside(rng, n, s);
			const FillStrategy fills[] = {FillStrategy::zero(), FillStrategy::copy_from_source(),
			                              FillStrategy::additive(gen::rational(rng)),
			                              FillStrategy::exponential(3, gen::slack(rng, true))};
			const Game w = extend_equivalence_class(v, s, k, fills[it % 4]);
			CHECK(same_marginals(v, w, k));
			CHECK(is_equivalence_class(w, s.with(k)));
			CHECK(lemma1_value_characterization(w, s.with(k)));
			CHECK(well_definedness_check(v, s, k, rng, 5));
		}
		CHECK(well_definedness_check(kBlocked4, Coalition::of({1, 2, 3}), 4, rng, 5));
	}

	TEST_CASE("additive closure")
	{
		std::vector<Rational> values;
		for (int x : {5, 5, 5, 10, 10, 10, 15}) {
			values.emplace_back(x);
		}
		const Game v = Game::from_paper_order(3, values);
		const Game w = closure_construct(v, Coalition::of({1}), 3, ClosureTarget::Additive);
		CHECK(w == v);
		gen::Rng rng(42);
		for (int it = 0; it < 200; ++it) {
			const Planted p = plant(rng, GameClass::Additive);
			const Game w2 = closure_construct(p.v, p.s, p.k, ClosureTarget::Additive);
			const Rational c = p.v(Coalition::singleton(p.k));
			for (Mask t = 1; t < w2.table().size(); ++t) {
				CHECK(w2[t] == c * std::popcount(t));
			}
			CHECK(is_member(w2, GameClass::Additive));
			CHECK(same_marginals(p.v, w2, p.k));
			CHECK(is_equivalence_class(w2, p.s.with(p.k)));
		}
	}

	TEST_CASE("strictly convex closure golden vector")
	{
		const Game v = paper(3, {0, 1, 2, 4, 5, 7, 12});
		REQUIRE(is_member(v, GameClass::StrictlyConvex));
		const Game w = closure_construct(v, Coalition::of({1}), 2, ClosureTarget::StrictlyConvex);
		CHECK(w == paper(3, {1, 1, 72, 5, 77, 77, 84}));
		CHECK_THROWS_AS(closure_construct(v, Coalition::of({1}), 2, ClosureTarget::StrictlyConvex, Rational(1)),
		                PreconditionError);
		CHECK(is_member(closure_construct(v, Coalition::of({1}), 2, ClosureTarget::StrictlyConvex, Rational(100)),
		                GameClass::StrictlyConvex));
	}

	TEST_CASE("strictly convex and strictly concave closures stay in class")
	{
		gen::Rng rng(43);
		for (int it = 0; it < 300; ++it) {
			const bool convex = it % 2 == 0;
			const GameClass c = convex ? GameClass::StrictlyConvex : GameClass::StrictlyConcave;
			const Planted p = plant(rng, c);
			const ClosureTarget t = convex ? ClosureTarget::StrictlyConvex : ClosureTarget::StrictlyConcave;
			const Game w = closure_construct(p.v, p.s, p.k, t);
			CHECK(is_member(w, c));
			CHECK(same_marginals(p.v, w, p.k));
			CHECK(is_equivalence_class(w, p.s.with(p.k)));
			if (!convex) {
				CHECK(dual(closure_construct(dual(p.v), p.s, p.k, ClosureTarget::StrictlyConvex)) == w);
			}
		}
	}

	TEST_CASE("big-M w golden vector")
	{
		const Game w = lemma4_w(kBase3, 1, GameClass::Superadditive);
		CHECK(w == paper(3, {0, 72, 72, 75, 73, 216, 217}));
		CHECK(same_marginals(w, kBase3, 1));
		const Game e = lemma4_w(kBlocked3, 3, GameClass::Essential);
		CHECK(is_member(e, GameClass::Essential));
		CHECK(same_marginals(e, kBlocked3, 3));
		const Game z = lemma4_w(Game::zero(3), 1, GameClass::Convex);
		CHECK(is_member(z, GameClass::Convex));
		CHECK(is_member(lemma4_w(Game::zero(3), 1, GameClass::Monotonic), GameClass::Monotonic));
		for (Mask t = 0; t < 8; ++t) {
			CHECK(marginal(z, 1, Coalition(t).without(1)) == 0);
		}
	}

	TEST_CASE("big-M w keeps each superadditive-side class")
	{
		gen::Rng rng(44);
		for (GameClass c : kSuperSide) {
			CAPTURE(to_string(c));
			for (int it = 0; it < 150; ++it) {
				const int n = gen::integer(rng, 2, 5);
				const Game v = gen::member(rng, n, c);
				const Player k = gen::integer(rng, 1, n);
				const Game w = lemma4_w(v, k, c);
				CHECK(is_member(w, c));
				CHECK(same_marginals(v, w, k));
			}
		}
	}

	TEST_CASE("strictly convex z needs a strictly increasing marginal")
	{
		// w'_3(Z ∪ {1}) - w'_3(Z) = v'_1(Z ∪ {3}) - v'_1(Z), and v'_1 drops by 2 from {} to {3}
		const Game w = lemma4_w(kBase3, 1, GameClass::Superadditive);
		CHECK_FALSE(marginal_strictly_increasing(w, 3));
		CHECK_THROWS_AS(lemma4_z(w, 3), PreconditionError);
		CHECK_THROWS_AS(lemma4_z(lemma4_w(Game::zero(3), 1, GameClass::Convex), 3), PreconditionError);
	}

	TEST_CASE("strictly convex z on strictly increasing marginals")
	{
		gen::Rng rng(45);
		for (int it = 0; it < 200; ++it) {
			const int n = gen::integer(rng, 2, 5);
			const Game v = gen::member(rng, n, GameClass::StrictlyConvex);
			const Player k = gen::integer(rng, 1, n);
			const Game w = lemma4_w(v, k, GameClass::Convex);
			for (Player i = 1; i <= n; ++i) {
				if (i == k) {
					continue;
				}
				REQUIRE(marginal_strictly_increasing(w, i));
				const Game z = lemma4_z(w, i);
				CHECK(is_member(z, GameClass::StrictlyConvex));
				CHECK(same_marginals(z, w, i));
			}
		}
	}

	TEST_CASE("big-M closure chains from w keep the class")
	{
		gen::Rng rng(46);
		std::vector<GameClass> tags(std::begin(kSuperSide), std::end(kSuperSide));
		tags.insert(tags.end(), std::begin(kSubSide), std::end(kSubSide));
		for (GameClass c : tags) {
			CAPTURE(to_string(c));
			for (int it = 0; it < 40; ++it) {
				const int n = gen::integer(rng, 2, 4);
				const Game v = gen::member(rng, n, c);
				const Player k = gen::integer(rng, 1, n);
				Game w = lemma4_supports(c) ? lemma4_w(v, k, c) : lemma5_pipeline(v, k, c).w;
				Coalition s = Coalition::singleton(k);
				for (Player p = 1; p <= n; ++p) {
					if (s.contains(p)) {
						continue;
					}
					const Game next = big_m_closure(w, s, p, c);
					CHECK(is_member(next, c));
					CHECK(same_marginals(next, w, p));
					CHECK(is_equivalence_class(next, s.with(p)));
					w = next;
					s = s.with(p);
				}
			}
		}
		CHECK_THROWS_AS(big_m_closure(kBase3, Coalition::of({1}), 2, GameClass::Additive), PreconditionError);
	}

	TEST_CASE("dual route for the subadditive side")
	{
		gen::Rng rng(47);
		const Game v = paper(3, {4, 4, 4, 4, 4, 4, 7});
		const DualRouteResult r = lemma5_pipeline(v, 1, GameClass::StrictlySubadditive);
		CHECK(is_member(r.w, GameClass::StrictlySubadditive));
		CHECK(same_marginals(r.w, v, 1));
		CHECK(r.w == dual(r.base));
		CHECK(r.mirrored_tag == GameClass::StrictlySuperadditive);
		CHECK_THROWS_AS(r.z(1), PreconditionError);
		const DualRouteResult zero = lemma5_pipeline(Game::zero(3), 1, GameClass::Concave);
		CHECK(is_member(zero.w, GameClass::Concave));
		for (GameClass c : kSubSide) {
			CAPTURE(to_string(c));
			for (int it = 0; it < 150; ++it) {
				const int n = gen::integer(rng, 2, 5);
				const Game g = gen::member(rng, n, c);
				const Player k = gen::integer(rng, 1, n);
				const DualRouteResult out = lemma5_pipeline(g, k, c);
				CHECK(is_member(out.w, c));
				CHECK(same_marginals(out.w, g, k));
				CHECK(mirrored(c) == out.mirrored_tag);
			}
		}
		for (int it = 0; it < 100; ++it) {
			const int n = gen::integer(rng, 2, 5);
			const Game g = gen::member(rng, n, GameClass::StrictlyConcave);
			const Player k = gen::integer(rng, 1, n);
			const DualRouteResult out = lemma5_pipeline(g, k, GameClass::Concave);
			for (Player i = 1; i <= n; ++i) {
				if (i != k) {
					const Game z = out.z(i);
					CHECK(is_member(z, GameClass::StrictlyConcave));
					CHECK(same_marginals(z, out.w, i));
				}
			}
		}
	}

	TEST_CASE("dual caveats")
	{
		CHECK_FALSE(is_member(dual(paper(3, {4, 4, 4, 4, 4, 4, 7})), GameClass::WeaklySuperadditive));
		CHECK(dual(paper(3, {0, 0, 0, 3, 1, 2, 4})) == paper(3, {2, 3, 1, 4, 4, 4, 4}));
		CHECK(is_member(paper(3, {0, 0, 0, 3, 1, 2, 4}), GameClass::Superadditive));
		CHECK_FALSE(is_member(dual(paper(3, {0, 0, 0, 3, 1, 2, 4})), GameClass::WeaklySubadditive));
	}

	TEST_CASE("closure target names")
	{
		for (ClosureTarget t :
		     {ClosureTarget::Unrestricted, ClosureTarget::Additive, ClosureTarget::StrictlyConvex, ClosureTarget::StrictlyConcave}) {
			CHECK(parse_closure_target(to_string(t)) == t);
		}
		CHECK_FALSE(parse_closure_target("convex").has_value());
	}
}
