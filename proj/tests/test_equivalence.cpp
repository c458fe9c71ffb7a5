#include "support/generators.hpp"
#include "support/helpers.hpp"

#include "tugame/equivalence.hpp"
#include "tugame/errors.hpp"

#include <doctest.h>

using namespace tugame;
using testing::paper;

TEST_SUITE("equivalence")
{
	TEST_CASE("reference games")
	{
		const Game base3 = paper(3, {0, 0, 0, 3, 1, 2, 3});
		CHECK_FALSE(players_equivalent(base3, 1, 2));
		CHECK_FALSE(players_equivalent(base3, 1, 3));
		CHECK_FALSE(players_equivalent(base3, 2, 3));
		CHECK(players_equivalent(base3, 2, 2));
		CHECK(finest_partition(base3).str() == "{1} {2} {3}");
		CHECK_FALSE(is_equivalence_class(base3, Coalition::of({1, 2})));

		const Game blocked3 = paper(3, {0, 0, 10, 50, 0, 0, 20});
		CHECK(players_equivalent(blocked3, 1, 2));
		CHECK(lemma1_value_characterization(blocked3, Coalition::of({1, 2})));
		CHECK(corollary2_check(blocked3, Coalition::of({1, 2}), 3));

		const Game blocked4 = paper(4, {0, 0, 0, 10, 51, 51, 51, 51, 51, 51, 62, 62, 62, 62, 103});
		CHECK(is_equivalence_class(blocked4, Coalition::of({1, 2, 3})));

		CHECK(finest_partition(Game::zero(3)).str() == "{1,2,3}");
		CHECK(finest_partition(paper(3, {0, 0, 0, 3, 2, 2, 4})).str() == "{1,2} {3}");
		CHECK(is_equivalence_class(base3, Coalition::of({3})));
		CHECK(is_equivalence_class(base3, Coalition()));
		CHECK(lemma1_value_characterization(base3, Coalition()));
		CHECK(corollary2_check(base3, Coalition(), 2));
	}

	TEST_CASE("errors")
	{
		const Game v = paper(3, {0, 0, 0, 3, 1, 2, 3});
		CHECK_THROWS_AS(players_equivalent(v, 1, 4), PreconditionError);
		CHECK_THROWS_AS(corollary2_check(v, Coalition::of({1, 2}), 3), PreconditionError);
		CHECK_THROWS_AS(corollary2_check(Game::zero(3), Coalition::of({1, 2}), 2), PreconditionError);
	}

	TEST_CASE("the relation is an equivalence")
	{
		gen::Rng rng(21);
		for (int it = 0; it < 400; ++it) {
			const int n = gen::integer(rng, 2, 5);
			Game v = gen::random_game(rng, n);
			if (it % 2) {
				v = gen::symmetrize(v, gen::coalition(rng, n));
			}
			for (Player i = 1; i <= n; ++i) {
				CHECK(players_equivalent(v, i, i));
				for (Player j = 1; j <= n; ++j) {
					const bool ij = players_equivalent(v, i, j);
					CHECK(ij == players_equivalent(v, j, i));
					for (Player l = 1; l <= n; ++l) {
						if (ij && players_equivalent(v, j, l)) {
							CHECK(players_equivalent(v, i, l));
						}
					}
				}
			}
			const Partition p = finest_partition(v);
			Coalition seen;
			for (Coalition b : p.blocks) {
				CHECK((seen & b).empty());
				CHECK(is_equivalence_class(v, b));
				seen = seen | b;
			}
			CHECK(seen == Coalition::grand(n));
			for (std::size_t a = 0; a < p.blocks.size(); ++a) {
				for (std::size_t b = a + 1; b < p.blocks.size(); ++b) {
					CHECK_FALSE(is_equivalence_class(v, p.blocks[a] | p.blocks[b]));
				}
			}
		}
	}

	TEST_CASE("class test agrees with value characterization, exhaustive n = 3")
	{
		gen::for_each_integer_game(3, -1, 1, [](const Game& v) {
			for (Mask s = 0; s < 8; ++s) {
				REQUIRE(is_equivalence_class(v, Coalition(s)) == lemma1_value_characterization(v, Coalition(s)));
			}
		});
	}

	TEST_CASE("class test agrees with value characterization, sampled n = 4, 5")
	{
		gen::Rng rng(22);
		for (int it = 0; it < 600; ++it) {
			const int n = gen::integer(rng, 4, 5);
			Game v = gen::random_game(rng, n);
			if (it % 3 != 0) {
				v = gen::symmetrize(v, gen::coalition(rng, n));
			}
			for (Mask s = 0; s < (Mask{1} << n); ++s) {
				CHECK(is_equivalence_class(v, Coalition(s)) == lemma1_value_characterization(v, Coalition(s)));
			}
		}
	}

	TEST_CASE("planted classes give order-free marginals")
	{
		gen::Rng rng(23);
		for (int it = 0; it < 300; ++it) {
			const int n = gen::integer(rng, 2, 5);
			const Coalition s = gen::coalition(rng, n);
			const Game v = gen::symmetrize(gen::random_game(rng, n), s);
			REQUIRE(is_equivalence_class(v, s));
			for (Player k = 1; k <= n; ++k) {
				if (!s.contains(k)) {
					CHECK(corollary2_check(v, s, k));
				}
			}
			// every subset of a class is a class
			const Mask sm = s.mask();
			for (Mask t = sm;; t = (t - 1) & sm) {
				CHECK(is_equivalence_class(v, Coalition(t)));
				if (t == 0) {
					break;
				}
			}
		}
	}

	TEST_CASE("duals keep equivalent players")
	{
		gen::Rng rng(24);
		for (int it = 0; it < 300; ++it) {
			const int n = gen::integer(rng, 2, 5);
			const Game v = gen::symmetrize(gen::random_game(rng, n), gen::coalition(rng, n));
			const Game d = dual(v);
			for (Player i = 1; i <= n; ++i) {
				for (Player j = i + 1; j <= n; ++j) {
					if (players_equivalent(v, i, j)) {
						CHECK(players_equivalent(d, i, j));
					}
				}
			}
		}
	}
}
