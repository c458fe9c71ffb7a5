#include "support/generators.hpp"
#include "support/helpers.hpp"

#include "tugame/errors.hpp"
#include "tugame/exact_linear.hpp"
#include "tugame/finite_classes.hpp"
#include "tugame/shapley.hpp"

#include <doctest.h>

using namespace tugame;
using testing::alloc;
using testing::paper;
using testing::q;

namespace {

const Game kZero = Game::zero(3);
const Game kU12 = paper(3, {0, 0, 0, 1, 0, 0, 1});
const Game kThird = paper(3, {0, 0, 1, 1, 1, 1, 2});

LinearEquation eq(std::initializer_list<Rational> coefficients, Rational rhs)
{
	return {std::vector<Rational>(coefficients), std::move(rhs)};
}

}  // namespace

TEST_SUITE("exact_linear")
{
	TEST_CASE("unique, underdetermined and inconsistent systems")
	{
		const auto unique = solve_exact({eq({2, 1}, 3), eq({1, -1}, q(1, 2))}, 2);
		REQUIRE(unique.values.has_value());
		CHECK((*unique.values)[0] == q(7, 6));
		CHECK((*unique.values)[1] == q(2, 3));
		CHECK(unique.rank == 2);

		const auto under = solve_exact({eq({1, 1, 1}, 1)}, 3);
		CHECK(under.consistent);
		CHECK_FALSE(under.values.has_value());
		CHECK(under.nullity() == 2);

		const auto bad = solve_exact({eq({1, 1}, 1), eq({2, 2}, 3)}, 2);
		CHECK_FALSE(bad.consistent);

		const auto redundant = solve_exact({eq({1, 0}, 1), eq({0, 1}, 2), eq({1, 1}, 3)}, 2);
		REQUIRE(redundant.values.has_value());
		CHECK(redundant.rank == 2);
		CHECK(solve_exact({}, 0).values.has_value());
	}

	TEST_CASE("random square systems round trip")
	{
		gen::Rng rng(61);
		for (int it = 0; it < 200; ++it) {
			const int n = gen::integer(rng, 1, 6);
			std::vector<Rational> x(static_cast<std::size_t>(n));
			for (auto& xi : x) {
				xi = gen::rational(rng);
			}
			std::vector<LinearEquation> rows;
			for (int r = 0; r < n + 2; ++r) {
				LinearEquation e{std::vector<Rational>(static_cast<std::size_t>(n)), Rational()};
				for (int c = 0; c < n; ++c) {
					e.coefficients[static_cast<std::size_t>(c)] = gen::rational(rng, 3, 3);
					e.rhs += e.coefficients[static_cast<std::size_t>(c)] * x[static_cast<std::size_t>(c)];
				}
				rows.push_back(std::move(e));
			}
			const auto sol = solve_exact(rows, static_cast<std::size_t>(n));
			CHECK(sol.consistent);
			if (sol.values) {
				CHECK(*sol.values == x);
			} else {
				CHECK(sol.rank < static_cast<std::size_t>(n));
			}
		}
	}
}

TEST_SUITE("finite_classes")
{
	TEST_CASE("EMP-closedness")
	{
		const std::vector<Game> none;
		CHECK(check_emp_closed_finite(none).closed);
		const std::vector<Game> zero{kZero};
		CHECK(check_emp_closed_finite(zero).closed);
		const std::vector<Game> pair{kZero, kU12};
		const auto r = check_emp_closed_finite(pair);
		CHECK_FALSE(r.closed);
		REQUIRE(r.violation.has_value());
		CHECK(r.violation->game == 1);
		CHECK(r.violation->s == Coalition::of({3}));
		CHECK(r.violation->k == 1);
		CHECK(is_emp_closed_subset(pair, 0b01));
		CHECK_FALSE(is_emp_closed_subset(pair, 0b11));
		const std::vector<Game> mixed{kZero, Game::zero(2)};
		CHECK_THROWS_AS(check_emp_closed_finite(mixed), PreconditionError);
	}

	TEST_CASE("scalar multiples of an additive game")
	{
		// c·(1,1,1,2,2,2,3): the grand coalition is a class and each extension is the game itself
		std::vector<Game> multiples;
		for (int c = -2; c <= 2; ++c) {
			multiples.push_back(Rational(c) * paper(3, {1, 1, 1, 2, 2, 2, 3}));
		}
		CHECK(check_emp_closed_finite(multiples).closed);
		CHECK(check_theorem1_hypotheses_finite(multiples).holds);
	}

	TEST_CASE("hypotheses of the characterization")
	{
		const std::vector<Game> none;
		CHECK(check_theorem1_hypotheses_finite(none).holds);
		const std::vector<Game> zero{kZero};
		const auto z = check_theorem1_hypotheses_finite(zero);
		CHECK(z.holds);
		CHECK(z.str() == "hypotheses: hold");
		REQUIRE(z.witnesses.size() == 3);
		CHECK(z.witnesses[0].closed_subset == 1);
		CHECK(z.witnesses[0].w == 0);

		const std::vector<Game> trio{kZero, kU12, kThird};
		const auto t = check_theorem1_hypotheses_finite(trio);
		CHECK_FALSE(t.holds);
		REQUIRE(t.first_failure.has_value());
		CHECK(t.str().rfind("hypotheses: fail (game ", 0) == 0);
		CHECK_FALSE(t.reading.empty());

		const std::vector<Game> many(17, kZero);
		CHECK_THROWS_AS(check_theorem1_hypotheses_finite(many), GuardExceeded);
	}

	TEST_CASE("axiom system on the non-tight trio")
	{
		const std::vector<Game> trio{kZero, kU12, kThird};
		const auto r = solve_axiom_system(trio);
		CHECK(r.status == AxiomSystemResult::Status::Unique);
		CHECK(r.str() == "unique");
		REQUIRE(r.solution.has_value());
		CHECK(r.solution->rows[0] == alloc({0, 0, 0}));
		CHECK(r.solution->rows[1] == alloc({q(1, 2), q(1, 2), 0}));
		CHECK(r.solution->rows[2] == alloc({q(1, 2), q(1, 2), 1}));
		for (std::size_t g = 0; g < trio.size(); ++g) {
			CHECK(r.solution->rows[g] == shapley(trio[g]));
		}
	}

	TEST_CASE("axiom system edge cases")
	{
		const std::vector<Game> zero{kZero};
		const auto z = solve_axiom_system(zero);
		REQUIRE(z.solution.has_value());
		CHECK(z.solution->rows[0] == alloc({0, 0, 0}));

		const std::vector<Game> generic{paper(3, {0, 0, 0, 3, 1, 2, 3})};
		const auto g = solve_axiom_system(generic);
		CHECK(g.status == AxiomSystemResult::Status::Underdetermined);
		CHECK(g.nullity() == 2);
		CHECK(g.str() == "underdetermined, nullity 2");

		const PayoffPin pins[] = {{0, 1, 5}};
		const auto bad = solve_axiom_system(zero, pins);
		CHECK(bad.status == AxiomSystemResult::Status::Infeasible);
		CHECK(bad.str() == "infeasible");

		const PayoffPin out_of_range[] = {{3, 1, 0}};
		CHECK_THROWS_AS(solve_axiom_system(zero, out_of_range), PreconditionError);
	}

	TEST_CASE("unique solutions are the Shapley value")
	{
		gen::Rng rng(62);
		int unique = 0;
		for (int it = 0; it < 300; ++it) {
			const int n = gen::integer(rng, 2, 3);
			std::vector<Game> games;
			const int size = gen::integer(rng, 1, 5);
			for (int g = 0; g < size; ++g) {
				// small integer games so that marginal coincidences are common
				std::vector<Rational> values;
				for (Mask m = 1; m < (Mask{1} << n); ++m) {
					values.emplace_back(gen::integer(rng, 0, 1));
				}
				games.push_back(gen::symmetrize(Game::from_bitmask_order(n, values), gen::coalition(rng, n)));
			}
			const auto r = solve_axiom_system(games);
			CHECK(r.status != AxiomSystemResult::Status::Infeasible);
			if (r.solution) {
				++unique;
				for (std::size_t g = 0; g < games.size(); ++g) {
					CHECK(r.solution->rows[g] == shapley(games[g]));
				}
			}
		}
		CHECK(unique > 0);
	}
}
