#include "golden.hpp"

#include "tugame/classification.hpp"
#include "tugame/constructions.hpp"
#include "tugame/equivalence.hpp"
#include "tugame/finite_classes.hpp"
#include "tugame/io.hpp"
#include "tugame/shapley.hpp"
#include "tugame/young_engine.hpp"

#include <functional>
#include <ostream>

namespace tugame::golden {

namespace {

Game paper(int n, std::initializer_list<std::int64_t> values)
{
	std::vector<Rational> xs(values.begin(), values.end());
	return Game::from_paper_order(n, xs);
}

Allocation payoffs(std::initializer_list<Rational> xs) { return Allocation(std::vector<Rational>(xs)); }

// Each check returns an empty string on success, else a diff.
using Check = std::function<std::string(std::string& summary)>;

// Failure messages end in "; " so that they can be concatenated.
std::string expect_game(const Game& got, const Game& want)
{
	return got == want ? "" : "expected (" + format_values(want) + "), got (" + format_values(got) + "); ";
}

std::string expect_alloc(const Allocation& got, const Allocation& want)
{
	return got == want ? "" : "expected " + want.str() + ", got " + got.str() + "; ";
}

std::string expect(bool got, bool want, const std::string& what)
{
	return got == want ? "" : what + ": expected " + (want ? "true" : "false") + "; ";
}

const Game& base3() { static const Game g = paper(3, {0, 0, 0, 3, 1, 2, 3}); return g; }
const Game& base3_w() { static const Game g = paper(3, {0, 0, 0, 3, 2, 2, 4}); return g; }
const Game& base3_z() { static const Game g = paper(3, {0, 0, 0, 2, 2, 2, 3}); return g; }
const Game& blocked3() { static const Game g = paper(3, {0, 0, 10, 50, 0, 0, 20}); return g; }
const Game& blocked4() { static const Game g = paper(4, {0, 0, 0, 10, 51, 51, 51, 51, 51, 51, 62, 62, 62, 62, 103}); return g; }

std::vector<std::pair<std::string, Check>> checks()
{
	std::vector<std::pair<std::string, Check>> out;
	auto add = [&](std::string name, Check c) { out.emplace_back(std::move(name), std::move(c)); };

	add("game (0,0,0,3,1,2,3): v superadditive, not convex", [](std::string& s) {
		s = "(0,0,0,3,1,2,3)";
		return expect(is_member(base3(), GameClass::Superadditive), true, "superadditive") +
		       expect(is_member(base3(), GameClass::Convex), false, "convex");
	});
	add("game (0,0,0,3,1,2,3): no two players equivalent", [](std::string& s) {
		const std::string got = finest_partition(base3()).str();
		s = got;
		return got == "{1} {2} {3}" ? "" : "expected {1} {2} {3}, got " + got;
	});
	add("game (0,0,0,3,1,2,3): w from S={1}, k=2", [](std::string& s) {
		const Game w = extend_equivalence_class(base3(), Coalition::of({1}), 2, FillStrategy::zero());
		s = format_values(w);
		return expect_game(w, base3_w()) + expect(same_marginals(w, base3(), 2), true, "w'_2 = v'_2") +
		       expect(players_equivalent(w, 1, 2), true, "1 ~ 2 in w");
	});
	add("game (0,0,0,3,1,2,3): z from S={1,2}, k=3", [](std::string& s) {
		const Game z = extend_equivalence_class(base3_w(), Coalition::of({1, 2}), 3, FillStrategy::zero());
		s = format_values(z);
		return expect_game(z, base3_z()) + expect(is_equivalence_class(z, z.grand()), true, "N is a class of z");
	});
	add("game (0,0,0,3,1,2,3): shapley value", [](std::string& s) {
		const Allocation a = shapley(base3());
		s = a.str();
		return expect_alloc(a, payoffs({1, Rational(3, 2), Rational(1, 2)})) +
		       expect_alloc(shapley_permutation_oracle(base3()), a);
	});
	add("game (0,0,0,3,1,2,3): ETP+PO on z", [](std::string& s) {
		const Derivation d = derive_on_class(base3_z(), base3_z().grand(), ClosureTarget::Unrestricted);
		s = d.allocation.str();
		return expect_alloc(d.allocation, payoffs({1, 1, 1}));
	});
	add("game (0,0,0,3,1,2,3): EMP chain on w", [](std::string& s) {
		const Derivation d = derive_on_class(base3_w(), Coalition::of({1, 2}), ClosureTarget::Unrestricted);
		s = d.allocation.str();
		return expect_alloc(d.allocation, payoffs({Rational(3, 2), Rational(3, 2), 1}));
	});
	add("game (0,0,0,3,1,2,3): derivation on all games", [](std::string& s) {
		const Derivation d = axiomatic_shapley(base3(), ClassSpec::all_games());
		s = d.allocation.str();
		return expect_alloc(d.allocation, shapley(base3())) + expect_alloc(replay(d.trace), d.allocation);
	});
	add("game (0,0,0,3,1,2,3): derivation inside the superadditive class", [](std::string& s) {
		const Derivation d = axiomatic_shapley(base3(), ClassSpec::of(GameClass::Superadditive));
		s = d.allocation.str();
		std::string diff = expect_alloc(d.allocation, shapley(base3())) + expect_alloc(replay(d.trace), d.allocation);
		for (const Game& g : d.trace.games) {
			diff += expect(is_member(g, GameClass::Superadditive), true, "trace game superadditive");
		}
		return diff;
	});
	add("game (0,0,10,50,0,0,20): {1,2} is a class, v essential", [](std::string& s) {
		s = "(0,0,10,50,0,0,20)";
		return expect(is_equivalence_class(blocked3(), Coalition::of({1, 2})), true, "{1,2} class") +
		       expect(is_member(blocked3(), GameClass::Essential), true, "essential");
	});
	add("game (0,0,10,50,0,0,20): forced extension is not essential", [](std::string& s) {
		const Game w = extend_equivalence_class(blocked3(), Coalition::of({1, 2}), 3, FillStrategy::zero());
		s = format_values(w);
		return expect_game(w, paper(3, {10, 10, 10, 10, 10, 10, -20})) +
		       expect(is_member(w, GameClass::Essential), false, "essential");
	});
	add("four-player game: {1,2,3} is a class, v strictly superadditive", [](std::string& s) {
		s = "v({1,2}) = " + blocked4()(Coalition::of({1, 2})).str();
		return expect(is_equivalence_class(blocked4(), Coalition::of({1, 2, 3})), true, "{1,2,3} class") +
		       expect(is_member(blocked4(), GameClass::StrictlySuperadditive), true, "strictly superadditive") +
		       (blocked4()(Coalition::of({1, 2})) == 51 ? "" : "v({1,2}) should be 51; ");
	});
	add("four-player game: forced extension is weakly superadditive only", [](std::string& s) {
		const Game w = extend_equivalence_class(blocked4(), Coalition::of({1, 2, 3}), 4, FillStrategy::zero());
		s = format_values(w);
		return expect_game(w, paper(4, {10, 10, 10, 10, 61, 61, 61, 61, 61, 61, 72, 72, 72, 72, 113})) +
		       expect(is_member(w, GameClass::Superadditive), false, "superadditive") +
		       expect(is_member(w, GameClass::WeaklySuperadditive), true, "weakly superadditive");
	});
	add("choose_M on the reference games", [](std::string& s) {
		const Rational a = choose_M(base3(), 3);
		const Rational b = choose_M(blocked3(), 3);
		s = a.str() + " " + b.str();
		return (a == 3 ? "" : "(0,0,0,3,1,2,3), k=3: expected 3, got " + a.str() + "; ") +
		       (b == 31 ? "" : "(0,0,10,50,0,0,20), k=3: expected 31, got " + b.str() + "; ");
	});
	add("strictly convex closure with the 3^|T| fill", [](std::string& s) {
		const Game v = paper(3, {0, 1, 2, 4, 5, 7, 12});
		const Game w = closure_construct(v, Coalition::of({1}), 2, ClosureTarget::StrictlyConvex);
		s = format_values(w);
		return expect_game(w, paper(3, {1, 1, 72, 5, 77, 77, 84}));
	});
	add("superadditive-side w for (0,0,0,3,1,2,3), k=1", [](std::string& s) {
		const Game w = lemma4_w(base3(), 1, GameClass::Superadditive);
		s = format_values(w);
		return expect_game(w, paper(3, {0, 72, 72, 75, 73, 216, 217}));
	});
	add("dual caveat: (4,4,4,4,4,4,7) strictly subadditive, dual not weakly superadditive", [](std::string& s) {
		const Game v = paper(3, {4, 4, 4, 4, 4, 4, 7});
		s = "dual (" + format_values(dual(v)) + ")";
		return expect(is_member(v, GameClass::StrictlySubadditive), true, "strictly subadditive") +
		       expect(is_member(dual(v), GameClass::WeaklySuperadditive), false, "dual weakly superadditive");
	});
	add("dual caveat: (0,0,0,3,1,2,4) strictly superadditive, dual not weakly subadditive", [](std::string& s) {
		const Game v = paper(3, {0, 0, 0, 3, 1, 2, 4});
		s = "dual (" + format_values(dual(v)) + ")";
		return expect(is_member(v, GameClass::StrictlySuperadditive), true, "strictly superadditive") +
		       expect(is_member(dual(v), GameClass::WeaklySubadditive), false, "dual weakly subadditive") +
		       expect_game(dual(v), paper(3, {2, 3, 1, 4, 4, 4, 4}));
	});
	add("subadditive-side route on (4,4,4,4,4,4,7)", [](std::string& s) {
		const Game v = paper(3, {4, 4, 4, 4, 4, 4, 7});
		const Derivation d = axiomatic_shapley(v, ClassSpec::of(GameClass::StrictlySubadditive));
		s = d.allocation.str();
		return expect_alloc(d.allocation, shapley(v));
	});
	add("non-tight class", [](std::string& s) {
		const std::vector<Game> a{Game::zero(3), make_unanimity(3, Coalition::of({1, 2})), paper(3, {0, 0, 1, 1, 1, 1, 2})};
		const HypothesesReport hyp = check_theorem1_hypotheses_finite(a);
		const AxiomSystemResult sol = solve_axiom_system(a);
		bool matches = sol.solution.has_value();
		for (std::size_t g = 0; matches && g < a.size(); ++g) {
			matches = sol.solution->rows[g] == shapley(a[g]);
		}
		s = std::string("hypotheses: ") + (hyp.holds ? "hold" : "fail") + ", characterization: " + sol.str() +
		    (matches ? " = Shapley" : "");
		return expect(hyp.holds, false, "closure hypotheses") +
		       (matches && sol.status == AxiomSystemResult::Status::Unique ? "" : "expected a unique table equal to Shapley; ") +
		       (sol.solution && sol.solution->rows[1] == payoffs({Rational(1, 2), Rational(1, 2), 0}) ? "" : "u_{1,2} row; ");
	});
	return out;
}

}  // namespace

std::vector<Item> run_all()
{
	std::vector<Item> items;
	for (auto& [name, check] : checks()) {
		Item item{name, false, {}};
		try {
			std::string summary;
			std::string diff = check(summary);
			item.passed = diff.empty();
			if (!item.passed && diff.ends_with("; ")) {
				diff.resize(diff.size() - 2);
			}
			item.detail = item.passed ? summary : diff;
		} catch (const std::exception& e) {
			item.detail = std::string("exception: ") + e.what();
		}
		items.push_back(std::move(item));
	}
	return items;
}

bool report(std::ostream& out, const std::vector<Item>& items)
{
	std::size_t failed = 0;
	for (const Item& item : items) {
		out << (item.passed ? "PASS " : "FAIL ") << item.name << ": " << item.detail << "\n";
		failed += item.passed ? 0 : 1;
	}
	out << items.size() - failed << "/" << items.size() << " passed\n";
	return failed == 0;
}

}  // namespace tugame::golden
