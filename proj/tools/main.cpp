#include "golden.hpp"

#include "tugame/classification.hpp"
#include "tugame/constructions.hpp"
#include "tugame/equivalence.hpp"
#include "tugame/errors.hpp"
#include "tugame/finite_classes.hpp"
#include "tugame/io.hpp"
#include "tugame/shapley.hpp"
#include "tugame/young_engine.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>

using namespace tugame;

namespace {

enum Exit { kOk = 0, kFailure = 1, kParse = 2, kGuard = 3, kPrecondition = 4 };

struct Options {
	std::vector<std::string> inputs;
	std::string format = "paper";
	std::string class_name = "all-games";
	std::string set;
	Player player = 0;
	std::string fill = "zero";
	std::string target;
	std::string big_m;
	bool trace = false;
	std::string trace_format = "text";
	bool plain = false;
	std::optional<std::uint64_t> seed;
	std::optional<int> max_players;
};

Game single_input(const Options& o)
{
	if (o.inputs.size() != 1) {
		throw CLI::ValidationError("--input", "exactly one input game is required");
	}
	return read_game_file(o.inputs.front());
}

std::vector<Game> all_inputs(const Options& o)
{
	std::vector<Game> games;
	for (const auto& path : o.inputs) {
		games.push_back(read_game_file(path));
	}
	return games;
}

Coalition parse_set(const Options& o, const Game& v)
{
	try {
		return Coalition::parse(o.set, v.players());
	} catch (const std::invalid_argument& e) {
		throw InvalidGame(std::string("--set: ") + e.what());
	}
}

void emit_game(const Options& o, const Game& v)
{
	const ValueOrder order = parse_value_order(o.format);
	if (o.plain) {
		std::cout << format_values(v, order) << "\n";
	} else {
		write_game(std::cout, v, order);
	}
}

int cmd_shapley(const Options& o)
{
	const Game v = single_input(o);
	std::cout << shapley(v, o.max_players.value_or(kShapleyGuard)).str() << "\n";
	return kOk;
}

int cmd_classify(const Options& o)
{
	std::vector<std::string> names;
	for (GameClass c : classify(single_input(o))) {
		names.emplace_back(to_string(c));
	}
	std::sort(names.begin(), names.end());
	for (const auto& name : names) {
		std::cout << name << "\n";
	}
	return kOk;
}

int cmd_equiv(const Options& o)
{
	const Game v = single_input(o);
	if (o.set.empty()) {
		std::cout << finest_partition(v).str() << "\n";
	} else {
		std::cout << "equivalence class: " << (is_equivalence_class(v, parse_set(o, v)) ? "yes" : "no") << "\n";
	}
	return kOk;
}

int cmd_dual(const Options& o)
{
	emit_game(o, dual(single_input(o)));
	return kOk;
}

int cmd_extend(const Options& o)
{
	const Game v = single_input(o);
	const Coalition s = parse_set(o, v);
	require_player(v, o.player);
	std::optional<Rational> big_m;
	if (!o.big_m.empty()) {
		try {
			big_m = Rational::parse(o.big_m);
		} catch (const std::invalid_argument& e) {
			throw InvalidGame(std::string("--big-m: ") + e.what());
		}
	}
	Game w = Game::zero(v.players());
	if (!o.target.empty()) {
		const auto target = parse_closure_target(o.target);
		if (!target) {
			throw InvalidGame("unknown closure target " + o.target);
		}
		w = closure_construct(v, s, o.player, *target, big_m);
	} else {
		FillStrategy fill;
		if (o.fill == "zero") {
			fill = FillStrategy::zero();
		} else if (o.fill == "copy") {
			fill = FillStrategy::copy_from_source();
		} else {
			const Rational m = big_m.value_or(choose_M(v, o.player));
			fill = FillStrategy::exponential(m, m * v.players());
		}
		w = extend_equivalence_class(v, s, o.player, fill);
	}
	const auto before = classify(v);
	const auto after = classify(w);
	for (GameClass c : before) {
		if (!after.contains(c)) {
			std::cerr << "warning: result not " << to_string(c) << "\n";
		}
	}
	emit_game(o, w);
	return kOk;
}

int cmd_derive(const Options& o)
{
	const Game v = single_input(o);
	const auto spec = ClassSpec::parse(o.class_name);
	if (!spec) {
		throw InvalidGame("unknown class " + o.class_name);
	}
	EngineOptions engine;
	engine.seed = o.seed;
	if (o.max_players) {
		engine.max_players = *o.max_players;
	}
	const Derivation d = axiomatic_shapley(v, *spec, engine);
	replay(d.trace);
	if (d.allocation != shapley(v)) {
		throw VerificationError("derived allocation differs from the Shapley value");
	}
	std::cout << d.allocation.str() << "\n";
	if (o.trace) {
		if (o.trace_format == "json") {
			std::cout << trace_to_json(d.trace).dump(2) << "\n";
		} else {
			std::cout << render_text(d.trace);
		}
	}
	return kOk;
}

int cmd_closure_check(const Options& o)
{
	const auto games = all_inputs(o);
	const EmpClosureResult closed = check_emp_closed_finite(games);
	if (closed.closed) {
		std::cout << "emp-closed: yes\n";
	} else {
		const auto& x = *closed.violation;
		std::cout << "emp-closed: no (game " << x.game + 1 << ", S=" << x.s.str() << ", k=" << x.k << ")\n";
	}
	const HypothesesReport report = check_theorem1_hypotheses_finite(games);
	if (report.holds) {
		std::cout << "hypotheses: hold\n";
	} else {
		std::cout << "hypotheses: fail (game " << report.first_failure->first + 1 << ", k=" << report.first_failure->second
		          << ")\n";
	}
	std::cout << "reading: " << report.reading << "\n";
	return kOk;
}

int cmd_solve_axioms(const Options& o)
{
	const auto games = all_inputs(o);
	const AxiomSystemResult r = solve_axiom_system(games);
	std::cout << r.str() << "\n";
	if (r.solution) {
		for (std::size_t g = 0; g < r.solution->rows.size(); ++g) {
			std::cout << "game " << g + 1 << ": " << r.solution->rows[g].str() << "\n";
		}
	}
	return kOk;
}

int cmd_examples()
{
	return golden::report(std::cout, golden::run_all()) ? kOk : kFailure;
}

int guarded(const std::function<int()>& body)
{
	try {
		return body();
	} catch (const InvalidGame& e) {
		std::cerr << "error: " << e.what() << "\n";
		return kParse;
	} catch (const CLI::Error& e) {
		std::cerr << "error: " << e.what() << "\n";
		return kParse;
	} catch (const GuardExceeded& e) {
		std::cerr << "error: " << e.what() << "\n";
		return kGuard;
	} catch (const PreconditionError& e) {
		std::cerr << "error: " << e.what() << "\n";
		return kPrecondition;
	} catch (const std::exception& e) {
		std::cerr << "error: " << e.what() << "\n";
		return kFailure;
	}
}

}  // namespace

int main(int argc, char** argv)
{
	CLI::App app{"Exact TU game toolkit: Shapley value, game classes, equivalence classes and axiomatic derivations"};
	app.require_subcommand(1);
	Options o;

	auto inputs = [&](CLI::App* sub, bool many) {
		auto* opt = sub->add_option("-i,--input", o.inputs, many ? "game files (\"-\" for stdin), repeatable" : "game file, \"-\" for stdin");
		opt->required();
		if (!many) {
			opt->expected(1);
		}
	};
	auto* shapley_cmd = app.add_subcommand("shapley", "Shapley value by the subset formula");
	inputs(shapley_cmd, false);
	shapley_cmd->add_option("--max-players", o.max_players, "player guard");

	auto* classify_cmd = app.add_subcommand("classify", "list the classes the game belongs to");
	inputs(classify_cmd, false);

	auto* equiv_cmd = app.add_subcommand("equiv", "equivalence classes of players");
	inputs(equiv_cmd, false);
	equiv_cmd->add_option("--set", o.set, "test whether this coalition, e.g. \"1,2\", is an equivalence class");

	auto* dual_cmd = app.add_subcommand("dual", "dual game");
	inputs(dual_cmd, false);

	auto* extend_cmd = app.add_subcommand("extend", "grow an equivalence class by one player");
	inputs(extend_cmd, false);
	extend_cmd->add_option("--set", o.set, "equivalence class S")->required();
	extend_cmd->add_option("--player", o.player, "player k outside S")->required();
	extend_cmd->add_option("--fill", o.fill, "values of the free coalitions")
	    ->check(CLI::IsMember({"zero", "copy", "expM"}));
	extend_cmd->add_option("--target", o.target, "closure target: unrestricted, additive, strictly-convex, strictly-concave");
	extend_cmd->add_option("--big-m", o.big_m, "override M of the exponential fill");

	auto* derive_cmd = app.add_subcommand("derive", "derive the Shapley value from PO, ETP and EMP");
	inputs(derive_cmd, false);
	derive_cmd->add_option("--class", o.class_name, "class to stay in (all-games or a class tag)");
	derive_cmd->add_flag("--trace", o.trace, "print the derivation");
	derive_cmd->add_option("--trace-format", o.trace_format)->check(CLI::IsMember({"text", "json"}));
	derive_cmd->add_option("--seed", o.seed, "visit players in a seeded random order");
	derive_cmd->add_option("--max-players", o.max_players, "player guard");

	auto* closure_cmd = app.add_subcommand("closure-check", "EMP-closedness and closure hypotheses of a finite class");
	inputs(closure_cmd, true);

	auto* solve_cmd = app.add_subcommand("solve-axioms", "solve PO, ETP and EMP over a finite class");
	inputs(solve_cmd, true);

	app.add_subcommand("examples", "reproduce the worked examples");

	for (auto* sub : {dual_cmd, extend_cmd}) {
		sub->add_option("--format", o.format, "value order of the output")->check(CLI::IsMember({"paper", "bitmask"}));
		sub->add_flag("--plain", o.plain, "print the values only, space separated");
	}

	try {
		app.parse(argc, argv);
	} catch (const CLI::CallForHelp& e) {
		return app.exit(e);
	} catch (const CLI::ParseError& e) {
		app.exit(e);
		return kParse;
	}

	const std::string name = app.get_subcommands().front()->get_name();
	return guarded([&] {
		if (name == "shapley") return cmd_shapley(o);
		if (name == "classify") return cmd_classify(o);
		if (name == "equiv") return cmd_equiv(o);
		if (name == "dual") return cmd_dual(o);
		if (name == "extend") return cmd_extend(o);
		if (name == "derive") return cmd_derive(o);
		if (name == "closure-check") return cmd_closure_check(o);
		if (name == "solve-axioms") return cmd_solve_axioms(o);
		return cmd_examples();
	});
}
