#include "tugame/io.hpp"

#include "tugame/errors.hpp"

#include <fstream>
#include <iostream>

namespace tugame {

namespace {

using nlohmann::json;

Rational value_from_json(const json& x, std::size_t index)
{
	try {
		if (x.is_string()) {
			return Rational::parse(x.get<std::string>());
		}
		if (x.is_number_integer()) {
			return Rational(x.get<std::int64_t>());
		}
	} catch (const std::invalid_argument& e) {
		throw InvalidGame("value " + std::to_string(index) + ": " + e.what());
	}
	throw InvalidGame("value " + std::to_string(index) + " must be an integer or a \"p/q\" string");
}

json values_to_json(const std::vector<Rational>& values)
{
	json out = json::array();
	for (const Rational& x : values) {
		out.push_back(x.str());
	}
	return out;
}

}  // namespace

std::string_view to_string(ValueOrder order) { return order == ValueOrder::Paper ? "paper" : "bitmask"; }

ValueOrder parse_value_order(std::string_view name)
{
	if (name == "paper") {
		return ValueOrder::Paper;
	}
	if (name == "bitmask") {
		return ValueOrder::Bitmask;
	}
	throw InvalidGame("unknown value order \"" + std::string(name) + "\" (expected paper or bitmask)");
}

Game game_from_json(const json& doc)
{
	if (!doc.is_object()) {
		throw InvalidGame("game file must hold a JSON object");
	}
	if (!doc.contains("players") || !doc["players"].is_number_integer()) {
		throw InvalidGame("\"players\" must be an integer");
	}
	const auto n = doc["players"].get<std::int64_t>();
	if (n < 1 || n > kMaxPlayers) {
		throw InvalidGame("\"players\" must lie in 1.." + std::to_string(kMaxPlayers));
	}
	ValueOrder order = ValueOrder::Paper;
	if (doc.contains("order")) {
		if (!doc["order"].is_string()) {
			throw InvalidGame("\"order\" must be a string");
		}
		order = parse_value_order(doc["order"].get<std::string>());
	}
	if (!doc.contains("values") || !doc["values"].is_array()) {
		throw InvalidGame("\"values\" must be an array");
	}
	std::vector<Rational> values;
	for (std::size_t i = 0; i < doc["values"].size(); ++i) {
		values.push_back(value_from_json(doc["values"][i], i));
	}
	const int players = static_cast<int>(n);
	return order == ValueOrder::Paper ? Game::from_paper_order(players, values)
	                                  : Game::from_bitmask_order(players, std::move(values));
}

Game read_game(std::istream& in)
{
	json doc;
	try {
		doc = json::parse(in);
	} catch (const json::parse_error& e) {
		throw InvalidGame(std::string("malformed JSON: ") + e.what());
	}
	return game_from_json(doc);
}

Game read_game_file(const std::string& path)
{
	if (path == "-") {
		return read_game(std::cin);
	}
	std::ifstream in(path);
	if (!in) {
		throw InvalidGame("cannot open " + path);
	}
	return read_game(in);
}

json game_to_json(const Game& v, ValueOrder order)
{
	return json{{"players", v.players()},
	            {"order", std::string(to_string(order))},
	            {"values", values_to_json(order == ValueOrder::Paper ? v.to_paper_order() : v.to_bitmask_order())}};
}

void write_game(std::ostream& out, const Game& v, ValueOrder order) { out << game_to_json(v, order).dump() << "\n"; }

std::string format_values(const Game& v, ValueOrder order)
{
	std::string out;
	for (const Rational& x : order == ValueOrder::Paper ? v.to_paper_order() : v.to_bitmask_order()) {
		if (!out.empty()) {
			out += ' ';
		}
		out += x.str();
	}
	return out;
}

json trace_to_json(const DerivationTrace& trace)
{
	json games = json::array();
	for (const Game& g : trace.games) {
		games.push_back(values_to_json(g.to_paper_order()));
	}
	json steps = json::array();
	for (const DerivationStep& s : trace.steps) {
		json step{{"kind", std::string(to_string(s.kind))},
		          {"justification", s.justification},
		          {"source", s.source},
		          {"target", s.target}};
		if (s.kind != StepKind::EmpTransfer) {
			step["members"] = s.members.players();
		}
		if (s.kind != StepKind::EtpPoResolve) {
			step["player"] = s.player;
		}
		json payoffs = json::object();
		for (const auto& [p, x] : s.payoffs) {
			payoffs[std::to_string(p)] = x.str();
		}
		if (!payoffs.empty()) {
			step["payoffs"] = payoffs;
		}
		steps.push_back(std::move(step));
	}
	json allocation = json::array();
	for (const Rational& x : trace.allocation.payoffs()) {
		allocation.push_back(x.str());
	}
	return json{{"reading", trace.reading},
	            {"players", trace.games.empty() ? 0 : trace.games.front().players()},
	            {"root", trace.root},
	            {"games", games},
	            {"steps", steps},
	            {"allocation", allocation},
	            {"stats",
	             {{"games_constructed", trace.stats.games_constructed},
	              {"max_depth", trace.stats.max_depth},
	              {"memo_hits", trace.stats.memo_hits}}}};
}

}  // namespace tugame
