#ifndef TUGAME_IO_HPP
#define TUGAME_IO_HPP

#include "tugame/game.hpp"
#include "tugame/young_engine.hpp"

#include <iosfwd>
#include <string>
#include <string_view>

#include <json.hpp>

namespace tugame {

enum class ValueOrder { Paper, Bitmask };

std::string_view to_string(ValueOrder order);
/// "paper" or "bitmask"; throws InvalidGame otherwise.
ValueOrder parse_value_order(std::string_view name);

// Game files are JSON objects
//   {"players": n, "order": "paper" | "bitmask", "values": ["0", "3/2", ...]}
// with 2^n-1 values. Integers are accepted in place of strings and "order"
// defaults to "paper". All parse failures raise InvalidGame.

Game game_from_json(const nlohmann::json& doc);
Game read_game(std::istream& in);
/// Reads standard input when `path` is "-".
Game read_game_file(const std::string& path);

nlohmann::json game_to_json(const Game& v, ValueOrder order = ValueOrder::Paper);
void write_game(std::ostream& out, const Game& v, ValueOrder order = ValueOrder::Paper);

/// Space separated values, e.g. "0 0 0 3 2 2 4".
std::string format_values(const Game& v, ValueOrder order = ValueOrder::Paper);

/// Steps with their kind, the games in "paper" order and payoffs as fractions.
nlohmann::json trace_to_json(const DerivationTrace& trace);

}  // namespace tugame

#endif  // TUGAME_IO_HPP
