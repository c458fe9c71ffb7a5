#ifndef TUGAME_TOOLS_GOLDEN_HPP
#define TUGAME_TOOLS_GOLDEN_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace tugame::golden {

struct Item {
	std::string name;
	bool passed = false;
	std::string detail;  ///< expected/actual on failure, summary on success
};

/// Reproduces the worked examples and counterexamples with compiled-in games.
std::vector<Item> run_all();

/// Prints one PASS/FAIL line per item; returns true iff every item passed.
bool report(std::ostream& out, const std::vector<Item>& items);

}  // namespace tugame::golden

#endif  // TUGAME_TOOLS_GOLDEN_HPP
