#include "tugame/coalition.hpp"

#include <cctype>
#include <stdexcept>

namespace tugame {

Coalition Coalition::of(std::initializer_list<Player> players)
{
	Coalition s;
	for (Player i : players) {
		s = s.with(i);
	}
	return s;
}

Coalition Coalition::of(const std::vector<Player>& players)
{
	Coalition s;
	for (Player i : players) {
		s = s.with(i);
	}
	return s;
}

std::vector<Player> Coalition::players() const
{
	std::vector<Player> out;
	out.reserve(static_cast<std::size_t>(size()));
	for (Mask m = mask_; m != 0; m &= m - 1) {
		out.push_back(std::countr_zero(m) + 1);
	}
	return out;
}

std::string Coalition::str() const
{
	std::string out = "{";
	bool first = true;
	for (Player i : players()) {
		if (!first) {
			out += ',';
		}
		out += std::to_string(i);
		first = false;
	}
	return out + "}";
}

Coalition Coalition::parse(const std::string& text, int n)
{
	Coalition s;
	std::string token;
	auto flush = [&] {
		if (token.empty()) {
			return;
		}
		Player i = 0;
		try {
			std::size_t used = 0;
			i = std::stoi(token, &used);
			if (used != token.size()) {
				throw std::invalid_argument(token);
			}
		} catch (const std::exception&) {
			throw std::invalid_argument("bad player index '" + token + "'");
		}
		if (i < 1 || i > n) {
			throw std::invalid_argument("player " + token + " outside 1.." + std::to_string(n));
		}
		s = s.with(i);
		token.clear();
	};
	for (char c : text) {
		if (c == ',' || std::isspace(static_cast<unsigned char>(c)) || c == '{' || c == '}') {
			flush();
		} else {
			token += c;
		}
	}
	flush();
	return s;
}

}  // namespace tugame
