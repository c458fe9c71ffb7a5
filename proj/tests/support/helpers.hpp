#ifndef TUGAME_TESTS_HELPERS_HPP
#define TUGAME_TESTS_HELPERS_HPP

#include "tugame/game.hpp"

#include <initializer_list>
#include <ostream>

namespace tugame {

// doctest prints these on failed comparisons
inline std::ostream& operator<<(std::ostream& os, const Allocation& a) { return os << "(" << a.str() << ")"; }
inline std::ostream& operator<<(std::ostream& os, const Game& g)
{
	os << "(";
	const auto values = g.to_paper_order();
	for (std::size_t i = 0; i < values.size(); ++i) {
		os << (i ? "," : "") << values[i];
	}
	return os << ")";
}

}  // namespace tugame

namespace testing {

inline tugame::Game paper(int n, std::initializer_list<std::int64_t> values)
{
	std::vector<tugame::Rational> xs(values.begin(), values.end());
	return tugame::Game::from_paper_order(n, xs);
}

inline tugame::Allocation alloc(std::initializer_list<tugame::Rational> xs)
{
	return tugame::Allocation(std::vector<tugame::Rational>(xs));
}

inline tugame::Rational q(std::int64_t p, std::int64_t d) { return tugame::Rational(tugame::BigInt(p), tugame::BigInt(d)); }

}  // namespace testing

#endif  // TUGAME_TESTS_HELPERS_HPP
