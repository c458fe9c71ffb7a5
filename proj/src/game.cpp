#include "tugame/game.hpp"

#include "tugame/errors.hpp"

#include <numeric>
#include <string>

namespace tugame {

namespace {

void require_player_count(int n)
{
	if (n < 1 || n > kMaxPlayers) {
		throw InvalidGame("player count must be in 1.." + std::to_string(kMaxPlayers) + ", got " + std::to_string(n));
	}
}

std::size_t table_size(int n) { return std::size_t{1} << n; }

}  // namespace

Game Game::from_table(int n, std::vector<Rational> table)
{
	require_player_count(n);
	if (table.size() != table_size(n)) {
		throw InvalidGame("game table for " + std::to_string(n) + " players needs " + std::to_string(table_size(n)) +
		                  " slots, got " + std::to_string(table.size()));
	}
	if (!table[0].is_zero()) {
		throw InvalidGame("the empty coalition must have value 0");
	}
	return Game(n, std::move(table));
}

Game Game::from_bitmask_order(int n, std::vector<Rational> values)
{
	require_player_count(n);
	if (values.size() != table_size(n) - 1) {
		throw InvalidGame("expected " + std::to_string(table_size(n) - 1) + " coalition values for " + std::to_string(n) +
		                  " players, got " + std::to_string(values.size()));
	}
	values.insert(values.begin(), Rational());
	return Game(n, std::move(values));
}

Game Game::from_paper_order(int n, std::span<const Rational> values)
{
	require_player_count(n);
	if (values.size() != table_size(n) - 1) {
		throw InvalidGame("expected " + std::to_string(table_size(n) - 1) + " coalition values for " + std::to_string(n) +
		                  " players, got " + std::to_string(values.size()));
	}
	std::vector<Rational> table(table_size(n));
	auto order = paper_order_masks(n);
	for (std::size_t pos = 0; pos < order.size(); ++pos) {
		table[order[pos]] = values[pos];
	}
	return Game(n, std::move(table));
}

Game Game::zero(int n)
{
	require_player_count(n);
	return Game(n, std::vector<Rational>(table_size(n)));
}

std::vector<Rational> Game::to_bitmask_order() const { return {table_.begin() + 1, table_.end()}; }

std::vector<Rational> Game::to_paper_order() const
{
	std::vector<Rational> out;
	out.reserve(table_.size() - 1);
	for (Mask m : paper_order_masks(n_)) {
		out.push_back(table_[m]);
	}
	return out;
}

std::size_t Game::hash() const noexcept
{
	std::size_t h = static_cast<std::size_t>(n_);
	for (const Rational& x : table_) {
		h ^= x.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
	}
	return h;
}

Rational Allocation::total() const { return std::accumulate(payoffs_.begin(), payoffs_.end(), Rational()); }

std::string Allocation::str() const
{
	std::string out;
	for (std::size_t i = 0; i < payoffs_.size(); ++i) {
		if (i > 0) {
			out += ' ';
		}
		out += payoffs_[i].str();
	}
	return out;
}

Game make_game(int n, const std::map<Coalition, Rational>& values)
{
	require_player_count(n);
	std::vector<Rational> table(table_size(n));
	for (const auto& [s, x] : values) {
		if (s.empty()) {
			throw InvalidGame("the empty coalition is implicit and must not be listed");
		}
		if (!fits(s, n)) {
			throw InvalidGame("coalition " + s.str() + " is not a subset of the player set");
		}
		table[s.mask()] = x;
	}
	if (values.size() != table_size(n) - 1) {
		throw InvalidGame("expected " + std::to_string(table_size(n) - 1) + " coalition entries, got " +
		                  std::to_string(values.size()));
	}
	return Game::from_table(n, std::move(table));
}

std::vector<Mask> paper_order_masks(int n)
{
	std::vector<Mask> out;
	out.reserve(table_size(n) - 1);
	std::vector<int> idx;
	for (int k = 1; k <= n; ++k) {
		// k-combinations of {0..n-1} in lexicographic order
		idx.resize(static_cast<std::size_t>(k));
		std::iota(idx.begin(), idx.end(), 0);
		while (true) {
			Mask m = 0;
			for (int b : idx) {
				m |= Mask{1} << b;
			}
			out.push_back(m);
			int pos = k - 1;
			while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - k + pos) {
				--pos;
			}
			if (pos < 0) {
				break;
			}
			++idx[static_cast<std::size_t>(pos)];
			for (int j = pos + 1; j < k; ++j) {
				idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
			}
		}
	}
	return out;
}

void require_player(const Game& v, Player i)
{
	if (i < 1 || i > v.players()) {
		throw PreconditionError("player " + std::to_string(i) + " outside 1.." + std::to_string(v.players()));
	}
}

void require_coalition(const Game& v, Coalition s)
{
	if (!fits(s, v.players())) {
		throw PreconditionError("coalition " + s.str() + " is not a subset of the player set");
	}
}

Rational marginal(const Game& v, Player i, Coalition s)
{
	require_player(v, i);
	require_coalition(v, s);
	return v(s.with(i)) - v(s);
}

bool same_marginals(const Game& v, const Game& w, Player i)
{
	if (v.players() != w.players()) {
		throw PreconditionError("games have different player counts");
	}
	require_player(v, i);
	const Mask bit = Coalition::singleton(i).mask();
	const Mask grand = v.grand().mask();
	for (Mask s = 0; s <= grand; ++s) {
		if ((s & bit) == 0 && v[s | bit] - v[s] != w[s | bit] - w[s]) {
			return false;
		}
	}
	return true;
}

Game dual(const Game& v)
{
	const Mask grand = v.grand().mask();
	std::vector<Rational> table(table_size(v.players()));
	for (Mask s = 1; s <= grand; ++s) {
		table[s] = v.grand_value() - v[grand & ~s];
	}
	return Game::from_table(v.players(), std::move(table));
}

Game make_unanimity(int n, Coalition t)
{
	require_player_count(n);
	if (t.empty()) {
		throw PreconditionError("unanimity game needs a nonempty carrier");
	}
	if (!fits(t, n)) {
		throw PreconditionError("carrier " + t.str() + " is not a subset of the player set");
	}
	std::vector<Rational> table(table_size(n));
	for (Mask s = 1; s < table.size(); ++s) {
		if ((s & t.mask()) == t.mask()) {
			table[s] = 1;
		}
	}
	return Game::from_table(n, std::move(table));
}

Game operator+(const Game& a, const Game& b)
{
	if (a.players() != b.players()) {
		throw PreconditionError("games have different player counts");
	}
	std::vector<Rational> table(a.table().begin(), a.table().end());
	for (std::size_t s = 0; s < table.size(); ++s) {
		table[s] += b[static_cast<Mask>(s)];
	}
	return Game::from_table(a.players(), std::move(table));
}

Game operator-(const Game& a)
{
	std::vector<Rational> table;
	table.reserve(a.table().size());
	for (const Rational& x : a.table()) {
		table.push_back(-x);
	}
	return Game::from_table(a.players(), std::move(table));
}

Game operator*(const Rational& c, const Game& a)
{
	std::vector<Rational> table;
	table.reserve(a.table().size());
	for (const Rational& x : a.table()) {
		table.push_back(c * x);
	}
	return Game::from_table(a.players(), std::move(table));
}

}  // namespace tugame
