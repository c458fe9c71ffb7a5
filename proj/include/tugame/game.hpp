#ifndef TUGAME_GAME_HPP
#define TUGAME_GAME_HPP

#include "tugame/coalition.hpp"
#include "tugame/rational.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <vector>

namespace tugame {

/// Transferable-utility game on players 1..n.
///
/// The value table is indexed by coalition mask. Slot 0 (the empty
/// coalition) always reads as zero and cannot be set. Games are immutable
/// once built.
class Game {
public:
	/// Values for masks 1..2^n-1 in ascending mask order.
	static Game from_bitmask_order(int n, std::vector<Rational> values);

	/// Values in "paper" order: by cardinality, then lexicographically on the
	/// sorted member list, e.g. ({1},{2},{3},{1,2},{1,3},{2,3},{1,2,3}).
	static Game from_paper_order(int n, std::span<const Rational> values);

	/// Full table of size 2^n indexed by mask; entry 0 must be zero.
	static Game from_table(int n, std::vector<Rational> table);

	static Game zero(int n);

	int players() const noexcept { return n_; }
	Coalition grand() const noexcept { return Coalition::grand(n_); }

	const Rational& operator[](Mask mask) const noexcept { return table_[mask]; }
	const Rational& operator()(Coalition s) const noexcept { return table_[s.mask()]; }
	const Rational& grand_value() const noexcept { return table_.back(); }

	/// Whole table including the empty slot.
	std::span<const Rational> table() const noexcept { return table_; }

	std::vector<Rational> to_bitmask_order() const;
	std::vector<Rational> to_paper_order() const;

	friend bool operator==(const Game& a, const Game& b) = default;

	std::size_t hash() const noexcept;

private:
	Game(int n, std::vector<Rational> table) : n_(n), table_(std::move(table)) {}

	int n_ = 0;
	std::vector<Rational> table_;
};

struct GameHash {
	std::size_t operator()(const Game& g) const noexcept { return g.hash(); }
};

/// One payoff per player; `operator[]` takes 1-based player indices.
class Allocation {
public:
	Allocation() = default;
	explicit Allocation(int n) : payoffs_(static_cast<std::size_t>(n)) {}
	explicit Allocation(std::vector<Rational> payoffs) : payoffs_(std::move(payoffs)) {}

	int players() const noexcept { return static_cast<int>(payoffs_.size()); }
	Rational& operator[](Player i) { return payoffs_[static_cast<std::size_t>(i - 1)]; }
	const Rational& operator[](Player i) const { return payoffs_[static_cast<std::size_t>(i - 1)]; }
	const std::vector<Rational>& payoffs() const noexcept { return payoffs_; }

	Rational total() const;

	/// Space separated fractions, e.g. "1 3/2 1/2".
	std::string str() const;

	friend bool operator==(const Allocation&, const Allocation&) = default;

private:
	std::vector<Rational> payoffs_;
};

/// Builds a game from an explicit coalition table; throws InvalidGame when
/// entries are missing, extra, keyed by the empty coalition or out of range.
Game make_game(int n, const std::map<Coalition, Rational>& values);

/// Masks of all nonempty coalitions in "paper" order.
std::vector<Mask> paper_order_masks(int n);

/// v(S ∪ {i}) - v(S); zero when i ∈ S.
Rational marginal(const Game& v, Player i, Coalition s);

/// True when v'_i(S) = w'_i(S) for every S ⊆ N∖{i}.
bool same_marginals(const Game& v, const Game& w, Player i);

/// v̄(S) = v(N) - v(N∖S).
Game dual(const Game& v);

/// Value 1 on supersets of t, 0 elsewhere.
Game make_unanimity(int n, Coalition t);

Game operator+(const Game& a, const Game& b);
Game operator-(const Game& a);
Game operator*(const Rational& c, const Game& a);

void require_player(const Game& v, Player i);
void require_coalition(const Game& v, Coalition s);

}  // namespace tugame

#endif  // TUGAME_GAME_HPP
