#ifndef TUGAME_COALITION_HPP
#define TUGAME_COALITION_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace tugame {

/// Player index, 1-based (player i occupies bit i-1 of a coalition mask).
using Player = int;
using Mask = std::uint32_t;

inline constexpr int kMaxPlayers = 20;

/// Subset of the player set encoded as a bitmask.
class Coalition {
public:
	constexpr Coalition() noexcept = default;
	constexpr explicit Coalition(Mask mask) noexcept : mask_(mask) {}

	static Coalition of(std::initializer_list<Player> players);
	static Coalition of(const std::vector<Player>& players);
	static constexpr Coalition singleton(Player i) noexcept { return Coalition(Mask{1} << (i - 1)); }
	static constexpr Coalition grand(int n) noexcept { return Coalition((Mask{1} << n) - 1); }

	constexpr Mask mask() const noexcept { return mask_; }
	constexpr bool empty() const noexcept { return mask_ == 0; }
	constexpr int size() const noexcept { return std::popcount(mask_); }
	constexpr bool contains(Player i) const noexcept { return (mask_ >> (i - 1)) & 1U; }
	constexpr bool is_subset_of(Coalition other) const noexcept { return (mask_ & ~other.mask_) == 0; }

	constexpr Coalition with(Player i) const noexcept { return Coalition(mask_ | singleton(i).mask_); }
	constexpr Coalition without(Player i) const noexcept { return Coalition(mask_ & ~singleton(i).mask_); }
	constexpr Coalition complement(int n) const noexcept { return Coalition(grand(n).mask_ & ~mask_); }

	friend constexpr Coalition operator|(Coalition a, Coalition b) noexcept { return Coalition(a.mask_ | b.mask_); }
	friend constexpr Coalition operator&(Coalition a, Coalition b) noexcept { return Coalition(a.mask_ & b.mask_); }
	friend constexpr Coalition operator-(Coalition a, Coalition b) noexcept { return Coalition(a.mask_ & ~b.mask_); }

	friend constexpr auto operator<=>(Coalition, Coalition) noexcept = default;

	/// Members in ascending order.
	std::vector<Player> players() const;

	/// "{1,2}" style rendering; "{}" for the empty coalition.
	std::string str() const;

	/// Parses "1,2,3" (whitespace tolerated, braces optional). Throws
	/// std::invalid_argument on malformed input or a player outside 1..n.
	static Coalition parse(const std::string& text, int n);

private:
	Mask mask_ = 0;
};

/// True when mask < 2^n.
constexpr bool fits(Coalition s, int n) noexcept { return s.is_subset_of(Coalition::grand(n)); }

}  // namespace tugame

#endif  // TUGAME_COALITION_HPP
