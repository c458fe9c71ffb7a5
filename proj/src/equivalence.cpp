#include "tugame/equivalence.hpp"

#include "tugame/errors.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>

namespace tugame {

std::string Partition::str() const
{
	std::string out;
	for (const Coalition& b : blocks) {
		if (!out.empty()) {
			out += ' ';
		}
		out += b.str();
	}
	return out;
}

bool players_equivalent(const Game& v, Player i, Player j)
{
	require_player(v, i);
	require_player(v, j);
	if (i == j) {
		return true;
	}
	const Mask both = Coalition::singleton(i).mask() | Coalition::singleton(j).mask();
	const Mask others = v.grand().mask() & ~both;
	for (Mask s = others;; s = (s - 1) & others) {
		if (marginal(v, i, Coalition(s)) != marginal(v, j, Coalition(s))) {
			return false;
		}
		if (s == 0) {
			break;
		}
	}
	return true;
}

bool is_equivalence_class(const Game& v, Coalition s)
{
	require_coalition(v, s);
	const auto members = s.players();
	for (std::size_t a = 0; a < members.size(); ++a) {
		for (std::size_t b = a + 1; b < members.size(); ++b) {
			if (!players_equivalent(v, members[a], members[b])) {
				return false;
			}
		}
	}
	return true;
}

Partition finest_partition(const Game& v)
{
	const int n = v.players();
	std::vector<int> parent(static_cast<std::size_t>(n + 1));
	std::iota(parent.begin(), parent.end(), 0);
	auto find = [&](int x) {
		while (parent[static_cast<std::size_t>(x)] != x) {
			x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
		}
		return x;
	};
	for (Player i = 1; i <= n; ++i) {
		for (Player j = i + 1; j <= n; ++j) {
			if (players_equivalent(v, i, j)) {
				int a = find(i);
				int b = find(j);
				if (a != b) {
					parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
				}
			}
		}
	}
	std::vector<Mask> block_of(static_cast<std::size_t>(n + 1), 0);
	for (Player i = 1; i <= n; ++i) {
		block_of[static_cast<std::size_t>(find(i))] |= Coalition::singleton(i).mask();
	}
	Partition p;
	for (Player root = 1; root <= n; ++root) {
		Mask m = block_of[static_cast<std::size_t>(root)];
		if (m == 0) {
			continue;
		}
		if (!is_equivalence_class(v, Coalition(m))) {
			throw std::logic_error("equivalence relation is not transitive on block " + Coalition(m).str());
		}
		p.blocks.emplace_back(m);
	}
	return p;
}

bool lemma1_value_characterization(const Game& v, Coalition s)
{
	require_coalition(v, s);
	const Mask grand = v.grand().mask();
	const Mask outside = ~s.mask();
	for (Mask t = 0; t <= grand; ++t) {
		for (Mask z = t + 1; z <= grand; ++z) {
			if ((t & outside) == (z & outside) && std::popcount(t) == std::popcount(z) && v[t] != v[z]) {
				return false;
			}
		}
	}
	return true;
}

bool corollary2_check(const Game& v, Coalition s, Player k)
{
	require_player(v, k);
	if (s.contains(k)) {
		throw PreconditionError("player " + std::to_string(k) + " belongs to " + s.str());
	}
	if (!is_equivalence_class(v, s)) {
		throw PreconditionError(s.str() + " is not an equivalence class");
	}
	const Mask bit = Coalition::singleton(k).mask();
	const Mask grand = v.grand().mask();
	const Mask outside = ~s.mask();
	for (Mask t = 0; t <= grand; ++t) {
		if (t & bit) {
			continue;
		}
		for (Mask z = t + 1; z <= grand; ++z) {
			if ((z & bit) || (t & outside) != (z & outside) || std::popcount(t) != std::popcount(z)) {
				continue;
			}
			if (v[t | bit] - v[t] != v[z | bit] - v[z]) {
				return false;
			}
		}
	}
	return true;
}

}  // namespace tugame
