#include "tugame/shapley.hpp"

#include "fault_injection.hpp"
#include "tugame/equivalence.hpp"
#include "tugame/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace tugame {

namespace {

BigInt factorial(int k)
{
	BigInt r = 1;
	for (int i = 2; i <= k; ++i) {
		r *= i;
	}
	return r;
}

void guard(const Game& v, int max_players, const char* what)
{
	if (v.players() > max_players) {
		throw GuardExceeded(std::string(what) + ": " + std::to_string(v.players()) + " players exceeds the limit of " +
		                    std::to_string(max_players));
	}
}

void require_length(const Game& v, const Allocation& a)
{
	if (a.players() != v.players()) {
		throw PreconditionError("allocation has " + std::to_string(a.players()) + " entries for a " +
		                        std::to_string(v.players()) + "-player game");
	}
}

}  // namespace

Rational shapley_weight(int n, int s)
{
	return Rational(factorial(s) * factorial(n - s - detail::kCoefficientOffset), factorial(n));
}

Allocation shapley(const Game& v, int max_players)
{
	guard(v, max_players, "shapley");
	const int n = v.players();
	std::vector<Rational> weight;
	for (int s = 0; s < n; ++s) {
		weight.push_back(shapley_weight(n, s));
	}
	const Mask grand = v.grand().mask();
	Allocation phi(n);
	for (Player i = 1; i <= n; ++i) {
		const Mask bit = Coalition::singleton(i).mask();
		const Mask others = grand & ~bit;
		Rational sum;
		for (Mask s = others;; s = (s - 1) & others) {
			Rational contribution = v[s | bit] - v[s];
			if (!contribution.is_zero()) {
				sum += contribution * weight[static_cast<std::size_t>(std::popcount(s))];
			}
			if (s == 0) {
				break;
			}
		}
		phi[i] = sum;
	}
	return phi;
}

Allocation shapley_permutation_oracle(const Game& v, int max_players)
{
	guard(v, max_players, "permutation oracle");
	const int n = v.players();
	std::vector<Player> order(static_cast<std::size_t>(n));
	std::iota(order.begin(), order.end(), 1);
	std::vector<Rational> sum(static_cast<std::size_t>(n));
	std::int64_t count = 0;
	do {
		Mask before = 0;
		for (Player p : order) {
			const Mask after = before | Coalition::singleton(p).mask();
			sum[static_cast<std::size_t>(p - 1)] += v[after] - v[before];
			before = after;
		}
		++count;
	} while (std::next_permutation(order.begin(), order.end()));
	Allocation out(n);
	for (Player i = 1; i <= n; ++i) {
		out[i] = sum[static_cast<std::size_t>(i - 1)] / Rational(count);
	}
	return out;
}

bool check_PO(const Game& v, const Allocation& a)
{
	require_length(v, a);
	return a.total() == v.grand_value();
}

bool check_ETP(const Game& v, const Allocation& a)
{
	require_length(v, a);
	for (Player i = 1; i <= v.players(); ++i) {
		for (Player j = i + 1; j <= v.players(); ++j) {
			if (a[i] != a[j] && players_equivalent(v, i, j)) {
				return false;
			}
		}
	}
	return true;
}

EmpVerdict check_EMP_pair(const Game& v, const Game& w, Player i, const Allocation& av, const Allocation& aw)
{
	if (v.players() != w.players()) {
		throw PreconditionError("EMP pair needs games with the same player set");
	}
	require_length(v, av);
	require_length(w, aw);
	if (!same_marginals(v, w, i)) {
		return {true, false};
	}
	return {av[i] == aw[i], true};
}

}  // namespace tugame
