#include "tugame/finite_classes.hpp"

#include "tugame/equivalence.hpp"
#include "tugame/errors.hpp"
#include "tugame/exact_linear.hpp"

#include <sstream>

namespace tugame {

namespace {

void require_common_players(std::span<const Game> games)
{
	for (const Game& g : games) {
		if (g.players() != games.front().players()) {
			throw PreconditionError("all games of a class must share the player set");
		}
	}
}

// Pairwise facts about a finite list of games, computed once.
class FiniteIndex {
public:
	explicit FiniteIndex(std::span<const Game> games) : games_(games)
	{
		require_common_players(games);
		if (games.empty()) {
			return;
		}
		n_ = games.front().players();
		const std::size_t masks = std::size_t{1} << n_;
		classes_.assign(games.size(), std::vector<bool>(masks));
		for (std::size_t g = 0; g < games.size(); ++g) {
			for (Mask s = 0; s < masks; ++s) {
				classes_[g][s] = is_equivalence_class(games[g], Coalition(s));
			}
		}
		same_.assign(games.size() * games.size() * static_cast<std::size_t>(n_), false);
		for (std::size_t a = 0; a < games.size(); ++a) {
			for (std::size_t b = 0; b < games.size(); ++b) {
				for (Player i = 1; i <= n_; ++i) {
					same_[slot(a, b, i)] = same_marginals(games[a], games[b], i);
				}
			}
		}
	}

	int players() const { return n_; }
	std::size_t size() const { return games_.size(); }
	bool is_class(std::size_t g, Mask s) const { return classes_[g][s]; }
	bool same(std::size_t a, std::size_t b, Player i) const { return same_[slot(a, b, i)]; }

	std::optional<EmpClosureViolation> first_violation(std::uint64_t subset) const
	{
		const Mask grand = Coalition::grand(n_).mask();
		for (std::size_t g = 0; g < size(); ++g) {
			if (!((subset >> g) & 1U)) {
				continue;
			}
			for (Mask s = 0; s <= grand; ++s) {
				if (!is_class(g, s)) {
					continue;
				}
				for (Player k = 1; k <= n_; ++k) {
					if (Coalition(s).contains(k)) {
						continue;
					}
					const Mask grown = Coalition(s).with(k).mask();
					bool found = false;
					for (std::size_t h = 0; h < size() && !found; ++h) {
						found = ((subset >> h) & 1U) && is_class(h, grown) && same(h, g, k);
					}
					if (!found) {
						return EmpClosureViolation{g, Coalition(s), k};
					}
				}
			}
		}
		return std::nullopt;
	}

private:
	std::size_t slot(std::size_t a, std::size_t b, Player i) const
	{
		return (a * games_.size() + b) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(i - 1);
	}

	std::span<const Game> games_;
	int n_ = 0;
	std::vector<std::vector<bool>> classes_;
	std::vector<bool> same_;
};

std::uint64_t everything(std::size_t count) { return count >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1; }

}  // namespace

EmpClosureResult check_emp_closed_finite(std::span<const Game> games)
{
	FiniteIndex index(games);
	EmpClosureResult out;
	out.violation = index.first_violation(everything(games.size()));
	out.closed = !out.violation.has_value();
	return out;
}

bool is_emp_closed_subset(std::span<const Game> games, std::uint64_t subset)
{
	return !FiniteIndex(games).first_violation(subset).has_value();
}

std::string HypothesesReport::str() const
{
	std::ostringstream os;
	if (holds) {
		os << "hypotheses: hold";
	} else {
		os << "hypotheses: fail (game " << first_failure->first << ", k=" << first_failure->second << ")";
	}
	return os.str();
}

HypothesesReport check_theorem1_hypotheses_finite(std::span<const Game> games, std::size_t max_games)
{
	if (games.size() > max_games) {
		throw GuardExceeded("hypothesis search limited to " + std::to_string(max_games) + " games, got " +
		                    std::to_string(games.size()));
	}
	FiniteIndex index(games);
	HypothesesReport report;
	report.reading = "one EMP-closed B per (v, k), shared by every i in N\\{k}";
	if (games.empty()) {
		return report;
	}
	std::vector<std::uint64_t> closed;
	for (std::uint64_t b = 0; b <= everything(games.size()); ++b) {
		if (!index.first_violation(b)) {
			closed.push_back(b);
		}
	}
	const int n = index.players();
	for (std::size_t v = 0; v < games.size(); ++v) {
		for (Player k = 1; k <= n; ++k) {
			std::optional<HypothesesWitness> found;
			for (std::uint64_t b : closed) {
				for (std::size_t w = 0; w < games.size() && !found; ++w) {
					if (!index.same(w, v, k)) {
						continue;
					}
					std::vector<std::size_t> z(static_cast<std::size_t>(n));
					bool all = true;
					for (Player i = 1; i <= n && all; ++i) {
						if (i == k) {
							continue;
						}
						bool hit = false;
						for (std::size_t c = 0; c < games.size() && !hit; ++c) {
							if (((b >> c) & 1U) && index.same(c, w, i)) {
								z[static_cast<std::size_t>(i - 1)] = c;
								hit = true;
							}
						}
						all = hit;
					}
					if (all) {
						found = HypothesesWitness{v, k, b, w, std::move(z)};
					}
				}
				if (found) {
					break;
				}
			}
			if (found) {
				report.witnesses.push_back(std::move(*found));
			} else {
				report.holds = false;
				if (!report.first_failure) {
					report.first_failure = std::make_pair(v, k);
				}
			}
		}
	}
	return report;
}

std::string AxiomSystemResult::str() const
{
	switch (status) {
	case Status::Unique:
		return "unique";
	case Status::Underdetermined:
		return "underdetermined, nullity " + std::to_string(nullity());
	case Status::Infeasible:
		return "infeasible";
	}
	return "unknown";
}

AxiomSystemResult solve_axiom_system(std::span<const Game> games, std::span<const PayoffPin> pins)
{
	require_common_players(games);
	AxiomSystemResult out;
	if (games.empty()) {
		out.solution = SolutionTable{};
		return out;
	}
	const int n = games.front().players();
	const std::size_t unknowns = games.size() * static_cast<std::size_t>(n);
	auto var = [n](std::size_t g, Player i) { return g * static_cast<std::size_t>(n) + static_cast<std::size_t>(i - 1); };
	auto blank = [unknowns] { return LinearEquation{std::vector<Rational>(unknowns), Rational()}; };

	std::vector<LinearEquation> eqs;
	for (std::size_t g = 0; g < games.size(); ++g) {
		LinearEquation po = blank();
		for (Player i = 1; i <= n; ++i) {
			po.coefficients[var(g, i)] = 1;
		}
		po.rhs = games[g].grand_value();
		eqs.push_back(std::move(po));
		for (Player i = 1; i <= n; ++i) {
			for (Player j = i + 1; j <= n; ++j) {
				if (players_equivalent(games[g], i, j)) {
					LinearEquation etp = blank();
					etp.coefficients[var(g, i)] = 1;
					etp.coefficients[var(g, j)] = -1;
					eqs.push_back(std::move(etp));
				}
			}
		}
	}
	for (std::size_t g = 0; g < games.size(); ++g) {
		for (std::size_t h = g + 1; h < games.size(); ++h) {
			for (Player i = 1; i <= n; ++i) {
				if (same_marginals(games[g], games[h], i)) {
					LinearEquation emp = blank();
					emp.coefficients[var(g, i)] = 1;
					emp.coefficients[var(h, i)] = -1;
					eqs.push_back(std::move(emp));
				}
			}
		}
	}
	for (const PayoffPin& pin : pins) {
		if (pin.game >= games.size()) {
			throw PreconditionError("payoff pin refers to game " + std::to_string(pin.game) + " of " +
			                        std::to_string(games.size()));
		}
		require_player(games[pin.game], pin.player);
		LinearEquation eq = blank();
		eq.coefficients[var(pin.game, pin.player)] = 1;
		eq.rhs = pin.value;
		eqs.push_back(std::move(eq));
	}

	LinearSolution sol = solve_exact(eqs, unknowns);
	out.unknowns = unknowns;
	out.equations = eqs.size();
	out.rank = sol.rank;
	if (!sol.consistent) {
		out.status = AxiomSystemResult::Status::Infeasible;
		return out;
	}
	if (!sol.values) {
		out.status = AxiomSystemResult::Status::Underdetermined;
		return out;
	}
	SolutionTable table;
	for (std::size_t g = 0; g < games.size(); ++g) {
		Allocation row(n);
		for (Player i = 1; i <= n; ++i) {
			row[i] = (*sol.values)[var(g, i)];
		}
		table.rows.push_back(std::move(row));
	}
	out.solution = std::move(table);
	return out;
}

}  // namespace tugame
