#include "tugame/young_engine.hpp"

#include "tugame/equivalence.hpp"
#include "tugame/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_map>

namespace tugame {

namespace {

constexpr std::string_view kReadingDirect =
    "direct chain: the class itself is closed under extension, so B is the class and w = v";
constexpr std::string_view kReadingBigM =
    "one B per (v, k), shared by every i in N\\{k}: w keeps v'_k, and B holds the games reached from w "
    "by big-M extensions of the class {k}, each verified to lie in the class";

// How a derivation grows an equivalence class by one player.
struct Closure {
	std::function<Game(const Game&, Coalition, Player)> build;
	std::string label;
};

Closure closure_for(ClosureTarget target)
{
	return {[target](const Game& z, Coalition s, Player p) { return closure_construct(z, s, p, target); },
	        "closure:" + std::string(to_string(target))};
}

Closure closure_keeping(GameClass keep)
{
	return {[keep](const Game& z, Coalition s, Player p) { return big_m_closure(z, s, p, keep); },
	        "big-M closure:" + std::string(to_string(keep))};
}

class Deriver {
public:
	Deriver(const EngineOptions& options, std::string_view reading) : options_(options)
	{
		trace_.reading = reading;
		if (options.seed) {
			rng_.seed(*options.seed);
		}
	}

	std::size_t intern(const Game& g)
	{
		auto [it, inserted] = ids_.try_emplace(g, trace_.games.size());
		if (inserted) {
			trace_.games.push_back(g);
			payoffs_.emplace_back(static_cast<std::size_t>(g.players()));
		}
		return it->second;
	}

	bool resolved(std::size_t id) const
	{
		const auto& row = payoffs_[id];
		return std::all_of(row.begin(), row.end(), [](const auto& x) { return x.has_value(); });
	}

	Allocation allocation_of(std::size_t id) const
	{
		Allocation a(static_cast<int>(payoffs_[id].size()));
		for (Player i = 1; i <= a.players(); ++i) {
			a[i] = *payoffs_[id][static_cast<std::size_t>(i - 1)];
		}
		return a;
	}

	std::vector<Player> visiting_order(std::vector<Player> players)
	{
		if (options_.seed) {
			std::shuffle(players.begin(), players.end(), rng_);
		}
		return players;
	}

	std::size_t construct(std::size_t source, const Game& built, Coalition members, Player player, std::string justification)
	{
		const std::size_t id = intern(built);
		++trace_.stats.games_constructed;
		DerivationStep step;
		step.kind = StepKind::Construct;
		step.justification = std::move(justification);
		step.source = source;
		step.target = id;
		step.members = members;
		step.player = player;
		trace_.steps.push_back(std::move(step));
		return id;
	}

	void transfer(std::size_t source, std::size_t target, Player p)
	{
		const auto& from = payoffs_[source][static_cast<std::size_t>(p - 1)];
		if (!from) {
			throw VerificationError("EMP transfer from a game whose payoff is unresolved");
		}
		if (!same_marginals(trace_.games[source], trace_.games[target], p)) {
			throw VerificationError("EMP transfer between games with different marginal functions for player " +
			                        std::to_string(p));
		}
		assign(target, p, *from);
		DerivationStep step;
		step.kind = StepKind::EmpTransfer;
		step.justification = "EMP";
		step.source = source;
		step.target = target;
		step.player = p;
		step.payoffs.emplace_back(p, *from);
		trace_.steps.push_back(std::move(step));
	}

	void resolve_class(std::size_t id, Coalition members)
	{
		const Game& g = trace_.games[id];
		Rational rest = g.grand_value();
		for (Player i = 1; i <= g.players(); ++i) {
			if (members.contains(i)) {
				continue;
			}
			const auto& x = payoffs_[id][static_cast<std::size_t>(i - 1)];
			if (!x) {
				throw VerificationError("ETP+PO step with an unresolved payoff outside the class");
			}
			rest -= *x;
		}
		const Rational share = rest / Rational(members.size());
		DerivationStep step;
		step.kind = StepKind::EtpPoResolve;
		step.justification = members.size() > 1 ? "ETP+PO" : "PO";
		step.source = id;
		step.target = id;
		step.members = members;
		for (Player q : members.players()) {
			assign(id, q, share);
			step.payoffs.emplace_back(q, share);
		}
		trace_.steps.push_back(std::move(step));
	}

	Allocation derive(const Game& z, Coalition members, const Closure& closure, int depth)
	{
		const std::size_t id = intern(z);
		if (resolved(id)) {
			++trace_.stats.memo_hits;
			return allocation_of(id);
		}
		trace_.stats.max_depth = std::max(trace_.stats.max_depth, depth);
		const auto outside = visiting_order(members.complement(z.players()).players());
		for (Player p : outside) {
			Game w = closure.build(z, members, p);
			const std::size_t wid = construct(id, w, members, p, closure.label);
			derive(w, members.with(p), closure, depth + 1);
			transfer(wid, id, p);
		}
		resolve_class(id, members);
		return allocation_of(id);
	}

	DerivationTrace finish(std::size_t root)
	{
		trace_.root = root;
		trace_.allocation = allocation_of(root);
		return std::move(trace_);
	}

private:
	void assign(std::size_t id, Player p, const Rational& value)
	{
		auto& slot = payoffs_[id][static_cast<std::size_t>(p - 1)];
		if (slot && *slot != value) {
			throw VerificationError("conflicting payoffs derived for player " + std::to_string(p));
		}
		slot = value;
	}

	EngineOptions options_;
	std::mt19937_64 rng_;
	DerivationTrace trace_;
	std::unordered_map<Game, std::size_t, GameHash> ids_;
	std::vector<std::vector<std::optional<Rational>>> payoffs_;
};

void guard(const Game& v, const EngineOptions& options)
{
	if (v.players() > options.max_players) {
		throw GuardExceeded("derivation limited to " + std::to_string(options.max_players) + " players, game has " +
		                    std::to_string(v.players()));
	}
}

std::vector<Player> all_players(int n)
{
	std::vector<Player> out(static_cast<std::size_t>(n));
	std::iota(out.begin(), out.end(), 1);
	return out;
}

}  // namespace

std::string_view to_string(StepKind k)
{
	switch (k) {
	case StepKind::Construct:
		return "construct";
	case StepKind::EmpTransfer:
		return "emp-transfer";
	case StepKind::EtpPoResolve:
		return "etp-po-resolve";
	}
	return "unknown";
}

std::optional<ClassSpec> ClassSpec::parse(std::string_view name)
{
	if (name == "all-games" || name == "all") {
		return all_games();
	}
	if (auto c = parse_game_class(name)) {
		return of(*c);
	}
	return std::nullopt;
}

std::vector<ClassSpec> ClassSpec::all()
{
	std::vector<ClassSpec> out{all_games()};
	for (GameClass c : kAllGameClasses) {
		out.push_back(of(c));
	}
	return out;
}

std::string ClassSpec::name() const { return class_ ? std::string(to_string(*class_)) : "all-games"; }

bool ClassSpec::contains(const Game& v) const { return !class_ || is_member(v, *class_); }

Route ClassSpec::route() const
{
	if (!class_ || *class_ == GameClass::Additive || *class_ == GameClass::StrictlyConvex ||
	    *class_ == GameClass::StrictlyConcave) {
		return Route::Direct;
	}
	return lemma4_supports(*class_) ? Route::SuperadditiveSide : Route::SubadditiveSide;
}

std::optional<ClosureTarget> ClassSpec::target() const
{
	if (!class_) {
		return ClosureTarget::Unrestricted;
	}
	switch (*class_) {
	case GameClass::Additive:
		return ClosureTarget::Additive;
	case GameClass::StrictlyConvex:
		return ClosureTarget::StrictlyConvex;
	case GameClass::StrictlyConcave:
		return ClosureTarget::StrictlyConcave;
	default:
		return std::nullopt;
	}
}

Derivation derive_on_class(const Game& z, Coalition class_members, ClosureTarget target, const EngineOptions& options)
{
	guard(z, options);
	require_coalition(z, class_members);
	if (class_members.empty()) {
		throw PreconditionError("derivation needs a nonempty starting class");
	}
	if (!is_equivalence_class(z, class_members)) {
		throw PreconditionError(class_members.str() + " is not an equivalence class");
	}
	Deriver d(options, kReadingDirect);
	d.derive(z, class_members, closure_for(target), 0);
	DerivationTrace trace = d.finish(0);
	Allocation a = trace.allocation;
	return {std::move(a), std::move(trace)};
}

Derivation axiomatic_shapley(const Game& v, const ClassSpec& spec, const EngineOptions& options)
{
	guard(v, options);
	if (!spec.contains(v)) {
		throw PreconditionError("game is not a member of class " + spec.name());
	}
	const Route route = spec.route();
	Deriver d(options, route == Route::Direct ? kReadingDirect : kReadingBigM);
	const std::size_t root = d.intern(v);
	const Closure closure = route == Route::Direct ? closure_for(*spec.target()) : closure_keeping(*spec.game_class());

	for (Player k : d.visiting_order(all_players(v.players()))) {
		if (route == Route::Direct) {
			d.derive(v, Coalition::singleton(k), closure, 0);
			continue;
		}
		Game w = route == Route::SuperadditiveSide ? lemma4_w(v, k, *spec.game_class()) : lemma5_pipeline(v, k, *spec.game_class()).w;
		const std::size_t wid = d.construct(root, w, Coalition(), k, route == Route::SuperadditiveSide ? "big-M w" : "big-M w on the dual");
		d.derive(w, Coalition::singleton(k), closure, 1);
		d.transfer(wid, root, k);
	}
	DerivationTrace trace = d.finish(root);
	Allocation a = trace.allocation;
	return {std::move(a), std::move(trace)};
}

Allocation replay(const DerivationTrace& trace)
{
	const auto& games = trace.games;
	std::vector<std::vector<std::optional<Rational>>> state;
	for (const Game& g : games) {
		state.emplace_back(static_cast<std::size_t>(g.players()));
	}
	auto check_id = [&](std::size_t id) {
		if (id >= games.size()) {
			throw VerificationError("trace references unknown game " + std::to_string(id));
		}
	};
	auto set = [&](std::size_t id, Player p, const Rational& x) {
		auto& slot = state[id][static_cast<std::size_t>(p - 1)];
		if (slot && *slot != x) {
			throw VerificationError("replay derived two payoffs for one player");
		}
		slot = x;
	};
	for (const DerivationStep& step : trace.steps) {
		check_id(step.source);
		check_id(step.target);
		const Game& src = games[step.source];
		const Game& dst = games[step.target];
		switch (step.kind) {
		case StepKind::Construct:
			if (!same_marginals(src, dst, step.player) || !is_equivalence_class(dst, step.members.with(step.player))) {
				throw VerificationError("construction step does not preserve its marginal function or class");
			}
			break;
		case StepKind::EmpTransfer: {
			const auto& from = state[step.source][static_cast<std::size_t>(step.player - 1)];
			if (!from || !same_marginals(src, dst, step.player)) {
				throw VerificationError("EMP step without a resolved source or with different marginals");
			}
			set(step.target, step.player, *from);
			break;
		}
		case StepKind::EtpPoResolve: {
			if (!is_equivalence_class(dst, step.members)) {
				throw VerificationError("ETP step on a set that is not an equivalence class");
			}
			Rational rest = dst.grand_value();
			for (Player i = 1; i <= dst.players(); ++i) {
				if (step.members.contains(i)) {
					continue;
				}
				const auto& x = state[step.target][static_cast<std::size_t>(i - 1)];
				if (!x) {
					throw VerificationError("ETP step with an unresolved outside payoff");
				}
				rest -= *x;
			}
			const Rational share = rest / Rational(step.members.size());
			for (Player q : step.members.players()) {
				set(step.target, q, share);
			}
			break;
		}
		}
	}
	check_id(trace.root);
	Allocation out(games[trace.root].players());
	for (Player i = 1; i <= out.players(); ++i) {
		const auto& x = state[trace.root][static_cast<std::size_t>(i - 1)];
		if (!x) {
			throw VerificationError("replay leaves player " + std::to_string(i) + " unresolved");
		}
		out[i] = *x;
	}
	if (out != trace.allocation) {
		throw VerificationError("replayed allocation differs from the recorded one");
	}
	return out;
}

std::string render_text(const DerivationTrace& trace)
{
	std::ostringstream os;
	auto vec = [](const Game& g) {
		std::string s = "(";
		auto values = g.to_paper_order();
		for (std::size_t i = 0; i < values.size(); ++i) {
			s += (i ? "," : "") + values[i].str();
		}
		return s + ")";
	};
	os << "reading: " << trace.reading << "\n";
	os << "games:\n";
	for (std::size_t id = 0; id < trace.games.size(); ++id) {
		os << "  G" << id << " = " << vec(trace.games[id]) << (id == trace.root ? "  [root]" : "") << "\n";
	}
	os << "steps:\n";
	std::size_t n = 0;
	for (const DerivationStep& s : trace.steps) {
		os << "  " << ++n << ". ";
		switch (s.kind) {
		case StepKind::Construct:
			os << "construct G" << s.target << " from G" << s.source << ": grow " << s.members.str() << " by player "
			   << s.player << " [" << s.justification << "]";
			break;
		case StepKind::EmpTransfer:
			os << "EMP: psi_" << s.player << "(G" << s.target << ") = psi_" << s.player << "(G" << s.source
			   << ") = " << s.payoffs.front().second;
			break;
		case StepKind::EtpPoResolve:
			os << s.justification << " on G" << s.target << ", class " << s.members.str() << ": "
			   << s.payoffs.front().second << (s.payoffs.size() > 1 ? " each" : "");
			break;
		}
		os << "\n";
	}
	os << "allocation: " << trace.allocation.str() << "\n";
	os << "stats: " << trace.stats.games_constructed << " games constructed, depth " << trace.stats.max_depth << ", "
	   << trace.stats.memo_hits << " memo hits\n";
	return os.str();
}

}  // namespace tugame
