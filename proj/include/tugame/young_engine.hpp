#ifndef TUGAME_YOUNG_ENGINE_HPP
#define TUGAME_YOUNG_ENGINE_HPP

#include "tugame/classification.hpp"
#include "tugame/constructions.hpp"
#include "tugame/game.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tugame {

// Derivation of the Shapley value from efficiency (PO), equal treatment
// (ETP) and equal marginality (EMP) alone. Every payoff in a derivation is
// obtained by one of three inference steps, recorded in a trace that can be
// replayed independently:
//
//   EmpTransfer   ψ_p(target) := ψ_p(source), allowed when the two games
//                 give p the same marginal contribution function;
//   EtpPoResolve  the members of an equivalence class share what is left of
//                 v(N) once every other payoff is known;
//   Construct     a new game is built from an existing one (no payoff).

enum class StepKind { Construct, EmpTransfer, EtpPoResolve };

std::string_view to_string(StepKind k);

struct DerivationStep {
	StepKind kind = StepKind::Construct;
	std::string justification;
	std::size_t source = 0;  ///< game id the step reads from
	std::size_t target = 0;  ///< game id the step produces or resolves
	Coalition members;       ///< class grown (Construct) or resolved (EtpPoResolve)
	Player player = 0;       ///< player added (Construct) or transferred (EmpTransfer)
	std::vector<std::pair<Player, Rational>> payoffs;
};

struct DerivationStats {
	std::size_t games_constructed = 0;
	int max_depth = 0;
	std::size_t memo_hits = 0;
};

struct DerivationTrace {
	/// How the quantifiers of the closure hypotheses were instantiated.
	std::string reading;
	/// Distinct games, referenced by index from the steps.
	std::vector<Game> games;
	std::vector<DerivationStep> steps;
	std::size_t root = 0;
	Allocation allocation;
	DerivationStats stats;
};

struct Derivation {
	Allocation allocation;
	DerivationTrace trace;
};

struct EngineOptions {
	int max_players = 6;
	/// When set, players are visited in a seeded random order instead of
	/// ascending index.
	std::optional<std::uint64_t> seed;
};

enum class Route { Direct, SuperadditiveSide, SubadditiveSide };

/// Class of games a derivation must stay inside.
class ClassSpec {
public:
	static ClassSpec all_games() { return ClassSpec(std::nullopt); }
	static ClassSpec of(GameClass c) { return ClassSpec(c); }
	static std::optional<ClassSpec> parse(std::string_view name);
	static std::vector<ClassSpec> all();

	const std::optional<GameClass>& game_class() const noexcept { return class_; }
	std::string name() const;
	bool contains(const Game& v) const;

	Route route() const;
	/// Closure target of the direct route; empty for the big-M routes, which
	/// grow classes with big_m_closure and keep the class itself.
	std::optional<ClosureTarget> target() const;

	friend bool operator==(const ClassSpec&, const ClassSpec&) = default;

private:
	explicit ClassSpec(std::optional<GameClass> c) : class_(c) {}
	std::optional<GameClass> class_;
};

/// Derives ψ(z) for every player, starting from an equivalence class of z
/// and growing it with closure_construct until it covers N. The result always
/// equals shapley(z).
Derivation derive_on_class(const Game& z, Coalition class_members, ClosureTarget target, const EngineOptions& options = {});

/// Derives ψ(v) inside the class named by `spec`. On the big-M routes, for
/// each k a game w of the class with w'_k = v'_k is built first, then the
/// class {k} of w is grown by big-M extensions that stay in the class, and
/// ψ_k(v) = ψ_k(w) closes the step. Throws PreconditionError
/// when v is not a member, GuardExceeded when n exceeds the engine guard.
Derivation axiomatic_shapley(const Game& v, const ClassSpec& spec, const EngineOptions& options = {});

/// Re-executes a trace from scratch, re-verifying every side condition, and
/// returns the allocation of the root game. Throws VerificationError on any
/// unsound step or if the result differs from trace.allocation.
Allocation replay(const DerivationTrace& trace);

/// Human-readable step listing.
std::string render_text(const DerivationTrace& trace);

}  // namespace tugame

#endif  // TUGAME_YOUNG_ENGINE_HPP
