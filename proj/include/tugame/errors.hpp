#ifndef TUGAME_ERRORS_HPP
#define TUGAME_ERRORS_HPP

#include <stdexcept>

namespace tugame {

/// Malformed game data: wrong table size, bad values, unreadable files.
class InvalidGame : public std::invalid_argument {
public:
	using std::invalid_argument::invalid_argument;
};

/// An operation was called outside its documented domain.
class PreconditionError : public std::invalid_argument {
public:
	using std::invalid_argument::invalid_argument;
};

/// A player-count guard (exhaustive enumeration limits) was exceeded.
class GuardExceeded : public std::length_error {
public:
	using std::length_error::length_error;
};

/// A constructed object failed its post-hoc verification.
class VerificationError : public std::logic_error {
public:
	using std::logic_error::logic_error;
};

}  // namespace tugame

#endif  // TUGAME_ERRORS_HPP
