#ifndef TUGAME_RATIONAL_HPP
#define TUGAME_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <memory>
#include <string>
#include <string_view>

namespace tugame {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number in lowest terms with a positive denominator.
///
/// Values whose numerator and denominator fit in 64 bits are kept inline and
/// use 128-bit intermediates; everything else spills to an arbitrary
/// precision representation. The split is canonical (a value is inline iff
/// it fits), so equality and hashing never depend on the history of a value.
class Rational {
public:
	Rational() noexcept = default;

	template <std::integral I>
	Rational(I value)  // NOLINT(google-explicit-constructor)
	{
		if constexpr (std::is_signed_v<I>) {
			if (static_cast<std::int64_t>(value) != std::numeric_limits<std::int64_t>::min()) {
				num_ = static_cast<std::int64_t>(value);
				return;
			}
		} else {
			if (static_cast<std::uint64_t>(value) <= static_cast<std::uint64_t>(kMax)) {
				num_ = static_cast<std::int64_t>(value);
				return;
			}
		}
		*this = from_big(BigRational(BigInt(value)));
	}

	/// Normalizes num/den; throws std::domain_error when den is zero.
	Rational(const BigInt& num, const BigInt& den);

	/// Accepts "k", "-k", "p/q" (any sign placement on p, q > 0 after sign
	/// folding). Non-reduced input is normalized. Throws std::invalid_argument.
	static Rational parse(std::string_view text);

	/// "p" for integers, "p/q" otherwise.
	std::string str() const;

	BigInt numerator() const;
	BigInt denominator() const;
	bool is_integer() const noexcept;
	int sign() const noexcept;
	bool is_zero() const noexcept { return big_ == nullptr && num_ == 0; }
	Rational abs() const;

	Rational& operator+=(const Rational& rhs) { return *this = *this + rhs; }
	Rational& operator-=(const Rational& rhs) { return *this = *this - rhs; }
	Rational& operator*=(const Rational& rhs) { return *this = *this * rhs; }
	Rational& operator/=(const Rational& rhs) { return *this = *this / rhs; }

	friend Rational operator+(const Rational& a, const Rational& b);
	friend Rational operator-(const Rational& a, const Rational& b);
	friend Rational operator*(const Rational& a, const Rational& b);
	friend Rational operator/(const Rational& a, const Rational& b);
	friend Rational operator-(const Rational& a);

	friend bool operator==(const Rational& a, const Rational& b) noexcept;
	friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

	std::size_t hash() const noexcept;

	friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
	using BigRational = boost::multiprecision::cpp_rational;

	// INT64_MIN is excluded so negation never leaves the inline range.
	static constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

	static Rational from_wide(__int128 num, __int128 den);
	static Rational from_big(BigRational value);
	BigRational to_big() const;
	bool inline_() const noexcept { return big_ == nullptr; }

	std::int64_t num_ = 0;
	std::int64_t den_ = 1;
	std::shared_ptr<const BigRational> big_;
};

struct RationalHash {
	std::size_t operator()(const Rational& r) const noexcept { return r.hash(); }
};

}  // namespace tugame

#endif  // TUGAME_RATIONAL_HPP
