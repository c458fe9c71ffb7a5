#include "tugame/rational.hpp"

#include <charconv>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace tugame {

namespace {

using u128 = unsigned __int128;
using i128 = __int128;

constexpr std::uint64_t kU64Max = std::numeric_limits<std::uint64_t>::max();
constexpr i128 kInlineMax = std::numeric_limits<std::int64_t>::max();

u128 magnitude(i128 x) { return x < 0 ? static_cast<u128>(-(x + 1)) + 1 : static_cast<u128>(x); }

u128 gcd128(u128 a, u128 b)
{
	while (b != 0) {
		if (a <= kU64Max && b <= kU64Max) {
			return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
		}
		u128 t = a % b;
		a = b;
		b = t;
	}
	return a;
}

BigInt to_bigint(i128 x)
{
	u128 m = magnitude(x);
	BigInt r = BigInt(static_cast<std::uint64_t>(m >> 64));
	r <<= 64;
	r += BigInt(static_cast<std::uint64_t>(m));
	return x < 0 ? BigInt(-r) : r;
}

bool fits_inline(i128 x) { return x <= kInlineMax && x >= -kInlineMax; }

bool is_decimal_integer(std::string_view s)
{
	if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
		s.remove_prefix(1);
	}
	if (s.empty()) {
		return false;
	}
	for (char c : s) {
		if (c < '0' || c > '9') {
			return false;
		}
	}
	return true;
}

BigInt parse_integer(std::string_view s)
{
	bool negative = false;
	if (s.front() == '+' || s.front() == '-') {
		negative = s.front() == '-';
		s.remove_prefix(1);
	}
	BigInt value;
	if (s.size() <= 18) {
		std::int64_t small = 0;
		std::from_chars(s.data(), s.data() + s.size(), small);
		value = small;
	} else {
		value = BigInt(std::string(s));
	}
	return negative ? BigInt(-value) : value;
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den)
{
	if (den == 0) {
		throw std::domain_error("rational with zero denominator");
	}
	// cpp_rational rejects a negative denominator
	*this = den < 0 ? from_big(BigRational(-num, -den)) : from_big(BigRational(num, den));
}

Rational Rational::from_wide(i128 num, i128 den)
{
	if (num == 0) {
		return Rational();
	}
	if (den != 1) {
		u128 g = gcd128(magnitude(num), static_cast<u128>(den));
		if (g != 1) {
			num /= static_cast<i128>(g);
			den /= static_cast<i128>(g);
		}
	}
	if (fits_inline(num) && den <= kInlineMax) {
		Rational r;
		r.num_ = static_cast<std::int64_t>(num);
		r.den_ = static_cast<std::int64_t>(den);
		return r;
	}
	Rational r;
	r.big_ = std::make_shared<const BigRational>(to_bigint(num), to_bigint(den));
	return r;
}

Rational Rational::from_big(BigRational value)
{
	const BigInt& num = boost::multiprecision::numerator(value);
	const BigInt& den = boost::multiprecision::denominator(value);
	static const BigInt lo(-std::numeric_limits<std::int64_t>::max());
	static const BigInt hi(std::numeric_limits<std::int64_t>::max());
	if (num >= lo && num <= hi && den <= hi) {
		Rational r;
		r.num_ = num.convert_to<std::int64_t>();
		r.den_ = den.convert_to<std::int64_t>();
		return r;
	}
	Rational r;
	r.big_ = std::make_shared<const BigRational>(std::move(value));
	return r;
}

Rational::BigRational Rational::to_big() const
{
	if (big_) {
		return *big_;
	}
	return BigRational(BigInt(num_), BigInt(den_));
}

Rational Rational::parse(std::string_view text)
{
	while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
		text.remove_prefix(1);
	}
	while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
		text.remove_suffix(1);
	}
	auto slash = text.find('/');
	std::string_view num_text = text.substr(0, slash);
	std::string_view den_text = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
	if (!is_decimal_integer(num_text) || !is_decimal_integer(den_text)) {
		throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
	}
	BigInt den = parse_integer(den_text);
	if (den == 0) {
		throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
	}
	return Rational(parse_integer(num_text), den);
}

std::string Rational::str() const
{
	if (inline_()) {
		if (den_ == 1) {
			return std::to_string(num_);
		}
		return std::to_string(num_) + "/" + std::to_string(den_);
	}
	const BigInt& den = boost::multiprecision::denominator(*big_);
	if (den == 1) {
		return boost::multiprecision::numerator(*big_).str();
	}
	return boost::multiprecision::numerator(*big_).str() + "/" + den.str();
}

BigInt Rational::numerator() const
{
	return inline_() ? BigInt(num_) : BigInt(boost::multiprecision::numerator(*big_));
}

BigInt Rational::denominator() const
{
	return inline_() ? BigInt(den_) : BigInt(boost::multiprecision::denominator(*big_));
}

bool Rational::is_integer() const noexcept
{
	return inline_() ? den_ == 1 : boost::multiprecision::denominator(*big_) == 1;
}

int Rational::sign() const noexcept
{
	if (inline_()) {
		return (num_ > 0) - (num_ < 0);
	}
	return big_->sign();
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational operator+(const Rational& a, const Rational& b)
{
	if (a.inline_() && b.inline_()) {
		if (a.den_ == b.den_) {
			return Rational::from_wide(static_cast<i128>(a.num_) + b.num_, a.den_);
		}
		return Rational::from_wide(static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
		                           static_cast<i128>(a.den_) * b.den_);
	}
	return Rational::from_big(a.to_big() + b.to_big());
}

Rational operator-(const Rational& a)
{
	if (a.inline_()) {
		Rational r = a;
		r.num_ = -a.num_;
		return r;
	}
	return Rational::from_big(-a.to_big());
}

Rational operator-(const Rational& a, const Rational& b)
{
	if (a.inline_() && b.inline_()) {
		if (a.den_ == b.den_) {
			return Rational::from_wide(static_cast<i128>(a.num_) - b.num_, a.den_);
		}
		return Rational::from_wide(static_cast<i128>(a.num_) * b.den_ - static_cast<i128>(b.num_) * a.den_,
		                           static_cast<i128>(a.den_) * b.den_);
	}
	return Rational::from_big(a.to_big() - b.to_big());
}

Rational operator*(const Rational& a, const Rational& b)
{
	if (a.is_zero() || b.is_zero()) {
		return Rational();
	}
	if (a.inline_() && b.inline_()) {
		if (a.den_ == 1 && b.den_ == 1) {
			return Rational::from_wide(static_cast<i128>(a.num_) * b.num_, 1);
		}
		// Cross-cancel first; the product is then already in lowest terms.
		auto an = static_cast<std::uint64_t>(std::abs(a.num_));
		auto bn = static_cast<std::uint64_t>(std::abs(b.num_));
		std::int64_t g1 = static_cast<std::int64_t>(std::gcd(an, static_cast<std::uint64_t>(b.den_)));
		std::int64_t g2 = static_cast<std::int64_t>(std::gcd(bn, static_cast<std::uint64_t>(a.den_)));
		i128 num = static_cast<i128>(a.num_ / g1) * (b.num_ / g2);
		i128 den = static_cast<i128>(a.den_ / g2) * (b.den_ / g1);
		if (fits_inline(num) && den <= kInlineMax) {
			Rational r;
			r.num_ = static_cast<std::int64_t>(num);
			r.den_ = static_cast<std::int64_t>(den);
			return r;
		}
		return Rational::from_wide(num, den);
	}
	return Rational::from_big(a.to_big() * b.to_big());
}

Rational operator/(const Rational& a, const Rational& b)
{
	if (b.is_zero()) {
		throw std::domain_error("division by zero");
	}
	if (b.inline_()) {
		Rational inv;
		inv.num_ = b.num_ < 0 ? -b.den_ : b.den_;
		inv.den_ = std::abs(b.num_);
		return a * inv;
	}
	return Rational::from_big(a.to_big() / b.to_big());
}

bool operator==(const Rational& a, const Rational& b) noexcept
{
	if (a.inline_() != b.inline_()) {
		return false;
	}
	if (a.inline_()) {
		return a.num_ == b.num_ && a.den_ == b.den_;
	}
	return *a.big_ == *b.big_;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b)
{
	if (a.inline_() && b.inline_()) {
		if (a.den_ == b.den_) {
			return a.num_ <=> b.num_;
		}
		i128 lhs = static_cast<i128>(a.num_) * b.den_;
		i128 rhs = static_cast<i128>(b.num_) * a.den_;
		return lhs <=> rhs;
	}
	auto x = a.to_big();
	auto y = b.to_big();
	if (x < y) {
		return std::strong_ordering::less;
	}
	return x == y ? std::strong_ordering::equal : std::strong_ordering::greater;
}

std::size_t Rational::hash() const noexcept
{
	if (inline_()) {
		std::size_t h = std::hash<std::int64_t>{}(num_);
		return h ^ (std::hash<std::int64_t>{}(den_) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
	}
	return std::hash<std::string>{}(str());
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace tugame
