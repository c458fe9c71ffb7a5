#include "tugame/exact_linear.hpp"

#include <stdexcept>
#include <utility>

namespace tugame {

namespace {

using Row = std::vector<BigInt>;

// Scales the equation by the lcm of its denominators.
Row integer_row(const LinearEquation& eq, std::size_t unknowns)
{
	BigInt scale = 1;
	auto absorb = [&](const Rational& x) {
		BigInt d = x.denominator();
		scale = scale / boost::multiprecision::gcd(scale, d) * d;
	};
	for (const Rational& c : eq.coefficients) {
		absorb(c);
	}
	absorb(eq.rhs);
	Row row(unknowns + 1);
	for (std::size_t j = 0; j < eq.coefficients.size(); ++j) {
		row[j] = eq.coefficients[j].numerator() * (scale / eq.coefficients[j].denominator());
	}
	row[unknowns] = eq.rhs.numerator() * (scale / eq.rhs.denominator());
	return row;
}

}  // namespace

LinearSolution solve_exact(const std::vector<LinearEquation>& equations, std::size_t unknowns)
{
	std::vector<Row> m;
	m.reserve(equations.size());
	for (const auto& eq : equations) {
		if (eq.coefficients.size() > unknowns) {
			throw std::invalid_argument("equation has more coefficients than unknowns");
		}
		m.push_back(integer_row(eq, unknowns));
	}

	std::vector<std::size_t> pivot_cols;
	std::size_t r = 0;
	BigInt prev = 1;
	for (std::size_t c = 0; c < unknowns && r < m.size(); ++c) {
		std::size_t p = r;
		while (p < m.size() && m[p][c] == 0) {
			++p;
		}
		if (p == m.size()) {
			continue;
		}
		std::swap(m[p], m[r]);
		for (std::size_t i = r + 1; i < m.size(); ++i) {
			for (std::size_t j = c + 1; j <= unknowns; ++j) {
				BigInt numer = m[r][c] * m[i][j] - m[i][c] * m[r][j];
				BigInt q, rem;
				boost::multiprecision::divide_qr(numer, prev, q, rem);
				if (rem != 0) {
					throw std::logic_error("Bareiss step produced a non-exact division");
				}
				m[i][j] = std::move(q);
			}
			m[i][c] = 0;
		}
		prev = m[r][c];
		pivot_cols.push_back(c);
		++r;
	}

	LinearSolution out;
	out.unknowns = unknowns;
	out.rank = r;
	// rows below the rank have zero coefficients; a nonzero rhs is a contradiction
	for (std::size_t i = r; i < m.size(); ++i) {
		if (m[i][unknowns] != 0) {
			out.consistent = false;
		}
	}
	if (!out.consistent || r != unknowns) {
		return out;
	}
	std::vector<Rational> x(unknowns);
	for (std::size_t row = r; row-- > 0;) {
		const std::size_t c = pivot_cols[row];
		Rational acc(m[row][unknowns], BigInt(1));
		for (std::size_t j = c + 1; j < unknowns; ++j) {
			if (m[row][j] != 0) {
				acc -= Rational(m[row][j], BigInt(1)) * x[j];
			}
		}
		x[c] = acc / Rational(m[row][c], BigInt(1));
	}
	out.values = std::move(x);
	return out;
}

}  // namespace tugame
