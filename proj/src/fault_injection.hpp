#ifndef TUGAME_FAULT_INJECTION_HPP
#define TUGAME_FAULT_INJECTION_HPP

// Constants that the mutation smoke tests perturb. Normal builds leave
// TUGAME_MUTATION undefined; the build adds one mutant CLI per
// nonzero value and expects `examples` to fail on each of them.
//   1: prefix length in the equivalence-class extension sum
//   2: base of the exponential strictly-convex fill
//   3: factorial offset in the Shapley coefficient

#ifndef TUGAME_MUTATION
#define TUGAME_MUTATION 0
#endif

namespace tugame::detail {

// term i of the extension sum uses the first i - kPrefixOffset members
inline constexpr int kPrefixOffset = TUGAME_MUTATION == 1 ? 0 : 1;

inline constexpr int kExponentialFillBase = TUGAME_MUTATION == 2 ? 1 : 3;

// |S|! (n - |S| - kCoefficientOffset)! / n!
inline constexpr int kCoefficientOffset = TUGAME_MUTATION == 3 ? 0 : 1;

}  // namespace tugame::detail

#endif  // TUGAME_FAULT_INJECTION_HPP
