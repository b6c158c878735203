#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dioclimb/bigint.hpp"

namespace dioclimb {

// A candidate vector (x1, ..., xn). Producers in this library only ever
// build assignments with every coordinate >= 1.
using Assignment = std::vector<BigInt>;

// An equation a1*x1^p1 + a2*x2^p2 + ... + an*xn^pn = N over the integers.
//
// The type itself stays general (any integer coefficients, any integer
// target) so the oracle and the evaluator can handle whatever a caller
// constructs; the climbing paths additionally require every coefficient
// to be >= 1, which is what makes the term sum strictly increasing per
// coordinate and the negative-heuristic prune sound.
class Equation {
public:
    Equation(std::vector<BigInt> coeffs, std::vector<std::uint32_t> powers,
             BigInt target);

    std::size_t var_count() const { return coeffs_.size(); }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    const std::vector<std::uint32_t>& powers() const { return powers_; }
    const BigInt& target() const { return target_; }

    bool all_coeffs_positive() const;
    // Throws NonPositiveCoefficient unless every coefficient is >= 1.
    void require_positive_coeffs() const;

    friend bool operator==(const Equation&, const Equation&) = default;

private:
    std::vector<BigInt> coeffs_;
    std::vector<std::uint32_t> powers_;
    BigInt target_;
};

// Parses the canonical text form
//
//     term ("+" term)* "=" integer      term := [integer "*"] "x" index "^" power
//
// e.g. "x1^2 + x2^2 = 625" or "3*x1^1 = 9". Whitespace is insignificant.
// An omitted coefficient defaults to 1. Variable indices must cover
// 1..n with no repeats and no gaps (any order is accepted; terms are
// stored by index).
//
// Throws SyntaxError (position-annotated), DuplicateVariable,
// MissingVariable, or NonPositivePower.
Equation parse_equation(std::string_view text);

// Canonical printer: terms in index order, explicit "^" powers,
// coefficient 1 omitted. parse_equation(render_equation(eq)) == eq.
std::string render_equation(const Equation& eq);

// Space-separated coordinates, e.g. "24 7".
std::string render_assignment(const Assignment& x);

// Left-hand side sum a1*x1^p1 + ... + an*xn^pn, computed exactly.
BigInt evaluate(const Equation& eq, const Assignment& x);

// H(x) = N - evaluate(eq, x). Zero exactly at solutions; negative once
// the sum overshoots the target.
BigInt heuristic(const Equation& eq, const Assignment& x);

bool is_solution(const Equation& eq, const Assignment& x);

// Largest b with a_i * b^p_i <= N - sum of the other coefficients (their
// minimum contribution, at x_j = 1). var_index is 1-based, matching the
// variable naming x1..xn.
//
// Returns nullopt when some coefficient is <= 0 (the term sum is not
// monotone, so no finite bound exists); returns 0 when even x_i = 1 is
// infeasible. Throws IndexOutOfRange.
std::optional<BigInt> variable_upper_bound(const Equation& eq,
                                           std::size_t var_index);

}  // namespace dioclimb
