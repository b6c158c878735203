#include "dioclimb/equation.hpp"

#include <cctype>
#include <limits>
#include <map>
#include <sstream>
#include <utility>

#include "dioclimb/errors.hpp"

namespace dioclimb {

Equation::Equation(std::vector<BigInt> coeffs,
                   std::vector<std::uint32_t> powers, BigInt target)
    : coeffs_(std::move(coeffs)),
      powers_(std::move(powers)),
      target_(std::move(target)) {
    if (coeffs_.empty() && powers_.empty()) throw EmptyEquation();
    if (coeffs_.size() != powers_.size())
        throw LengthMismatch("coefficient list has " +
                             std::to_string(coeffs_.size()) +
                             " entries but power list has " +
                             std::to_string(powers_.size()));
    for (std::size_t i = 0; i < powers_.size(); ++i)
        if (powers_[i] < 1)
            throw NonPositivePower("power of x" + std::to_string(i + 1) +
                                   " must be at least 1");
}

bool Equation::all_coeffs_positive() const {
    for (const BigInt& a : coeffs_)
        if (a < 1) return false;
    return true;
}

void Equation::require_positive_coeffs() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] < 1)
            throw NonPositiveCoefficient(
                "coefficient of x" + std::to_string(i + 1) + " is " +
                coeffs_[i].str() +
                "; the climb requires every coefficient >= 1");
}

namespace {

// Minimal cursor over the input; all errors carry the current offset.
struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() &&
               std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }
    bool eof() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
    bool at_digit() const {
        return !eof() && std::isdigit(static_cast<unsigned char>(text[pos]));
    }

    void expect(char c, const char* what) {
        if (eof() || text[pos] != c)
            throw SyntaxError(std::string("expected ") + what, pos);
        ++pos;
    }

    // Unsigned decimal literal.
    BigInt integer(const char* what) {
        if (!at_digit())
            throw SyntaxError(std::string("expected ") + what, pos);
        std::size_t start = pos;
        while (at_digit()) ++pos;
        return BigInt(std::string(text.substr(start, pos - start)));
    }

    // Decimal literal with an optional leading '-'.
    BigInt signed_integer(const char* what) {
        bool negative = false;
        if (!eof() && text[pos] == '-') {
            negative = true;
            ++pos;
        }
        BigInt value = integer(what);
        return negative ? -value : value;
    }
};

}  // namespace

Equation parse_equation(std::string_view text) {
    Cursor cur{text};

    // index -> (coefficient, power), collected in whatever order the terms
    // appear; gaps and repeats are diagnosed after the '='.
    std::map<std::uint64_t, std::pair<BigInt, std::uint32_t>> terms;

    for (;;) {
        cur.skip_ws();

        BigInt coeff = 1;
        if (cur.eof())
            throw SyntaxError("expected a term", cur.pos);
        if (cur.peek() != 'x') {
            coeff = cur.signed_integer("a coefficient or 'x'");
            cur.skip_ws();
            cur.expect('*', "'*' between coefficient and variable");
            cur.skip_ws();
        }
        std::size_t var_pos = cur.pos;
        cur.expect('x', "'x'");
        cur.skip_ws();
        BigInt index_value = cur.integer("a variable index");
        if (index_value < 1)
            throw SyntaxError("variable index must be at least 1", var_pos);
        if (index_value > std::numeric_limits<std::uint32_t>::max())
            throw SyntaxError("variable index out of range", var_pos);
        auto index = static_cast<std::uint64_t>(index_value);

        cur.skip_ws();
        cur.expect('^', "'^'");
        cur.skip_ws();
        std::size_t pow_pos = cur.pos;
        BigInt power_value = cur.integer("a power");
        if (power_value < 1)
            throw NonPositivePower("power of x" + std::to_string(index) +
                                   " must be at least 1");
        if (power_value > std::numeric_limits<std::uint32_t>::max())
            throw SyntaxError("power out of range", pow_pos);

        if (!terms.emplace(index, std::make_pair(coeff, static_cast<std::uint32_t>(
                                                            power_value)))
                 .second)
            throw DuplicateVariable("variable x" + std::to_string(index) +
                                    " appears more than once");

        cur.skip_ws();
        if (cur.eof())
            throw SyntaxError("expected '+' or '='", cur.pos);
        if (cur.peek() == '+') {
            ++cur.pos;
            continue;
        }
        if (cur.peek() == '=') {
            ++cur.pos;
            break;
        }
        throw SyntaxError("expected '+' or '='", cur.pos);
    }

    cur.skip_ws();
    BigInt target = cur.signed_integer("the target integer");
    cur.skip_ws();
    if (!cur.eof())
        throw SyntaxError("unexpected trailing input", cur.pos);

    const std::size_t n = terms.size();
    for (std::uint64_t i = 1; i <= n; ++i)
        if (!terms.count(i))
            throw MissingVariable("variable x" + std::to_string(i) +
                                  " is missing (indices must cover 1..n)");

    std::vector<BigInt> coeffs;
    std::vector<std::uint32_t> powers;
    coeffs.reserve(n);
    powers.reserve(n);
    for (std::uint64_t i = 1; i <= n; ++i) {
        coeffs.push_back(terms.at(i).first);
        powers.push_back(terms.at(i).second);
    }
    return Equation(std::move(coeffs), std::move(powers), std::move(target));
}

std::string render_equation(const Equation& eq) {
    std::ostringstream os;
    for (std::size_t i = 0; i < eq.var_count(); ++i) {
        if (i > 0) os << " + ";
        if (eq.coeffs()[i] != 1) os << eq.coeffs()[i] << "*";
        os << "x" << (i + 1) << "^" << eq.powers()[i];
    }
    os << " = " << eq.target();
    return os.str();
}

std::string render_assignment(const Assignment& x) {
    std::ostringstream os;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i > 0) os << " ";
        os << x[i];
    }
    return os.str();
}

BigInt evaluate(const Equation& eq, const Assignment& x) {
    if (x.size() != eq.var_count())
        throw DimensionMismatch("assignment has " + std::to_string(x.size()) +
                                " coordinates for an equation in " +
                                std::to_string(eq.var_count()) + " variables");
    BigInt sum = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        sum += eq.coeffs()[i] * ipow(x[i], eq.powers()[i]);
    return sum;
}

BigInt heuristic(const Equation& eq, const Assignment& x) {
    return eq.target() - evaluate(eq, x);
}

bool is_solution(const Equation& eq, const Assignment& x) {
    return heuristic(eq, x) == 0;
}

std::optional<BigInt> variable_upper_bound(const Equation& eq,
                                           std::size_t var_index) {
    if (var_index < 1 || var_index > eq.var_count())
        throw IndexOutOfRange("variable index " + std::to_string(var_index) +
                              " not in 1.." +
                              std::to_string(eq.var_count()));
    if (!eq.all_coeffs_positive()) return std::nullopt;

    const std::size_t i = var_index - 1;
    const BigInt& a = eq.coeffs()[i];
    const std::uint32_t p = eq.powers()[i];

    // Slack left for x_i when every other variable sits at its minimum 1.
    BigInt slack = eq.target();
    for (std::size_t j = 0; j < eq.var_count(); ++j)
        if (j != i) slack -= eq.coeffs()[j];

    if (slack < a) return BigInt(0);
    if (p == 1) return slack / a;

    // Largest b with a * b^p <= slack: grow, then bisect.
    BigInt lo = 1, hi = 2;
    while (a * ipow(hi, p) <= slack) {
        lo = hi;
        hi *= 2;
    }
    while (lo + 1 < hi) {
        BigInt mid = (lo + hi) / 2;
        if (a * ipow(mid, p) <= slack)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

}  // namespace dioclimb
