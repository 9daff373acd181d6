#ifndef BOUNDARY_POLYNOMIAL_HPP
#define BOUNDARY_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace boundary {

using BigInt = mpz_class;
using Rational = mpq_class;

BigInt binomial(int n, int k);

/// Dense univariate polynomial with exact integer coefficients,
/// stored by ascending exponent. Used for the y^j slices, the x=0
/// substitution and the one-variable differential polynomial.
class UnivariatePolynomial {
public:
    UnivariatePolynomial() = default;
    explicit UnivariatePolynomial(std::vector<BigInt> ascending_coeffs);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    const BigInt& coefficient(int k) const;
    Rational evaluate(const Rational& t) const;

    // Exact division by a monic divisor. Returns false (and leaves
    // quotient untouched) when the remainder is nonzero.
    bool divide_exact(const UnivariatePolynomial& divisor, UnivariatePolynomial& quotient) const;

    bool operator==(const UnivariatePolynomial& other) const { return coeffs_ == other.coeffs_; }
    std::string to_string(const std::string& var) const;

private:
    std::vector<BigInt> coeffs_;
    void trim();
};

struct LaurentProfile {
    int degree_sum = 0;   // max{i+j : B_ij != 0}, degree of B(G;x,x)
    int degree_diff = 0;  // max{i-j : B_ij != 0}, degree of B(G;x,1/x)
};

/// Bivariate polynomial in x (boundary size) and y (set size) with exact,
/// possibly signed, arbitrary-precision coefficients. Values produced from
/// graphs are coefficient-wise non-negative and supported on i+j <= order().
/// Intermediate formula arithmetic is allowed to go negative.
///
/// order() is the order of the graph the polynomial was computed for; it is
/// carried through arithmetic (sum: max, product: sum) and can be pinned
/// with with_order() when a formula knows the target graph.
class BoundaryPolynomial {
public:
    BoundaryPolynomial() = default;  // zero polynomial

    static BoundaryPolynomial zero() { return BoundaryPolynomial(); }
    static BoundaryPolynomial constant(const BigInt& c);
    static BoundaryPolynomial monomial(const BigInt& c, int i, int j);
    // Takes a (stride x stride) count grid with counts[i*stride + j] holding
    // the number of subsets with boundary size i and set size j.
    static BoundaryPolynomial from_counts(const std::vector<std::uint64_t>& counts, int stride,
                                          int order);

    int order() const { return order_; }
    BoundaryPolynomial with_order(int n) const;

    bool is_zero() const { return c_.empty(); }
    const BigInt& coefficient(int i, int j) const;  // zero outside the stored grid
    int max_x_degree() const { return nx_ - 1; }    // -1 for the zero polynomial
    int max_y_degree() const { return ny_ - 1; }
    int support_degree_sum() const;  // max i+j over nonzero entries, 0 if zero
    bool nonnegative() const;

    BoundaryPolynomial operator+(const BoundaryPolynomial& o) const;
    BoundaryPolynomial operator-(const BoundaryPolynomial& o) const;
    BoundaryPolynomial operator*(const BoundaryPolynomial& o) const;
    BoundaryPolynomial scaled(const BigInt& c) const;
    BoundaryPolynomial shifted(int dx, int dy) const;  // multiply by x^dx y^dy

    // Coefficient equality; order hints are metadata and not compared.
    bool operator==(const BoundaryPolynomial& o) const;
    bool operator!=(const BoundaryPolynomial& o) const { return !(*this == o); }

    Rational evaluate(const Rational& x, const Rational& y) const;
    UnivariatePolynomial slice_y(int j) const;      // sum_i B_ij x^i
    UnivariatePolynomial substitute_x0() const;     // sum_j B_0j y^j
    UnivariatePolynomial differential_polynomial() const;  // sum B_ij x^{n+i-j}
    LaurentProfile laurent_profile() const;

    // Largest k with (y+1)^k dividing the polynomial, by repeated exact
    // division over the integer grid. deflate() strips all such factors.
    int y_plus_one_multiplicity() const;
    BoundaryPolynomial deflate() const;

    // Exact division by (x-1); false when the remainder is nonzero.
    bool divide_by_x_minus_one(BoundaryPolynomial& quotient) const;

private:
    int order_ = 0;
    int nx_ = 0, ny_ = 0;       // grid extents; empty grid encodes zero
    std::vector<BigInt> c_;     // c_[j*nx_+i]

    BigInt& at(int i, int j) { return c_[static_cast<std::size_t>(j) * nx_ + i]; }
    const BigInt& at(int i, int j) const { return c_[static_cast<std::size_t>(j) * nx_ + i]; }
    void resize_grid(int nx, int ny);
    void trim();
};

enum class OutputFormat { Plain, Latex, Json };

OutputFormat parse_output_format(const std::string& name);  // throws on unknown format

// Deterministic rendering: terms ordered by ascending y-exponent, then
// ascending x-exponent. JSON carries coefficients as decimal strings.
std::string emit(const BoundaryPolynomial& p, OutputFormat format);

// Type invariants of a polynomial actually derived from a graph of order
// p.order(): B00 = 1, B0n = 1, support within i+j <= n, non-negative
// entries, and row sums sum_i B_ij = C(n,j).
bool is_valid_graph_polynomial(const BoundaryPolynomial& p);

}  // namespace boundary

#endif  // BOUNDARY_POLYNOMIAL_HPP
