// Exact linear algebra over arbitrary-precision integers and rationals:
// fraction-free rank, division-free characteristic polynomials, squarefree
// decomposition, rational-root multiplicity, nullspaces and eigenprojections.
// Never touches floating point.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace specmin {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Builds num/den with any sign of den; throws std::invalid_argument on den == 0.
BigRat make_rational(BigInt num, BigInt den);

class IntMatrix {
public:
    IntMatrix(int rows, int cols);
    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    BigInt& at(int r, int c) { return e_[static_cast<std::size_t>(r) * cols_ + c]; }
    const BigInt& at(int r, int c) const { return e_[static_cast<std::size_t>(r) * cols_ + c]; }
    bool operator==(const IntMatrix&) const = default;

private:
    int rows_, cols_;
    std::vector<BigInt> e_;
};

class RatMatrix {
public:
    RatMatrix(int rows, int cols);
    static RatMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    BigRat& at(int r, int c) { return e_[static_cast<std::size_t>(r) * cols_ + c]; }
    const BigRat& at(int r, int c) const { return e_[static_cast<std::size_t>(r) * cols_ + c]; }
    bool operator==(const RatMatrix&) const = default;

private:
    int rows_, cols_;
    std::vector<BigRat> e_;
};

// Coefficients ascending by power; trailing entry nonzero except for the zero
// polynomial, which has no entries and degree −1.
class IntPolynomial {
public:
    IntPolynomial() = default;
    IntPolynomial(std::initializer_list<BigInt> ascending);
    explicit IntPolynomial(std::vector<BigInt> ascending);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    BigInt coeff(int i) const;
    const BigInt& leading() const;

    IntPolynomial operator+(const IntPolynomial&) const;
    IntPolynomial operator-(const IntPolynomial&) const;
    IntPolynomial operator*(const IntPolynomial&) const;
    IntPolynomial operator*(const BigInt&) const;
    bool operator==(const IntPolynomial&) const = default;

    IntPolynomial derivative() const;
    BigInt content() const;          // gcd of coefficients, nonnegative; 0 for zero poly
    IntPolynomial primitive_part() const;  // content removed, leading coefficient positive
    BigRat evaluate(const BigRat& x) const;
    std::string to_string() const;   // human-readable, descending powers

private:
    void normalize();
    std::vector<BigInt> c_;
};

// Quotient of an exact division in ℚ[x] whose result has integer coefficients
// (e.g. primitive by primitive divisor); throws std::logic_error otherwise.
IntPolynomial divide_exact(const IntPolynomial& num, const IntPolynomial& den);

// Primitive gcd via the primitive pseudo-remainder sequence; result primitive
// with positive leading coefficient; gcd(0, 0) = 0.
IntPolynomial poly_gcd(IntPolynomial a, IntPolynomial b);

// Rank over ℚ by fraction-free Bareiss elimination with full pivoting.
int rank_exact(IntMatrix m);

// Rank over ℚ by rational Gaussian elimination.
int rank_rational(RatMatrix m);

// det(xI − m), monic of degree n, via the division-free Berkowitz recurrence.
// Throws std::invalid_argument on non-square input.
IntPolynomial char_poly(const IntMatrix& m);

// Yun's algorithm: p = content · ∏ q_i^{e_i} with the q_i squarefree, pairwise
// coprime, primitive, positive leading coefficient, e_i strictly increasing;
// constant p gives an empty list. Throws std::invalid_argument on zero input.
std::vector<std::pair<IntPolynomial, int>> squarefree_decomposition(const IntPolynomial& p);

// Largest k with (x − r)^k dividing p, by repeated exact synthetic division.
// Throws std::invalid_argument on zero input.
int eval_multiplicity(const IntPolynomial& p, const BigRat& r);

// Columns form an exact basis of ker(m − shift·I); may have zero columns.
// Throws std::invalid_argument on non-square input.
RatMatrix nullspace_basis(const IntMatrix& m, const BigRat& shift);

// Orthogonal projection onto ker(m − shift·I), computed as B(BᵀB)⁻¹Bᵀ from the
// nullspace basis B; the zero matrix when shift is not an eigenvalue. Requires
// square symmetric input (std::invalid_argument otherwise); a singular Gram
// matrix would mean the basis was not a basis and raises std::logic_error.
RatMatrix eigenprojection(const IntMatrix& m, const BigRat& shift);

}  // namespace specmin
