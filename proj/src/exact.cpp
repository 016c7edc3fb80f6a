#include "specmin/exact.hpp"

#include <algorithm>
#include <stdexcept>

namespace specmin {

BigRat make_rational(BigInt num, BigInt den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return BigRat(num, den);
}

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    e_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), BigInt(0));
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix::RatMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    e_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), BigRat(0));
}

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntPolynomial::IntPolynomial(std::initializer_list<BigInt> ascending) : c_(ascending) {
    normalize();
}

IntPolynomial::IntPolynomial(std::vector<BigInt> ascending) : c_(std::move(ascending)) {
    normalize();
}

void IntPolynomial::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigInt IntPolynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[static_cast<std::size_t>(i)];
}

const BigInt& IntPolynomial::leading() const {
    if (c_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
    return c_.back();
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    std::vector<BigInt> r(std::max(c_.size(), o.c_.size()), BigInt(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
    std::vector<BigInt> r(std::max(c_.size(), o.c_.size()), BigInt(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<BigInt> r(c_.size() + o.c_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator*(const BigInt& k) const {
    std::vector<BigInt> r = c_;
    for (auto& c : r) c *= k;
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<BigInt> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<int>(i);
    return IntPolynomial(std::move(r));
}

BigInt IntPolynomial::content() const {
    BigInt g = 0;
    for (const auto& c : c_) g = boost::multiprecision::gcd(g, c);
    return g < 0 ? BigInt(-g) : g;
}

IntPolynomial IntPolynomial::primitive_part() const {
    if (is_zero()) return {};
    BigInt g = content();
    if (c_.back() < 0) g = -g;
    std::vector<BigInt> r = c_;
    for (auto& c : r) c /= g;
    return IntPolynomial(std::move(r));
}

BigRat IntPolynomial::evaluate(const BigRat& x) const {
    BigRat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + BigRat(*it);
    return acc;
}

std::string IntPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const BigInt c = coeff(i);
        if (c == 0) continue;
        BigInt a = c < 0 ? BigInt(-c) : c;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        const bool unit = a == 1 && i > 0;
        if (!unit) out += a.str();
        if (i > 0) {
            if (!unit) out += "*";
            out += "x";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

IntPolynomial divide_exact(const IntPolynomial& num, const IntPolynomial& den) {
    if (den.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (num.is_zero()) return {};
    if (num.degree() < den.degree())
        throw std::logic_error("inexact polynomial division");
    std::vector<BigRat> rem(static_cast<std::size_t>(num.degree()) + 1);
    for (int i = 0; i <= num.degree(); ++i) rem[static_cast<std::size_t>(i)] = num.coeff(i);
    const int dq = num.degree() - den.degree();
    std::vector<BigRat> quo(static_cast<std::size_t>(dq) + 1);
    const BigRat lead(den.leading());
    for (int k = dq; k >= 0; --k) {
        const BigRat q = rem[static_cast<std::size_t>(k + den.degree())] / lead;
        quo[static_cast<std::size_t>(k)] = q;
        for (int j = 0; j <= den.degree(); ++j)
            rem[static_cast<std::size_t>(k + j)] -= q * BigRat(den.coeff(j));
    }
    for (const auto& r : rem)
        if (r != 0) throw std::logic_error("inexact polynomial division");
    std::vector<BigInt> out(quo.size());
    for (std::size_t i = 0; i < quo.size(); ++i) {
        if (boost::multiprecision::denominator(quo[i]) != 1)
            throw std::logic_error("polynomial quotient not integral");
        out[i] = boost::multiprecision::numerator(quo[i]);
    }
    return IntPolynomial(std::move(out));
}

namespace {

// lc(b)^k · a mod b for the k that makes every step integral; only used up to
// primitive part, so the stray power of lc(b) is harmless.
IntPolynomial pseudo_remainder(IntPolynomial a, const IntPolynomial& b) {
    const BigInt lb = b.leading();
    while (!a.is_zero() && a.degree() >= b.degree()) {
        const int shift = a.degree() - b.degree();
        std::vector<BigInt> mono(static_cast<std::size_t>(shift) + 1, BigInt(0));
        mono.back() = a.leading();
        a = a * lb - b * IntPolynomial(std::move(mono));
    }
    return a;
}

}  // namespace

IntPolynomial poly_gcd(IntPolynomial a, IntPolynomial b) {
    a = a.primitive_part();
    b = b.primitive_part();
    while (!b.is_zero()) {
        IntPolynomial r = pseudo_remainder(a, b).primitive_part();
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

int rank_exact(IntMatrix m) {
    const int rows = m.rows(), cols = m.cols();
    BigInt prev = 1;
    int r = 0;
    while (r < rows && r < cols) {
        int pi = -1, pj = -1;
        for (int i = r; i < rows && pi < 0; ++i)
            for (int j = r; j < cols; ++j)
                if (m.at(i, j) != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi < 0) break;
        if (pi != r)
            for (int j = 0; j < cols; ++j) std::swap(m.at(pi, j), m.at(r, j));
        if (pj != r)
            for (int i = 0; i < rows; ++i) std::swap(m.at(i, pj), m.at(i, r));
        for (int i = r + 1; i < rows; ++i) {
            for (int j = r + 1; j < cols; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(r, r) - m.at(i, r) * m.at(r, j)) / prev;
            m.at(i, r) = 0;
        }
        prev = m.at(r, r);
        ++r;
    }
    return r;
}

int rank_rational(RatMatrix m) {
    const int rows = m.rows(), cols = m.cols();
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (m.at(i, c) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int j = 0; j < cols; ++j) std::swap(m.at(pivot, j), m.at(r, j));
        for (int i = r + 1; i < rows; ++i) {
            if (m.at(i, c) == 0) continue;
            const BigRat f = m.at(i, c) / m.at(r, c);
            for (int j = c; j < cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        ++r;
    }
    return r;
}

IntPolynomial char_poly(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("char_poly: non-square matrix");
    const int n = m.rows();
    if (n == 0) return IntPolynomial{1};
    // Berkowitz recurrence: grow the leading principal block one row/column at
    // a time; each step multiplies the coefficient vector by a Toeplitz matrix
    // built from the border products R·M^j·C. Division-free throughout.
    std::vector<BigInt> v{1, -m.at(0, 0)};  // descending coefficients
    for (int k = 2; k <= n; ++k) {
        const int mm = k - 1;
        std::vector<BigInt> t(mm), s(mm);
        for (int i = 0; i < mm; ++i) t[i] = m.at(i, k - 1);
        for (int j = 0; j < mm; ++j) {
            BigInt dot = 0;
            for (int i = 0; i < mm; ++i) dot += m.at(k - 1, i) * t[i];
            s[j] = dot;
            if (j + 1 < mm) {
                std::vector<BigInt> nt(mm, BigInt(0));
                for (int a = 0; a < mm; ++a)
                    for (int b = 0; b < mm; ++b) nt[a] += m.at(a, b) * t[b];
                t = std::move(nt);
            }
        }
        std::vector<BigInt> f(static_cast<std::size_t>(k) + 1, BigInt(0));
        f[0] = 1;
        f[1] = -m.at(k - 1, k - 1);
        for (int j = 2; j <= k; ++j) f[j] = -s[j - 2];
        std::vector<BigInt> nv(static_cast<std::size_t>(k) + 1, BigInt(0));
        for (int i = 0; i <= k; ++i)
            for (int j = 0; j < static_cast<int>(v.size()); ++j)
                if (i - j >= 0 && i - j <= k) nv[i] += f[i - j] * v[j];
        v = std::move(nv);
    }
    std::vector<BigInt> ascending(v.rbegin(), v.rend());
    return IntPolynomial(std::move(ascending));
}

std::vector<std::pair<IntPolynomial, int>> squarefree_decomposition(const IntPolynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree decomposition of zero");
    std::vector<std::pair<IntPolynomial, int>> out;
    IntPolynomial f = p.primitive_part();
    if (f.degree() <= 0) return out;
    const IntPolynomial df = f.derivative();
    IntPolynomial g = poly_gcd(f, df);
    IntPolynomial c = divide_exact(f, g);
    IntPolynomial d = divide_exact(df, g) - c.derivative();
    for (int i = 1; c.degree() > 0; ++i) {
        IntPolynomial a = poly_gcd(c, d);
        c = divide_exact(c, a);
        d = divide_exact(d, a) - c.derivative();
        if (a.degree() > 0) out.emplace_back(std::move(a), i);
    }
    return out;
}

int eval_multiplicity(const IntPolynomial& p, const BigRat& r) {
    if (p.is_zero()) throw std::invalid_argument("root multiplicity in zero polynomial");
    std::vector<BigRat> cur(static_cast<std::size_t>(p.degree()) + 1);
    for (int i = 0; i <= p.degree(); ++i) cur[static_cast<std::size_t>(i)] = p.coeff(i);
    int mult = 0;
    while (cur.size() > 1 || (cur.size() == 1 && cur[0] == 0)) {
        // synthetic division by (x − r); stop at the first nonzero remainder
        std::vector<BigRat> quo(cur.size() - 1);
        BigRat carry = 0;
        for (std::size_t i = cur.size(); i-- > 1;) {
            carry = cur[i] + r * carry;
            quo[i - 1] = carry;
        }
        if (cur[0] + r * carry != 0) break;
        cur = std::move(quo);
        ++mult;
        if (cur.empty()) break;
    }
    return mult;
}

namespace {

RatMatrix shifted_rational(const IntMatrix& m, const BigRat& shift) {
    RatMatrix a(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) a.at(i, j) = BigRat(m.at(i, j));
    for (int i = 0; i < m.rows(); ++i) a.at(i, i) -= shift;
    return a;
}

}  // namespace

RatMatrix nullspace_basis(const IntMatrix& m, const BigRat& shift) {
    if (m.rows() != m.cols()) throw std::invalid_argument("nullspace_basis: non-square matrix");
    const int n = m.rows();
    RatMatrix a = shifted_rational(m, shift);
    // reduced row echelon form, tracking pivot columns
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < n && r < n; ++c) {
        int pivot = -1;
        for (int i = r; i < n; ++i)
            if (a.at(i, c) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int j = 0; j < n; ++j) std::swap(a.at(pivot, j), a.at(r, j));
        const BigRat lead = a.at(r, c);
        for (int j = c; j < n; ++j) a.at(r, j) /= lead;
        for (int i = 0; i < n; ++i) {
            if (i == r || a.at(i, c) == 0) continue;
            const BigRat f = a.at(i, c);
            for (int j = c; j < n; ++j) a.at(i, j) -= f * a.at(r, j);
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<int> free_col;
    for (int c = 0, k = 0; c < n; ++c) {
        if (k < static_cast<int>(pivot_col.size()) && pivot_col[k] == c)
            ++k;
        else
            free_col.push_back(c);
    }
    RatMatrix basis(n, static_cast<int>(free_col.size()));
    for (int b = 0; b < static_cast<int>(free_col.size()); ++b) {
        const int fc = free_col[b];
        basis.at(fc, b) = 1;
        for (int i = 0; i < static_cast<int>(pivot_col.size()); ++i)
            basis.at(pivot_col[i], b) = -a.at(i, fc);
    }
    return basis;
}

RatMatrix eigenprojection(const IntMatrix& m, const BigRat& shift) {
    if (m.rows() != m.cols()) throw std::invalid_argument("eigenprojection: non-square matrix");
    const int n = m.rows();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (m.at(i, j) != m.at(j, i))
                throw std::invalid_argument("eigenprojection: non-symmetric matrix");
    const RatMatrix b = nullspace_basis(m, shift);
    const int k = b.cols();
    RatMatrix p(n, n);
    if (k == 0) return p;
    // Gram matrix BᵀB and right-hand side Bᵀ, solved by Gauss-Jordan
    RatMatrix sys(k, k + n);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            BigRat dot = 0;
            for (int t = 0; t < n; ++t) dot += b.at(t, i) * b.at(t, j);
            sys.at(i, j) = dot;
        }
        for (int j = 0; j < n; ++j) sys.at(i, k + j) = b.at(j, i);
    }
    for (int c = 0; c < k; ++c) {
        int pivot = -1;
        for (int i = c; i < k; ++i)
            if (sys.at(i, c) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) throw std::logic_error("eigenprojection: singular Gram matrix");
        if (pivot != c)
            for (int j = 0; j < k + n; ++j) std::swap(sys.at(pivot, j), sys.at(c, j));
        const BigRat lead = sys.at(c, c);
        for (int j = c; j < k + n; ++j) sys.at(c, j) /= lead;
        for (int i = 0; i < k; ++i) {
            if (i == c || sys.at(i, c) == 0) continue;
            const BigRat f = sys.at(i, c);
            for (int j = c; j < k + n; ++j) sys.at(i, j) -= f * sys.at(c, j);
        }
    }
    // P = B · (BᵀB)⁻¹Bᵀ
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            BigRat dot = 0;
            for (int t = 0; t < k; ++t) dot += b.at(i, t) * sys.at(t, k + j);
            p.at(i, j) = dot;
        }
    return p;
}

}  // namespace specmin
