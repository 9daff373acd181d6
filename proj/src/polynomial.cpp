#include "boundary/polynomial.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace boundary {

BigInt binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

// ---------------------------------------------------------------------------
// UnivariatePolynomial

UnivariatePolynomial::UnivariatePolynomial(std::vector<BigInt> ascending_coeffs)
    : coeffs_(std::move(ascending_coeffs)) {
    trim();
}

void UnivariatePolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigInt& UnivariatePolynomial::coefficient(int k) const {
    static const BigInt kZero = 0;
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<std::size_t>(k)];
}

Rational UnivariatePolynomial::evaluate(const Rational& t) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= t;
        acc += Rational(*it);
    }
    acc.canonicalize();
    return acc;
}

bool UnivariatePolynomial::divide_exact(const UnivariatePolynomial& divisor,
                                        UnivariatePolynomial& quotient) const {
    if (divisor.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (divisor.coeffs_.back() != 1)
        throw std::invalid_argument("divide_exact requires a monic divisor");
    std::vector<BigInt> rem = coeffs_;
    const int dd = divisor.degree();
    if (degree() < dd) {
        if (!is_zero()) return false;
        quotient = UnivariatePolynomial();
        return true;
    }
    std::vector<BigInt> q(static_cast<std::size_t>(degree() - dd + 1));
    for (int k = degree() - dd; k >= 0; --k) {
        BigInt c = rem[static_cast<std::size_t>(k + dd)];
        q[static_cast<std::size_t>(k)] = c;
        if (c == 0) continue;
        for (int i = 0; i <= dd; ++i)
            rem[static_cast<std::size_t>(k + i)] -= c * divisor.coeffs_[static_cast<std::size_t>(i)];
    }
    for (const BigInt& r : rem)
        if (r != 0) return false;
    quotient = UnivariatePolynomial(std::move(q));
    return true;
}

std::string UnivariatePolynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = 0; k < static_cast<int>(coeffs_.size()); ++k) {
        const BigInt& c = coeffs_[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        BigInt a = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (k == 0) {
            out << a.get_str();
        } else {
            if (a != 1) out << a.get_str() << "*";
            out << var;
            if (k > 1) out << "^" << k;
        }
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// BoundaryPolynomial

void BoundaryPolynomial::resize_grid(int nx, int ny) {
    nx_ = nx;
    ny_ = ny;
    c_.assign(static_cast<std::size_t>(nx) * ny, BigInt(0));
}

void BoundaryPolynomial::trim() {
    int max_i = -1, max_j = -1;
    for (int j = 0; j < ny_; ++j)
        for (int i = 0; i < nx_; ++i)
            if (at(i, j) != 0) {
                max_i = std::max(max_i, i);
                max_j = std::max(max_j, j);
            }
    if (max_i < 0) {
        nx_ = ny_ = 0;
        c_.clear();
        return;
    }
    if (max_i + 1 == nx_ && max_j + 1 == ny_) return;
    std::vector<BigInt> shrunk(static_cast<std::size_t>(max_i + 1) * (max_j + 1));
    for (int j = 0; j <= max_j; ++j)
        for (int i = 0; i <= max_i; ++i)
            shrunk[static_cast<std::size_t>(j) * (max_i + 1) + i] = std::move(at(i, j));
    c_ = std::move(shrunk);
    nx_ = max_i + 1;
    ny_ = max_j + 1;
}

BoundaryPolynomial BoundaryPolynomial::constant(const BigInt& c) {
    return monomial(c, 0, 0);
}

BoundaryPolynomial BoundaryPolynomial::monomial(const BigInt& c, int i, int j) {
    if (i < 0 || j < 0) throw std::invalid_argument("monomial exponents must be non-negative");
    BoundaryPolynomial p;
    if (c == 0) return p;
    p.resize_grid(i + 1, j + 1);
    p.at(i, j) = c;
    return p;
}

BoundaryPolynomial BoundaryPolynomial::from_counts(const std::vector<std::uint64_t>& counts,
                                                   int stride, int order) {
    if (static_cast<std::size_t>(stride) * stride != counts.size())
        throw std::invalid_argument("count grid size does not match stride");
    BoundaryPolynomial p;
    p.resize_grid(stride, stride);
    for (int j = 0; j < stride; ++j)
        for (int i = 0; i < stride; ++i) {
            std::uint64_t v = counts[static_cast<std::size_t>(i) * stride + j];
            if (v != 0) mpz_set_ui(p.at(i, j).get_mpz_t(), v);
        }
    p.trim();
    p.order_ = order;
    return p;
}

BoundaryPolynomial BoundaryPolynomial::with_order(int n) const {
    BoundaryPolynomial p = *this;
    p.order_ = n;
    return p;
}

const BigInt& BoundaryPolynomial::coefficient(int i, int j) const {
    static const BigInt kZero = 0;
    if (i < 0 || j < 0 || i >= nx_ || j >= ny_) return kZero;
    return at(i, j);
}

int BoundaryPolynomial::support_degree_sum() const {
    int best = 0;
    for (int j = 0; j < ny_; ++j)
        for (int i = 0; i < nx_; ++i)
            if (at(i, j) != 0) best = std::max(best, i + j);
    return best;
}

bool BoundaryPolynomial::nonnegative() const {
    for (const BigInt& c : c_)
        if (c < 0) return false;
    return true;
}

BoundaryPolynomial BoundaryPolynomial::operator+(const BoundaryPolynomial& o) const {
    BoundaryPolynomial r;
    r.resize_grid(std::max(nx_, o.nx_), std::max(ny_, o.ny_));
    for (int j = 0; j < r.ny_; ++j)
        for (int i = 0; i < r.nx_; ++i)
            r.at(i, j) = coefficient(i, j) + o.coefficient(i, j);
    r.trim();
    r.order_ = std::max(order_, o.order_);
    return r;
}

BoundaryPolynomial BoundaryPolynomial::operator-(const BoundaryPolynomial& o) const {
    BoundaryPolynomial r;
    r.resize_grid(std::max(nx_, o.nx_), std::max(ny_, o.ny_));
    for (int j = 0; j < r.ny_; ++j)
        for (int i = 0; i < r.nx_; ++i)
            r.at(i, j) = coefficient(i, j) - o.coefficient(i, j);
    r.trim();
    r.order_ = std::max(order_, o.order_);
    return r;
}

BoundaryPolynomial BoundaryPolynomial::operator*(const BoundaryPolynomial& o) const {
    BoundaryPolynomial r;
    r.order_ = order_ + o.order_;
    if (is_zero() || o.is_zero()) return r;
    r.resize_grid(nx_ + o.nx_ - 1, ny_ + o.ny_ - 1);
    for (int j1 = 0; j1 < ny_; ++j1)
        for (int i1 = 0; i1 < nx_; ++i1) {
            const BigInt& a = at(i1, j1);
            if (a == 0) continue;
            for (int j2 = 0; j2 < o.ny_; ++j2)
                for (int i2 = 0; i2 < o.nx_; ++i2) {
                    const BigInt& b = o.at(i2, j2);
                    if (b != 0) r.at(i1 + i2, j1 + j2) += a * b;
                }
        }
    int hint = r.order_;
    r.trim();
    r.order_ = hint;
    return r;
}

BoundaryPolynomial BoundaryPolynomial::scaled(const BigInt& c) const {
    BoundaryPolynomial r = *this;
    if (c == 0) {
        r.nx_ = r.ny_ = 0;
        r.c_.clear();
        return r;
    }
    for (BigInt& v : r.c_) v *= c;
    return r;
}

BoundaryPolynomial BoundaryPolynomial::shifted(int dx, int dy) const {
    if (dx < 0 || dy < 0) throw std::invalid_argument("shift exponents must be non-negative");
    if (is_zero()) return *this;
    BoundaryPolynomial r;
    r.order_ = order_;
    r.resize_grid(nx_ + dx, ny_ + dy);
    for (int j = 0; j < ny_; ++j)
        for (int i = 0; i < nx_; ++i)
            r.at(i + dx, j + dy) = at(i, j);
    return r;
}

bool BoundaryPolynomial::operator==(const BoundaryPolynomial& o) const {
    const int nx = std::max(nx_, o.nx_), ny = std::max(ny_, o.ny_);
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i)
            if (coefficient(i, j) != o.coefficient(i, j)) return false;
    return true;
}

Rational BoundaryPolynomial::evaluate(const Rational& x, const Rational& y) const {
    // Horner over y of the Horner-evaluated x-rows.
    Rational acc = 0;
    for (int j = ny_ - 1; j >= 0; --j) {
        Rational row = 0;
        for (int i = nx_ - 1; i >= 0; --i) {
            row *= x;
            row += Rational(at(i, j));
        }
        acc *= y;
        acc += row;
    }
    acc.canonicalize();
    return acc;
}

UnivariatePolynomial BoundaryPolynomial::slice_y(int j) const {
    std::vector<BigInt> row;
    if (j >= 0 && j < ny_) {
        row.reserve(static_cast<std::size_t>(nx_));
        for (int i = 0; i < nx_; ++i) row.push_back(at(i, j));
    }
    return UnivariatePolynomial(std::move(row));
}

UnivariatePolynomial BoundaryPolynomial::substitute_x0() const {
    std::vector<BigInt> col;
    col.reserve(static_cast<std::size_t>(ny_));
    for (int j = 0; j < ny_; ++j) col.push_back(coefficient(0, j));
    return UnivariatePolynomial(std::move(col));
}

UnivariatePolynomial BoundaryPolynomial::differential_polynomial() const {
    const int n = order_;
    if (ny_ - 1 > n)
        throw std::domain_error("order hint smaller than the maximal y-degree");
    std::vector<BigInt> out(static_cast<std::size_t>(2 * std::max(n, 0) + 1));
    for (int j = 0; j < ny_; ++j)
        for (int i = 0; i < nx_; ++i) {
            const BigInt& c = at(i, j);
            if (c == 0) continue;
            const int e = n + i - j;
            if (e < 0 || e > 2 * n)
                throw std::domain_error("exponent out of range in differential polynomial");
            out[static_cast<std::size_t>(e)] += c;
        }
    return UnivariatePolynomial(std::move(out));
}

LaurentProfile BoundaryPolynomial::laurent_profile() const {
    LaurentProfile prof;
    bool seen = false;
    for (int j = 0; j < ny_; ++j)
        for (int i = 0; i < nx_; ++i)
            if (at(i, j) != 0) {
                if (!seen) {
                    prof.degree_sum = i + j;
                    prof.degree_diff = i - j;
                    seen = true;
                } else {
                    prof.degree_sum = std::max(prof.degree_sum, i + j);
                    prof.degree_diff = std::max(prof.degree_diff, i - j);
                }
            }
    return prof;
}

namespace {

// One step of synthetic division by (y+1), operating on the rows of the
// grid (each row is the x-polynomial multiplying y^j). Returns false when
// the remainder row is nonzero.
bool divide_rows_by_y_plus_one(const std::vector<std::vector<BigInt>>& rows,
                               std::vector<std::vector<BigInt>>& quotient) {
    const int d = static_cast<int>(rows.size()) - 1;
    if (d < 0) {
        quotient.clear();
        return true;
    }
    std::vector<std::vector<BigInt>> q(static_cast<std::size_t>(std::max(d, 0)));
    std::vector<BigInt> carry = rows[static_cast<std::size_t>(d)];
    for (int k = d - 1; k >= 0; --k) {
        q[static_cast<std::size_t>(k)] = carry;
        const std::vector<BigInt>& rk = rows[static_cast<std::size_t>(k)];
        std::vector<BigInt> next(std::max(rk.size(), carry.size()));
        for (std::size_t i = 0; i < next.size(); ++i) {
            BigInt v = i < rk.size() ? rk[i] : BigInt(0);
            if (i < carry.size()) v -= carry[i];
            next[i] = std::move(v);
        }
        carry = std::move(next);
    }
    for (const BigInt& c : carry)
        if (c != 0) return false;
    quotient = std::move(q);
    return true;
}

std::vector<std::vector<BigInt>> grid_rows(const BoundaryPolynomial& p) {
    std::vector<std::vector<BigInt>> rows(static_cast<std::size_t>(p.max_y_degree() + 1));
    for (int j = 0; j <= p.max_y_degree(); ++j) {
        rows[static_cast<std::size_t>(j)].resize(static_cast<std::size_t>(p.max_x_degree() + 1));
        for (int i = 0; i <= p.max_x_degree(); ++i)
            rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = p.coefficient(i, j);
    }
    return rows;
}

BoundaryPolynomial poly_from_rows(const std::vector<std::vector<BigInt>>& rows, int order) {
    BoundaryPolynomial p = BoundaryPolynomial::zero();
    for (int j = 0; j < static_cast<int>(rows.size()); ++j)
        for (int i = 0; i < static_cast<int>(rows[static_cast<std::size_t>(j)].size()); ++i) {
            const BigInt& c = rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
            if (c != 0) p = p + BoundaryPolynomial::monomial(c, i, j);
        }
    return p.with_order(order);
}

}  // namespace

int BoundaryPolynomial::y_plus_one_multiplicity() const {
    if (is_zero()) return 0;
    int count = 0;
    auto rows = grid_rows(*this);
    std::vector<std::vector<BigInt>> q;
    while (divide_rows_by_y_plus_one(rows, q)) {
        ++count;
        rows = std::move(q);
        if (rows.empty()) break;  // the polynomial was exactly (y+1)^count
    }
    return count;
}

BoundaryPolynomial BoundaryPolynomial::deflate() const {
    if (is_zero()) return *this;
    auto rows = grid_rows(*this);
    int count = 0;
    std::vector<std::vector<BigInt>> q;
    while (divide_rows_by_y_plus_one(rows, q)) {
        ++count;
        rows = std::move(q);
        if (rows.empty()) break;
    }
    return poly_from_rows(rows, std::max(order_ - count, 0));
}

bool BoundaryPolynomial::divide_by_x_minus_one(BoundaryPolynomial& quotient) const {
    // Per y-row synthetic division by (x-1): the remainder is the row value
    // at x=1 and must vanish for every row.
    BoundaryPolynomial q = BoundaryPolynomial::zero();
    for (int j = 0; j < ny_; ++j) {
        BigInt carry = 0;
        std::vector<BigInt> row(static_cast<std::size_t>(std::max(nx_ - 1, 0)));
        for (int i = nx_ - 1; i >= 1; --i) {
            carry += at(i, j);
            row[static_cast<std::size_t>(i - 1)] = carry;
        }
        carry += coefficient(0, j);
        if (carry != 0) return false;
        for (int i = 0; i < static_cast<int>(row.size()); ++i)
            if (row[static_cast<std::size_t>(i)] != 0)
                q = q + monomial(row[static_cast<std::size_t>(i)], i, j);
    }
    quotient = q.with_order(order_);
    return true;
}

// ---------------------------------------------------------------------------
// Rendering

OutputFormat parse_output_format(const std::string& name) {
    if (name == "plain") return OutputFormat::Plain;
    if (name == "latex") return OutputFormat::Latex;
    if (name == "json") return OutputFormat::Json;
    throw std::invalid_argument("unknown output format: " + name);
}

namespace {

void append_plain_term(std::ostream& out, const BigInt& c, int i, int j, bool first) {
    BigInt a = abs(c);
    if (first) {
        if (c < 0) out << "-";
    } else {
        out << (c < 0 ? " - " : " + ");
    }
    std::vector<std::string> factors;
    if (a != 1 || (i == 0 && j == 0)) factors.push_back(a.get_str());
    if (i > 0) factors.push_back(i == 1 ? "x" : "x^" + std::to_string(i));
    if (j > 0) factors.push_back(j == 1 ? "y" : "y^" + std::to_string(j));
    for (std::size_t k = 0; k < factors.size(); ++k) {
        if (k > 0) out << "*";
        out << factors[k];
    }
}

void append_latex_term(std::ostream& out, const BigInt& c, int i, int j, bool first) {
    BigInt a = abs(c);
    if (first) {
        if (c < 0) out << "-";
    } else {
        out << (c < 0 ? " - " : " + ");
    }
    if (a != 1 || (i == 0 && j == 0)) out << a.get_str();
    if (i == 1)
        out << "x";
    else if (i > 1)
        out << "x^{" << i << "}";
    if (j == 1)
        out << "y";
    else if (j > 1)
        out << "y^{" << j << "}";
}

}  // namespace

std::string emit(const BoundaryPolynomial& p, OutputFormat format) {
    if (format == OutputFormat::Json) {
        nlohmann::ordered_json doc;
        doc["n"] = p.order();
        doc["coefficients"] = nlohmann::ordered_json::array();
        for (int j = 0; j <= p.max_y_degree(); ++j)
            for (int i = 0; i <= p.max_x_degree(); ++i) {
                const BigInt& c = p.coefficient(i, j);
                if (c == 0) continue;
                nlohmann::ordered_json term;
                term["x"] = i;
                term["y"] = j;
                term["c"] = c.get_str();
                doc["coefficients"].push_back(std::move(term));
            }
        return doc.dump();
    }
    std::ostringstream out;
    bool first = true;
    for (int j = 0; j <= p.max_y_degree(); ++j)
        for (int i = 0; i <= p.max_x_degree(); ++i) {
            const BigInt& c = p.coefficient(i, j);
            if (c == 0) continue;
            if (format == OutputFormat::Plain)
                append_plain_term(out, c, i, j, first);
            else
                append_latex_term(out, c, i, j, first);
            first = false;
        }
    if (first) return "0";
    return out.str();
}

bool is_valid_graph_polynomial(const BoundaryPolynomial& p) {
    const int n = p.order();
    if (n < 0) return false;
    if (!p.nonnegative()) return false;
    if (p.coefficient(0, 0) != 1 || p.coefficient(0, n) != 1) return false;
    if (p.support_degree_sum() > n) return false;
    for (int j = 0; j <= n; ++j) {
        BigInt row_sum = 0;
        for (int i = 0; i <= p.max_x_degree(); ++i) row_sum += p.coefficient(i, j);
        if (row_sum != binomial(n, j)) return false;
    }
    return true;
}

}  // namespace boundary
