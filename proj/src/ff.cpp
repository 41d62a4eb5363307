#include "affine/ff.hpp"

#include <algorithm>
#include <stdexcept>

#include "affine/numeric.hpp"

namespace affine {

long inv_mod(long a, long p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) throw std::domain_error("zero has no inverse");
    // Extended Euclid on (a, p).
    long r0 = a, r1 = p, s0 = 1, s1 = 0;
    while (r1 != 0) {
        long quot = r0 / r1;
        long r2 = r0 - quot * r1;
        long s2 = s0 - quot * s1;
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    if (r0 != 1) throw std::domain_error("modulus is not prime to the element");
    s0 %= p;
    return s0 < 0 ? s0 + p : s0;
}

MatrixFq::MatrixFq(int n, long p) : n_(n), p_(p), e_(static_cast<std::size_t>(n) * n, 0) {
    if (n < 1) throw std::invalid_argument("matrix dimension must be positive");
    if (p < 2) throw std::invalid_argument("modulus must be at least 2");
}

MatrixFq MatrixFq::identity(int n, long p) {
    MatrixFq m(n, p);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

void MatrixFq::set(int i, int j, long v) {
    v %= p_;
    if (v < 0) v += p_;
    e_[static_cast<std::size_t>(i) * n_ + j] = v;
}

MatrixFq MatrixFq::operator*(const MatrixFq& o) const {
    if (n_ != o.n_ || p_ != o.p_) throw std::invalid_argument("matrix shape/field mismatch");
    MatrixFq out(n_, p_);
    for (int i = 0; i < n_; ++i) {
        for (int k = 0; k < n_; ++k) {
            long a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < n_; ++j) {
                std::size_t idx = static_cast<std::size_t>(i) * n_ + j;
                out.e_[idx] = (out.e_[idx] + a * o.at(k, j)) % p_;
            }
        }
    }
    return out;
}

int MatrixFq::rank() const {
    std::vector<long> w = e_;
    auto at_w = [&](int i, int j) -> long& { return w[static_cast<std::size_t>(i) * n_ + j]; };
    int rank = 0;
    for (int col = 0; col < n_ && rank < n_; ++col) {
        int pivot = -1;
        for (int row = rank; row < n_; ++row)
            if (at_w(row, col) != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0) continue;
        for (int j = 0; j < n_; ++j) std::swap(at_w(pivot, j), at_w(rank, j));
        long inv = inv_mod(at_w(rank, col), p_);
        for (int j = col; j < n_; ++j) at_w(rank, j) = at_w(rank, j) * inv % p_;
        for (int row = 0; row < n_; ++row) {
            if (row == rank || at_w(row, col) == 0) continue;
            long f = at_w(row, col);
            for (int j = col; j < n_; ++j) {
                at_w(row, j) = (at_w(row, j) - f * at_w(rank, j)) % p_;
                if (at_w(row, j) < 0) at_w(row, j) += p_;
            }
        }
        ++rank;
    }
    return rank;
}

MatrixFq MatrixFq::inverse() const {
    // Gauss-Jordan on [this | I].
    std::vector<long> w(static_cast<std::size_t>(n_) * 2 * n_, 0);
    auto at_w = [&](int i, int j) -> long& {
        return w[static_cast<std::size_t>(i) * 2 * n_ + j];
    };
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) at_w(i, j) = at(i, j);
        at_w(i, n_ + i) = 1;
    }
    for (int col = 0; col < n_; ++col) {
        int pivot = -1;
        for (int row = col; row < n_; ++row)
            if (at_w(row, col) != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0) throw std::domain_error("matrix is singular");
        for (int j = 0; j < 2 * n_; ++j) std::swap(at_w(pivot, j), at_w(col, j));
        long inv = inv_mod(at_w(col, col), p_);
        for (int j = 0; j < 2 * n_; ++j) at_w(col, j) = at_w(col, j) * inv % p_;
        for (int row = 0; row < n_; ++row) {
            if (row == col || at_w(row, col) == 0) continue;
            long f = at_w(row, col);
            for (int j = 0; j < 2 * n_; ++j) {
                at_w(row, j) = (at_w(row, j) - f * at_w(col, j)) % p_;
                if (at_w(row, j) < 0) at_w(row, j) += p_;
            }
        }
    }
    MatrixFq out(n_, p_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) out.set(i, j, at_w(i, n_ + j));
    return out;
}

PolyFq::PolyFq(std::vector<long> coeffs, long p) : p_(p), c_(std::move(coeffs)) {
    if (p < 2) throw std::invalid_argument("modulus must be at least 2");
    for (auto& c : c_) {
        c %= p_;
        if (c < 0) c += p_;
    }
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PolyFq PolyFq::operator+(const PolyFq& o) const {
    if (p_ != o.p_) throw std::invalid_argument("field mismatch");
    std::vector<long> out(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = (coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i))) % p_;
    return PolyFq(std::move(out), p_);
}

PolyFq PolyFq::operator-(const PolyFq& o) const {
    if (p_ != o.p_) throw std::invalid_argument("field mismatch");
    std::vector<long> out(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = (coeff(static_cast<int>(i)) - o.coeff(static_cast<int>(i))) % p_;
    return PolyFq(std::move(out), p_);
}

PolyFq PolyFq::operator*(const PolyFq& o) const {
    if (p_ != o.p_) throw std::invalid_argument("field mismatch");
    if (is_zero() || o.is_zero()) return zero(p_);
    std::vector<long> out(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            out[i + j] = (out[i + j] + c_[i] * o.c_[j]) % p_;
    }
    return PolyFq(std::move(out), p_);
}

std::pair<PolyFq, PolyFq> PolyFq::divmod(const PolyFq& o) const {
    if (p_ != o.p_) throw std::invalid_argument("field mismatch");
    if (o.is_zero()) throw std::domain_error("division by the zero polynomial");
    std::vector<long> rem = c_;
    int dr = degree(), dd = o.degree();
    if (dr < dd) return {zero(p_), *this};
    std::vector<long> quot(static_cast<std::size_t>(dr - dd) + 1, 0);
    long lead_inv = inv_mod(o.c_.back(), p_);
    for (int k = dr - dd; k >= 0; --k) {
        long c = rem[static_cast<std::size_t>(k + dd)] * lead_inv % p_;
        if (c == 0) continue;
        quot[static_cast<std::size_t>(k)] = c;
        for (int j = 0; j <= dd; ++j) {
            auto& r = rem[static_cast<std::size_t>(k + j)];
            r = (r - c * o.c_[static_cast<std::size_t>(j)]) % p_;
            if (r < 0) r += p_;
        }
    }
    return {PolyFq(std::move(quot), p_), PolyFq(std::move(rem), p_)};
}

std::strong_ordering PolyFq::operator<=>(const PolyFq& o) const {
    if (auto c = degree() <=> o.degree(); c != 0) return c;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (auto c = c_[i] <=> o.c_[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

MatrixFq PolyFq::eval(const MatrixFq& m) const {
    if (m.modulus() != p_) throw std::invalid_argument("field mismatch");
    MatrixFq acc(m.dim(), p_);
    for (int i = degree(); i >= 0; --i) {
        acc = acc * m;
        long c = coeff(i);
        if (c != 0)
            for (int j = 0; j < m.dim(); ++j) acc.set(j, j, (acc.at(j, j) + c) % p_);
    }
    return acc;
}

namespace {

// Determinant of a matrix of polynomials by first-column cofactor expansion.
PolyFq poly_det(const std::vector<std::vector<PolyFq>>& m) {
    std::size_t n = m.size();
    if (n == 1) return m[0][0];
    PolyFq out = PolyFq::zero(m[0][0].modulus());
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i][0].is_zero()) continue;
        std::vector<std::vector<PolyFq>> minor;
        minor.reserve(n - 1);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == i) continue;
            std::vector<PolyFq> row;
            row.reserve(n - 1);
            for (std::size_t c = 1; c < n; ++c) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        PolyFq term = m[i][0] * poly_det(minor);
        out = (i % 2 == 0) ? out + term : out - term;
    }
    return out;
}

}  // namespace

PolyFq char_poly(const MatrixFq& m) {
    long p = m.modulus();
    int n = m.dim();
    std::vector<std::vector<PolyFq>> zm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            // entry of zI - m
            std::vector<long> c{(p - m.at(i, j)) % p};
            if (i == j) c.push_back(1);
            zm[static_cast<std::size_t>(i)].emplace_back(std::move(c), p);
        }
    }
    return poly_det(zm);
}

std::vector<PolyFq> irreducible_polys(long q, int d, long bound) {
    if (d < 1) throw std::invalid_argument("degree must be positive");
    long total = 1;
    for (int i = 0; i < d; ++i) {
        total *= q;
        if (total > bound) throw CapExceeded("irreducible sieve bound exceeded");
    }
    // Irreducibles of degree <= d/2 suffice as trial divisors.
    std::vector<PolyFq> divisors;
    for (int e = 1; e * 2 <= d; ++e) {
        auto lower = irreducible_polys(q, e, bound);
        divisors.insert(divisors.end(), lower.begin(), lower.end());
    }
    std::vector<PolyFq> out;
    for (long code = 0; code < total; ++code) {
        std::vector<long> c(static_cast<std::size_t>(d) + 1, 0);
        long rest = code;
        for (int i = 0; i < d; ++i) {
            c[static_cast<std::size_t>(i)] = rest % q;
            rest /= q;
        }
        c[static_cast<std::size_t>(d)] = 1;
        PolyFq f(std::move(c), q);
        bool irred = d == 1;
        if (!irred) {
            irred = true;
            for (const auto& g : divisors)
                if (f.divmod(g).second.is_zero()) {
                    irred = false;
                    break;
                }
        }
        if (irred) out.push_back(std::move(f));
    }
    std::sort(out.begin(), out.end());  // enumeration order is not the canonical one
    return out;
}

}  // namespace affine
