#pragma once

#include <compare>
#include <utility>
#include <vector>

namespace affine {

/// Multiplicative inverse of a modulo the prime p.
long inv_mod(long a, long p);

/// Dense matrix over the prime field F_p, entries stored row-major as
/// canonical residues 0..p-1.
class MatrixFq {
  public:
    MatrixFq(int n, long p);
    static MatrixFq identity(int n, long p);

    int dim() const { return n_; }
    long modulus() const { return p_; }
    long at(int i, int j) const { return e_[static_cast<std::size_t>(i) * n_ + j]; }
    void set(int i, int j, long v);

    MatrixFq operator*(const MatrixFq& o) const;
    auto operator<=>(const MatrixFq&) const = default;
    bool operator==(const MatrixFq&) const = default;

    int rank() const;
    int kernel_dim() const { return n_ - rank(); }
    bool invertible() const { return rank() == n_; }
    /// Throws std::domain_error on a singular matrix.
    MatrixFq inverse() const;

  private:
    int n_;
    long p_;
    std::vector<long> e_;
};

/// Polynomial over F_p, ascending coefficients, normalized (no trailing
/// zeros; the zero polynomial has an empty list, degree -1).
class PolyFq {
  public:
    PolyFq(std::vector<long> coeffs, long p);
    static PolyFq zero(long p) { return PolyFq({}, p); }
    static PolyFq constant(long c, long p) { return PolyFq({c}, p); }
    static PolyFq x(long p) { return PolyFq({0, 1}, p); }

    long modulus() const { return p_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool monic() const { return !c_.empty() && c_.back() == 1; }
    const std::vector<long>& coeffs() const { return c_; }
    long coeff(int i) const {
        return i >= 0 && i < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(i)] : 0;
    }

    PolyFq operator+(const PolyFq& o) const;
    PolyFq operator-(const PolyFq& o) const;
    PolyFq operator*(const PolyFq& o) const;
    /// Quotient and remainder; the divisor must be nonzero.
    std::pair<PolyFq, PolyFq> divmod(const PolyFq& o) const;

    bool operator==(const PolyFq&) const = default;
    /// Orders by degree first, then ascending-coefficient lexicographic;
    /// gives the canonical census ordering.
    std::strong_ordering operator<=>(const PolyFq& o) const;

    /// Evaluate at a square matrix by Horner's rule.
    MatrixFq eval(const MatrixFq& m) const;

  private:
    long p_;
    std::vector<long> c_;
};

/// Characteristic polynomial det(zI - m), monic of degree dim, by cofactor
/// expansion of the polynomial matrix (exact, intended for small dims).
PolyFq char_poly(const MatrixFq& m);

/// All monic irreducible polynomials of degree d over F_q (q prime), in
/// canonical order, by sieving against lower-degree irreducibles.
/// Throws CapExceeded when q^d exceeds the bound.
std::vector<PolyFq> irreducible_polys(long q, int d, long bound = 1'000'000);

}  // namespace affine
