#pragma once

#include <map>
#include <string>
#include <vector>

#include "superchar/partition.hpp"

namespace superchar {

/// Generator of the polynomial superalgebra C[x, eta]: even x_row^col or odd
/// eta_row^col, with 1-based row (lower) and column (upper) indices.
struct GVar {
    bool odd = false;
    int row = 0;
    int col = 0;
    auto operator<=>(const GVar&) const = default;
};

/// Monomial: even part as sorted (variable, exponent) pairs, odd part as a
/// duplicate-free sorted generator list (canonical order: row, then column).
struct SuperMonomial {
    std::vector<std::pair<GVar, int>> even;
    std::vector<GVar> odd;
    auto operator<=>(const SuperMonomial&) const = default;
    int degree() const;
};

/// Sparse supercommutative polynomial with exact integer coefficients.
class SuperPoly {
public:
    SuperPoly() = default;
    static SuperPoly zero() { return {}; }
    static SuperPoly unit() { return monomial(SuperMonomial{}, 1); }
    static SuperPoly variable(const GVar& v);
    static SuperPoly monomial(const SuperMonomial& mo, Int c);

    bool is_zero() const { return terms_.empty(); }
    const std::map<SuperMonomial, Int>& terms() const { return terms_; }
    void add(const SuperMonomial& mo, const Int& c);

    SuperPoly operator+(const SuperPoly& o) const;
    SuperPoly operator-(const SuperPoly& o) const;
    SuperPoly operator*(const SuperPoly& o) const;
    bool operator==(const SuperPoly&) const = default;

    std::string to_string() const;

private:
    std::map<SuperMonomial, Int> terms_;
};

/// Partial derivative; odd variables use the left-derivative convention.
SuperPoly derive(const SuperPoly& p, const GVar& v);

/// Super determinant of the matrix entry(a,b) = rows[a] with upper index
/// cols[b], expanded as sum over permutations with the row-ordered product.
SuperPoly determinant(const std::vector<GVar>& rows, const std::vector<int>& cols);

/// Delta_r of the classical columns: rows x_1..x_r, upper indices 1..r.
SuperPoly delta_r(int r);

/// Delta_{k,r}: rows x_1..x_m then r-m copies of eta_k, upper indices 1..r.
SuperPoly delta_kr(int k, int r, int m);

/// Column determinant of an (m|n)-semistandard tableau column (upper indices
/// 1..r), and the bitableau version with upper indices from a second column.
SuperPoly delta_column(const std::vector<HookCell>& column);
SuperPoly delta_column(const std::vector<HookCell>& column, const std::vector<int>& upper);

/// Product of column determinants Delta^T over the tableau.
SuperPoly delta_tableau(const HookTableau& t);

/// Bitableau basis vector Delta^{(T,T')}: upper indices per column from the
/// semistandard tableau tprime (rows of tprime listed row-major).
SuperPoly delta_bitableau(const HookTableau& t, const std::vector<std::vector<int>>& tprime);

/// Joint gl(d) x gl(m|n) highest weight vector of the diagram: product of
/// Delta_{k, lambda'_k} over the columns exceeding m and Delta_{lambda'_j}
/// over the rest. Requires l(lambda) <= d and the diagram in the (m|n)-hook.
SuperPoly hwv_vector(const Partition& la, int d, int m, int n);

/// First- or second-order operator term: multiply by the listed generators
/// after applying the derivatives (rightmost derivative acts first).
struct DiffTerm {
    Int c = 1;
    std::vector<GVar> mults;
    std::vector<GVar> derivs;
};

struct LieOperator {
    std::string name;
    std::vector<DiffTerm> terms;
};

SuperPoly apply(const LieOperator& op, const SuperPoly& p);

/// Operator families realized on C[x, eta]; M and N are the numbers of even
/// and odd rows present in the algebra (M may exceed m for the Gamma tests).
LieOperator gl_d_raise(int i, int d, int M, int N);
LieOperator glmn_raise_even(int s, int d);          // sum_j x_{s-1}^j d/dx_s^j
LieOperator glmn_raise_odd(int k, int d);           // sum_j eta_{k-1}^j d/deta_k^j
LieOperator glmn_raise_mixed(int m, int d);         // sum_j x_m^j d/deta_1^j
LieOperator o_laplacian_xx(int i, int s, int d);
LieOperator o_laplacian_xeta(int i, int k, int d);
LieOperator o_laplacian_etaeta(int k, int t, int d);
LieOperator sp_laplacian_xx(int i, int s, int d);
LieOperator sp_laplacian_xeta(int i, int k, int d);
LieOperator sp_laplacian_etaeta(int k, int t, int d);
LieOperator o_invariant_xx(int i, int s, int d);    // multiplication operator
LieOperator sp_invariant_xx(int i, int s, int d);
LieOperator gamma_op(int i, int m, int d);          // sum_j eta_1^j d/dx_{m+i}^j

enum class DualSide { O, Sp };

struct HarmonicReport {
    bool all_zero = true;
    std::string offending;  // name of the first operator with non-zero image
};

/// Apply every gl(d)-raising operator, every gl(m|n)-raising operator and
/// every Laplacian of the side to the highest weight vector of lambda.
HarmonicReport check_highest_harmonic(const Partition& la, int d, int m, int n, DualSide side);

/// Rank over Q of the coefficient matrix of the polynomials.
int span_rank(const std::vector<SuperPoly>& polys);

} // namespace superchar
