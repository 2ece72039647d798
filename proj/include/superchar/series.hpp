#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "superchar/bigint.hpp"

namespace superchar {

/// Variable layout of a truncated series.
///
/// Three named groups: `p` Laurent variables (exact exponents of either sign,
/// not graded), `m` + `n` power-series variables graded by total degree and
/// truncated at `cap`. An optional order-two sign variable eps (eps^2 = 1).
struct SeriesShape {
    int p = 0;
    int m = 0;
    int n = 0;
    int cap = 0;
    bool has_eps = false;
    std::string xname = "x", yname = "y", zname = "z";

    int width() const { return 1 + p + m + n; }  // slot 0 holds the eps bit
    bool operator==(const SeriesShape&) const = default;
};

/// Exponent vector, laid out [eps, x_1..x_p, y_1..y_m, z_1..z_n].
using ExpVec = std::vector<int>;

struct SeriesTerm {
    ExpVec e;
    Int c;
};

int capped_degree(const SeriesShape& sh, const ExpVec& e);

/// Graded-lex order: first by total (y,z)-degree, then lexicographically on
/// the full exponent vector. All stored series keep terms in this order.
bool term_order_less(const SeriesShape& sh, const ExpVec& a, const ExpVec& b);

class PowerSeries {
public:
    PowerSeries() = default;
    explicit PowerSeries(SeriesShape sh) : shape_(std::move(sh)) {}

    static PowerSeries zero(const SeriesShape& sh) { return PowerSeries(sh); }
    static PowerSeries one(const SeriesShape& sh);
    static PowerSeries monomial(const SeriesShape& sh, const ExpVec& e, Int c = 1);

    const SeriesShape& shape() const { return shape_; }
    const std::vector<SeriesTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    void add_term(const ExpVec& e, const Int& c);  // accumulate, defer normalization
    void normalize();                              // sort, merge, drop zeros & over-cap

    PowerSeries& operator+=(const PowerSeries& o);
    PowerSeries& operator-=(const PowerSeries& o);
    PowerSeries operator+(const PowerSeries& o) const;
    PowerSeries operator-(const PowerSeries& o) const;
    PowerSeries operator*(const PowerSeries& o) const;
    bool operator==(const PowerSeries& o) const;

    PowerSeries truncated(int new_cap) const;
    Int coefficient(const ExpVec& e) const;
    Int eval_all_ones() const;  // specialize every variable (and eps) to 1

    /// First differing term between two series in term order, if any.
    struct Mismatch {
        ExpVec e;
        Int lhs, rhs;
    };
    static std::optional<Mismatch> first_mismatch(const PowerSeries& a, const PowerSeries& b);

    std::string to_string() const;

private:
    SeriesShape shape_;
    std::vector<SeriesTerm> terms_;  // normalized: ordered, non-zero, within cap
};

/// Exact truncated product, plain nested-loop reference implementation.
PowerSeries series_mul_serial(const PowerSeries& a, const PowerSeries& b);

/// Same product with the outer accumulation parallelized over OpenMP threads.
/// Exact integer arithmetic makes the result identical to the serial kernel.
PowerSeries series_mul_parallel(const PowerSeries& a, const PowerSeries& b);

/// Dispatching product used by the rest of the library (parallel above a
/// size threshold, serial below it).
PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b);

/// 1 / (1 - monomial) expanded to the cap. The monomial must have positive
/// capped degree, otherwise the geometric series does not truncate.
PowerSeries geometric_expand(const SeriesShape& sh, const ExpVec& monomial);

/// 1 + monomial (binomial factor of the product sides).
PowerSeries one_plus(const SeriesShape& sh, const ExpVec& monomial);

/// Convenience exponent-vector builder: all zeros for the shape.
ExpVec zero_exp(const SeriesShape& sh);

} // namespace superchar
