#pragma once

#include <map>

#include "superchar/partition.hpp"
#include "superchar/series.hpp"

namespace superchar {

enum class Family { B, C, D };

/// Rank-k root system of type B, C or D with its Weyl group of (even-)signed
/// permutations. Weights are doubled integers throughout, so spin weights of
/// B and D stay exact.
struct RootSystemCase {
    Family fam;
    int rank;

    Int weyl_order() const;
    GeneralizedVector rho() const;  // standard: B (k-1/2,...,1/2), C (k,...,1), D (k-1,...,0)
    bool dominant(const GeneralizedVector& la) const;
    /// Positive roots as doubled coefficient vectors.
    std::vector<std::vector<long long>> positive_roots() const;
};

/// Finite W-invariant Laurent polynomial on the maximal torus. Exponents are
/// doubled integers; eps records a global factor eps^{eps_exp} with eps^2=1.
struct LaurentCharacter {
    int rank = 0;
    int eps_exp = 0;
    std::map<std::vector<long long>, Int> terms;

    static LaurentCharacter constant(int rank, Int c = 1);
    LaurentCharacter operator*(const LaurentCharacter& o) const;
    LaurentCharacter operator+(const LaurentCharacter& o) const;
    bool operator==(const LaurentCharacter&) const = default;
    Int dimension() const;  // value at the identity element of the torus
    std::string to_string() const;

    /// Embed into the x-group of a PowerSeries (integral exponents required;
    /// the global eps power multiplies in when the shape carries eps).
    PowerSeries to_series(const SeriesShape& sh) const;
};

/// Signed sum over the Weyl group: sum_w det(w) e^{w(tau)}. Serial reference
/// kernel and an OpenMP kernel splitting the group enumeration.
std::map<std::vector<long long>, Int> alternant_serial(const RootSystemCase& rs,
                                                       const GeneralizedVector& tau);
std::map<std::vector<long long>, Int> alternant_parallel(const RootSystemCase& rs,
                                                         const GeneralizedVector& tau);
std::map<std::vector<long long>, Int> alternant(const RootSystemCase& rs,
                                                const GeneralizedVector& tau);

/// Irreducible character by the Weyl character formula, computed as the exact
/// quotient of alternants (leading-term elimination, zero remainder asserted).
LaurentCharacter weyl_character(const RootSystemCase& rs, const GeneralizedVector& la);

/// Dimension by the Weyl product formula.
Int weyl_dimension(const RootSystemCase& rs, const GeneralizedVector& la);

/// Character of the irreducible O(d)-module attached to a diagram with
/// lambda'_1 + lambda'_2 <= d. For odd d the global eps power |lambda| is
/// attached when with_eps is set.
LaurentCharacter o_character(int d, const Partition& la, bool with_eps);

/// Character of the irreducible Sp(d)-module, l(lambda) <= d/2, d even.
LaurentCharacter sp_group_character(int d, const Partition& la);

/// Dimension of the irreducible O(d)-module of a diagram.
Int o_dimension(int d, const Partition& la);

} // namespace superchar
