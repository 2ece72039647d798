#pragma once

#include <map>

#include "superchar/partition.hpp"
#include "superchar/series.hpp"

namespace superchar {

/// Finite signed integer combination of partitions (Schur or hook-Schur
/// expansion of a character), truncated by partition size.
struct SchurExpansion {
    std::map<Partition, Int> terms;
    int degree_cap = 0;

    void add(const Partition& p, const Int& c);
    SchurExpansion omega() const;  // s_lambda -> s_lambda', coefficients kept
    bool operator==(const SchurExpansion&) const = default;
    std::string to_string() const;
};

/// Weight multiset of semistandard tableaux of shape lambda in k letters.
std::map<std::vector<int>, Int> schur_monomials(const Partition& la, int k);

/// Weight multiset of skew semistandard tableaux of shape lambda/mu.
std::map<std::vector<int>, Int> skew_schur_monomials(const Partition& la, const Partition& mu,
                                                     int k);

/// Weight multiset of the hook Schur polynomial HS_lambda(y_1..y_m; z_1..z_n)
/// computed as sum over mu subset lambda of s_mu(y) s_{lambda'/mu'}(z).
std::map<std::pair<std::vector<int>, std::vector<int>>, Int>
hook_schur_monomials(const Partition& la, int m, int n);

/// Same polynomial from the (m|n)-semistandard tableau generating function;
/// kept as the independent second path for cross-checking.
std::map<std::pair<std::vector<int>, std::vector<int>>, Int>
hook_schur_monomials_by_tableaux(const Partition& la, int m, int n);

/// Embed s_lambda(y) into a series over `sh` (group selected by `group`:
/// 'x', 'y' or 'z'). Zero series when lambda has too many rows.
PowerSeries schur_expand(const Partition& la, const SeriesShape& sh, char group = 'y');

PowerSeries skew_schur_expand(const Partition& la, const Partition& mu, const SeriesShape& sh,
                              char group = 'y');

/// HS_lambda(y; z) as a series over `sh` (y-group and z-group).
PowerSeries hook_schur_expand(const Partition& la, const SeriesShape& sh);

/// Signed sum of hook Schur polynomials, truncated at sh.cap.
PowerSeries hook_schur_expand(const SchurExpansion& e, const SeriesShape& sh);

} // namespace superchar
