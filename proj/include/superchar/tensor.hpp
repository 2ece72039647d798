#pragma once

#include <map>

#include "superchar/partition.hpp"
#include "superchar/weyl.hpp"
#include "superchar/wgroup.hpp"

namespace superchar {

/// Decomposition of a W-invariant Laurent polynomial into irreducible
/// characters by repeated subtraction at the lex-maximal dominant term.
/// Keys are dominant weights in doubled coordinates.
std::map<std::vector<long long>, Int> peel_decompose(const RootSystemCase& rs,
                                                     LaurentCharacter poly);

/// Tensor product of two finite-dimensional modules by character peeling.
std::map<std::vector<long long>, Int> tensor_decompose_classical(const RootSystemCase& rs,
                                                                 const GeneralizedVector& w1,
                                                                 const GeneralizedVector& w2);

/// Multiplicity table of a super tensor product, windowed at rank k: the
/// table lists every lambda with lambda_1 <= k passing the hook and column
/// conditions of the pair.
struct TensorTable {
    std::map<Partition, Int> coeff;
    int rank_used = 0;
    SuperKind kind = SuperKind::spo;
};

/// Seesaw weight of a diagram on the so(2k)/sp(2k) side, doubled
/// coordinates: entry j is d - 2 lambda'_{k+1-j}.
GeneralizedVector seesaw_weight(const Partition& la, int d, int k, SuperKind kind);

/// Tensor product coefficients of V^{mu+d/2} x V^{gamma+r/2} for the pair,
/// computed on the classical side of the exterior-algebra seesaw. rank < 0
/// selects max(mu_1, gamma_1, 1).
TensorTable super_tensor_coeffs(const Partition& mu, const Partition& ga, int d, int r, int m,
                                int n, SuperKind kind, int rank = -1);

struct StabilityReport {
    bool exact = true;
    Partition first_mismatch;
};

/// Tables at ranks k and k+1 agree on the common window lambda_1 <= k.
StabilityReport verify_stability(const Partition& mu, const Partition& ga, int d, int r, int m,
                                 int n, SuperKind kind, int k);

struct DimensionReport {
    Int total = 0;
    Int expected = 0;
    bool ok() const { return total == expected; }
};

enum class ExteriorBranch { O, Sp };

/// Sum over the exterior-algebra dual pair of products of dimensions,
/// compared against 2^{dk}.
DimensionReport exterior_dimension_check(int d, int k, ExteriorBranch branch);

} // namespace superchar
