#pragma once

#include "superchar/partition.hpp"

namespace superchar {

/// The two dual pairs driving the unitarizable modules:
/// OSp = (O(d), spo(2m|2n)), whose Enright group lives in the Weyl group of
/// sp(2m) (type C, long roots present); SpO = (Sp(d), osp(2m|2n)), type D.
enum class PairKind { OSp, SpO };

/// Index set of the subgroup W_{lambda + d/2} together with its parity:
/// full sign changes versus even sign changes of the indices in I.
struct SignGroupSpec {
    PairKind pair = PairKind::OSp;
    int d = 0;
    int m = 0;
    Partition la;
    std::vector<int> I;  // 1-based indices, sorted
    bool full = false;   // full sign group (type-C long roots) vs even-only

    bool operator==(const SignGroupSpec&) const = default;
};

/// The weight mu = lambda + d*(1/2,...,1/2) + rho at rank m, doubled entries.
/// rho is the paper convention: (-1,...,-m) for the sp side and
/// (0,-1,...,-m+1) for the so side.
std::vector<long long> enright_mu_twice(const Partition& la, int d, int m, PairKind pair);

/// Index set from the value-pairing rule distilled from the explicit case
/// analysis: indices in cancelling value pairs (and, on the sp side, indices
/// of zero entries) are excluded, the rest participate when some partner
/// makes the pairing condition integral-positive. Runs in O(m^2).
SignGroupSpec closed_index_set(const Partition& la, int d, int m, PairKind pair);

/// Oracle: scan every root of the nilradical against conditions (i)-(iii),
/// close the generated reflection group, and recognize it as a sign or even
/// sign permutation group on an index set. Throws if the generated group is
/// not of that shape.
SignGroupSpec bruteforce_wlambda(const Partition& la, int d, int m, PairKind pair);

/// Coset representative: the subset of I whose signs get flipped, plus the
/// sign character of the resulting group element.
struct CosetElement {
    std::vector<int> flips;  // 1-based indices, sorted, subset of I
    int sign = 1;
};

/// All coset representatives for the spec: subsets of I (even-sized subsets
/// unless the parity is full), each with its sign. The identity comes first.
std::vector<CosetElement> coset_elements(const SignGroupSpec& spec);

/// Sign of the element flipping `flips`: the sign of the permutation sorting
/// the flipped I-subsequence times (-1)^{#flips}.
int coset_sign(const SignGroupSpec& spec, const std::vector<int>& flips);

/// Flip mu at the given rows, sort descending, subtract rho + d/2: the
/// partition Lambda_w. Throws if the result fails to be a partition.
std::pair<Partition, int> lambda_w(const Partition& la, int d, int k,
                                   const std::vector<int>& flips, PairKind pair);

} // namespace superchar
