#pragma once

#include "superchar/schur.hpp"
#include "superchar/series.hpp"
#include "superchar/wgroup.hpp"

namespace superchar {

/// Series shape used for super characters of a pair: m even and n odd graded
/// variables, no classical alphabet. The even alphabet prints as y for the
/// spo side and x for the osp side.
SeriesShape super_shape(PairKind pair, int m, int n, int cap);

/// Shape for the classical (n = 0) unitary characters.
SeriesShape classical_shape(PairKind pair, int m, int cap);

/// Finite Enright sum at rank m: signed Schur expansion over the cosets,
/// identity coset contributing lambda itself with +1.
SchurExpansion enright_schur_sum(const Partition& la, int d, int m, PairKind pair);

/// A truncated character together with its symbolic prefactor
/// (y_1...y_m)^{d/2} (z_1...z_n)^{-d/2} which is kept out of the series.
struct CharacterResult {
    PairKind pair = PairKind::OSp;
    int d = 0;
    int rank_used = 0;     // rank at which cosets were enumerated (0 = rank m)
    bool combined = false; // true when the series covers the lambda/lambda-bar pair
    PowerSeries series;
};

/// ch V^{lambda + d/2} for sp(2m) (pair OSp) or so(2m) (pair SpO): Enright
/// sum divided by the pair's quadratic denominator product, truncated.
CharacterResult classical_unitary_character(const Partition& la, int d, int m, PairKind pair,
                                            int cap);

/// Truncation of HS^lambda (sp or so flavor) to total degree <= L: signed
/// partition list (hook-filtered, sizes <= L) plus its hook-Schur series.
struct HsSeries {
    SchurExpansion parts;
    PowerSeries series;
    int rank_used = 0;
};

/// rank < 0 selects the smallest admissible rank from the degree bound
/// (2k + |la| - 2s - 1, 2k + |la| - d, or 2k + |la| - d - 1 per case).
HsSeries hs_series(const Partition& la, int d, int m, int n, int L, PairKind pair,
                   int rank = -1);

/// Full spo(2m|2n) character series. Even d with lambda != lambda-bar yields
/// the combined two-module character and sets the flag.
CharacterResult spo_character(const Partition& la, int d, int m, int n, int L);

/// Full osp(2m|2n) character series (d even).
CharacterResult osp_character(const Partition& la, int d, int m, int n, int L);

/// HS for the trivial weight by direct tuple enumeration (shapes mu_I resp.
/// nu_J with sign (-1)^{l + sum i_j}).
HsSeries trivial_hs(PairKind pair, int d, int m, int n, int L);

/// Character of the O(d)- or Sp(d)-invariants: sum of hook Schur polynomials
/// over even-row (resp. even-column) diagrams with l <= d in the hook.
enum class InvariantGroup { O, Sp };
PowerSeries invariants_character(InvariantGroup g, int d, int m, int n, int L);

/// The shared product factor prod (1 + y_i z_l) / (denominators) of the
/// pair, expanded over sh.
PowerSeries pair_product_factor(PairKind pair, const SeriesShape& sh);

} // namespace superchar
