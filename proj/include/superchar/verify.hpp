#pragma once

#include <optional>
#include <string>

#include "superchar/characters.hpp"

namespace superchar {

/// Character identities checkable at a truncation degree. Classical ones use
/// (d, m); super ones (d, m, n); the invariants identities (d, m, n).
enum class IdentityId {
    glgl,       // super Cauchy identity of the (gl(d), gl(m|n)) duality
    evenchar1,  // O(d) x sp(2m), d even
    oddchar2,   // O(d) x sp(2m), d odd, with eps
    spchar1,    // Sp(d) x so(2m), d even
    evenchar3,  // O(d) x spo(2m|2n), d even
    oddchar3,   // O(d) x spo(2m|2n), d odd, with eps
    spsuper,    // Sp(d) x osp(2m|2n), d even
    invO,       // O(d)-invariants vs the trivial-weight expansion, d odd
    invSp,      // Sp(d)-invariants vs the trivial-weight expansion, d even
};

std::string identity_name(IdentityId id);
std::optional<IdentityId> identity_from_name(const std::string& s);

struct VerificationReport {
    std::string identity;
    int d = 0, m = 0, n = 0, L = 0;
    bool exact = true;
    std::string mismatch_monomial;  // empty when exact
    std::string lhs_coeff, rhs_coeff;
    size_t terms_checked = 0;
};

/// Shape used by an identity: classical alphabet size and eps presence.
SeriesShape identity_shape(IdentityId id, int d, int m, int n, int L);

/// The displayed product side, expanded exactly to the truncation.
PowerSeries duality_lhs(IdentityId id, int d, int m, int n, int L);

/// The module-sum side, assembled from characters and Enright sums.
PowerSeries duality_rhs(IdentityId id, int d, int m, int n, int L);

VerificationReport verify_identity(IdentityId id, int d, int m, int n, int L);

/// Truncation stability of HS^lambda: ranks k and k + delta give identical
/// series to degree L (the mod-F_l congruence).
VerificationReport verify_truncation_stability(const Partition& la, int d, int m, int n, int L,
                                               PairKind pair, int delta = 2);

} // namespace superchar
