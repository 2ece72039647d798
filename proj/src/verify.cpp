#include "superchar/verify.hpp"

#include <sstream>
#include <stdexcept>

namespace superchar {

std::string identity_name(IdentityId id) {
    switch (id) {
        case IdentityId::glgl: return "glgl";
        case IdentityId::evenchar1: return "evenchar1";
        case IdentityId::oddchar2: return "oddchar2";
        case IdentityId::spchar1: return "spchar1";
        case IdentityId::evenchar3: return "evenchar3";
        case IdentityId::oddchar3: return "oddchar3";
        case IdentityId::spsuper: return "spsuper";
        case IdentityId::invO: return "invO";
        case IdentityId::invSp: return "invSp";
    }
    return "?";
}

std::optional<IdentityId> identity_from_name(const std::string& s) {
    for (IdentityId id : {IdentityId::glgl, IdentityId::evenchar1, IdentityId::oddchar2,
                          IdentityId::spchar1, IdentityId::evenchar3, IdentityId::oddchar3,
                          IdentityId::spsuper, IdentityId::invO, IdentityId::invSp})
        if (identity_name(id) == s) return id;
    return std::nullopt;
}

SeriesShape identity_shape(IdentityId id, int d, int m, int n, int L) {
    SeriesShape sh;
    sh.m = m;
    sh.n = n;
    sh.cap = L;
    switch (id) {
        case IdentityId::glgl:
            sh.p = d;
            break;
        case IdentityId::evenchar1:
            sh.p = d / 2;
            sh.n = 0;
            break;
        case IdentityId::oddchar2:
            sh.p = (d - 1) / 2;
            sh.n = 0;
            sh.has_eps = true;
            break;
        case IdentityId::spchar1:
            sh.p = d / 2;
            sh.n = 0;
            sh.xname = "y";
            sh.yname = "x";
            break;
        case IdentityId::evenchar3:
            sh.p = d / 2;
            break;
        case IdentityId::oddchar3:
            sh.p = (d - 1) / 2;
            sh.has_eps = true;
            break;
        case IdentityId::spsuper:
            sh.p = d / 2;
            sh.xname = "y";
            sh.yname = "x";
            break;
        case IdentityId::invO:
            sh.p = 0;
            break;
        case IdentityId::invSp:
            sh.p = 0;
            sh.yname = "x";
            break;
    }
    return sh;
}

namespace {

void check_params(IdentityId id, int d, int m, int n) {
    auto need_even = [&](bool e) {
        if (e && d % 2 != 0) throw std::invalid_argument("identity requires even d");
        if (!e && d % 2 != 1) throw std::invalid_argument("identity requires odd d");
    };
    switch (id) {
        case IdentityId::glgl: break;
        case IdentityId::evenchar1: need_even(true); break;
        case IdentityId::oddchar2: need_even(false); break;
        case IdentityId::spchar1: need_even(true); break;
        case IdentityId::evenchar3: need_even(true); break;
        case IdentityId::oddchar3: need_even(false); break;
        case IdentityId::spsuper: need_even(true); break;
        case IdentityId::invO: need_even(false); break;
        case IdentityId::invSp: need_even(true); break;
    }
    if (d < 1 || m < 0 || n < 0) throw std::invalid_argument("bad identity parameters");
}

// Exponent helpers over an identity shape.
ExpVec mono(const SeriesShape& sh, std::initializer_list<std::pair<int, int>> slots, int eps = 0) {
    ExpVec e(sh.width(), 0);
    e[0] = sh.has_eps ? (eps & 1) : 0;
    for (auto [slot, exp] : slots) e[slot] += exp;
    return e;
}

} // namespace

PowerSeries duality_lhs(IdentityId id, int d, int m, int n, int L) {
    check_params(id, d, m, n);
    SeriesShape sh = identity_shape(id, d, m, n, L);
    const int xb = 1, yb = 1 + sh.p, zb = 1 + sh.p + sh.m;
    PowerSeries f = PowerSeries::one(sh);
    switch (id) {
        case IdentityId::glgl:
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < m; ++j)
                    f = f * geometric_expand(sh, mono(sh, {{xb + i, 1}, {yb + j, 1}}));
            for (int i = 0; i < d; ++i)
                for (int l = 0; l < n; ++l)
                    f = f * one_plus(sh, mono(sh, {{xb + i, 1}, {zb + l, 1}}));
            break;
        case IdentityId::evenchar1:
            for (int i = 0; i < sh.p; ++i)
                for (int j = 0; j < m; ++j) {
                    f = f * geometric_expand(sh, mono(sh, {{xb + i, 1}, {yb + j, 1}}));
                    f = f * geometric_expand(sh, mono(sh, {{xb + i, -1}, {yb + j, 1}}));
                }
            break;
        case IdentityId::oddchar2:
            for (int j = 0; j < m; ++j) {
                for (int i = 0; i < sh.p; ++i) {
                    f = f * geometric_expand(sh, mono(sh, {{xb + i, 1}, {yb + j, 1}}, 1));
                    f = f * geometric_expand(sh, mono(sh, {{xb + i, -1}, {yb + j, 1}}, 1));
                }
                f = f * geometric_expand(sh, mono(sh, {{yb + j, 1}}, 1));
            }
            break;
        case IdentityId::spchar1:
            for (int i = 0; i < sh.p; ++i)
                for (int j = 0; j < m; ++j) {
                    f = f * geometric_expand(sh, mono(sh, {{xb + i, 1}, {yb + j, 1}}));
                    f = f * geometric_expand(sh, mono(sh, {{xb + i, -1}, {yb + j, 1}}));
                }
            break;
        case IdentityId::evenchar3:
            for (int i = 0; i < sh.p; ++i) {
                for (int j = 0; j < m; ++j) {
                    f = f * geometric_expand(sh, mono(sh, {{xb + i, 1}, {yb + j, 1}}));
                    f = f * geometric_expand(sh, mono(sh, {{xb + i, -1}, {yb + j, 1}}));
                }
                for (int l = 0; l < n; ++l) {
                    f = f * one_plus(sh, mono(sh, {{xb + i, 1}, {zb + l, 1}}));
                    f = f * one_plus(sh, mono(sh, {{xb + i, -1}, {zb + l, 1}}));
                }
            }
            break;
        case IdentityId::oddchar3:
            for (int i = 0; i < sh.p; ++i) {
                for (int j = 0; j < m; ++j) {
                    f = f * geometric_expand(sh, mono(sh, {{xb + i, 1}, {yb + j, 1}}, 1));
                    f = f * geometric_expand(sh, mono(sh, {{xb + i, -1}, {yb + j, 1}}, 1));
                }
                for (int l = 0; l < n; ++l) {
                    f = f * one_plus(sh, mono(sh, {{xb + i, 1}, {zb + l, 1}}, 1));
                    f = f * one_plus(sh, mono(sh, {{xb + i, -1}, {zb + l, 1}}, 1));
                }
            }
            for (int j = 0; j < m; ++j)
                f = f * geometric_expand(sh, mono(sh, {{yb + j, 1}}, 1));
            for (int l = 0; l < n; ++l)
                f = f * one_plus(sh, mono(sh, {{zb + l, 1}}, 1));
            break;
        case IdentityId::spsuper:
            for (int i = 0; i < sh.p; ++i) {
                for (int j = 0; j < m; ++j) {
                    f = f * geometric_expand(sh, mono(sh, {{xb + i, 1}, {yb + j, 1}}));
                    f = f * geometric_expand(sh, mono(sh, {{xb + i, -1}, {yb + j, 1}}));
                }
                for (int l = 0; l < n; ++l) {
                    f = f * one_plus(sh, mono(sh, {{xb + i, 1}, {zb + l, 1}}));
                    f = f * one_plus(sh, mono(sh, {{xb + i, -1}, {zb + l, 1}}));
                }
            }
            break;
        case IdentityId::invO:
            return invariants_character(InvariantGroup::O, d, m, n, L);
        case IdentityId::invSp:
            return invariants_character(InvariantGroup::Sp, d, m, n, L);
    }
    return f;
}

namespace {

// Signed Schur sum expanded in the graded y-group of the identity shape.
PowerSeries schur_sum_series(const SchurExpansion& sum, const SeriesShape& sh) {
    PowerSeries acc(sh);
    for (auto& [p, c] : sum.terms) {
        if (p.size() > sh.cap) continue;
        PowerSeries s = schur_expand(p, sh, 'y');
        for (auto& t : s.terms()) acc.add_term(t.e, t.c * c);
    }
    acc.normalize();
    return acc;
}

PowerSeries classical_denominator(PairKind pair, const SeriesShape& sh) {
    PowerSeries f = PowerSeries::one(sh);
    const int yb = 1 + sh.p;
    for (int i = 0; i < sh.m; ++i)
        for (int j = pair == PairKind::OSp ? i : i + 1; j < sh.m; ++j)
            f = f * geometric_expand(sh, mono(sh, {{yb + i, 1}, {yb + j, 1}}));
    return f;
}

} // namespace

PowerSeries duality_rhs(IdentityId id, int d, int m, int n, int L) {
    check_params(id, d, m, n);
    SeriesShape sh = identity_shape(id, d, m, n, L);
    PowerSeries acc(sh);

    switch (id) {
        case IdentityId::glgl: {
            PartitionConstraints c;
            c.max_length = d;
            c.hook = std::make_pair(m, n);
            for (const auto& la : enumerate_partitions(L, c)) {
                PowerSeries xs = schur_expand(la, sh, 'x');
                if (xs.is_zero()) continue;
                acc += xs * hook_schur_expand(la, sh);
            }
            return acc;
        }
        case IdentityId::evenchar1:
        case IdentityId::oddchar2: {
            PartitionConstraints c;
            c.col_sum_bound_d = d;
            c.max_length = m;
            for (const auto& la : enumerate_partitions(L, c)) {
                LaurentCharacter chi = o_character(d, la, sh.has_eps);
                PowerSeries xs = chi.to_series(sh);
                acc += xs * schur_sum_series(enright_schur_sum(la, d, m, PairKind::OSp), sh);
            }
            return acc * classical_denominator(PairKind::OSp, sh);
        }
        case IdentityId::spchar1: {
            PartitionConstraints c;
            c.max_length = std::min(d / 2, m);
            for (const auto& la : enumerate_partitions(L, c)) {
                LaurentCharacter chi = sp_group_character(d, la);
                PowerSeries xs = chi.to_series(sh);
                acc += xs * schur_sum_series(enright_schur_sum(la, d, m, PairKind::SpO), sh);
            }
            return acc * classical_denominator(PairKind::SpO, sh);
        }
        case IdentityId::evenchar3:
        case IdentityId::oddchar3: {
            PartitionConstraints c;
            c.col_sum_bound_d = d;
            c.hook = std::make_pair(m, n);
            for (const auto& la : enumerate_partitions(L, c)) {
                LaurentCharacter chi = o_character(d, la, sh.has_eps);
                PowerSeries xs = chi.to_series(sh);
                acc += xs * hs_series(la, d, m, n, L, PairKind::OSp).series;
            }
            return acc * pair_product_factor(PairKind::OSp, sh);
        }
        case IdentityId::spsuper: {
            PartitionConstraints c;
            c.max_length = d / 2;
            c.hook = std::make_pair(m, n);
            for (const auto& la : enumerate_partitions(L, c)) {
                LaurentCharacter chi = sp_group_character(d, la);
                PowerSeries xs = chi.to_series(sh);
                acc += xs * hs_series(la, d, m, n, L, PairKind::SpO).series;
            }
            return acc * pair_product_factor(PairKind::SpO, sh);
        }
        case IdentityId::invO:
            return trivial_hs(PairKind::OSp, d, m, n, L).series *
                   pair_product_factor(PairKind::OSp, sh);
        case IdentityId::invSp:
            return trivial_hs(PairKind::SpO, d, m, n, L).series *
                   pair_product_factor(PairKind::SpO, sh);
    }
    return acc;
}

namespace {

std::string format_monomial(const SeriesShape& sh, const ExpVec& e) {
    std::ostringstream os;
    bool any = false;
    if (sh.has_eps && e[0]) { os << "eps"; any = true; }
    auto put = [&](const std::string& nm, int base, int cnt) {
        for (int i = 0; i < cnt; ++i)
            if (e[base + i] != 0) {
                if (any) os << '*';
                any = true;
                os << nm;
                if (cnt > 1) os << (i + 1);
                if (e[base + i] != 1) os << '^' << e[base + i];
            }
    };
    put(sh.xname, 1, sh.p);
    put(sh.yname, 1 + sh.p, sh.m);
    put(sh.zname, 1 + sh.p + sh.m, sh.n);
    if (!any) os << "1";
    return os.str();
}

} // namespace

VerificationReport verify_identity(IdentityId id, int d, int m, int n, int L) {
    PowerSeries lhs = duality_lhs(id, d, m, n, L);
    PowerSeries rhs = duality_rhs(id, d, m, n, L);
    VerificationReport rep;
    rep.identity = identity_name(id);
    rep.d = d;
    rep.m = m;
    rep.n = n;
    rep.L = L;
    rep.terms_checked = std::max(lhs.term_count(), rhs.term_count());
    auto mm = PowerSeries::first_mismatch(lhs, rhs);
    if (mm) {
        rep.exact = false;
        rep.mismatch_monomial = format_monomial(lhs.shape(), mm->e);
        rep.lhs_coeff = mm->lhs.get_str();
        rep.rhs_coeff = mm->rhs.get_str();
    }
    return rep;
}

VerificationReport verify_truncation_stability(const Partition& la, int d, int m, int n, int L,
                                               PairKind pair, int delta) {
    HsSeries base = hs_series(la, d, m, n, L, pair);
    HsSeries moved = hs_series(la, d, m, n, L, pair, base.rank_used + delta);
    VerificationReport rep;
    rep.identity = pair == PairKind::OSp ? "truncation-sp" : "truncation-so";
    rep.d = d;
    rep.m = m;
    rep.n = n;
    rep.L = L;
    rep.terms_checked = base.series.term_count();
    auto mm = PowerSeries::first_mismatch(base.series, moved.series);
    if (mm) {
        rep.exact = false;
        rep.mismatch_monomial = format_monomial(base.series.shape(), mm->e);
        rep.lhs_coeff = mm->lhs.get_str();
        rep.rhs_coeff = mm->rhs.get_str();
    }
    return rep;
}

} // namespace superchar
