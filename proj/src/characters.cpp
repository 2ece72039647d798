#include "superchar/characters.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace superchar {

SeriesShape super_shape(PairKind pair, int m, int n, int cap) {
    SeriesShape sh;
    sh.p = 0;
    sh.m = m;
    sh.n = n;
    sh.cap = cap;
    sh.yname = pair == PairKind::OSp ? "y" : "x";
    sh.zname = "z";
    return sh;
}

SeriesShape classical_shape(PairKind pair, int m, int cap) {
    SeriesShape sh = super_shape(pair, m, 0, cap);
    return sh;
}

SchurExpansion enright_schur_sum(const Partition& la, int d, int m, PairKind pair) {
    SignGroupSpec spec = closed_index_set(la, d, m, pair);
    SchurExpansion out;
    out.degree_cap = 0;
    for (const auto& w : coset_elements(spec)) {
        auto [shape, sign] = lambda_w(la, d, m, w.flips, pair);
        out.add(shape, sign);
    }
    return out;
}

namespace {

ExpVec pair_exp(const SeriesShape& sh, int slot_a, int slot_b) {
    ExpVec e(sh.width(), 0);
    e[slot_a] += 1;
    e[slot_b] += 1;
    return e;
}

} // namespace

PowerSeries pair_product_factor(PairKind pair, const SeriesShape& sh) {
    PowerSeries f = PowerSeries::one(sh);
    const int ybase = 1 + sh.p, zbase = 1 + sh.p + sh.m;
    for (int i = 0; i < sh.m; ++i)
        for (int l = 0; l < sh.n; ++l)
            f = f * one_plus(sh, pair_exp(sh, ybase + i, zbase + l));
    if (pair == PairKind::OSp) {
        for (int i = 0; i < sh.m; ++i)
            for (int j = i; j < sh.m; ++j)
                f = f * geometric_expand(sh, pair_exp(sh, ybase + i, ybase + j));
        for (int l = 0; l < sh.n; ++l)
            for (int k = l + 1; k < sh.n; ++k)
                f = f * geometric_expand(sh, pair_exp(sh, zbase + l, zbase + k));
    } else {
        for (int i = 0; i < sh.m; ++i)
            for (int j = i + 1; j < sh.m; ++j)
                f = f * geometric_expand(sh, pair_exp(sh, ybase + i, ybase + j));
        for (int l = 0; l < sh.n; ++l)
            for (int k = l; k < sh.n; ++k)
                f = f * geometric_expand(sh, pair_exp(sh, zbase + l, zbase + k));
    }
    return f;
}

CharacterResult classical_unitary_character(const Partition& la, int d, int m, PairKind pair,
                                            int cap) {
    SeriesShape sh = classical_shape(pair, m, cap);
    SchurExpansion sum = enright_schur_sum(la, d, m, pair);
    PowerSeries num(sh);
    for (auto& [p, c] : sum.terms) {
        PowerSeries s = schur_expand(p, sh, 'y');
        for (auto& t : s.terms()) num.add_term(t.e, t.c * c);
    }
    num.normalize();
    CharacterResult r;
    r.pair = pair;
    r.d = d;
    r.rank_used = m;
    r.series = num * pair_product_factor(pair, sh);
    return r;
}

HsSeries hs_series(const Partition& la, int d, int m, int n, int L, PairKind pair, int rank) {
    const int s = la.length();
    const int sz = la.size();
    if (rank < 0) {
        // smallest k with k > d and the congruence bound l(k) > L
        int k = d + 1;
        auto bound = [&](int kk) {
            if (pair == PairKind::SpO) return 2 * kk + sz - d - 1;
            return 2 * s > d ? 2 * kk + sz - 2 * s - 1 : 2 * kk + sz - d;
        };
        while (bound(k) <= L) ++k;
        rank = k - 1;
    }
    SignGroupSpec spec = closed_index_set(la, d, rank, pair);
    HsSeries out;
    out.rank_used = rank;
    out.parts.degree_cap = L;
    SeriesShape sh = super_shape(pair, m, n, L);
    PowerSeries acc(sh);
    for (const auto& w : coset_elements(spec)) {
        auto [shape, sign] = lambda_w(la, d, rank, w.flips, pair);
        if (shape.size() > L || !shape.in_hook(m, n)) continue;
        out.parts.add(shape, sign);
        PowerSeries hs = hook_schur_expand(shape, sh);
        for (auto& t : hs.terms()) acc.add_term(t.e, t.c * sign);
    }
    acc.normalize();
    out.series = std::move(acc);
    return out;
}

namespace {

void assemble_character(CharacterResult& r, const PowerSeries& hs_sum, const SeriesShape& sh) {
    r.series = hs_sum * pair_product_factor(r.pair, sh);
    for (auto& t : r.series.terms())
        if (t.c < 0)
            throw std::logic_error("character series has a negative coefficient");
}

} // namespace

CharacterResult spo_character(const Partition& la, int d, int m, int n, int L) {
    Partition conj = la.conjugate();
    if (conj.row(0) + conj.row(1) > d)
        throw std::invalid_argument("spo_character: lambda'_1 + lambda'_2 > d");
    if (!la.in_hook(m, n)) throw std::invalid_argument("spo_character: not in (m|n)-hook");
    SeriesShape sh = super_shape(PairKind::OSp, m, n, L);
    CharacterResult r;
    r.pair = PairKind::OSp;
    r.d = d;
    if (d % 2 == 1) {
        HsSeries hs = hs_series(la, d, m, n, L, PairKind::OSp);
        r.rank_used = hs.rank_used;
        r.combined = false;
        assemble_character(r, hs.series, sh);
    } else {
        // Even d determines only the sum over the pair {lambda, lambda-bar},
        // except when the partner coincides with lambda or lies outside the
        // hook (no second module in the decomposition).
        Partition lb = la.bar(d);
        HsSeries hs = hs_series(la, d, m, n, L, PairKind::OSp);
        r.rank_used = hs.rank_used;
        PowerSeries sum = hs.series;
        if (lb != la && lb.in_hook(m, n)) {
            HsSeries hsb = hs_series(lb, d, m, n, L, PairKind::OSp);
            sum += hsb.series;
            r.combined = true;
            r.rank_used = std::max(r.rank_used, hsb.rank_used);
        }
        assemble_character(r, sum, sh);
    }
    return r;
}

CharacterResult osp_character(const Partition& la, int d, int m, int n, int L) {
    if (d % 2 != 0) throw std::invalid_argument("osp_character: d must be even");
    if (la.length() > d / 2) throw std::invalid_argument("osp_character: l(lambda) > d/2");
    if (!la.in_hook(m, n)) throw std::invalid_argument("osp_character: not in (m|n)-hook");
    SeriesShape sh = super_shape(PairKind::SpO, m, n, L);
    CharacterResult r;
    r.pair = PairKind::SpO;
    r.d = d;
    HsSeries hs = hs_series(la, d, m, n, L, PairKind::SpO);
    r.rank_used = hs.rank_used;
    r.combined = false;
    assemble_character(r, hs.series, sh);
    return r;
}

namespace {

// Shapes (aux66) and (aux7): first l entries i_{l+1-j} - d + j (sp side) or
// i_{l+1-j} - d - 2 + j (so side), then the staircase of runs.
Partition tuple_shape(const std::vector<int>& tup, int d, PairKind pair) {
    const int l = static_cast<int>(tup.size());
    if (l == 0) return Partition();
    const int shift = pair == PairKind::OSp ? -d : -d - 2;
    std::vector<int> rows;
    rows.reserve(tup.back());
    for (int j = 1; j <= l; ++j) rows.push_back(tup[l - j] + shift + j);
    int prev = 0;
    for (int j = 0; j < l; ++j) {
        int run = tup[j] - prev - 1;
        for (int t = 0; t < run; ++t) rows.push_back(l - j);
        prev = tup[j];
    }
    std::vector<int> sorted = rows;
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
    if (sorted != rows) throw std::logic_error("tuple_shape: rows out of order");
    return Partition(std::move(rows));
}

int tuple_sign(const std::vector<int>& tup) {
    long long s = tup.size();
    for (int v : tup) s += v;
    return s % 2 == 0 ? 1 : -1;
}

} // namespace

HsSeries trivial_hs(PairKind pair, int d, int m, int n, int L) {
    const int min_entry = pair == PairKind::OSp ? d : d + 2;
    // |shape| >= 2*max(I) - d (sp side) resp. 2*max(J) - d - 2 (so side);
    // asserted below, so the entry range is complete for sizes <= L.
    const int max_entry = pair == PairKind::OSp ? (L + d) / 2 : (L + d + 2) / 2;
    HsSeries out;
    out.parts.degree_cap = L;
    SeriesShape sh = super_shape(pair, m, n, L);
    PowerSeries acc(sh);

    std::vector<int> tup;
    std::function<void(int)> rec = [&](int next_min) {
        const bool parity_ok = pair == PairKind::SpO || tup.size() % 2 == 0;
        if (parity_ok) {
            Partition shape = tuple_shape(tup, d, pair);
            if (!tup.empty()) {
                int mx = tup.back();
                int lb = pair == PairKind::OSp ? 2 * mx - d : 2 * mx - d - 2;
                if (shape.size() < lb)
                    throw std::logic_error("trivial_hs: size bound violated");
            }
            if (shape.size() <= L && shape.in_hook(m, n)) {
                int sign = tuple_sign(tup);
                out.parts.add(shape, sign);
                PowerSeries hs = hook_schur_expand(shape, sh);
                for (auto& t : hs.terms()) acc.add_term(t.e, t.c * sign);
            }
        }
        for (int v = next_min; v <= max_entry; ++v) {
            tup.push_back(v);
            rec(v + 1);
            tup.pop_back();
        }
    };
    rec(min_entry);
    acc.normalize();
    out.series = std::move(acc);
    out.rank_used = max_entry;
    return out;
}

PowerSeries invariants_character(InvariantGroup g, int d, int m, int n, int L) {
    PairKind pair = g == InvariantGroup::O ? PairKind::OSp : PairKind::SpO;
    SeriesShape sh = super_shape(pair, m, n, L);
    PartitionConstraints c;
    c.max_length = d;
    c.hook = std::make_pair(m, n);
    if (g == InvariantGroup::O) c.even_rows = true;
    else c.even_cols = true;
    PowerSeries acc(sh);
    for (const auto& la : enumerate_partitions(L, c)) {
        PowerSeries hs = hook_schur_expand(la, sh);
        for (auto& t : hs.terms()) acc.add_term(t.e, t.c);
    }
    acc.normalize();
    return acc;
}

} // namespace superchar
