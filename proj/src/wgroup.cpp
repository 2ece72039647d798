#include "superchar/wgroup.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace superchar {

namespace {

void check_pre(const Partition& la, int d, PairKind pair) {
    Partition conj = la.conjugate();
    if (pair == PairKind::OSp) {
        if (conj.row(0) + conj.row(1) > d)
            throw std::invalid_argument("OSp requires lambda'_1 + lambda'_2 <= d");
    } else {
        if (d % 2 != 0) throw std::invalid_argument("SpO requires d even");
        if (la.length() > d / 2) throw std::invalid_argument("SpO requires l(lambda) <= d/2");
    }
}

} // namespace

std::vector<long long> enright_mu_twice(const Partition& la, int d, int m, PairKind pair) {
    std::vector<long long> mu(m);
    for (int i = 1; i <= m; ++i) {
        long long rho_i = pair == PairKind::OSp ? -i : -(i - 1);
        mu[i - 1] = 2LL * la.row(i - 1) + d + 2 * rho_i;
    }
    return mu;
}

SignGroupSpec closed_index_set(const Partition& la, int d, int m, PairKind pair) {
    check_pre(la, d, pair);
    const auto mu = enright_mu_twice(la, d, m, pair);
    const bool type_c = pair == PairKind::OSp;

    std::vector<bool> excluded(m, false);
    bool has_zero = false;
    for (int a = 0; a < m; ++a) {
        if (mu[a] == 0) {
            has_zero = true;
            if (type_c) excluded[a] = true;  // beta = 2 eps_a pairs to zero
        }
        for (int b = a + 1; b < m; ++b)
            if (mu[a] + mu[b] == 0) excluded[a] = excluded[b] = true;
    }

    const bool longs_allowed = type_c && d % 2 == 0 && !has_zero;
    std::vector<int> I;
    bool full = false;
    for (int i = 0; i < m; ++i) {
        if (excluded[i]) continue;
        bool in = false;
        for (int j = 0; j < m; ++j)
            if (j != i && !excluded[j] && mu[i] + mu[j] <= -2) { in = true; break; }
        if (longs_allowed && mu[i] <= -2) { in = true; full = true; }
        if (in) I.push_back(i + 1);
    }
    return SignGroupSpec{pair, d, m, la, std::move(I), full};
}

SignGroupSpec bruteforce_wlambda(const Partition& la, int d, int m, PairKind pair) {
    check_pre(la, d, pair);
    const auto mu = enright_mu_twice(la, d, m, pair);
    const bool type_c = pair == PairKind::OSp;

    // All roots beta of the ambient system (doubled coefficient vectors are
    // overkill here; roots are +-eps_a +- eps_b and, for C, +-2 eps_a).
    // Zero-pairing test (mu|beta) = 0 and orthogonality (alpha|beta) = 0 only
    // need the index pattern, handled directly below.
    struct Root {
        int a, b;   // -1 for absent second index
        int sa, sb; // signs
    };
    std::vector<Root> all;
    for (int a = 0; a < m; ++a) {
        for (int b = a + 1; b < m; ++b)
            for (int sa : {1, -1})
                for (int sb : {1, -1}) all.push_back({a, b, sa, sb});
        if (type_c) {
            all.push_back({a, -1, 2, 0});
            all.push_back({a, -1, -2, 0});
        }
    }
    auto pairing = [&](const Root& r) {
        long long v = static_cast<long long>(r.sa) * mu[r.a];
        if (r.b >= 0) v += static_cast<long long>(r.sb) * mu[r.b];
        return v;  // doubled
    };
    std::vector<Root> zero_roots;
    for (const auto& r : all)
        if (pairing(r) == 0) zero_roots.push_back(r);
    bool long_zero = false;
    for (const auto& r : zero_roots)
        if (r.b < 0) long_zero = true;

    auto orthogonal = [&](int i, int j, const Root& beta) {
        // alpha = -eps_i - eps_j (j = -1 for alpha = -2 eps_i)
        long long dot = 0;
        if (beta.a == i) dot += -1LL * beta.sa * (j < 0 ? 2 : 1);
        if (beta.b == i) dot += -1LL * beta.sb * (j < 0 ? 2 : 1);
        if (j >= 0) {
            if (beta.a == j) dot += -beta.sa;
            if (beta.b == j) dot += -beta.sb;
        }
        return dot == 0;
    };

    // Qualifying generators alpha in Delta(u).
    std::vector<std::pair<int, int>> short_pairs;  // (i, j), i < j
    std::vector<int> long_idx;
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            long long v = -(mu[i] + mu[j]);  // 2 <mu, alpha-check> doubled
            if (v < 2 || v % 2 != 0) continue;  // condition (i): in IN
            bool ok = true;
            for (const auto& beta : zero_roots)
                if (!orthogonal(i, j, beta)) { ok = false; break; }
            if (ok) short_pairs.emplace_back(i, j);
        }
        if (type_c && !long_zero) {
            // alpha = -2 eps_i, <mu, alpha-check> = -mu_i (must be a positive integer)
            long long v = -mu[i];
            if (v >= 2 && v % 2 == 0) {
                bool ok = true;
                for (const auto& beta : zero_roots)
                    if (!orthogonal(i, -1, beta)) { ok = false; break; }
                if (ok) long_idx.push_back(i);
            }
        }
    }

    std::set<int> support;
    for (auto [i, j] : short_pairs) {
        support.insert(i);
        support.insert(j);
    }
    for (int i : long_idx) support.insert(i);

    // Recognize the closed group: every pair inside the support must be a
    // qualifying generator, otherwise the group is not a (even-)sign group
    // on the support.
    std::set<std::pair<int, int>> pairset(short_pairs.begin(), short_pairs.end());
    std::vector<int> sup(support.begin(), support.end());
    for (size_t a = 0; a < sup.size(); ++a)
        for (size_t b = a + 1; b < sup.size(); ++b)
            if (!pairset.count({sup[a], sup[b]}))
                throw std::logic_error("bruteforce_wlambda: generated group is not a sign group");
    std::vector<int> I;
    for (int i : sup) I.push_back(i + 1);
    return SignGroupSpec{pair, d, m, la, std::move(I), !long_idx.empty()};
}

int coset_sign(const SignGroupSpec& spec, const std::vector<int>& flips) {
    const auto mu = enright_mu_twice(spec.la, spec.d, spec.m, spec.pair);
    // Values of mu along I with flipped entries negated; the sign of the
    // permutation sorting them descending, times (-1)^{#flips}.
    std::vector<long long> vals;
    vals.reserve(spec.I.size());
    for (int idx : spec.I) {
        long long v = mu[idx - 1];
        if (std::binary_search(flips.begin(), flips.end(), idx)) v = -v;
        vals.push_back(v);
    }
    int inversions = 0;
    for (size_t a = 0; a < vals.size(); ++a)
        for (size_t b = a + 1; b < vals.size(); ++b)
            if (vals[a] < vals[b]) ++inversions;
    int s = inversions % 2 == 0 ? 1 : -1;
    if (flips.size() % 2 != 0) s = -s;
    return s;
}

std::vector<CosetElement> coset_elements(const SignGroupSpec& spec) {
    std::vector<CosetElement> out;
    const size_t t = spec.I.size();
    if (t > 30) throw std::invalid_argument("coset_elements: index set too large");
    for (unsigned long mask = 0; mask < (1ul << t); ++mask) {
        int bits = __builtin_popcountl(mask);
        if (!spec.full && bits % 2 != 0) continue;
        std::vector<int> flips;
        for (size_t i = 0; i < t; ++i)
            if (mask & (1ul << i)) flips.push_back(spec.I[i]);
        out.push_back(CosetElement{flips, coset_sign(spec, flips)});
    }
    std::sort(out.begin(), out.end(), [](const CosetElement& a, const CosetElement& b) {
        if (a.flips.size() != b.flips.size()) return a.flips.size() < b.flips.size();
        return a.flips < b.flips;
    });
    return out;
}

std::pair<Partition, int> lambda_w(const Partition& la, int d, int k,
                                   const std::vector<int>& flips, PairKind pair) {
    auto mu = enright_mu_twice(la, d, k, pair);
    SignGroupSpec spec = closed_index_set(la, d, k, pair);
    for (int f : flips)
        if (!std::binary_search(spec.I.begin(), spec.I.end(), f))
            throw std::invalid_argument("lambda_w: flip outside the index set");
    const int sign = coset_sign(spec, flips);
    for (int f : flips) mu[f - 1] = -mu[f - 1];
    std::sort(mu.begin(), mu.end(), std::greater<long long>());
    std::vector<int> rows(k);
    for (int i = 1; i <= k; ++i) {
        long long rho_i = pair == PairKind::OSp ? -i : -(i - 1);
        long long twice_row = mu[i - 1] - d - 2 * rho_i;
        if (twice_row % 2 != 0 || twice_row < 0)
            throw std::logic_error("lambda_w: result is not a partition");
        rows[i - 1] = static_cast<int>(twice_row / 2);
    }
    for (int i = 0; i + 1 < k; ++i)
        if (rows[i] < rows[i + 1]) throw std::logic_error("lambda_w: result is not a partition");
    return {Partition(rows), sign};
}

} // namespace superchar
