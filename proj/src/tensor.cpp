#include "superchar/tensor.hpp"

#include <algorithm>
#include <stdexcept>

namespace superchar {

std::map<std::vector<long long>, Int> peel_decompose(const RootSystemCase& rs,
                                                     LaurentCharacter poly) {
    std::map<std::vector<long long>, Int> table;
    long long guard = 0;
    while (!poly.terms.empty()) {
        if (++guard > 1000000) throw std::logic_error("peel_decompose: did not terminate");
        auto lead = std::prev(poly.terms.end());
        GeneralizedVector w(std::vector<long long>(lead->first));
        if (!rs.dominant(w))
            throw std::logic_error("peel_decompose: lex-maximal term not dominant");
        Int c = lead->second;
        if (c < 0) throw std::logic_error("peel_decompose: negative multiplicity");
        LaurentCharacter ch = weyl_character(rs, w);
        for (auto& [e, cc] : ch.terms) {
            auto it = poly.terms.find(e);
            Int delta = c * cc;
            if (it == poly.terms.end()) poly.terms.emplace(e, -delta);
            else {
                it->second -= delta;
                if (it->second == 0) poly.terms.erase(it);
            }
        }
        std::erase_if(poly.terms, [](const auto& kv) { return kv.second == 0; });
        table[w.twice] += c;
    }
    return table;
}

std::map<std::vector<long long>, Int> tensor_decompose_classical(const RootSystemCase& rs,
                                                                 const GeneralizedVector& w1,
                                                                 const GeneralizedVector& w2) {
    return peel_decompose(rs, weyl_character(rs, w1) * weyl_character(rs, w2));
}

GeneralizedVector seesaw_weight(const Partition& la, int d, int k, SuperKind kind) {
    (void)kind;
    const Partition conj = la.conjugate();
    if (conj.length() > k) throw std::invalid_argument("seesaw_weight: lambda_1 > k");
    std::vector<long long> w(k);
    for (int j = 1; j <= k; ++j) w[j - 1] = d - 2LL * conj.row(k - j);
    return GeneralizedVector(std::move(w));
}

TensorTable super_tensor_coeffs(const Partition& mu, const Partition& ga, int d, int r, int m,
                                int n, SuperKind kind, int rank) {
    const Partition muc = mu.conjugate(), gac = ga.conjugate();
    if (kind == SuperKind::spo) {
        if (muc.row(0) + muc.row(1) > d || gac.row(0) + gac.row(1) > r)
            throw std::invalid_argument("super_tensor_coeffs: column condition violated");
    } else {
        if (d % 2 != 0 || r % 2 != 0)
            throw std::invalid_argument("super_tensor_coeffs: osp needs d, r even");
        if (mu.length() > d / 2 || ga.length() > r / 2)
            throw std::invalid_argument("super_tensor_coeffs: length condition violated");
    }
    if (!mu.in_hook(m, n) || !ga.in_hook(m, n))
        throw std::invalid_argument("super_tensor_coeffs: diagram outside the hook");
    if (rank < 0) rank = std::max({mu.row(0), ga.row(0), 1});
    if (rank < std::max(mu.row(0), ga.row(0)))
        throw std::invalid_argument("super_tensor_coeffs: rank below max(mu_1, gamma_1)");

    RootSystemCase rs{kind == SuperKind::spo ? Family::D : Family::C, rank};
    auto w1 = seesaw_weight(mu, d, rank, kind);
    auto w2 = seesaw_weight(ga, r, rank, kind);
    if (!rs.dominant(w1) || !rs.dominant(w2))
        throw std::logic_error("super_tensor_coeffs: seesaw weight not dominant");
    auto raw = tensor_decompose_classical(rs, w1, w2);

    TensorTable out;
    out.rank_used = rank;
    out.kind = kind;
    const int dr = d + r;
    for (auto& [w, c] : raw) {
        std::vector<int> conj_rows(rank);
        bool valid = true;
        for (int j = 1; j <= rank; ++j) {
            long long twice = dr - w[rank - j];
            if (twice < 0 || twice % 2 != 0) { valid = false; break; }
            conj_rows[j - 1] = static_cast<int>(twice / 2);
        }
        if (!valid) throw std::logic_error("super_tensor_coeffs: weight does not map to a diagram");
        Partition lap(conj_rows);
        Partition la = lap.conjugate();
        if (!la.in_hook(m, n)) continue;
        if (kind == SuperKind::spo) {
            if (lap.row(0) + lap.row(1) > dr) continue;
        } else {
            if (la.length() > dr / 2) continue;
        }
        out.coeff[la] += c;
    }
    std::erase_if(out.coeff, [](const auto& kv) { return kv.second == 0; });
    return out;
}

StabilityReport verify_stability(const Partition& mu, const Partition& ga, int d, int r, int m,
                                 int n, SuperKind kind, int k) {
    TensorTable a = super_tensor_coeffs(mu, ga, d, r, m, n, kind, k);
    TensorTable b = super_tensor_coeffs(mu, ga, d, r, m, n, kind, k + 1);
    auto window = [&](const TensorTable& t) {
        std::map<Partition, Int> w;
        for (auto& [p, c] : t.coeff)
            if (p.row(0) <= k) w.emplace(p, c);
        return w;
    };
    auto wa = window(a), wb = window(b);
    if (wa == wb) return {};
    StabilityReport rep;
    rep.exact = false;
    for (auto& [p, c] : wa)
        if (!wb.count(p) || wb[p] != c) { rep.first_mismatch = p; return rep; }
    for (auto& [p, c] : wb)
        if (!wa.count(p)) { rep.first_mismatch = p; return rep; }
    return rep;
}

DimensionReport exterior_dimension_check(int d, int k, ExteriorBranch branch) {
    DimensionReport rep;
    rep.expected = pow2(static_cast<long>(d) * k);
    if (branch == ExteriorBranch::O) {
        PartitionConstraints c;
        c.max_length = d;
        c.col_sum_bound_d = d;
        for (const auto& la : enumerate_partitions(d * k, c)) {
            if (la.row(0) > k) continue;
            RootSystemCase rs{Family::D, k};
            rep.total += o_dimension(d, la) * weyl_dimension(rs, seesaw_weight(la, d, k, SuperKind::spo));
        }
    } else {
        if (d % 2 != 0) throw std::invalid_argument("exterior_dimension_check: Sp needs d even");
        PartitionConstraints c;
        c.max_length = d / 2;
        for (const auto& mu : enumerate_partitions(d * k / 2, c)) {
            if (mu.row(0) > k) continue;
            RootSystemCase rs{Family::C, k};
            rep.total += sp_group_character(d, mu).dimension() *
                         weyl_dimension(rs, seesaw_weight(mu, d, k, SuperKind::osp));
        }
    }
    return rep;
}

} // namespace superchar
