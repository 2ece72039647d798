#include "superchar/schur.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace superchar {

void SchurExpansion::add(const Partition& p, const Int& c) {
    auto it = terms.find(p);
    if (it == terms.end()) {
        if (c != 0) terms.emplace(p, c);
    } else {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

SchurExpansion SchurExpansion::omega() const {
    SchurExpansion r;
    r.degree_cap = degree_cap;
    for (auto& [p, c] : terms) r.add(p.conjugate(), c);
    return r;
}

std::string SchurExpansion::to_string() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [p, c] : terms) {
        if (!first) os << " + ";
        first = false;
        os << c.get_str() << "*s" << p.to_string();
    }
    return os.str();
}

namespace {

// Column-strict, row-weak fillings of lambda/mu in letters 1..k, accumulated
// as weight vectors. Cells are visited row by row.
void skew_fill(const Partition& la, const Partition& mu, int k,
               std::vector<std::vector<int>>& grid, int r, int c,
               std::vector<int>& weight, std::map<std::vector<int>, Int>& out) {
    if (r == la.length()) {
        auto it = out.find(weight);
        if (it == out.end()) out.emplace(weight, 1);
        else it->second += 1;
        return;
    }
    if (c >= la.row(r)) { skew_fill(la, mu, k, grid, r + 1, mu.row(r + 1), weight, out); return; }
    int lo = 1;
    if (c > mu.row(r)) lo = std::max(lo, grid[r][c - 1]);
    if (r > 0 && c >= mu.row(r - 1) && c < la.row(r - 1)) lo = std::max(lo, grid[r - 1][c] + 1);
    for (int v = lo; v <= k; ++v) {
        grid[r][c] = v;
        ++weight[v - 1];
        skew_fill(la, mu, k, grid, r, c + 1, weight, out);
        --weight[v - 1];
    }
}

} // namespace

std::map<std::vector<int>, Int> skew_schur_monomials(const Partition& la, const Partition& mu,
                                                     int k) {
    if (!la.contains(mu)) throw std::invalid_argument("skew_schur: mu not contained in lambda");
    std::map<std::vector<int>, Int> out;
    if (k < 0) throw std::invalid_argument("skew_schur: negative alphabet");
    std::vector<std::vector<int>> grid(la.length());
    for (int i = 0; i < la.length(); ++i) grid[i].resize(la.row(i));
    std::vector<int> weight(k, 0);
    if (la.length() == 0) {
        out.emplace(weight, 1);
        return out;
    }
    skew_fill(la, mu, k, grid, 0, mu.row(0), weight, out);
    return out;
}

std::map<std::vector<int>, Int> schur_monomials(const Partition& la, int k) {
    return skew_schur_monomials(la, Partition(), k);
}

std::map<std::pair<std::vector<int>, std::vector<int>>, Int>
hook_schur_monomials(const Partition& la, int m, int n) {
    std::map<std::pair<std::vector<int>, std::vector<int>>, Int> out;
    const Partition lac = la.conjugate();
    // mu runs over sub-diagrams of lambda with at most m rows; the z-side is
    // the skew lambda'/mu'.
    std::function<void(int, std::vector<int>&)> rec = [&](int r, std::vector<int>& murows) {
        if (r == std::min(la.length(), m) || (r > 0 && murows[r - 1] == 0)) {
            Partition mu(std::vector<int>(murows.begin(), murows.end()));
            auto ypart = schur_monomials(mu, m);
            if (ypart.empty()) return;
            auto zpart = skew_schur_monomials(lac, mu.conjugate(), n);
            for (auto& [yw, yc] : ypart)
                for (auto& [zw, zc] : zpart) {
                    auto key = std::make_pair(yw, zw);
                    auto it = out.find(key);
                    if (it == out.end()) out.emplace(key, yc * zc);
                    else it->second += yc * zc;
                }
            return;
        }
        int hi = std::min(la.row(r), r > 0 ? murows[r - 1] : la.row(0));
        for (int v = hi; v >= 0; --v) {
            murows.push_back(v);
            rec(r + 1, murows);
            murows.pop_back();
        }
    };
    std::vector<int> murows;
    rec(0, murows);
    return out;
}

std::map<std::pair<std::vector<int>, std::vector<int>>, Int>
hook_schur_monomials_by_tableaux(const Partition& la, int m, int n) {
    std::map<std::pair<std::vector<int>, std::vector<int>>, Int> out;
    for (const auto& t : enumerate_hook_tableaux(la, m, n)) {
        auto key = std::make_pair(t.even_weight(m), t.odd_weight(n));
        auto it = out.find(key);
        if (it == out.end()) out.emplace(key, 1);
        else it->second += 1;
    }
    return out;
}

namespace {

int group_offset(const SeriesShape& sh, char group) {
    switch (group) {
        case 'x': return 1;
        case 'y': return 1 + sh.p;
        case 'z': return 1 + sh.p + sh.m;
        default: throw std::invalid_argument("unknown variable group");
    }
}

int group_size(const SeriesShape& sh, char group) {
    switch (group) {
        case 'x': return sh.p;
        case 'y': return sh.m;
        case 'z': return sh.n;
        default: throw std::invalid_argument("unknown variable group");
    }
}

} // namespace

PowerSeries schur_expand(const Partition& la, const SeriesShape& sh, char group) {
    return skew_schur_expand(la, Partition(), sh, group);
}

PowerSeries skew_schur_expand(const Partition& la, const Partition& mu, const SeriesShape& sh,
                              char group) {
    const int k = group_size(sh, group);
    const int off = group_offset(sh, group);
    PowerSeries r(sh);
    if (la.size() - mu.size() > sh.cap && group != 'x') return r;
    for (auto& [w, c] : skew_schur_monomials(la, mu, k)) {
        ExpVec e(sh.width(), 0);
        for (int i = 0; i < k; ++i) e[off + i] = w[i];
        r.add_term(e, c);
    }
    r.normalize();
    return r;
}

PowerSeries hook_schur_expand(const Partition& la, const SeriesShape& sh) {
    PowerSeries r(sh);
    if (la.size() > sh.cap) return r;
    for (auto& [w, c] : hook_schur_monomials(la, sh.m, sh.n)) {
        ExpVec e(sh.width(), 0);
        for (int i = 0; i < sh.m; ++i) e[1 + sh.p + i] = w.first[i];
        for (int i = 0; i < sh.n; ++i) e[1 + sh.p + sh.m + i] = w.second[i];
        r.add_term(e, c);
    }
    r.normalize();
    return r;
}

PowerSeries hook_schur_expand(const SchurExpansion& ex, const SeriesShape& sh) {
    PowerSeries r(sh);
    for (auto& [p, c] : ex.terms) {
        if (p.size() > sh.cap) continue;
        PowerSeries hs = hook_schur_expand(p, sh);
        for (auto& t : hs.terms()) r.add_term(t.e, t.c * c);
    }
    r.normalize();
    return r;
}

} // namespace superchar
