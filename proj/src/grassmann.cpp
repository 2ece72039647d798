#include "superchar/grassmann.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace superchar {

int SuperMonomial::degree() const {
    int d = static_cast<int>(odd.size());
    for (auto& [v, e] : even) d += e;
    return d;
}

SuperPoly SuperPoly::variable(const GVar& v) {
    SuperMonomial mo;
    if (v.odd) mo.odd.push_back(v);
    else mo.even.emplace_back(v, 1);
    return monomial(mo, 1);
}

SuperPoly SuperPoly::monomial(const SuperMonomial& mo, Int c) {
    SuperPoly p;
    if (c != 0) p.terms_.emplace(mo, std::move(c));
    return p;
}

void SuperPoly::add(const SuperMonomial& mo, const Int& c) {
    auto it = terms_.find(mo);
    if (it == terms_.end()) {
        if (c != 0) terms_.emplace(mo, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SuperPoly SuperPoly::operator+(const SuperPoly& o) const {
    SuperPoly r = *this;
    for (auto& [mo, c] : o.terms_) r.add(mo, c);
    return r;
}

SuperPoly SuperPoly::operator-(const SuperPoly& o) const {
    SuperPoly r = *this;
    for (auto& [mo, c] : o.terms_) r.add(mo, -c);
    return r;
}

namespace {

// Merge two sorted duplicate-free odd lists; returns the sign of the shuffle
// or 0 when a generator repeats.
int merge_odd(const std::vector<GVar>& a, const std::vector<GVar>& b, std::vector<GVar>& out) {
    out.clear();
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    long long crossings = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return 0;
        if (a[i] < b[j]) out.push_back(a[i++]);
        else {
            crossings += static_cast<long long>(a.size() - i);
            out.push_back(b[j++]);
        }
    }
    while (i < a.size()) out.push_back(a[i++]);
    while (j < b.size()) out.push_back(b[j++]);
    return crossings % 2 == 0 ? 1 : -1;
}

std::vector<std::pair<GVar, int>> merge_even(const std::vector<std::pair<GVar, int>>& a,
                                             const std::vector<std::pair<GVar, int>>& b) {
    std::vector<std::pair<GVar, int>> out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first == b[j].first) {
            out.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i; ++j;
        } else if (a[i].first < b[j].first) out.push_back(a[i++]);
        else out.push_back(b[j++]);
    }
    while (i < a.size()) out.push_back(a[i++]);
    while (j < b.size()) out.push_back(b[j++]);
    return out;
}

} // namespace

SuperPoly SuperPoly::operator*(const SuperPoly& o) const {
    SuperPoly r;
    std::vector<GVar> odd;
    for (auto& [ma, ca] : terms_)
        for (auto& [mb, cb] : o.terms_) {
            int sign = merge_odd(ma.odd, mb.odd, odd);
            if (sign == 0) continue;
            SuperMonomial mo;
            mo.even = merge_even(ma.even, mb.even);
            mo.odd = odd;
            r.add(mo, ca * cb * sign);
        }
    return r;
}

std::string SuperPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [mo, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.get_str();
        for (auto& [v, e] : mo.even) {
            os << "*x_" << v.row << '^' << v.col;
            if (e != 1) os << "**" << e;
        }
        for (auto& v : mo.odd) os << "*eta_" << v.row << '^' << v.col;
    }
    return os.str();
}

SuperPoly derive(const SuperPoly& p, const GVar& v) {
    SuperPoly r;
    for (auto& [mo, c] : p.terms()) {
        if (v.odd) {
            auto it = std::find(mo.odd.begin(), mo.odd.end(), v);
            if (it == mo.odd.end()) continue;
            auto pos = std::distance(mo.odd.begin(), it);
            SuperMonomial out = mo;
            out.odd.erase(out.odd.begin() + pos);
            r.add(out, pos % 2 == 0 ? c : -c);
        } else {
            auto it = std::find_if(mo.even.begin(), mo.even.end(),
                                   [&](const auto& pe) { return pe.first == v; });
            if (it == mo.even.end()) continue;
            SuperMonomial out = mo;
            auto oit = out.even.begin() + std::distance(mo.even.begin(), it);
            Int coeff = c * oit->second;
            if (--oit->second == 0) out.even.erase(oit);
            r.add(out, coeff);
        }
    }
    return r;
}

SuperPoly determinant(const std::vector<GVar>& rows, const std::vector<int>& cols) {
    const size_t r = rows.size();
    if (cols.size() != r) throw std::invalid_argument("determinant: shape mismatch");
    std::vector<int> perm(r);
    std::iota(perm.begin(), perm.end(), 0);
    SuperPoly out;
    do {
        int psign = 1;
        for (size_t i = 0; i < r; ++i)
            for (size_t j = i + 1; j < r; ++j)
                if (perm[i] > perm[j]) psign = -psign;
        SuperPoly prod = SuperPoly::monomial(SuperMonomial{}, psign);
        for (size_t i = 0; i < r; ++i) {
            GVar v = rows[i];
            v.col = cols[perm[i]];
            prod = prod * SuperPoly::variable(v);
        }
        out = out + prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

namespace {

std::vector<int> iota_cols(int r) {
    std::vector<int> c(r);
    std::iota(c.begin(), c.end(), 1);
    return c;
}

} // namespace

SuperPoly delta_r(int r) {
    std::vector<GVar> rows;
    for (int i = 1; i <= r; ++i) rows.push_back(GVar{false, i, 0});
    return determinant(rows, iota_cols(r));
}

SuperPoly delta_kr(int k, int r, int m) {
    if (r <= m) throw std::invalid_argument("delta_kr: needs r > m");
    std::vector<GVar> rows;
    for (int i = 1; i <= m; ++i) rows.push_back(GVar{false, i, 0});
    for (int i = m + 1; i <= r; ++i) rows.push_back(GVar{true, k, 0});
    return determinant(rows, iota_cols(r));
}

SuperPoly delta_column(const std::vector<HookCell>& column) {
    return delta_column(column, iota_cols(static_cast<int>(column.size())));
}

SuperPoly delta_column(const std::vector<HookCell>& column, const std::vector<int>& upper) {
    std::vector<GVar> rows;
    for (auto& c : column) rows.push_back(GVar{c.odd, c.letter, 0});
    return determinant(rows, upper);
}

namespace {

std::vector<std::vector<HookCell>> tableau_columns(const HookTableau& t) {
    const Partition conj = t.shape.conjugate();
    std::vector<std::vector<HookCell>> cols(t.shape.row(0));
    for (int j = 0; j < t.shape.row(0); ++j)
        for (int i = 0; i < conj.row(j); ++i) cols[j].push_back(t.cells[i][j]);
    return cols;
}

} // namespace

SuperPoly delta_tableau(const HookTableau& t) {
    SuperPoly prod = SuperPoly::unit();
    for (const auto& col : tableau_columns(t)) prod = prod * delta_column(col);
    return prod;
}

SuperPoly delta_bitableau(const HookTableau& t, const std::vector<std::vector<int>>& tprime) {
    const Partition conj = t.shape.conjugate();
    SuperPoly prod = SuperPoly::unit();
    auto cols = tableau_columns(t);
    for (int j = 0; j < t.shape.row(0); ++j) {
        std::vector<int> upper;
        for (int i = 0; i < conj.row(j); ++i) upper.push_back(tprime[i][j]);
        prod = prod * delta_column(cols[j], upper);
    }
    return prod;
}

SuperPoly hwv_vector(const Partition& la, int d, int m, int n) {
    if (la.length() > d) throw std::invalid_argument("hwv_vector: l(lambda) > d");
    if (!la.in_hook(m, n)) throw std::invalid_argument("hwv_vector: not in (m|n)-hook");
    const Partition conj = la.conjugate();
    SuperPoly prod = SuperPoly::unit();
    for (int k = 1; k <= la.row(0); ++k) {
        const int r = conj.row(k - 1);
        prod = prod * (r > m ? delta_kr(k, r, m) : delta_r(r));
    }
    return prod;
}

SuperPoly apply(const LieOperator& op, const SuperPoly& p) {
    SuperPoly out;
    for (const auto& t : op.terms) {
        SuperPoly cur = p;
        for (auto it = t.derivs.rbegin(); it != t.derivs.rend(); ++it) cur = derive(cur, *it);
        for (auto mit = t.mults.rbegin(); mit != t.mults.rend(); ++mit)
            cur = SuperPoly::variable(*mit) * cur;
        for (auto& [mo, c] : cur.terms()) out.add(mo, c * t.c);
    }
    return out;
}

LieOperator gl_d_raise(int i, int d, int M, int N) {
    if (i < 2 || i > d) throw std::invalid_argument("gl_d_raise: index out of range");
    LieOperator op;
    op.name = "E^{gl(d)}_{" + std::to_string(i - 1) + "," + std::to_string(i) + "}";
    for (int j = 1; j <= M; ++j)
        op.terms.push_back({1, {GVar{false, j, i - 1}}, {GVar{false, j, i}}});
    for (int k = 1; k <= N; ++k)
        op.terms.push_back({1, {GVar{true, k, i - 1}}, {GVar{true, k, i}}});
    return op;
}

LieOperator glmn_raise_even(int s, int d) {
    LieOperator op;
    op.name = "E^{xx}_{" + std::to_string(s - 1) + "," + std::to_string(s) + "}";
    for (int j = 1; j <= d; ++j)
        op.terms.push_back({1, {GVar{false, s - 1, j}}, {GVar{false, s, j}}});
    return op;
}

LieOperator glmn_raise_odd(int k, int d) {
    LieOperator op;
    op.name = "E^{ee}_{" + std::to_string(k - 1) + "," + std::to_string(k) + "}";
    for (int j = 1; j <= d; ++j)
        op.terms.push_back({1, {GVar{true, k - 1, j}}, {GVar{true, k, j}}});
    return op;
}

LieOperator glmn_raise_mixed(int m, int d) {
    LieOperator op;
    op.name = "E^{xe}_{m,1}";
    for (int j = 1; j <= d; ++j)
        op.terms.push_back({1, {GVar{false, m, j}}, {GVar{true, 1, j}}});
    return op;
}

LieOperator o_laplacian_xx(int i, int s, int d) {
    LieOperator op;
    op.name = "O-Delta^{xx}_{" + std::to_string(i) + std::to_string(s) + "}";
    for (int j = 1; j <= d; ++j)
        op.terms.push_back({1, {}, {GVar{false, i, j}, GVar{false, s, d + 1 - j}}});
    return op;
}

LieOperator o_laplacian_xeta(int i, int k, int d) {
    LieOperator op;
    op.name = "O-Delta^{xe}_{" + std::to_string(i) + std::to_string(k) + "}";
    for (int j = 1; j <= d; ++j)
        op.terms.push_back({1, {}, {GVar{false, i, j}, GVar{true, k, d + 1 - j}}});
    return op;
}

LieOperator o_laplacian_etaeta(int k, int t, int d) {
    LieOperator op;
    op.name = "O-Delta^{ee}_{" + std::to_string(k) + std::to_string(t) + "}";
    for (int j = 1; j <= d; ++j)
        op.terms.push_back({1, {}, {GVar{true, k, j}, GVar{true, t, d + 1 - j}}});
    return op;
}

LieOperator sp_laplacian_xx(int i, int s, int d) {
    LieOperator op;
    op.name = "Sp-Delta^{xx}_{" + std::to_string(i) + std::to_string(s) + "}";
    for (int j = 1; j <= d / 2; ++j) {
        op.terms.push_back({1, {}, {GVar{false, i, j}, GVar{false, s, d + 1 - j}}});
        op.terms.push_back({-1, {}, {GVar{false, i, d + 1 - j}, GVar{false, s, j}}});
    }
    return op;
}

LieOperator sp_laplacian_xeta(int i, int k, int d) {
    LieOperator op;
    op.name = "Sp-Delta^{xe}_{" + std::to_string(i) + std::to_string(k) + "}";
    for (int j = 1; j <= d / 2; ++j) {
        op.terms.push_back({1, {}, {GVar{false, i, j}, GVar{true, k, d + 1 - j}}});
        op.terms.push_back({-1, {}, {GVar{false, i, d + 1 - j}, GVar{true, k, j}}});
    }
    return op;
}

LieOperator sp_laplacian_etaeta(int k, int t, int d) {
    LieOperator op;
    op.name = "Sp-Delta^{ee}_{" + std::to_string(k) + std::to_string(t) + "}";
    for (int j = 1; j <= d / 2; ++j) {
        op.terms.push_back({1, {}, {GVar{true, k, j}, GVar{true, t, d + 1 - j}}});
        op.terms.push_back({-1, {}, {GVar{true, k, d + 1 - j}, GVar{true, t, j}}});
    }
    return op;
}

LieOperator o_invariant_xx(int i, int s, int d) {
    LieOperator op;
    op.name = "O-I^{xx}";
    for (int j = 1; j <= d; ++j)
        op.terms.push_back({1, {GVar{false, i, j}, GVar{false, s, d + 1 - j}}, {}});
    return op;
}

LieOperator sp_invariant_xx(int i, int s, int d) {
    LieOperator op;
    op.name = "Sp-I^{xx}";
    for (int j = 1; j <= d / 2; ++j) {
        op.terms.push_back({1, {GVar{false, i, j}, GVar{false, s, d + 1 - j}}, {}});
        op.terms.push_back({-1, {GVar{false, i, d + 1 - j}, GVar{false, s, j}}, {}});
    }
    return op;
}

LieOperator gamma_op(int i, int m, int d) {
    LieOperator op;
    op.name = "Gamma_" + std::to_string(i);
    for (int j = 1; j <= d; ++j)
        op.terms.push_back({1, {GVar{true, 1, j}}, {GVar{false, m + i, j}}});
    return op;
}

HarmonicReport check_highest_harmonic(const Partition& la, int d, int m, int n, DualSide side) {
    SuperPoly v = hwv_vector(la, d, m, n);
    std::vector<LieOperator> ops;
    for (int i = 2; i <= d; ++i) ops.push_back(gl_d_raise(i, d, m, n));
    for (int s = 2; s <= m; ++s) ops.push_back(glmn_raise_even(s, d));
    for (int k = 2; k <= n; ++k) ops.push_back(glmn_raise_odd(k, d));
    if (m >= 1 && n >= 1) ops.push_back(glmn_raise_mixed(m, d));
    if (side == DualSide::O) {
        for (int i = 1; i <= m; ++i)
            for (int s = i; s <= m; ++s) ops.push_back(o_laplacian_xx(i, s, d));
        for (int i = 1; i <= m; ++i)
            for (int k = 1; k <= n; ++k) ops.push_back(o_laplacian_xeta(i, k, d));
        for (int k = 1; k <= n; ++k)
            for (int t = k + 1; t <= n; ++t) ops.push_back(o_laplacian_etaeta(k, t, d));
    } else {
        for (int i = 1; i <= m; ++i)
            for (int s = i + 1; s <= m; ++s) ops.push_back(sp_laplacian_xx(i, s, d));
        for (int i = 1; i <= m; ++i)
            for (int k = 1; k <= n; ++k) ops.push_back(sp_laplacian_xeta(i, k, d));
        for (int k = 1; k <= n; ++k)
            for (int t = k; t <= n; ++t) ops.push_back(sp_laplacian_etaeta(k, t, d));
    }
    for (const auto& op : ops) {
        if (!apply(op, v).is_zero()) return HarmonicReport{false, op.name};
    }
    return HarmonicReport{true, {}};
}

int span_rank(const std::vector<SuperPoly>& polys) {
    std::map<SuperMonomial, size_t> index;
    for (const auto& p : polys)
        for (auto& [mo, c] : p.terms())
            index.emplace(mo, index.size());
    if (index.empty()) return 0;
    std::vector<std::vector<Rat>> mat;
    for (const auto& p : polys) {
        std::vector<Rat> row(index.size(), Rat(0));
        for (auto& [mo, c] : p.terms()) row[index[mo]] = Rat(c);
        mat.push_back(std::move(row));
    }
    const size_t cols = index.size();
    size_t rank = 0;
    for (size_t c = 0; c < cols && rank < mat.size(); ++c) {
        size_t piv = rank;
        while (piv < mat.size() && mat[piv][c] == 0) ++piv;
        if (piv == mat.size()) continue;
        std::swap(mat[rank], mat[piv]);
        for (size_t r = rank + 1; r < mat.size(); ++r) {
            if (mat[r][c] == 0) continue;
            Rat f = mat[r][c] / mat[rank][c];
            for (size_t cc = c; cc < cols; ++cc) mat[r][cc] -= f * mat[rank][cc];
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

} // namespace superchar
