#include "superchar/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace superchar {

Partition::Partition(std::vector<int> rows) : rows_(std::move(rows)) {
    for (size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i] < 0) throw std::invalid_argument("partition rows must be non-negative");
        if (i + 1 < rows_.size() && rows_[i] < rows_[i + 1])
            throw std::invalid_argument("partition rows must be weakly decreasing");
    }
    while (!rows_.empty() && rows_.back() == 0) rows_.pop_back();
}

int Partition::size() const { return std::accumulate(rows_.begin(), rows_.end(), 0); }

Partition Partition::conjugate() const {
    if (rows_.empty()) return {};
    std::vector<int> cols(rows_[0], 0);
    for (int r : rows_)
        for (int j = 0; j < r; ++j) ++cols[j];
    return Partition(std::move(cols));
}

bool Partition::contains(const Partition& mu) const {
    if (mu.length() > length()) return false;
    for (int i = 0; i < mu.length(); ++i)
        if (mu.rows_[i] > rows_[i]) return false;
    return true;
}

bool Partition::rows_all_even() const {
    return std::all_of(rows_.begin(), rows_.end(), [](int r) { return r % 2 == 0; });
}

bool Partition::cols_all_even() const { return conjugate().rows_all_even(); }

Partition Partition::bar(int d) const {
    Partition c = conjugate();
    if (c.row(0) + c.row(1) > d)
        throw std::invalid_argument("bar: requires lambda'_1 + lambda'_2 <= d");
    std::vector<int> cols = c.rows();
    if (cols.empty()) cols.push_back(0);
    cols[0] = d - c.row(0);
    std::sort(cols.begin(), cols.end(), std::greater<int>());
    return Partition(std::move(cols)).conjugate();
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < rows_.size(); ++i) {
        if (i) os << ',';
        os << rows_[i];
    }
    os << ']';
    return os.str();
}

Partition Partition::parse(const std::string& s) {
    std::string t = s;
    if (!t.empty() && t.front() == '[') t = t.substr(1, t.size() >= 2 && t.back() == ']' ? t.size() - 2 : std::string::npos);
    std::vector<int> rows;
    std::istringstream is(t);
    std::string piece;
    while (std::getline(is, piece, ',')) {
        if (piece.empty()) continue;
        rows.push_back(std::stoi(piece));
    }
    return Partition(std::move(rows));
}

namespace {

bool satisfies(const Partition& p, const PartitionConstraints& c) {
    if (c.max_length && p.length() > *c.max_length) return false;
    if (c.col_sum_bound_d) {
        Partition q = p.conjugate();
        if (q.row(0) + q.row(1) > *c.col_sum_bound_d) return false;
    }
    if (c.even_rows && !p.rows_all_even()) return false;
    if (c.even_cols && !p.cols_all_even()) return false;
    if (c.hook && !p.in_hook(c.hook->first, c.hook->second)) return false;
    return true;
}

void gen_partitions(int remaining, int max_row, std::vector<int>& acc,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    for (int r = std::min(remaining, max_row); r >= 1; --r) {
        acc.push_back(r);
        gen_partitions(remaining - r, r, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<Partition> enumerate_partitions(int max_size, const PartitionConstraints& c) {
    std::vector<Partition> out;
    for (int sz = 0; sz <= max_size; ++sz) {
        std::vector<Partition> layer;
        std::vector<int> acc;
        gen_partitions(sz, sz, acc, layer);
        std::sort(layer.begin(), layer.end(),
                  [](const Partition& a, const Partition& b) { return b.rows() < a.rows(); });
        for (auto& p : layer)
            if (satisfies(p, c)) out.push_back(std::move(p));
    }
    return out;
}

GeneralizedVector::GeneralizedVector(std::vector<long long> t) : twice(std::move(t)) {
    if (!twice.empty()) {
        long long par = ((twice[0] % 2) + 2) % 2;
        for (long long v : twice)
            if (((v % 2) + 2) % 2 != par)
                throw std::invalid_argument("generalized vector entries must share parity");
    }
}

GeneralizedVector GeneralizedVector::from_ints(const std::vector<int>& v) {
    std::vector<long long> t(v.size());
    for (size_t i = 0; i < v.size(); ++i) t[i] = 2LL * v[i];
    return GeneralizedVector(std::move(t));
}

bool GeneralizedVector::is_integral() const {
    return twice.empty() || twice[0] % 2 == 0;
}

bool GeneralizedVector::weakly_decreasing() const {
    for (size_t i = 0; i + 1 < twice.size(); ++i)
        if (twice[i] < twice[i + 1]) return false;
    return true;
}

std::string GeneralizedVector::to_string() const {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < twice.size(); ++i) {
        if (i) os << ',';
        if (twice[i] % 2 == 0) os << twice[i] / 2;
        else os << twice[i] << "/2";
    }
    os << ')';
    return os.str();
}

std::vector<int> HookTableau::even_weight(int m) const {
    std::vector<int> w(m, 0);
    for (auto& row : cells)
        for (auto& c : row)
            if (!c.odd) ++w[c.letter - 1];
    return w;
}

std::vector<int> HookTableau::odd_weight(int n) const {
    std::vector<int> w(n, 0);
    for (auto& row : cells)
        for (auto& c : row)
            if (c.odd) ++w[c.letter - 1];
    return w;
}

namespace {

// Fill the sub-diagram mu semistandardly with even letters 1..m, the skew
// lambda/mu with odd letters so that rows are strictly increasing and columns
// weakly increasing (transpose-semistandard).
void fill_cells(const Partition& la, const Partition& mu, int m, int n,
                std::vector<std::vector<HookCell>>& grid, int r, int c,
                std::vector<HookTableau>& out) {
    if (r == la.length()) {
        out.push_back(HookTableau{la, grid});
        return;
    }
    int nr = r, nc = c + 1;
    if (nc >= la.row(r)) { nr = r + 1; nc = 0; }

    bool even_cell = c < mu.row(r);
    if (even_cell) {
        int lo = 1;
        if (c > 0) lo = std::max(lo, grid[r][c - 1].letter);                    // row weak
        if (r > 0 && c < mu.row(r - 1)) lo = std::max(lo, grid[r - 1][c].letter + 1);  // col strict
        for (int v = lo; v <= m; ++v) {
            grid[r][c] = HookCell{false, v};
            fill_cells(la, mu, m, n, grid, nr, nc, out);
        }
    } else {
        int lo = 1;
        if (c > 0 && c - 1 >= mu.row(r)) lo = std::max(lo, grid[r][c - 1].letter + 1);  // row strict
        if (r > 0 && c < la.row(r - 1) && c >= mu.row(r - 1))
            lo = std::max(lo, grid[r - 1][c].letter);                                   // col weak
        for (int v = lo; v <= n; ++v) {
            grid[r][c] = HookCell{true, v};
            fill_cells(la, mu, m, n, grid, nr, nc, out);
        }
    }
}

} // namespace

std::vector<HookTableau> enumerate_hook_tableaux(const Partition& la, int m, int n) {
    std::vector<HookTableau> out;
    if (la.empty()) {
        out.push_back(HookTableau{la, {}});
        return out;
    }
    if (!la.in_hook(m, n)) return out;
    // Enumerate the even sub-diagram mu: mu subset of lambda, and lambda/mu must
    // be a vertical-strip-free skew admitting odd letters; every cell of
    // lambda/mu must sit in a column where the cell directly left in the same
    // row of mu boundary... the only shape constraint is mu subset of lambda
    // with mu a partition whose complement is a valid skew (always true).
    std::function<void(int, std::vector<int>&)> rec = [&](int r, std::vector<int>& murows) {
        if (r == la.length()) {
            std::vector<int> mr = murows;
            Partition mu(std::vector<int>(mr.begin(), mr.end()));
            std::vector<std::vector<HookCell>> grid(la.length());
            for (int i = 0; i < la.length(); ++i) grid[i].resize(la.row(i));
            fill_cells(la, mu, m, n, grid, 0, 0, out);
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
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Int ssyt_count(const Partition& la, int k) {
    if (la.length() > k) return 0;
    // prod over cells (k + j - i) / hook(i,j)
    Int num = 1, den = 1;
    Partition conj = la.conjugate();
    for (int i = 0; i < la.length(); ++i) {
        for (int j = 0; j < la.row(i); ++j) {
            num *= k + j - i;
            den *= la.row(i) - j + conj.row(j) - i - 1;
        }
    }
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0) throw std::logic_error("ssyt_count: non-exact division");
    return q;
}

std::vector<int> glmn_labels(const Partition& la, int m, int n) {
    if (!la.in_hook(m, n)) throw std::invalid_argument("glmn_labels: diagram not in (m|n)-hook");
    std::vector<int> lab;
    lab.reserve(m + n);
    for (int i = 0; i < m; ++i) lab.push_back(la.row(i));
    Partition conj = la.conjugate();
    for (int j = 0; j < n; ++j) lab.push_back(std::max(conj.row(j) - m, 0));
    return lab;
}

std::vector<long long> dynkin_labels(const GeneralizedVector& mu, int m, int n, SuperKind kind) {
    if (static_cast<int>(mu.twice.size()) != m + n)
        throw std::invalid_argument("dynkin_labels: weight must have m+n entries");
    if (kind == SuperKind::spo && m < 1) throw std::invalid_argument("dynkin_labels: spo needs m >= 1");
    if (kind == SuperKind::osp && m < 2) throw std::invalid_argument("dynkin_labels: osp needs m >= 2");
    const auto& t = mu.twice;
    std::vector<long long> lab;
    lab.reserve(m + n);
    lab.push_back(kind == SuperKind::spo ? -t[0] : -t[0] - t[1]);
    for (int i = 0; i + 1 < m; ++i) lab.push_back(t[i] - t[i + 1]);
    if (n > 0) {
        lab.push_back(t[m - 1] + t[m]);
        for (int j = 0; j + 1 < n; ++j) lab.push_back(t[m + j] - t[m + j + 1]);
    }
    return lab;
}

} // namespace superchar
