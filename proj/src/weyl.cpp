#include "superchar/weyl.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace superchar {

Int RootSystemCase::weyl_order() const {
    Int f = 1;
    for (int i = 2; i <= rank; ++i) f *= i;
    int e = fam == Family::D ? rank - 1 : rank;
    if (e < 0) e = 0;
    return f * pow2(e);
}

GeneralizedVector RootSystemCase::rho() const {
    std::vector<long long> t(rank);
    for (int i = 0; i < rank; ++i) {
        switch (fam) {
            case Family::B: t[i] = 2 * (rank - i) - 1; break;  // k-i-1/2 doubled
            case Family::C: t[i] = 2 * (rank - i); break;
            case Family::D: t[i] = 2 * (rank - i - 1); break;
        }
    }
    return GeneralizedVector(std::move(t));
}

bool RootSystemCase::dominant(const GeneralizedVector& la) const {
    if (la.length() != rank) return false;
    const auto& t = la.twice;
    for (int i = 0; i + 1 < rank; ++i)
        if (t[i] < t[i + 1]) return false;
    if (rank == 0) return true;
    switch (fam) {
        case Family::B:
        case Family::C: return t[rank - 1] >= 0;
        case Family::D: return rank == 1 || t[rank - 2] >= std::llabs(t[rank - 1]);
    }
    return false;
}

std::vector<std::vector<long long>> RootSystemCase::positive_roots() const {
    std::vector<std::vector<long long>> roots;
    const int k = rank;
    auto vec = [&](int i, long long ci, int j, long long cj) {
        std::vector<long long> v(k, 0);
        v[i] += ci;
        if (j >= 0) v[j] += cj;
        return v;
    };
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            roots.push_back(vec(i, 2, j, -2));
            roots.push_back(vec(i, 2, j, 2));
        }
    if (fam == Family::B)
        for (int i = 0; i < k; ++i) roots.push_back(vec(i, 2, -1, 0));
    if (fam == Family::C)
        for (int i = 0; i < k; ++i) roots.push_back(vec(i, 4, -1, 0));
    return roots;
}

LaurentCharacter LaurentCharacter::constant(int rank, Int c) {
    LaurentCharacter r;
    r.rank = rank;
    if (c != 0) r.terms.emplace(std::vector<long long>(rank, 0), std::move(c));
    return r;
}

LaurentCharacter LaurentCharacter::operator*(const LaurentCharacter& o) const {
    if (rank != o.rank) throw std::invalid_argument("Laurent rank mismatch");
    LaurentCharacter r;
    r.rank = rank;
    r.eps_exp = (eps_exp + o.eps_exp) & 1;
    std::vector<long long> key(rank);
    for (auto& [ea, ca] : terms)
        for (auto& [eb, cb] : o.terms) {
            for (int i = 0; i < rank; ++i) key[i] = ea[i] + eb[i];
            auto it = r.terms.find(key);
            if (it == r.terms.end()) r.terms.emplace(key, ca * cb);
            else it->second += ca * cb;
        }
    std::erase_if(r.terms, [](const auto& kv) { return kv.second == 0; });
    return r;
}

LaurentCharacter LaurentCharacter::operator+(const LaurentCharacter& o) const {
    if (rank != o.rank) throw std::invalid_argument("Laurent rank mismatch");
    if (eps_exp != o.eps_exp && !terms.empty() && !o.terms.empty())
        throw std::invalid_argument("adding characters with different eps powers");
    LaurentCharacter r = *this;
    if (r.terms.empty()) r.eps_exp = o.eps_exp;
    for (auto& [e, c] : o.terms) {
        auto it = r.terms.find(e);
        if (it == r.terms.end()) r.terms.emplace(e, c);
        else {
            it->second += c;
            if (it->second == 0) r.terms.erase(it);
        }
    }
    return r;
}

Int LaurentCharacter::dimension() const {
    Int s = 0;
    for (auto& [e, c] : terms) s += c;
    return s;
}

std::string LaurentCharacter::to_string() const {
    std::ostringstream os;
    if (terms.empty()) return "0";
    bool first = true;
    for (auto& [e, c] : terms) {
        if (!first) os << " + ";
        first = false;
        os << c.get_str();
        if (eps_exp) os << "*eps";
        for (int i = 0; i < rank; ++i)
            if (e[i] != 0) {
                os << "*x" << (i + 1) << '^';
                if (e[i] % 2 == 0) os << e[i] / 2;
                else os << '(' << e[i] << "/2)";
            }
    }
    return os.str();
}

PowerSeries LaurentCharacter::to_series(const SeriesShape& sh) const {
    if (sh.p != rank) throw std::invalid_argument("to_series: x-group size mismatch");
    if (eps_exp && !sh.has_eps)
        throw std::invalid_argument("to_series: eps power present but shape has no eps");
    PowerSeries r(sh);
    for (auto& [e, c] : terms) {
        ExpVec v(sh.width(), 0);
        v[0] = sh.has_eps ? (eps_exp & 1) : 0;
        for (int i = 0; i < rank; ++i) {
            if (e[i] % 2 != 0) throw std::invalid_argument("to_series: half-integer exponent");
            v[1 + i] = static_cast<int>(e[i] / 2);
        }
        r.add_term(v, c);
    }
    r.normalize();
    return r;
}

namespace {

// Enumerate the Weyl group as (permutation, sign mask) pairs and fold
// det(w) e^{w(tau)} into an exponent->coefficient map.
void alternant_block(const RootSystemCase& rs, const std::vector<long long>& tau,
                     const std::vector<std::vector<int>>& perms, size_t plo, size_t phi,
                     std::map<std::vector<long long>, Int>& acc) {
    const int k = rs.rank;
    const bool even_only = rs.fam == Family::D;
    std::vector<long long> img(k);
    for (size_t pi = plo; pi < phi; ++pi) {
        const auto& perm = perms[pi];
        int psign = 1;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (perm[i] > perm[j]) psign = -psign;
        const unsigned masks = 1u << k;
        for (unsigned mask = 0; mask < masks; ++mask) {
            int flips = __builtin_popcount(mask);
            if (even_only && (flips & 1)) continue;
            // w = (signs) o (perm): coordinate perm[i] of the image receives
            // +-tau_i; equivalently image[j] = sign_j * tau_{perm^{-1}(j)}.
            for (int i = 0; i < k; ++i) {
                long long v = tau[i];
                if (mask & (1u << perm[i])) v = -v;
                img[perm[i]] = v;
            }
            int det = psign * ((flips & 1) ? -1 : 1);
            auto it = acc.find(img);
            if (it == acc.end()) acc.emplace(img, det);
            else {
                it->second += det;
                if (it->second == 0) acc.erase(it);
            }
        }
    }
}

std::vector<std::vector<int>> all_perms(int k) {
    std::vector<int> p(k);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

} // namespace

std::map<std::vector<long long>, Int> alternant_serial(const RootSystemCase& rs,
                                                       const GeneralizedVector& tau) {
    if (tau.length() != rs.rank) throw std::invalid_argument("alternant: length mismatch");
    auto perms = all_perms(rs.rank);
    std::map<std::vector<long long>, Int> acc;
    alternant_block(rs, tau.twice, perms, 0, perms.size(), acc);
    return acc;
}

std::map<std::vector<long long>, Int> alternant_parallel(const RootSystemCase& rs,
                                                         const GeneralizedVector& tau) {
    if (tau.length() != rs.rank) throw std::invalid_argument("alternant: length mismatch");
    auto perms = all_perms(rs.rank);
    int nthreads = 1;
#ifdef _OPENMP
    nthreads = omp_get_max_threads();
#endif
    if (nthreads <= 1 || perms.size() < 2) {
        std::map<std::vector<long long>, Int> acc;
        alternant_block(rs, tau.twice, perms, 0, perms.size(), acc);
        return acc;
    }
    std::vector<std::map<std::vector<long long>, Int>> parts(static_cast<size_t>(nthreads));
#pragma omp parallel num_threads(nthreads)
    {
#ifdef _OPENMP
        const int tid = omp_get_thread_num();
        const int nt = omp_get_num_threads();
#else
        const int tid = 0, nt = 1;
#endif
        const size_t lo = perms.size() * static_cast<size_t>(tid) / static_cast<size_t>(nt);
        const size_t hi = perms.size() * (static_cast<size_t>(tid) + 1) / static_cast<size_t>(nt);
        alternant_block(rs, tau.twice, perms, lo, hi, parts[static_cast<size_t>(tid)]);
    }
    auto total = std::move(parts[0]);
    for (size_t t = 1; t < parts.size(); ++t)
        for (auto& [e, c] : parts[t]) {
            auto it = total.find(e);
            if (it == total.end()) total.emplace(e, std::move(c));
            else {
                it->second += c;
                if (it->second == 0) total.erase(it);
            }
        }
    return total;
}

std::map<std::vector<long long>, Int> alternant(const RootSystemCase& rs,
                                                const GeneralizedVector& tau) {
    if (rs.rank >= 6) return alternant_parallel(rs, tau);
    return alternant_serial(rs, tau);
}

namespace {

std::vector<long long> vec_add(const std::vector<long long>& a, const std::vector<long long>& b) {
    std::vector<long long> r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

} // namespace

namespace {

struct CharCacheKey {
    Family fam;
    int rank;
    std::vector<long long> twice;
    auto operator<=>(const CharCacheKey&) const = default;
};

std::map<CharCacheKey, LaurentCharacter>& char_cache() {
    static std::map<CharCacheKey, LaurentCharacter> cache;
    return cache;
}

std::mutex& char_cache_mutex() {
    static std::mutex mu;
    return mu;
}

} // namespace

LaurentCharacter weyl_character(const RootSystemCase& rs, const GeneralizedVector& la) {
    if (!rs.dominant(la)) throw std::invalid_argument("weyl_character: weight not dominant");
    {
        std::lock_guard<std::mutex> lock(char_cache_mutex());
        auto it = char_cache().find(CharCacheKey{rs.fam, rs.rank, la.twice});
        if (it != char_cache().end()) return it->second;
    }
    LaurentCharacter out;
    out.rank = rs.rank;
    if (rs.rank == 0) {
        out.terms.emplace(std::vector<long long>{}, 1);
        return out;
    }
    const auto rho = rs.rho();
    auto numerator = alternant(rs, GeneralizedVector(vec_add(la.twice, rho.twice)));
    auto denom = alternant(rs, rho);
    // Exact division by iterated leading-term elimination in lex order.
    // The lex-leading denominator term is e^rho with coefficient +1 for B and C.
    // For D with rho ending in 0 the odd-flip images coincide pairwise, and the
    // leading coefficient is still +-1 by construction; assert it below.
    auto lead = [&](const std::map<std::vector<long long>, Int>& f) {
        return std::prev(f.end());
    };
    if (denom.empty()) throw std::logic_error("weyl_character: zero denominator");
    auto dl = lead(denom);
    if (dl->second != 1 && dl->second != -1)
        throw std::logic_error("weyl_character: non-unit leading denominator");
    std::map<std::vector<long long>, Int> rem = std::move(numerator);
    long long guard = 0;
    while (!rem.empty()) {
        if (++guard > 100000000LL) throw std::logic_error("weyl_character: division diverged");
        auto nl = lead(rem);
        std::vector<long long> q(rs.rank);
        for (int i = 0; i < rs.rank; ++i) q[i] = nl->first[i] - dl->first[i];
        Int qc = nl->second * dl->second;  // dl coefficient is +-1
        auto qit = out.terms.find(q);
        if (qit == out.terms.end()) out.terms.emplace(q, qc);
        else qit->second += qc;
        for (auto& [de, dc] : denom) {
            auto key = vec_add(q, de);
            auto it = rem.find(key);
            Int delta = qc * dc;
            if (it == rem.end()) {
                if (delta != 0) rem.emplace(std::move(key), -delta);
            } else {
                it->second -= delta;
                if (it->second == 0) rem.erase(it);
            }
        }
    }
    std::erase_if(out.terms, [](const auto& kv) { return kv.second == 0; });
    // The quotient must be the character: non-negative with unit top coefficient.
    for (auto& [e, c] : out.terms)
        if (c < 0) throw std::logic_error("weyl_character: negative coefficient in quotient");
    {
        std::lock_guard<std::mutex> lock(char_cache_mutex());
        char_cache().emplace(CharCacheKey{rs.fam, rs.rank, la.twice}, out);
    }
    return out;
}

Int weyl_dimension(const RootSystemCase& rs, const GeneralizedVector& la) {
    if (!rs.dominant(la)) throw std::invalid_argument("weyl_dimension: weight not dominant");
    const auto rho = rs.rho();
    const auto lr = vec_add(la.twice, rho.twice);
    Int num = 1, den = 1;
    for (const auto& a : rs.positive_roots()) {
        long long n1 = 0, d1 = 0;
        for (int i = 0; i < rs.rank; ++i) {
            n1 += a[i] * lr[i];
            d1 += a[i] * rho.twice[i];
        }
        num *= n1;
        den *= d1;
    }
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0) throw std::logic_error("weyl_dimension: non-exact division");
    return q;
}

namespace {

GeneralizedVector pad_weight(const Partition& la, int k) {
    std::vector<long long> t(k, 0);
    for (int i = 0; i < k; ++i) t[i] = 2LL * la.row(i);
    return GeneralizedVector(std::move(t));
}

} // namespace

LaurentCharacter o_character(int d, const Partition& la, bool with_eps) {
    Partition conj = la.conjugate();
    if (conj.row(0) + conj.row(1) > d)
        throw std::invalid_argument("o_character: lambda'_1 + lambda'_2 > d");
    if (d % 2 == 0) {
        const int k = d / 2;
        RootSystemCase rs{Family::D, k};
        Partition rep = conj.row(0) <= k ? la : la.bar(d);
        if (rep.length() == k && rep.row(k - 1) > 0) {
            auto w = pad_weight(rep, k);
            LaurentCharacter a = weyl_character(rs, w);
            w.twice[k - 1] = -w.twice[k - 1];
            return a + weyl_character(rs, w);
        }
        return weyl_character(rs, pad_weight(rep, k));
    }
    const int k = (d - 1) / 2;
    RootSystemCase rs{Family::B, k};
    Partition rep = conj.row(0) <= k ? la : la.bar(d);
    LaurentCharacter c = weyl_character(rs, pad_weight(rep, k));
    c.eps_exp = with_eps ? la.size() & 1 : 0;
    return c;
}

LaurentCharacter sp_group_character(int d, const Partition& la) {
    if (d % 2 != 0) throw std::invalid_argument("sp_group_character: d must be even");
    const int k = d / 2;
    if (la.length() > k) throw std::invalid_argument("sp_group_character: l(lambda) > d/2");
    return weyl_character(RootSystemCase{Family::C, k}, pad_weight(la, k));
}

Int o_dimension(int d, const Partition& la) {
    return o_character(d, la, false).dimension();
}

} // namespace superchar
