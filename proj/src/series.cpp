#include "superchar/series.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace superchar {

int capped_degree(const SeriesShape& sh, const ExpVec& e) {
    int d = 0;
    for (int i = 1 + sh.p; i < sh.width(); ++i) d += e[i];
    return d;
}

bool term_order_less(const SeriesShape& sh, const ExpVec& a, const ExpVec& b) {
    int da = capped_degree(sh, a), db = capped_degree(sh, b);
    if (da != db) return da < db;
    return a < b;
}

PowerSeries PowerSeries::one(const SeriesShape& sh) {
    return monomial(sh, ExpVec(sh.width(), 0), 1);
}

PowerSeries PowerSeries::monomial(const SeriesShape& sh, const ExpVec& e, Int c) {
    PowerSeries s(sh);
    s.add_term(e, c);
    s.normalize();
    return s;
}

ExpVec zero_exp(const SeriesShape& sh) { return ExpVec(sh.width(), 0); }

void PowerSeries::add_term(const ExpVec& e, const Int& c) {
    if (static_cast<int>(e.size()) != shape_.width())
        throw std::invalid_argument("add_term: exponent width mismatch");
    terms_.push_back(SeriesTerm{e, c});
}

void PowerSeries::normalize() {
    for (auto& t : terms_) {
        t.e[0] &= shape_.has_eps ? 1 : 0;
        for (int i = 1 + shape_.p; i < shape_.width(); ++i)
            if (t.e[i] < 0) throw std::logic_error("negative exponent in graded group");
    }
    std::sort(terms_.begin(), terms_.end(), [this](const SeriesTerm& a, const SeriesTerm& b) {
        return term_order_less(shape_, a.e, b.e);
    });
    std::vector<SeriesTerm> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (capped_degree(shape_, t.e) > shape_.cap) continue;
        if (!out.empty() && out.back().e == t.e) out.back().c += t.c;
        else out.push_back(std::move(t));
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const SeriesTerm& t) { return t.c == 0; }),
              out.end());
    terms_ = std::move(out);
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& o) {
    if (!(shape_ == o.shape_)) throw std::invalid_argument("series shape mismatch in +");
    for (auto& t : o.terms_) terms_.push_back(t);
    normalize();
    return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& o) {
    if (!(shape_ == o.shape_)) throw std::invalid_argument("series shape mismatch in -");
    for (auto& t : o.terms_) terms_.push_back(SeriesTerm{t.e, -t.c});
    normalize();
    return *this;
}

PowerSeries PowerSeries::operator+(const PowerSeries& o) const {
    PowerSeries r = *this;
    r += o;
    return r;
}

PowerSeries PowerSeries::operator-(const PowerSeries& o) const {
    PowerSeries r = *this;
    r -= o;
    return r;
}

PowerSeries PowerSeries::operator*(const PowerSeries& o) const { return series_mul(*this, o); }

bool PowerSeries::operator==(const PowerSeries& o) const {
    if (!(shape_ == o.shape_)) return false;
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].e != o.terms_[i].e || terms_[i].c != o.terms_[i].c) return false;
    return true;
}

PowerSeries PowerSeries::truncated(int new_cap) const {
    SeriesShape sh = shape_;
    sh.cap = new_cap;
    PowerSeries r(sh);
    for (auto& t : terms_)
        if (capped_degree(shape_, t.e) <= new_cap) r.terms_.push_back(t);
    return r;
}

Int PowerSeries::coefficient(const ExpVec& e) const {
    for (auto& t : terms_)
        if (t.e == e) return t.c;
    return 0;
}

Int PowerSeries::eval_all_ones() const {
    Int s = 0;
    for (auto& t : terms_) s += t.c;
    return s;
}

std::optional<PowerSeries::Mismatch> PowerSeries::first_mismatch(const PowerSeries& a,
                                                                 const PowerSeries& b) {
    size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
        if (i == a.terms_.size())
            return Mismatch{b.terms_[j].e, 0, b.terms_[j].c};
        if (j == b.terms_.size())
            return Mismatch{a.terms_[i].e, a.terms_[i].c, 0};
        const auto& ta = a.terms_[i];
        const auto& tb = b.terms_[j];
        if (ta.e == tb.e) {
            if (ta.c != tb.c) return Mismatch{ta.e, ta.c, tb.c};
            ++i; ++j;
        } else if (term_order_less(a.shape_, ta.e, tb.e)) {
            return Mismatch{ta.e, ta.c, 0};
        } else {
            return Mismatch{tb.e, 0, tb.c};
        }
    }
    return std::nullopt;
}

std::string PowerSeries::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& t : terms_) {
        if (!first) os << " + ";
        first = false;
        os << t.c.get_str();
        if (shape_.has_eps && t.e[0]) os << "*eps";
        auto put = [&](const std::string& nm, int base, int cnt) {
            for (int i = 0; i < cnt; ++i)
                if (t.e[base + i] != 0) {
                    os << '*' << nm;
                    if (cnt > 1) os << (i + 1);
                    if (t.e[base + i] != 1) os << '^' << t.e[base + i];
                }
        };
        put(shape_.xname, 1, shape_.p);
        put(shape_.yname, 1 + shape_.p, shape_.m);
        put(shape_.zname, 1 + shape_.p + shape_.m, shape_.n);
    }
    return os.str();
}

namespace {

struct ExpLess {
    bool operator()(const ExpVec& a, const ExpVec& b) const { return a < b; }
};

using Accum = std::map<ExpVec, Int, ExpLess>;

void accumulate_product_rows(const PowerSeries& a, const PowerSeries& b, size_t lo, size_t hi,
                             Accum& acc) {
    const SeriesShape& sh = a.shape();
    const int w = sh.width();
    ExpVec key(w);
    for (size_t i = lo; i < hi; ++i) {
        const auto& ta = a.terms()[i];
        const int da = capped_degree(sh, ta.e);
        for (const auto& tb : b.terms()) {
            if (da + capped_degree(sh, tb.e) > sh.cap) continue;
            key[0] = sh.has_eps ? (ta.e[0] ^ tb.e[0]) : 0;
            for (int t = 1; t < w; ++t) key[t] = ta.e[t] + tb.e[t];
            auto it = acc.find(key);
            if (it == acc.end()) acc.emplace(key, ta.c * tb.c);
            else it->second += ta.c * tb.c;
        }
    }
}

PowerSeries from_accum(const SeriesShape& sh, Accum&& acc) {
    PowerSeries r(sh);
    for (auto& [e, c] : acc)
        if (c != 0) r.add_term(e, c);
    r.normalize();
    return r;
}

} // namespace

PowerSeries series_mul_serial(const PowerSeries& a, const PowerSeries& b) {
    if (!(a.shape() == b.shape())) throw std::invalid_argument("series shape mismatch in *");
    Accum acc;
    accumulate_product_rows(a, b, 0, a.terms().size(), acc);
    return from_accum(a.shape(), std::move(acc));
}

PowerSeries series_mul_parallel(const PowerSeries& a, const PowerSeries& b) {
    if (!(a.shape() == b.shape())) throw std::invalid_argument("series shape mismatch in *");
    const size_t na = a.terms().size();
    int nthreads = 1;
#ifdef _OPENMP
    nthreads = omp_get_max_threads();
#endif
    if (nthreads <= 1 || na < 2) return series_mul_serial(a, b);

    std::vector<Accum> parts(static_cast<size_t>(nthreads));
#pragma omp parallel num_threads(nthreads)
    {
#ifdef _OPENMP
        const int tid = omp_get_thread_num();
        const int nt = omp_get_num_threads();
#else
        const int tid = 0;
        const int nt = 1;
#endif
        const size_t lo = na * static_cast<size_t>(tid) / static_cast<size_t>(nt);
        const size_t hi = na * (static_cast<size_t>(tid) + 1) / static_cast<size_t>(nt);
        accumulate_product_rows(a, b, lo, hi, parts[static_cast<size_t>(tid)]);
    }
    Accum total = std::move(parts[0]);
    for (size_t t = 1; t < parts.size(); ++t)
        for (auto& [e, c] : parts[t]) {
            auto it = total.find(e);
            if (it == total.end()) total.emplace(e, std::move(c));
            else it->second += c;
        }
    return from_accum(a.shape(), std::move(total));
}

PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b) {
    // Work estimate: pair count. Fall back to the serial kernel for small inputs.
    const size_t work = a.terms().size() * b.terms().size();
    if (work >= 1 << 14) return series_mul_parallel(a, b);
    return series_mul_serial(a, b);
}

PowerSeries geometric_expand(const SeriesShape& sh, const ExpVec& monomial) {
    if (static_cast<int>(monomial.size()) != sh.width())
        throw std::invalid_argument("geometric_expand: exponent width mismatch");
    const int step = capped_degree(sh, monomial);
    if (step <= 0)
        throw std::invalid_argument("geometric_expand: monomial has zero capped degree");
    PowerSeries r(sh);
    ExpVec cur(sh.width(), 0);
    for (int total = 0; total <= sh.cap; total += step) {
        r.add_term(cur, 1);
        cur[0] = sh.has_eps ? (cur[0] ^ monomial[0]) : 0;
        for (int i = 1; i < sh.width(); ++i) cur[i] += monomial[i];
    }
    r.normalize();
    return r;
}

PowerSeries one_plus(const SeriesShape& sh, const ExpVec& monomial) {
    PowerSeries r(sh);
    r.add_term(ExpVec(sh.width(), 0), 1);
    r.add_term(monomial, 1);
    r.normalize();
    return r;
}

} // namespace superchar
