#include "superchar/json_io.hpp"

namespace superchar {

json to_json(const Partition& p) {
    json a = json::array();
    for (int r : p.rows()) a.push_back(r);
    return a;
}

json to_json(const HookTableau& t) {
    json rows = json::array();
    for (auto& row : t.cells) {
        json jr = json::array();
        for (auto& c : row) {
            if (c.odd) jr.push_back(json{{"odd", c.letter}});
            else jr.push_back(json{{"even", c.letter}});
        }
        rows.push_back(jr);
    }
    return json{{"shape", to_json(t.shape)}, {"cells", rows}};
}

json to_json(const PowerSeries& s) {
    const auto& sh = s.shape();
    json terms = json::array();
    for (auto& t : s.terms()) {
        json exp;
        if (sh.p) {
            json x = json::array();
            for (int i = 0; i < sh.p; ++i) x.push_back(t.e[1 + i]);
            exp[sh.xname] = x;
        }
        if (sh.m) {
            json y = json::array();
            for (int i = 0; i < sh.m; ++i) y.push_back(t.e[1 + sh.p + i]);
            exp[sh.yname] = y;
        }
        if (sh.n) {
            json z = json::array();
            for (int i = 0; i < sh.n; ++i) z.push_back(t.e[1 + sh.p + sh.m + i]);
            exp[sh.zname] = z;
        }
        if (sh.has_eps) exp["eps"] = t.e[0];
        terms.push_back(json{{"exp", exp}, {"coeff", t.c.get_str()}});
    }
    return terms;
}

namespace {

std::string half_string(int num) {  // num/2 reduced
    if (num % 2 == 0) return std::to_string(num / 2);
    return std::to_string(num) + "/2";
}

} // namespace

json to_json(const CharacterResult& r) {
    const std::string even = r.pair == PairKind::OSp ? "y" : "x";
    json pref;
    pref[even] = half_string(r.d);
    pref["z"] = "-" + half_string(r.d);
    return json{{"prefactor", pref},
                {"combined_pair", r.combined},
                {"rank_used", r.rank_used},
                {"series", to_json(r.series)}};
}

json to_json(const SignGroupSpec& spec) {
    json idx = json::array();
    for (int i : spec.I) idx.push_back(i);
    return json{{"index_set", idx}, {"parity", spec.full ? "full" : "even"}};
}

json to_json(const CosetElement& w) {
    json f = json::array();
    for (int i : w.flips) f.push_back(i);
    return json{{"flip", f}, {"sign", w.sign}};
}

json to_json(const VerificationReport& r) {
    json j{{"identity", r.identity},
           {"params", {{"d", r.d}, {"m", r.m}, {"n", r.n}, {"degree", r.L}}},
           {"status", r.exact ? "exact-match" : "mismatch"},
           {"terms_checked", r.terms_checked}};
    if (!r.exact)
        j["first_mismatch"] = {{"monomial", r.mismatch_monomial},
                               {"lhs", r.lhs_coeff},
                               {"rhs", r.rhs_coeff}};
    return j;
}

json to_json(const TensorTable& t) {
    json entries = json::array();
    for (auto& [p, c] : t.coeff)
        entries.push_back(json{{"partition", to_json(p)}, {"coeff", c.get_str()}});
    return json{{"rank_used", t.rank_used}, {"table", entries}};
}

json to_json(const SuperPoly& p) {
    json terms = json::array();
    for (auto& [mo, c] : p.terms()) {
        json even = json::object();
        for (auto& [v, e] : mo.even)
            even["x_" + std::to_string(v.row) + "^" + std::to_string(v.col)] = e;
        json odd = json::array();
        for (auto& v : mo.odd)
            odd.push_back("eta_" + std::to_string(v.row) + "^" + std::to_string(v.col));
        terms.push_back(json{{"even", even}, {"odd", odd}, {"coeff", c.get_str()}});
    }
    return terms;
}

json to_json(const HarmonicReport& r) {
    json j{{"all_zero", r.all_zero}};
    if (!r.all_zero) j["offending"] = r.offending;
    return j;
}

json envelope(const std::string& command, json payload) {
    json j;
    j["schema"] = "superchar/1";
    j["command"] = command;
    j["result"] = std::move(payload);
    return j;
}

} // namespace superchar
