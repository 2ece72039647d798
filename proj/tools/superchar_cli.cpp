// Command-line surface: exact characters, identity verification and tensor
// decomposition with machine-readable output.
//
// Exit codes: 0 success / exact match, 1 verification mismatch, 2 usage error.

#include <CLI11.hpp>

#include <iostream>

#include "superchar/acceptance.hpp"
#include "superchar/json_io.hpp"

using namespace superchar;

namespace {

int g_exit = 0;
std::string g_format = "json";

void emit(const std::string& command, const json& payload, const std::string& text) {
    if (g_format == "text") std::cout << text << "\n";
    else std::cout << envelope(command, payload).dump(2) << "\n";
}

Partition parse_partition_arg(const std::string& s) {
    try {
        return Partition::parse(s);
    } catch (const std::exception& e) {
        throw CLI::ValidationError(std::string("bad partition '") + s + "': " + e.what());
    }
}

std::string series_text(const PowerSeries& s) { return s.to_string(); }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact characters of unitarizable spo/osp modules from Howe duality"};
    app.require_subcommand(1);
    app.add_option("--format", g_format, "output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));

    // hookschur <lambda> <m> <n>
    std::string hs_la;
    int hs_m = 0, hs_n = 0, hs_deg = 6;
    auto* hook = app.add_subcommand("hookschur", "hook Schur polynomial HS_lambda(y;z)");
    hook->add_option("lambda", hs_la)->required();
    hook->add_option("m", hs_m)->required();
    hook->add_option("n", hs_n)->required();
    hook->add_option("--degree", hs_deg, "truncation degree (series is finite anyway)");
    hook->callback([&] {
        Partition la = parse_partition_arg(hs_la);
        SeriesShape sh = super_shape(PairKind::OSp, hs_m, hs_n, std::max(hs_deg, la.size()));
        PowerSeries s = hook_schur_expand(la, sh);
        emit("hookschur", to_json(s), series_text(s));
    });

    // character {spo|osp} <lambda> <d> <m> <n> --degree L
    std::string ch_kind, ch_la;
    int ch_d = 0, ch_m = 0, ch_n = 0, ch_deg = 6;
    auto* chr = app.add_subcommand("character", "spo/osp module character series");
    chr->add_option("kind", ch_kind)->required()->check(CLI::IsMember({"spo", "osp"}));
    chr->add_option("lambda", ch_la)->required();
    chr->add_option("d", ch_d)->required();
    chr->add_option("m", ch_m)->required();
    chr->add_option("n", ch_n)->required();
    chr->add_option("--degree", ch_deg);
    chr->callback([&] {
        Partition la = parse_partition_arg(ch_la);
        CharacterResult r = ch_kind == "spo" ? spo_character(la, ch_d, ch_m, ch_n, ch_deg)
                                             : osp_character(la, ch_d, ch_m, ch_n, ch_deg);
        emit("character", to_json(r), series_text(r.series));
    });

    // trivial-character {O|Sp} <d> <m> <n> --degree L
    std::string tv_g;
    int tv_d = 0, tv_m = 0, tv_n = 0, tv_deg = 6;
    auto* triv = app.add_subcommand("trivial-character",
                                    "invariants character by trivial-weight expansion");
    triv->add_option("group", tv_g)->required()->check(CLI::IsMember({"O", "Sp"}));
    triv->add_option("d", tv_d)->required();
    triv->add_option("m", tv_m)->required();
    triv->add_option("n", tv_n)->required();
    triv->add_option("--degree", tv_deg);
    triv->callback([&] {
        PairKind pair = tv_g == "O" ? PairKind::OSp : PairKind::SpO;
        HsSeries hs = trivial_hs(pair, tv_d, tv_m, tv_n, tv_deg);
        SeriesShape sh = super_shape(pair, tv_m, tv_n, tv_deg);
        PowerSeries full = hs.series * pair_product_factor(pair, sh);
        json payload{{"hs_terms", json::array()}, {"series", to_json(full)}};
        for (auto& [p, c] : hs.parts.terms)
            payload["hs_terms"].push_back(json{{"partition", to_json(p)}, {"coeff", c.get_str()}});
        emit("trivial-character", payload, series_text(full));
    });

    // verify <identity> <params...> --degree L
    std::string vf_id;
    std::vector<std::string> vf_params;
    int vf_deg = 6;
    auto* ver = app.add_subcommand("verify", "verify a displayed character identity");
    ver->add_option("identity", vf_id)->required();
    ver->add_option("params", vf_params, "d m [n] or lambda d m n for truncation-*");
    ver->add_option("--degree", vf_deg);
    ver->callback([&] {
        VerificationReport rep;
        if (vf_id == "truncation-sp" || vf_id == "truncation-so") {
            if (vf_params.size() != 4)
                throw CLI::ValidationError("truncation-* needs: lambda d m n");
            Partition la = parse_partition_arg(vf_params[0]);
            rep = verify_truncation_stability(la, std::stoi(vf_params[1]),
                                              std::stoi(vf_params[2]), std::stoi(vf_params[3]),
                                              vf_deg,
                                              vf_id == "truncation-sp" ? PairKind::OSp
                                                                       : PairKind::SpO);
        } else {
            auto id = identity_from_name(vf_id);
            if (!id) throw CLI::ValidationError("unknown identity '" + vf_id + "'");
            int d = 0, m = 0, n = 0;
            bool super = *id == IdentityId::glgl || *id == IdentityId::evenchar3 ||
                         *id == IdentityId::oddchar3 || *id == IdentityId::spsuper ||
                         *id == IdentityId::invO || *id == IdentityId::invSp;
            if (super) {
                if (vf_params.size() != 3) throw CLI::ValidationError("identity needs: d m n");
                d = std::stoi(vf_params[0]);
                m = std::stoi(vf_params[1]);
                n = std::stoi(vf_params[2]);
            } else {
                if (vf_params.size() != 2) throw CLI::ValidationError("identity needs: d m");
                d = std::stoi(vf_params[0]);
                m = std::stoi(vf_params[1]);
            }
            rep = verify_identity(*id, d, m, n, vf_deg);
        }
        if (!rep.exact) g_exit = 1;
        emit("verify", to_json(rep),
             rep.identity + ": " + (rep.exact ? "exact-match" : "mismatch at " +
                                                                    rep.mismatch_monomial));
    });

    // tensor {spo|osp} <mu> <gamma> <d> <r> <m> <n> [--rank k]
    std::string tn_kind, tn_mu, tn_ga;
    int tn_d = 0, tn_r = 0, tn_m = 0, tn_n = 0, tn_rank = -1;
    auto* ten = app.add_subcommand("tensor", "tensor product multiplicities");
    ten->add_option("kind", tn_kind)->required()->check(CLI::IsMember({"spo", "osp"}));
    ten->add_option("mu", tn_mu)->required();
    ten->add_option("gamma", tn_ga)->required();
    ten->add_option("d", tn_d)->required();
    ten->add_option("r", tn_r)->required();
    ten->add_option("m", tn_m)->required();
    ten->add_option("n", tn_n)->required();
    ten->add_option("--rank", tn_rank, "classical rank k (window lambda_1 <= k)");
    ten->callback([&] {
        TensorTable t = super_tensor_coeffs(parse_partition_arg(tn_mu),
                                            parse_partition_arg(tn_ga), tn_d, tn_r, tn_m, tn_n,
                                            tn_kind == "spo" ? SuperKind::spo : SuperKind::osp,
                                            tn_rank);
        std::string txt;
        for (auto& [p, c] : t.coeff) txt += p.to_string() + ": " + c.get_str() + "\n";
        emit("tensor", to_json(t), txt.empty() ? "(empty)" : txt);
    });

    // wgroup {spo|osp} <lambda> <d> <m> [--bruteforce]
    std::string wg_kind, wg_la;
    int wg_d = 0, wg_m = 0;
    bool wg_bf = false;
    auto* wgr = app.add_subcommand("wgroup", "index set and parity of W_{lambda+d/2}");
    wgr->add_option("kind", wg_kind)->required()->check(CLI::IsMember({"spo", "osp"}));
    wgr->add_option("lambda", wg_la)->required();
    wgr->add_option("d", wg_d)->required();
    wgr->add_option("m", wg_m)->required();
    wgr->add_flag("--bruteforce", wg_bf, "use the root-scan oracle instead of the closed form");
    wgr->callback([&] {
        PairKind pair = wg_kind == "spo" ? PairKind::OSp : PairKind::SpO;
        Partition la = parse_partition_arg(wg_la);
        SignGroupSpec spec = wg_bf ? bruteforce_wlambda(la, wg_d, wg_m, pair)
                                   : closed_index_set(la, wg_d, wg_m, pair);
        std::string txt = "I = {";
        for (size_t i = 0; i < spec.I.size(); ++i)
            txt += (i ? "," : "") + std::to_string(spec.I[i]);
        txt += std::string("}, ") + (spec.full ? "full" : "even");
        emit("wgroup", to_json(spec), txt);
    });

    // hwv-check <lambda> <d> <m> <n> {O|Sp}
    std::string hv_la, hv_side;
    int hv_d = 0, hv_m = 0, hv_n = 0;
    auto* hwv = app.add_subcommand("hwv-check", "harmonicity of the joint highest weight vector");
    hwv->add_option("lambda", hv_la)->required();
    hwv->add_option("d", hv_d)->required();
    hwv->add_option("m", hv_m)->required();
    hwv->add_option("n", hv_n)->required();
    hwv->add_option("side", hv_side)->required()->check(CLI::IsMember({"O", "Sp"}));
    hwv->callback([&] {
        HarmonicReport rep = check_highest_harmonic(parse_partition_arg(hv_la), hv_d, hv_m, hv_n,
                                                    hv_side == "O" ? DualSide::O : DualSide::Sp);
        if (!rep.all_zero) g_exit = 1;
        emit("hwv-check", to_json(rep),
             rep.all_zero ? "all operators annihilate the vector"
                          : "non-zero image under " + rep.offending);
    });

    // selftest [--quick]
    bool st_quick = false;
    auto* st = app.add_subcommand("selftest", "run the acceptance criteria");
    st->add_flag("--quick", st_quick, "reduced grids, finishes in under a minute");
    st->callback([&] {
        auto results = run_acceptance(st_quick);
        int failures = report_acceptance(results);
        if (failures > 0) g_exit = 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return g_exit;
}
