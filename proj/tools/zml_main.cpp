// zml: batch front door.  Subcommands rmt | hybrid | zeta | selftest.
// Exit codes: 0 success, 2 usage error, 3 accuracy failure.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "zml/acceptance.hpp"
#include "zml/common.hpp"
#include "zml/euler.hpp"
#include "zml/exact.hpp"
#include "zml/hybrid.hpp"
#include "zml/io.hpp"
#include "zml/rmt.hpp"
#include "zml/zeta.hpp"

namespace {

using namespace zml;

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(std::stoi(tok));
    return out;
}

std::vector<std::size_t> parse_size_list(const std::string& s) {
    std::vector<std::size_t> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(std::stoull(tok));
    return out;
}

struct Emit {
    std::string format = "csv";
    std::string out_path;
    std::string config;  // resolved config string, hashed into every row

    void write(io::Table& table) const {
        std::uint64_t h = io::config_hash(config);
        table.columns.push_back("config_hash");
        table.columns.push_back("version");
        for (auto& row : table.rows) {
            std::ostringstream hs;
            hs << std::hex << h;
            row.push_back(hs.str());
            row.push_back(io::ARTIFACT_VERSION);
        }
        if (out_path.empty()) {
            table.write(std::cout, format);
        } else {
            std::ofstream f(out_path);
            table.write(f, format);
        }
    }
};

int cmd_rmt(const std::string& orders_s, const std::string& ns, int kflag,
            std::uint64_t samples, std::uint64_t seed, const Emit& emit) {
    std::vector<int> orders = parse_int_list(orders_s);
    if (orders.empty()) {
        std::cerr << "rmt: --orders is required (comma-separated n_1,..,n_k)\n";
        return 2;
    }
    for (int n : orders)
        if (n < 1) {
            std::cerr << "rmt: derivative orders must be positive\n";
            return 2;
        }
    if (kflag != 0 && kflag != int(orders.size())) {
        std::cerr << "rmt: --k disagrees with the number of --orders entries\n";
        return 2;
    }
    io::Table t;
    t.columns = {"N",        "orders", "mc_mean",      "mc_se",  "exact",
                 "theorem3", "ratio_exact_pred", "ratio_mc_exact", "seed"};
    for (std::size_t N : parse_size_list(ns)) {
        rmt::MixedMomentSpec spec{int(N), orders};
        rmt::McEstimate mc = rmt::mixed_moment_mc(spec, samples, {seed, 0});
        exact::ExtractResult ex = exact::derivative_moment(spec);
        if (ex.residual > 1e-8) {
            std::cerr << "rmt: coefficient extraction residual " << ex.residual
                      << " above 1e-8\n";
            return 3;
        }
        cplx pred = exact::theorem3_prediction(spec);
        t.rows.push_back({std::to_string(N), orders_s, fmt17(mc.mean),
                          fmt17(mc.standard_error), fmt17(ex.value), fmt17(pred),
                          fmt17(ex.value / pred), fmt17(mc.mean / ex.value),
                          std::to_string(seed)});
    }
    emit.write(t);
    return 0;
}

int cmd_hybrid_smcheck(double logx, double y, const Emit& emit) {
    hybrid::HybridParams params{std::exp(logx), 1, hybrid::SmoothingKernel(y)};
    io::Table t;
    t.columns = {"m", "s_m_closed", "s_m_numeric", "abs_delta"};
    double worst = 0.0;
    int mmax = 2 * int(std::ceil(logx));
    for (int m = 0; m <= mmax; ++m) {
        cplx num = hybrid::s_m_numeric(params, 1.0, m);
        cplx cls = hybrid::s_m_closed_form(params, 1.0, m);
        worst = std::max(worst, std::abs(num - cls));
        t.rows.push_back({std::to_string(m), fmt17(cls), fmt17(num),
                          fmt17(std::abs(num - cls))});
    }
    emit.write(t);
    std::cerr << "max |delta s_m| = " << fmt17(worst) << "\n";
    return worst <= 1e-6 ? 0 : 3;
}

int cmd_hybrid_t13(double k, int N, double logx, double y, std::uint64_t samples,
                   std::uint64_t seed, const Emit& emit) {
    if (k <= -2.5 && std::abs(k - std::round(k)) < 1e-9) {
        std::cerr << "hybrid t13: k in {-3,-4,...} is excluded by Theorem 13\n";
        return 2;
    }
    hybrid::HybridParams params{std::exp(logx), N, hybrid::SmoothingKernel(y)};
    cplx pred = hybrid::theorem13_prediction(k, N);
    cplx assembled = hybrid::theorem13_assembled(params, k);
    rmt::McEstimate mc = hybrid::hybrid_moment_mc(params, k, samples, {seed, 0});
    io::Table t;
    t.columns = {"k",  "N",         "logx",     "mc_mean", "mc_se",
                 "assembled", "prediction", "ratio_mc_pred", "seed"};
    t.rows.push_back({fmt17(k), std::to_string(N), fmt17(logx), fmt17(mc.mean),
                      fmt17(mc.standard_error), fmt17(assembled), fmt17(pred),
                      fmt17(mc.mean / pred), std::to_string(seed)});
    emit.write(t);
    return 0;
}

int cmd_zeta_moments(const std::string& zeros, const std::string& orders_s,
                     const std::string& checkpoints_s, const std::string& cache,
                     const Emit& emit) {
    if (zeros.empty()) {
        std::cerr << "zeta moments: --zeros is required\n";
        return 2;
    }
    std::vector<int> orders = parse_int_list(orders_s);
    zeta::ZeroDataset ds = zeta::load_zeros(zeros);
    io::Table t;
    t.columns = {"checkpoint", "T", "count", "sum", "normalized",
                 "prediction_log_t_over_2pi", "prediction_log_t", "ratio"};
    for (std::size_t cp : parse_size_list(checkpoints_s)) {
        if (cp == 0 || cp > ds.count()) {
            std::cerr << "zeta moments: checkpoint " << cp
                      << " outside the dataset (count " << ds.count() << ")\n";
            return 2;
        }
        double T = ds.ordinates[cp - 1] + 1e-9;
        auto rep = zeta::discrete_moment(ds, orders, T, {}, cache);
        t.rows.push_back({std::to_string(cp), fmt17(rep.T), std::to_string(rep.count),
                          fmt17(rep.sum), fmt17(rep.normalized), fmt17(rep.prediction),
                          fmt17(rep.prediction_logt), fmt17(rep.ratio)});
    }
    emit.write(t);
    return 0;
}

int cmd_zeta_landau(const std::string& zeros, std::uint64_t m, const Emit& emit) {
    if (zeros.empty()) {
        std::cerr << "zeta landau: --zeros is required\n";
        return 2;
    }
    if (m < 2) {
        std::cerr << "zeta landau: m = 1 is excluded (Lemma 12 does not apply)\n";
        return 2;
    }
    zeta::ZeroDataset ds = zeta::load_zeros(zeros);
    double T = ds.ordinates.back() + 1e-9;
    auto rep = zeta::landau_empirical(ds, m, T);
    io::Table t;
    t.columns = {"m", "T", "empirical", "predicted", "ratio"};
    t.rows.push_back({std::to_string(m), fmt17(T), fmt17(rep.empirical),
                      fmt17(rep.predicted),
                      fmt17(rep.predicted != 0.0 ? rep.empirical / rep.predicted
                                                 : cplx(0.0))});
    emit.write(t);
    return 0;
}

int cmd_zeta_px(const std::string& zeros, double k, const std::string& x_s,
                const std::string& orders_s, const Emit& emit) {
    if (zeros.empty()) {
        std::cerr << "zeta px: --zeros is required\n";
        return 2;
    }
    zeta::ZeroDataset ds = zeta::load_zeros(zeros);
    double T = ds.ordinates.back() + 1e-9;
    double X = (x_s == "auto") ? std::log(T) : std::stod(x_s);
    std::vector<int> orders = parse_int_list(orders_s);
    cplx sum = zeta::p_x_sum_over_zeros(ds, X, orders, T, k);
    auto pred = euler::theorem8_prediction(X, orders.empty() ? std::vector<int>{0} : orders, T);
    const char* cls = pred.cls == euler::Theorem8Class::ALL_ZERO     ? "ALL_ZERO"
                      : pred.cls == euler::Theorem8Class::ONE_NONZERO ? "ONE_NONZERO"
                                                                      : "MANY_NONZERO";
    io::Table t;
    t.columns = {"k", "X", "T", "count", "sum", "sum_over_count", "main_term", "error_class"};
    t.rows.push_back({fmt17(k), fmt17(X), fmt17(T), std::to_string(ds.count()),
                      fmt17(sum), fmt17(sum / double(ds.count())), fmt17(pred.main), cls});
    emit.write(t);
    return 0;
}

int cmd_zeta_gen(std::size_t count, const std::string& out) {
    std::vector<double> zeros = zeta::generate_zeros(count);
    std::ofstream f(out);
    if (!f) {
        std::cerr << "gen-zeros: cannot open " << out << "\n";
        return 2;
    }
    for (double g : zeros) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.12f\n", g);
        f << buf;
    }
    std::cerr << "gen-zeros: wrote " << zeros.size() << " ordinates to " << out << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"moments of zeta derivatives: CUE laboratory and zero-data verifier"};
    app.require_subcommand(1);

    std::string format = "csv", out_path;
    app.add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", out_path, "output file (default stdout)");

    // rmt
    auto* rmt_cmd = app.add_subcommand("rmt", "CUE moment pipeline: MC vs exact vs prediction");
    std::string rmt_orders, rmt_ns = "25,50,100";
    int rmt_k = 0;
    std::uint64_t rmt_samples = 100000, rmt_seed = 1;
    rmt_cmd->add_option("--orders", rmt_orders, "derivative orders n_1,..,n_k");
    rmt_cmd->add_option("--n", rmt_ns, "matrix sizes, comma separated");
    rmt_cmd->add_option("--k", rmt_k, "number of factors (consistency check)");
    rmt_cmd->add_option("--samples", rmt_samples, "MC samples");
    rmt_cmd->add_option("--seed", rmt_seed, "master seed");

    // hybrid
    auto* hyb = app.add_subcommand("hybrid", "hybrid-model checks");
    auto* smc = hyb->add_subcommand("smcheck", "Lemma 14 closed form vs quadrature");
    double smc_logx = 5.0, smc_y = 10.0;
    smc->add_option("--logx", smc_logx, "log X");
    smc->add_option("--y", smc_y, "kernel scale Y");
    auto* t13 = hyb->add_subcommand("t13", "Theorem 13 MC vs prediction");
    double t13_k = 1.0, t13_logx = 5.0, t13_y = 10.0;
    int t13_n = 100;
    std::uint64_t t13_samples = 100000, t13_seed = 1;
    t13->add_option("--k", t13_k, "moment power k");
    t13->add_option("--n", t13_n, "matrix size N");
    t13->add_option("--logx", t13_logx, "log X");
    t13->add_option("--y", t13_y, "kernel scale Y");
    t13->add_option("--samples", t13_samples, "MC samples");
    t13->add_option("--seed", t13_seed, "master seed");

    // zeta
    auto* zet = app.add_subcommand("zeta", "zero-data verifier");
    auto* mom = zet->add_subcommand("moments", "discrete moments vs Conjecture 4");
    std::string mom_zeros, mom_orders = "1", mom_checkpoints = "1000,10000,100000",
                mom_cache;
    mom->add_option("--zeros", mom_zeros, "zero-ordinate file");
    mom->add_option("--orders", mom_orders, "derivative orders");
    mom->add_option("--checkpoints", mom_checkpoints, "zero-count checkpoints");
    mom->add_option("--cache", mom_cache, "JSON-lines result cache path");
    auto* lan = zet->add_subcommand("landau", "Lemma 12 empirical vs main term");
    std::string lan_zeros;
    std::uint64_t lan_m = 2;
    lan->add_option("--zeros", lan_zeros, "zero-ordinate file");
    lan->add_option("--m", lan_m, "integer m >= 2");
    auto* px = zet->add_subcommand("px", "Theorem 8/9 P_X sums over zeros");
    std::string px_zeros, px_x = "auto", px_orders;
    double px_k = 1.0;
    px->add_option("--zeros", px_zeros, "zero-ordinate file");
    px->add_option("--k", px_k, "real power k");
    px->add_option("--x", px_x, "cutoff X or 'auto' (= log T)");
    px->add_option("--orders", px_orders, "derivative orders (empty = plain power)");
    auto* gen = zet->add_subcommand("gen-zeros", "generate the first ordinates (Riemann-Siegel)");
    std::size_t gen_count = 100000;
    std::string gen_out = "zeros.txt";
    gen->add_option("--count", gen_count, "how many ordinates");
    gen->add_option("--out", gen_out, "output file");

    // selftest
    auto* st = app.add_subcommand("selftest", "acceptance suite");
    std::string st_criteria, st_zeros, st_zml;
    std::uint64_t st_seed = 20260826;
    st->add_option("--criteria", st_criteria, "subset, e.g. 1,2,3 (default all)");
    st->add_option("--zeros", st_zeros, "zero-ordinate file for criteria 9-11");
    st->add_option("--zml", st_zml, "path to this binary (criterion 12 respawns it)");
    st->add_option("--seed", st_seed, "master seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Emit emit;
    emit.format = format;
    emit.out_path = out_path;
    {
        std::ostringstream cfg;
        for (int i = 1; i < argc; ++i) cfg << argv[i] << " ";
        emit.config = cfg.str();
    }

    try {
        if (rmt_cmd->parsed())
            return cmd_rmt(rmt_orders, rmt_ns, rmt_k, rmt_samples, rmt_seed, emit);
        if (hyb->parsed()) {
            if (smc->parsed()) return cmd_hybrid_smcheck(smc_logx, smc_y, emit);
            if (t13->parsed())
                return cmd_hybrid_t13(t13_k, t13_n, t13_logx, t13_y, t13_samples,
                                      t13_seed, emit);
            std::cerr << "hybrid: expected a subcommand (smcheck | t13)\n";
            return 2;
        }
        if (zet->parsed()) {
            if (mom->parsed())
                return cmd_zeta_moments(mom_zeros, mom_orders, mom_checkpoints,
                                        mom_cache, emit);
            if (lan->parsed()) return cmd_zeta_landau(lan_zeros, lan_m, emit);
            if (px->parsed()) return cmd_zeta_px(px_zeros, px_k, px_x, px_orders, emit);
            if (gen->parsed()) return cmd_zeta_gen(gen_count, gen_out);
            std::cerr << "zeta: expected a subcommand (moments | landau | px | gen-zeros)\n";
            return 2;
        }
        if (st->parsed()) {
            zml::accept::Options o;
            o.zeros_path = st_zeros;
            o.zml_binary = st_zml;
            o.seed = st_seed;
            o.criteria = parse_int_list(st_criteria);
            bool ok = zml::accept::run_all(o, std::cout);
            return ok ? 0 : 3;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
