#include "zml/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "zml/io.hpp"
#include "zml/special.hpp"

namespace zml::zeta {

namespace {

// B_2, B_4, ..., B_24
const double BERN2J[12] = {1.0 / 6,       -1.0 / 30,       1.0 / 42,
                           -1.0 / 30,     5.0 / 66,        -691.0 / 2730,
                           7.0 / 6,       -3617.0 / 510,   43867.0 / 798,
                           -174611.0 / 330, 854513.0 / 138, -236364091.0 / 2730};

// order-2 truncated Taylor arithmetic in s: (value, d/ds, d2/ds2)
struct Jet {
    cplx v{0.0}, d1{0.0}, d2{0.0};
    Jet operator+(const Jet& o) const { return {v + o.v, d1 + o.d1, d2 + o.d2}; }
    Jet operator*(const Jet& o) const {
        return {v * o.v, v * o.d1 + d1 * o.v, v * o.d2 + 2.0 * d1 * o.d1 + d2 * o.v};
    }
    Jet operator*(double c) const { return {v * c, d1 * c, d2 * c}; }
};

// n^{-s} as a jet in s
Jet pow_jet(double logn, cplx s) {
    cplx e = std::exp(-s * logn);
    return {e, -logn * e, logn * logn * e};
}

// 1/(s-1) as a jet
Jet inv_sm1_jet(cplx s) {
    cplx r = 1.0 / (s - 1.0);
    return {r, -r * r, 2.0 * r * r * r};
}

Jet zeta_em_jet(cplx s, const ZetaEvalConfig& cfg) {
    if (s == cplx(1.0)) throw std::domain_error("zeta: pole at s = 1");
    const long N0 = std::max(long(cfg.em_floor), long(2.0 * std::abs(s.imag())) + 1);
    const double logN0 = std::log(double(N0));

    Jet sum;
    {
        CompensatedCplxSum v, d1, d2;
        for (long n = 1; n < N0; ++n) {
            Jet t = pow_jet(std::log(double(n)), s);
            v.add(t.v);
            d1.add(t.d1);
            d2.add(t.d2);
        }
        sum = {v.value(), d1.value(), d2.value()};
    }

    Jet NS = pow_jet(logN0, s);                  // N0^{-s}
    Jet tail = NS * Jet{double(N0), 0.0, 0.0} * inv_sm1_jet(s);  // N0^{1-s}/(s-1)
    Jet half = NS * 0.5;

    Jet corr;
    {
        // sum_j B_{2j}/(2j)! (s)(s+1)...(s+2j-2) N0^{-s-2j+1}
        Jet poch{1.0, 0.0, 0.0};  // running Pochhammer (s)...(s+i-1)
        double fact = 1.0;        // (2j)!
        int i = 0;                // factors multiplied so far
        for (int j = 1; j <= cfg.bernoulli_terms && j <= 12; ++j) {
            while (i < 2 * j - 1) {
                poch = poch * Jet{s + double(i), 1.0, 0.0};
                ++i;
            }
            fact *= (2 * j - 1) * (2 * j);
            Jet nterm = pow_jet(logN0, s) * Jet{std::pow(double(N0), -(2.0 * j - 1.0)), 0.0, 0.0};
            corr = corr + poch * nterm * (BERN2J[j - 1] / fact);
        }
    }
    return sum + tail + half + corr;
}

}  // namespace

cplx zeta_eval(cplx s, const ZetaEvalConfig& config) {
    return zeta_em_jet(s, config).v;
}

std::array<cplx, 3> zeta_jet012(cplx s, const ZetaEvalConfig& config) {
    Jet j = zeta_em_jet(s, config);
    return {j.v, j.d1, j.d2};
}

cplx zeta_derivative(cplx s, int n, const ZetaEvalConfig& config) {
    if (n < 0 || n > 8)
        throw std::invalid_argument("zeta_derivative: n in [0, 8] at default precision");
    if (n == 0) return zeta_eval(s, config);
    const double r = config.contour_radius;
    if (std::abs(s - cplx(1.0)) <= r)
        throw std::domain_error("zeta_derivative: contour encloses the pole");
    const int M = 1 << 8;
    CompensatedCplxSum acc;
    for (int t = 0; t < M; ++t) {
        double phi = 2 * PI * t / M;
        cplx w = s + std::polar(r, phi);
        acc.add(zeta_eval(w, config) * std::polar(1.0, -n * phi));
    }
    double factn = 1.0;
    for (int j = 2; j <= n; ++j) factn *= j;
    return factn * acc.value() / double(M) / std::pow(r, n);
}

std::uint64_t ZeroDataset::content_hash() const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (double g : ordinates) {
        std::uint64_t bits;
        std::memcpy(&bits, &g, sizeof bits);
        for (int i = 0; i < 8; ++i) {
            h ^= (bits >> (8 * i)) & 0xff;
            h *= 0x100000001b3ULL;
        }
    }
    return h;
}

ZeroDataset load_zeros(const std::string& path, std::size_t limit) {
    std::ifstream in(path);
    if (!in) throw ParseError("load_zeros: cannot open " + path);
    ZeroDataset ds;
    ds.source = path;
    std::string line;
    std::size_t lineno = 0;
    double prev = 0.0;
    while (std::getline(in, line)) {
        ++lineno;
        // trim
        std::size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;  // blank lines ignored
        std::size_t b = line.find_last_not_of(" \t\r");
        std::string tok = line.substr(a, b - a + 1);
        char* end = nullptr;
        double v = std::strtod(tok.c_str(), &end);
        if (end != tok.c_str() + tok.size())
            throw ParseError("load_zeros: non-numeric line " + std::to_string(lineno));
        if (v <= prev)
            throw ParseError("load_zeros: non-ascending ordinate at line " +
                             std::to_string(lineno));
        prev = v;
        ds.ordinates.push_back(v);
        if (limit && ds.ordinates.size() >= limit) break;
    }
    return ds;
}

std::size_t n_of_t(const ZeroDataset& dataset, double T) {
    return std::upper_bound(dataset.ordinates.begin(), dataset.ordinates.end(), T) -
           dataset.ordinates.begin();
}

double n_of_t_formula(double T) {
    return T / (2 * PI) * std::log(T / (2 * PI * std::exp(1.0)));
}

cplx conjecture_prediction(const std::vector<int>& orders, double T) {
    int total = 0, k = int(orders.size());
    double fact_prod = 1.0;
    for (int n : orders) {
        total += n;
        for (int j = 2; j <= n; ++j) fact_prod *= j;
    }
    double denom = 1.0;
    for (int j = 2; j <= total + 1; ++j) denom *= j;
    double sign = ((total + k) % 2 == 0) ? 1.0 : -1.0;
    return sign * fact_prod / denom * std::pow(std::log(T / (2 * PI)), total);
}

cplx conjecture6_prediction(cplx k, double T) {
    if (k.real() <= -3.0)
        throw std::domain_error("conjecture6_prediction: Re k <= -3 rejected");
    return std::exp(k * std::log(std::log(T / (2 * PI)))) /
           special::gamma(k + 2.0);
}

DiscreteMomentReport discrete_moment(const ZeroDataset& dataset,
                                     const std::vector<int>& orders, double T,
                                     const ZetaEvalConfig& config,
                                     const std::string& cache_path) {
    DiscreteMomentReport rep;
    rep.T = T;
    rep.count = n_of_t(dataset, T);
    if (rep.count == 0) throw std::domain_error("discrete_moment: empty range");

    int max_order = 0;
    for (int n : orders) max_order = std::max(max_order, n);

    std::string key;
    std::optional<io::ResultCache> cache;
    if (!cache_path.empty()) {
        std::ostringstream ks;
        ks << std::hex << dataset.content_hash() << std::dec << "|discrete_moment|T="
           << fmt17(T) << "|orders=";
        for (int n : orders) ks << n << ",";
        key = ks.str();
        cache.emplace(cache_path);
        if (auto hit = cache->lookup(key)) {
            auto j = nlohmann::json::parse(*hit);
            rep.sum = {j["sum_re"].get<double>(), j["sum_im"].get<double>()};
        }
    }

    if (rep.sum == cplx(0.0) || cache_path.empty()) {
        CompensatedCplxSum acc;
        for (std::size_t i = 0; i < rep.count; ++i) {
            cplx s(0.5, dataset.ordinates[i]);
            cplx prod = 1.0;
            if (orders.empty()) {
                prod = 1.0;
            } else if (max_order <= 2) {
                auto j = zeta_jet012(s, config);
                for (int n : orders) prod *= j[n];
            } else {
                for (int n : orders) prod *= zeta_derivative(s, n, config);
            }
            acc.add(prod);
        }
        rep.sum = acc.value();
        if (cache) {
            nlohmann::json j;
            j["sum_re"] = rep.sum.real();
            j["sum_im"] = rep.sum.imag();
            j["count"] = rep.count;
            cache->store(key, j.dump());
        }
    }

    rep.normalized = rep.sum / double(rep.count);
    rep.prediction = conjecture_prediction(orders, T);
    {
        // same leading order with the bare log T normalization (reported, not chosen)
        int total = 0, k = int(orders.size());
        double fact_prod = 1.0;
        for (int n : orders) {
            total += n;
            for (int j = 2; j <= n; ++j) fact_prod *= j;
        }
        double denom = 1.0;
        for (int j = 2; j <= total + 1; ++j) denom *= j;
        double sign = ((total + k) % 2 == 0) ? 1.0 : -1.0;
        rep.prediction_logt = sign * fact_prod / denom * std::pow(std::log(T), total);
    }
    rep.ratio = rep.prediction == cplx(0.0) ? cplx(0.0) : rep.normalized / rep.prediction;
    return rep;
}

cplx p_x_sum_over_zeros(const ZeroDataset& dataset, double X,
                        const std::vector<int>& orders, double T, double k) {
    std::size_t count = n_of_t(dataset, T);
    CompensatedCplxSum acc;

    bool all_zero = true;
    for (int n : orders)
        if (n != 0) all_zero = false;
    if (orders.empty() || all_zero) {
        // note: all-zero orders with j factors is P_X^j; fold j into k
        if (!orders.empty()) k *= double(orders.size());
        // P_X(rho)^k via k log P_X
        euler::DirichletPolynomial lp = euler::log_p_x_series(X);
        std::vector<std::pair<double, double>> sup;  // (log m, coeff)
        for (std::uint64_t m = 2; m <= lp.cutoff; ++m)
            if (lp.coeff(m) != cplx(0.0))
                sup.push_back({std::log(double(m)), lp.coeff(m).real()});
        for (std::size_t i = 0; i < count; ++i) {
            cplx s(0.5, dataset.ordinates[i]);
            cplx w = 0.0;
            for (const auto& [lm, c] : sup) w += c * std::exp(-s * lm);
            acc.add(std::exp(k * w));
        }
        return acc.value();
    }

    // product of derivative series: shared a_1 support, per-order log weights
    int total = 0;
    for (int n : orders) total += n;
    std::uint64_t cutoff =
        std::uint64_t(std::min(std::pow(X, double(total + 1)), 1e6));
    cutoff = std::max<std::uint64_t>(cutoff, std::uint64_t(X) + 1);
    euler::DirichletPolynomial a1 =
        euler::dirichlet_exp(euler::log_p_x_series(X), 1.0, cutoff);
    std::vector<std::pair<double, double>> sup;  // (log m, a_1(m))
    for (std::uint64_t m = 1; m <= cutoff; ++m)
        if (std::abs(a1.coeff(m)) > 1e-15)
            sup.push_back({std::log(double(m)), a1.coeff(m).real()});

    for (std::size_t i = 0; i < count; ++i) {
        cplx s(0.5, dataset.ordinates[i]);
        std::vector<cplx> vals(orders.size(), 0.0);
        for (const auto& [lm, c] : sup) {
            cplx base = c * std::exp(-s * lm);
            for (std::size_t r = 0; r < orders.size(); ++r)
                vals[r] += base * std::pow(-lm, orders[r]);
        }
        cplx prod = 1.0;
        for (cplx v : vals) prod *= v;
        acc.add(prod);
    }
    return acc.value();
}

LandauReport landau_empirical(const ZeroDataset& dataset, std::uint64_t m, double T) {
    if (m < 2) throw std::invalid_argument("landau_empirical: m = 1 excluded");
    std::size_t count = n_of_t(dataset, T);
    double lm = std::log(double(m));
    CompensatedCplxSum acc;
    for (std::size_t i = 0; i < count; ++i)
        acc.add(std::exp(-cplx(0.5, dataset.ordinates[i]) * lm));
    return {acc.value(), euler::landau_main_term(m, T)};
}

}  // namespace zml::zeta
