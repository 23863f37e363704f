#include "pdskit/bounds.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

namespace pdskit::bounds {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw InputError(msg);
}

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

}  // namespace

double entropy(double p) {
    require(p >= 0.0 && p <= 1.0, "entropy: p must lie in [0, 1]");
    if (p == 0.0 || p == 1.0) return 0.0;
    return -p * std::log(p) - (1 - p) * std::log1p(-p);
}

double binary_entropy(double x) {
    require(x >= 0.0 && x <= 1.0, "binary_entropy: x must lie in [0, 1]");
    return entropy(x) / std::numbers::ln2;
}

double phi(double a) {
    require(a > 0.0 && a < 1.0, "phi: a must lie in (0, 1)");
    return a < 0.5 ? binary_entropy(a) : 1.0;
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

double log_big(const BigInt& x) {
    require(x > 0, "log of a non-positive integer");
    const std::size_t bits = boost::multiprecision::msb(x);
    if (bits < 1000) return std::log(x.convert_to<double>());
    const std::size_t shift = bits - 62;
    const BigInt top = x >> shift;
    return std::log(top.convert_to<double>()) + double(shift) * std::numbers::ln2;
}

double entropy_limit_check(std::uint64_t n, double p) {
    require(n >= 1, "entropy_limit_check: n must be positive");
    require(p >= 0.0 && p <= 1.0, "entropy_limit_check: p must lie in [0, 1]");
    const auto m = std::uint64_t(std::floor(p * double(n)));
    return log_big(binomial(n, m)) / double(n);
}

double central_binomial_ratio(std::uint64_t n) {
    require(n >= 1, "central_binomial_ratio: n must be positive");
    const double log_ratio = log_big(binomial(n, (n + 1) / 2)) + 0.5 * std::log(std::numbers::pi * double(n) / 2) -
                             double(n) * std::numbers::ln2;
    return std::exp(log_ratio);
}

const char* to_string(Regime r) noexcept {
    switch (r) {
        case Regime::Low1: return "low1";
        case Regime::Low2: return "low2";
        case Regime::None: return "none";
    }
    return "?";
}

BoundRow bound_row(std::uint32_t n, std::uint32_t k) {
    require(k >= 2 && k <= n, "bound_row needs 2 <= k <= n");
    BoundRow r;
    r.n = n;
    r.k = k;
    if (2 * k <= n) r.regime = Regime::Low1;
    else if (k < n) r.regime = Regime::Low2;
    if (k == 2) r.moore = n - 1;
    r.gill = BigInt(k - 1) * boost::multiprecision::pow(BigInt(n), k);
    r.sok_low1 = binomial(n - 1, k - 1);
    r.sok_low2 = binomial(n - 2, (n - 2) / 2);
    r.sok_up_factor = k - 1;
    if (k < n) r.phi_n = phi(double(k) / n) * n;
    const double nd = n;
    r.tn_asym = std::exp(nd * std::numbers::ln2 + std::sqrt(nd / 2 * std::log(nd)));
    r.sn_asym = std::exp(std::sqrt(nd * std::log(nd)));
    return r;
}

const std::string& csv_header() {
    static const std::string h = "n,k,regime,moore,gill,sok_low1,sok_low2,sok_up_factor,phi_n,tn_asym,sn_asym";
    return h;
}

std::string csv_row(const BoundRow& r) {
    std::string s = std::to_string(r.n) + ',' + std::to_string(r.k) + ',' + to_string(r.regime) + ',';
    if (r.moore) s += std::to_string(*r.moore);
    s += ',' + r.gill.str() + ',' + r.sok_low1.str() + ',' + r.sok_low2.str() + ',' +
         std::to_string(r.sok_up_factor) + ',';
    if (r.phi_n) s += fmt_double(*r.phi_n);
    s += ',' + fmt_double(r.tn_asym) + ',' + fmt_double(r.sn_asym);
    return s;
}

std::string bounds_table(std::uint32_t n_min, std::uint32_t n_max, const TableRule& rule) {
    require(n_min >= 2 && n_min <= n_max, "bounds table needs 2 <= n_min <= n_max");
    require(rule.fixed_k || (rule.ratio > 0.0 && rule.ratio <= 1.0), "ratio must lie in (0, 1]");
    std::string out = "# tn_asym and sn_asym omit their (1+o(1)) factors: reference curves, not bounds\n";
    out += csv_header() + '\n';
    for (std::uint32_t n = n_min; n <= n_max; ++n) {
        std::uint32_t k;
        if (rule.fixed_k) {
            k = *rule.fixed_k;
            if (k > n) continue;
        } else {
            k = std::uint32_t(std::llround(rule.ratio * n));
            k = std::clamp<std::uint32_t>(k, 2, n);
        }
        out += csv_row(bound_row(n, k)) + '\n';
    }
    return out;
}

}  // namespace pdskit::bounds
