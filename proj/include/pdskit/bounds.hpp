#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "pdskit/landau.hpp"

namespace pdskit::bounds {

using landau::BigInt;

/// Natural-log entropy -p ln p - (1-p) ln(1-p), with 0 ln 0 = 0.
double entropy(double p);
/// Base-2 entropy on [0, 1], endpoints 0.
double binary_entropy(double x);
/// H2(a) below 1/2, 1 from 1/2 on; a in (0, 1).
double phi(double a);

BigInt binomial(std::uint64_t n, std::uint64_t k);
/// Natural log of a positive big integer without overflowing a double.
double log_big(const BigInt& x);

/// ln C(n, m) / n with m = round(p n).
double entropy_limit_check(std::uint64_t n, double p);

/// C(n, ceil(n/2)) * sqrt(pi n / 2) / 2^n, which tends to 1.
double central_binomial_ratio(std::uint64_t n);

enum class Regime { Low1, Low2, None };
const char* to_string(Regime r) noexcept;

struct BoundRow {
    std::uint32_t n = 0, k = 0;
    Regime regime = Regime::None;
    std::optional<std::uint64_t> moore;  // n - 1, only for k = 2
    BigInt gill;                         // (k - 1) n^k
    BigInt sok_low1;                     // C(n-1, k-1), active for k <= n/2
    BigInt sok_low2;                     // C(n-2, floor((n-2)/2)), active for n/2 < k < n
    std::uint32_t sok_up_factor = 0;     // k - 1, the multiplier of the T_n worst case
    std::optional<double> phi_n;         // phi(k/n) * n, only for k < n
    double tn_asym = 0;                  // 2^n exp(sqrt(n/2 ln n)), (1+o(1)) dropped
    double sn_asym = 0;                  // exp(sqrt(n ln n)), (1+o(1)) dropped
};

BoundRow bound_row(std::uint32_t n, std::uint32_t k);

/// n,k,regime,moore,gill,sok_low1,sok_low2,sok_up_factor,phi_n,tn_asym,sn_asym
const std::string& csv_header();
std::string csv_row(const BoundRow& row);

struct TableRule {
    std::optional<std::uint32_t> fixed_k;  // otherwise k = round(ratio * n), clamped to [2, n]
    double ratio = 0.5;
};

/// Rows for n = n_min..n_max, preceded by a comment line and the header.
std::string bounds_table(std::uint32_t n_min, std::uint32_t n_max, const TableRule& rule);

}  // namespace pdskit::bounds
