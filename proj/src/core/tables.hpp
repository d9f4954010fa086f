/*
 * (C) Copyright 2026 sgnet developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <string>
#include <string_view>

namespace sgnet {

enum class SeriesQuantity { kAlphaBar, kKappa, kChi, kEy, kEyOverT };
// Accepts "alpha", "kappa", "chi", "ey", "ey-over-t".
SeriesQuantity parse_series_quantity(std::string_view name);

// "t,value_num,value_den,value_decimal" rows for the exact series, one row
// per t in from..to stepping by step; decimals to 12 significant digits.
std::string series_csv(SeriesQuantity quantity, int from, int to, int step);

// "t,alpha_over_t" rows with the ratio truncated (not rounded) to four
// decimals, the paper's table style.
std::string alpha_ratio_table_csv(int from, int to, int step);

// "k,t_k,h_k,m_k,e_k,sum_omega" rows for k = 1..up_to.
std::string counting_csv(int up_to);

}  // namespace sgnet
