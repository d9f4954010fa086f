/*
 * (C) Copyright 2026 sgnet developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "core/tables.hpp"

#include <sstream>
#include <stdexcept>

#include "core/counting.hpp"
#include "core/renewal.hpp"

namespace sgnet {

SeriesQuantity parse_series_quantity(std::string_view name) {
  if (name == "alpha") return SeriesQuantity::kAlphaBar;
  if (name == "kappa") return SeriesQuantity::kKappa;
  if (name == "chi") return SeriesQuantity::kChi;
  if (name == "ey") return SeriesQuantity::kEy;
  if (name == "ey-over-t") return SeriesQuantity::kEyOverT;
  throw std::invalid_argument("unknown series quantity \"" + std::string(name) +
                              "\" (expected alpha, kappa, chi, ey or ey-over-t)");
}

namespace {

void check_range(int from, int to, int step, int min_from) {
  if (from < min_from || to < from || step < 1) {
    throw std::invalid_argument("invalid range: need " + std::to_string(min_from) +
                                " <= from <= to and step >= 1");
  }
}

void append_row(std::ostringstream& os, int t, const BigRat& v) {
  os << t << ',' << v.get_num().get_str() << ',' << v.get_den().get_str() << ','
     << decimal_round_half_even(v, 12) << '\n';
}

}  // namespace

std::string series_csv(SeriesQuantity quantity, int from, int to, int step) {
  const int min_from =
      (quantity == SeriesQuantity::kChi || quantity == SeriesQuantity::kEyOverT) ? 1 : 0;
  check_range(from, to, step, min_from);
  std::ostringstream os;
  os << "t,value_num,value_den,value_decimal\n";
  switch (quantity) {
    case SeriesQuantity::kAlphaBar:
      for (int t = from; t <= to; t += step) append_row(os, t, alpha_bar(t));
      break;
    case SeriesQuantity::kKappa:
      for (int t = from; t <= to; t += step) append_row(os, t, kappa(t));
      break;
    case SeriesQuantity::kChi:
      for (int t = from; t <= to; t += step) append_row(os, t, chi(t));
      break;
    case SeriesQuantity::kEy:
    case SeriesQuantity::kEyOverT: {
      const RenewalExact series(to);
      for (int t = from; t <= to; t += step) {
        append_row(os, t,
                   quantity == SeriesQuantity::kEy ? series.ey(t)
                                                   : series.ey_over_t(t));
      }
      break;
    }
  }
  return os.str();
}

std::string alpha_ratio_table_csv(int from, int to, int step) {
  check_range(from, to, step, 1);
  std::ostringstream os;
  os << "t,alpha_over_t\n";
  // One pass over the series; alpha_bar(t)/t = (sum_omega/3^t - 1)/t.
  int next = from;
  scan_alpha_series(to, [&](int t, const BigInt& sum_om, const BigInt& p3,
                            const BigInt&) {
    if (t != next) return;
    next += step;
    const BigRat ratio = make_rat(sum_om - p3, t * p3);
    os << t << ',' << decimal_truncate(ratio, 4) << '\n';
  });
  return os.str();
}

std::string counting_csv(int up_to) {
  const CountingTable tab = counting_table(up_to);
  std::ostringstream os;
  os << "k,t_k,h_k,m_k,e_k,sum_omega\n";
  for (int k = 1; k <= up_to; ++k) {
    const auto i = static_cast<std::size_t>(k);
    os << k << ',' << tab.T[i].get_str() << ',' << tab.h[i].get_str() << ','
       << tab.M[i].get_str() << ',' << tab.e[i].get_str() << ','
       << tab.sum_omega[i].get_str() << '\n';
  }
  return os.str();
}

}  // namespace sgnet
