#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "npn/function_spec.hpp"
#include "npn/types.hpp"

namespace npn {

enum class Parity { odd, even, mixed };

/// Parameter and sigma-constraint validation for a table entry.
/// sigma_jj < 0 means "diagonal use" (only sigma_ii is checked).
void catalog_check(const CatalogSpec& entry, double sigma_ii, double sigma_jj);

Parity catalog_parity(const CatalogSpec& entry);

/// Pointwise value of the entry's transformation function.
double catalog_eval(const CatalogSpec& entry, double x);

std::string catalog_name(const CatalogSpec& entry);

/// Closed-form tau_ij. err is 0 except for the truncated series entries
/// (characteristic-function rows), which report their tail bound.
std::pair<double, double> catalog_tau(const CatalogSpec& entry, double sigma_ii, double sigma_jj,
                                      double sigma_ij, const SeriesControl& ctl = {});

/// tau_ii: the tau_ij formula at sigma_ij := sigma_ii except for the
/// entries with dedicated diagonal expressions.
std::pair<double, double> catalog_tau_diag(const CatalogSpec& entry, double sigma_ii,
                                           const SeriesControl& ctl = {});

double catalog_nu(const CatalogSpec& entry, double sigma_ii);

/// Taylor representation for the series-method entries (ids 1-10).
std::optional<TaylorSpec> catalog_taylor(const CatalogSpec& entry);

} // namespace npn
