#pragma once

#include "kstab/flag_df.hpp"
#include "kstab/monomial.hpp"
#include "kstab/multipoly.hpp"
#include "kstab/unipoly.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

// Independent reference computations used by `verify` and the test suites. Nothing here
// calls into the routines it is meant to check.
namespace kstab::oracle {

/// D~_j for j = 0..M ks by enumerating all (M+1)^ks ordered compositions.
std::vector<std::map<std::string, long>> tilde_by_compositions(const FlagIdealP1& flag, long ks);

/// w(k) by enumerating part-count vectors (c_0..c_M), sum c_i = ks, and counting
/// sections of O(2k) - D~_j directly.
Integer weight_by_counting(const FlagIdealP1& flag, long k, const Rational& s);

/// Fits a quadratic through the first three (k, w) pairs by Cramer's rule and returns
/// 4 (w_2 - 2 w_1) if every further pair lies on it.
std::optional<Rational> df0_from_samples(const std::vector<std::pair<long, Integer>>& samples);

/// Coefficient of k^{n+1} k'^n in w(k) k' N(k') - w(k') k N(k), by expanding the
/// bivariate polynomial term by term.
Rational df_by_expansion(const UniPoly& w, const UniPoly& N, int n);

/// Multiplier ideal membership straight from the definition on a box, without
/// H-representations: v+1 is interior iff some convex combination q of the Minkowski
/// generators has q < v+1, checked here only for single-ideal products with
/// exponent c via vertices and the orthant (suitable for 2 variables).
bool in_multiplier_ideal_2d(const MonomialIdeal& a, const Rational& c, const ExponentVector& v);

} // namespace kstab::oracle
