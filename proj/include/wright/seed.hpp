#pragma once

#include <optional>
#include <vector>

#include "wright/apriori.hpp"
#include "wright/region.hpp"

namespace wright {

/// Region holding every SOPS with qbar <= 3, with constant bounding functions
/// pinned to 0 at t = 0.
Region seed_short(const Interval& alpha, const AprioriParams& p, int n_time);

/// Region holding every SOPS with qbar >= 3, or std::nullopt when the period
/// bound rules that case out.
///
/// Builds the coarse box and envelopes, tightens them with one sign pass,
/// n_period integration passes over t0 in [-4, 4] and a zero/max pass, then
/// bounds qbar by the area balance over one period.
std::optional<Region> seed_long(const Interval& alpha, const AprioriParams& p, int n_time, int n_period);

/// True when seed_long is Empty on each of `pieces` equal subintervals of
/// alpha, which rules out qbar >= 3 on the whole of alpha.
bool seed_long_empty_split(const Interval& alpha, const AprioriParams& p, int n_time, int n_period, int pieces);

/// Both seeds; their union contains the image of every SOPS.
std::vector<Region> seed_pair(const Interval& alpha, const AprioriParams& p, int n_time, int n_period);

}  // namespace wright
