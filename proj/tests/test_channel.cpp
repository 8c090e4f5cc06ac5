// SPDX-License-Identifier: Apache-2.0
//
// irs-secrecy: secure downlink simulation with an intelligent reflecting surface
// Copyright (C) 2026 The irs-secrecy authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <gtest/gtest.h>

#include <cmath>

#include "irs/channel.hpp"
#include "irs/error.hpp"

using namespace irs;

TEST(Geometry, DefaultDistances) {
  const Geometry g = derive_geometry(145.0, 150.0, 5.0);
  EXPECT_DOUBLE_EQ(g.d_eu, 5.0);
  EXPECT_NEAR(g.d_iu, 7.0711, 1e-4);
  EXPECT_NEAR(g.d_ai, 145.0862, 1e-4);
  EXPECT_DOUBLE_EQ(g.d_iu, std::sqrt(50.0));
  EXPECT_DOUBLE_EQ(g.d_ai, std::sqrt(21050.0));
}

TEST(Geometry, RejectsDegenerateLayouts) {
  EXPECT_THROW(derive_geometry(1.0, 2.0, 0.0), ValidationError);
  EXPECT_THROW(derive_geometry(100.0, 100.0, 5.0), ValidationError);
  EXPECT_THROW(derive_geometry(150.0, 145.0, 5.0), ValidationError);
  EXPECT_THROW(derive_geometry(0.0, 5.0, 5.0), ValidationError);
}

TEST(PathLoss, ReferenceDistance) {
  for (double psi : {2.0, 2.2, 3.0, 3.7}) EXPECT_DOUBLE_EQ(path_loss(1.0, psi, 1e-3, 1.0), 1e-3);
}

TEST(PathLoss, PowersOfTen) { EXPECT_NEAR(path_loss(10.0, 2.0, 1e-3, 1.0), 1e-5, 1e-20); }

TEST(PathLoss, MatchesExtendedPrecision) {
  const long double oracle = 1e-3L * powl(1.0L / 145.0L, 3.0L);
  const double got = path_loss(145.0, 3.0, 1e-3, 1.0);
  EXPECT_NEAR(got, 3.280e-10, 1e-13);
  EXPECT_LT(std::abs(static_cast<long double>(got) - oracle), 1e-24L);
}

TEST(PathLoss, RejectsNonPositiveDistance) {
  EXPECT_THROW(path_loss(0.0, 3.0, 1e-3, 1.0), ValidationError);
  EXPECT_THROW(path_loss(-1.0, 3.0, 1e-3, 1.0), ValidationError);
}

TEST(Units, DbmConversions) {
  EXPECT_DOUBLE_EQ(dbm_to_watts(20.0), 0.1);
  EXPECT_DOUBLE_EQ(dbm_to_watts(30.0), 1.0);
  EXPECT_NEAR(dbm_to_watts(-80.0), 1e-11, 1e-25);
  EXPECT_NEAR(watts_to_dbm(0.1), 20.0, 1e-12);
  EXPECT_NEAR(db_to_linear(-30.0), 1e-3, 1e-18);
}

TEST(SystemParams, DefaultsMatchSimulationSetup) {
  const SystemParams p = SystemParams::defaults();
  EXPECT_EQ(p.M, 4);
  EXPECT_EQ(p.N, 25);
  EXPECT_NEAR(p.pt_dbm(), 20.0, 1e-12);
  EXPECT_NEAR(p.sigma_u_sq, 1e-11, 1e-25);
  EXPECT_DOUBLE_EQ(p.d_eu, p.d_au - p.d_ae);
  EXPECT_DOUBLE_EQ(p.d_iu, std::sqrt(p.d_ie * p.d_ie + p.d_eu * p.d_eu));
  EXPECT_DOUBLE_EQ(p.d_ai, std::sqrt(p.d_ae * p.d_ae + p.d_ie * p.d_ie));
  EXPECT_NO_THROW(p.validate());
}

TEST(SystemParams, ValidateRejectsBadValues) {
  auto bad = [](auto mutate) {
    SystemParams p = SystemParams::defaults();
    mutate(p);
    EXPECT_THROW(p.validate(), ValidationError);
  };
  bad([](SystemParams& p) { p.M = 0; });
  bad([](SystemParams& p) { p.N = 0; });
  bad([](SystemParams& p) { p.P_t = 0.0; });
  bad([](SystemParams& p) { p.sigma_e_sq = -1.0; });
  bad([](SystemParams& p) { p.r = 1.0; });
  bad([](SystemParams& p) { p.r = -0.1; });
  bad([](SystemParams& p) { p.d_eu += 1e-9; });
  bad([](SystemParams& p) { p.K_ai = -1.0; });
}

TEST(Channels, FixedSeedIsBitIdentical) {
  const SystemParams p = SystemParams::defaults();
  Rng a(42);
  Rng b(42);
  const ChannelSet x = sample_channels(p, a);
  const ChannelSet y = sample_channels(p, b);
  EXPECT_EQ(x.seed, 42u);
  EXPECT_TRUE(x.G == y.G);
  EXPECT_TRUE(x.h_au == y.h_au);
  EXPECT_TRUE(x.h_ae == y.h_ae);
  EXPECT_TRUE(x.h_iu == y.h_iu);
  EXPECT_TRUE(x.h_ie == y.h_ie);
}

TEST(Channels, DimensionsAndCheck) {
  SystemParams p = SystemParams::defaults();
  p.M = 3;
  p.N = 7;
  Rng rng(1);
  ChannelSet ch = sample_channels(p, rng);
  EXPECT_EQ(ch.G.rows(), 7);
  EXPECT_EQ(ch.G.cols(), 3);
  EXPECT_EQ(ch.h_au.size(), 3);
  EXPECT_EQ(ch.h_iu.size(), 7);
  EXPECT_NO_THROW(ch.check(p));
  ch.h_ie(2) = cplx(std::nan(""), 0.0);
  EXPECT_THROW(ch.check(p), ValidationError);
  p.N = 8;
  EXPECT_THROW(sample_channels(p, rng).check(SystemParams::defaults()), ValidationError);
}

namespace {

// Normalized cross-correlation Re E[u conj(e)] / sqrt(E|u|^2 E|e|^2) of the
// AP-side pair with pure scattering (K = 0), pooled over antennas.
double ap_pair_correlation(double r, int draws) {
  SystemParams p = SystemParams::defaults();
  p.r = r;
  p.K_au = 0.0;
  p.K_ae = 0.0;
  Rng rng(2024);
  cplx cross = 0.0;
  double pu = 0.0;
  double pe = 0.0;
  for (int t = 0; t < draws; ++t) {
    const ChannelSet ch = sample_channels(p, rng);
    for (int m = 0; m < p.M; ++m) {
      cross += ch.h_au(m) * std::conj(ch.h_ae(m));
      pu += std::norm(ch.h_au(m));
      pe += std::norm(ch.h_ae(m));
    }
  }
  return cross.real() / std::sqrt(pu * pe);
}

}  // namespace

TEST(Channels, CorrelatedScatteringMatchesR) {
  EXPECT_NEAR(ap_pair_correlation(0.95, 10000), 0.95, 0.03);
}

TEST(Channels, UncorrelatedLimit) { EXPECT_LT(std::abs(ap_pair_correlation(0.0, 10000)), 0.05); }

TEST(Channels, AveragePowerEqualsPathLoss) {
  const SystemParams p = SystemParams::defaults();
  Rng rng(99);
  const int draws = 10000;
  double au = 0.0;
  double ae = 0.0;
  double g = 0.0;
  double iu = 0.0;
  double ie = 0.0;
  for (int t = 0; t < draws; ++t) {
    const ChannelSet ch = sample_channels(p, rng);
    au += std::norm(ch.h_au(0));
    ae += std::norm(ch.h_ae(1));
    g += std::norm(ch.G(3, 2));
    iu += std::norm(ch.h_iu(4));
    ie += std::norm(ch.h_ie(5));
  }
  EXPECT_NEAR(au / draws / p.loss_au(), 1.0, 0.05);
  EXPECT_NEAR(ae / draws / p.loss_ae(), 1.0, 0.05);
  EXPECT_NEAR(g / draws / p.loss_ai(), 1.0, 0.05);
  EXPECT_NEAR(iu / draws / p.loss_iu(), 1.0, 0.05);
  EXPECT_NEAR(ie / draws / p.loss_ie(), 1.0, 0.05);
}

TEST(Rng, SeedReproducesStreamAndMoments) {
  Rng a(7);
  Rng b(7);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next_u64(), b.next_u64());
  Rng c(11);
  double s = 0.0;
  double s2 = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double u = c.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    const double z = c.normal();
    s += z;
    s2 += z * z;
  }
  EXPECT_NEAR(s / n, 0.0, 0.01);
  EXPECT_NEAR(s2 / n, 1.0, 0.01);
  EXPECT_NE(derive_seed(1, 1), derive_seed(1, 2));
  EXPECT_NE(derive_seed(1, 1), derive_seed(2, 1));
}
