// Copyright 2026 The catgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <random>

#include "properties.hpp"

namespace {

// A short run of every invariant; the acceptance gate runs the long one.
class Invariant : public ::testing::TestWithParam<props::Property> {};

TEST_P(Invariant, Holds) {
    std::mt19937_64 rng(20261015);
    const auto& p = GetParam();
    for (int trial = 0; trial < 3; ++trial) {
        const props::Check c = p.trial(rng);
        EXPECT_TRUE(c.ok) << p.module << " / " << p.name << " trial " << trial << " worst "
                          << c.worst << " bound " << p.bound;
    }
}

std::string name_of(const ::testing::TestParamInfo<props::Property>& info) {
    std::string s = info.param.module + "_" + info.param.name;
    for (char& ch : s) {
        if (!std::isalnum(static_cast<unsigned char>(ch))) ch = '_';
    }
    return s + "_" + std::to_string(info.index);
}

INSTANTIATE_TEST_SUITE_P(All, Invariant, ::testing::ValuesIn(props::all(false)), name_of);

}  // namespace
