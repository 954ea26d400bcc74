// Copyright 2026 The cph Authors
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

#include "cph/oracle.h"

#include <random>

#include "cph/instances.h"
#include "gtest/gtest.h"
#include "test_util.h"

using namespace cph;
using namespace cph::oracle;
using cph::fixtures::make_instance;

TEST(dense, examples) {
    EXPECT_EQ(dense(parse_pauli("+Z")), DenseOperator(2, {{1, 0}, {0, 0}, {0, 0}, {-1, 0}}));
    EXPECT_EQ(dense(parse_pauli("-Y")), DenseOperator(2, {{0, 0}, {0, 1}, {0, -1}, {0, 0}}));
    DenseOperator x(2, {{0, 0}, {1, 0}, {1, 0}, {0, 0}});
    DenseOperator z(2, {{1, 0}, {0, 0}, {0, 0}, {-1, 0}});
    DenseOperator xz = dense(parse_pauli("+XZ"));
    EXPECT_EQ(xz, x.kron(z));
    for (std::size_t r = 0; r < 4; r++) {
        int nonzero = 0;
        for (std::size_t c = 0; c < 4; c++) {
            GaussInt v = xz.at(r, c);
            if (!v.is_zero()) {
                nonzero++;
                EXPECT_TRUE((v == GaussInt{1, 0}) || (v == GaussInt{-1, 0}));
            }
        }
        EXPECT_EQ(nonzero, 1);
    }
}

TEST(dense, limit) {
    EXPECT_THROW(dense(parse_pauli("+XXX"), 2), std::invalid_argument);
    EXPECT_NO_THROW(dense(parse_pauli("+XXX"), 3));
    EXPECT_THROW(dense_gate(Gate::h(0), 4, 3), std::invalid_argument);
}

TEST(dense, operator_algebra) {
    DenseOperator y = dense(parse_pauli("+Y"));
    EXPECT_EQ(y * y, DenseOperator::identity(2));
    EXPECT_EQ(y.adjoint(), y);
    EXPECT_EQ((y + y).divided_by(2), y);
    EXPECT_THROW(y.divided_by(2), std::domain_error);
    EXPECT_EQ(DenseOperator::identity(4).trace(), (GaussInt{4, 0}));
    EXPECT_EQ(y.apply({{1, 0}, {0, 0}}), (std::vector<GaussInt>{{0, 0}, {0, 1}}));
}

TEST(dense_gate, unitarity_up_to_scale) {
    for (const Gate &g : {Gate::h(0), Gate::s(1), Gate::cx(0, 2), Gate::cx(2, 1)}) {
        DenseOperator u = dense_gate(g, 3);
        DenseOperator uu = u * u.adjoint();
        GaussInt norm = uu.at(0, 0);
        for (std::size_t r = 0; r < 8; r++) {
            for (std::size_t c = 0; c < 8; c++) {
                EXPECT_EQ(uu.at(r, c), r == c ? norm : GaussInt{});
            }
        }
    }
}

TEST(groundspace_dim, examples) {
    EXPECT_EQ(groundspace_dim(make_instance({"+Z"})), 1u);
    EXPECT_EQ(groundspace_dim(make_instance({"+XX", "+ZZ"})), 1u);
    EXPECT_EQ(groundspace_dim(make_instance({"+Z", "-Z"})), 0u);
    EXPECT_EQ(groundspace_dim(make_instance({"+XX", "+ZZ", "+YY"})), 0u);
    EXPECT_EQ(groundspace_dim(toric_code(2)), 4u);
}

TEST(groundspace_dim, errors) {
    EXPECT_THROW(groundspace_dim(make_instance({"+X", "+Z"})), PromiseViolation);
    EXPECT_THROW(groundspace_dim(make_instance({"+XXX"}), 2), std::invalid_argument);
}

TEST(groundspace_dim, matches_projector_product_trace) {
    // Direct evaluation of Tr prod (I + S)/2 with full matrix products.
    std::mt19937_64 rng(40);
    for (int trial = 0; trial < 100; trial++) {
        std::size_t n = 1 + rng() % 3;
        std::vector<PauliWord> words;
        std::size_t r = 1 + rng() % 4;
        while (words.size() < r) {
            words.push_back(fixtures::random_commuting_with(words, n, rng));
        }
        Instance inst;
        inst.num_qubits = n;
        inst.generators = words;
        std::size_t dim = std::size_t{1} << n;
        DenseOperator prod = DenseOperator::identity(dim);
        for (const auto &w : words) {
            prod = prod * (DenseOperator::identity(dim) + dense(w));
        }
        GaussInt tr = prod.trace();
        ASSERT_EQ(tr.im, 0);
        ASSERT_EQ(tr.re % (std::int64_t{1} << r), 0);
        ASSERT_EQ(groundspace_dim(inst), std::uint64_t(tr.re >> r));
    }
}

TEST(groundspace_dim, is_zero_or_a_power_of_two) {
    for (std::uint64_t seed = 0; seed < 100; seed++) {
        Instance inst = randomize_signs(random_commuting(1 + seed % 6, 1 + seed % 7, seed, Force::Yes), seed);
        std::uint64_t d = groundspace_dim(inst);
        EXPECT_TRUE(d == 0 || (d & (d - 1)) == 0) << d;
    }
}

TEST(closure, examples) {
    EXPECT_TRUE(closure_contains_minus_identity(make_instance({"+Z", "-Z"})));
    EXPECT_TRUE(closure_contains_minus_identity(make_instance({"+XX", "+ZZ", "+YY"})));
    Instance bell = make_instance({"+XX", "+ZZ"});
    EXPECT_FALSE(closure_contains_minus_identity(bell));
    auto group = group_closure(bell.generators);
    EXPECT_EQ(group.size(), 4u);
    EXPECT_THROW(closure_contains_minus_identity(toric_code(2), 100), std::length_error);
}

TEST(closure, minus_identity_iff_empty_groundspace) {
    for (std::uint64_t seed = 0; seed < 200; seed++) {
        Force force = seed % 2 ? Force::No : Force::Yes;
        Instance inst = random_commuting(1 + seed % 5, 1 + seed % 8, seed, force);
        if (seed % 3 == 0) {
            inst = randomize_signs(inst, seed);
        }
        ASSERT_EQ(closure_contains_minus_identity(inst), groundspace_dim(inst) == 0);
    }
}

TEST(stabilized_state, bell_and_failures) {
    auto state = stabilized_state({parse_pauli("+XX"), parse_pauli("+ZZ")});
    EXPECT_TRUE(stabilizes(make_instance({"+XX", "+ZZ"}), state));
    EXPECT_FALSE(stabilizes(make_instance({"-XX"}), state));
    EXPECT_TRUE(stabilized_state({parse_pauli("+Z"), parse_pauli("-Z")}).empty());
}
