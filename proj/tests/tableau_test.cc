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

#include "cph/tableau.h"

#include <random>

#include "cph/oracle.h"
#include "gtest/gtest.h"
#include "test_util.h"

using namespace cph;
using cph::fixtures::make_instance;

namespace {

// Product of the original words selected by history row a, recomputed from
// scratch.
PauliWord replay_history(const Tableau &t, const std::vector<PauliWord> &originals, std::size_t a) {
    PauliWord out(t.num_qubits());
    for (std::size_t idx : t.history_indices(a)) {
        out = multiply(out, originals[idx]);
    }
    return out;
}

// r pairwise-commuting random words on n qubits.
std::vector<PauliWord> random_commuting_set(std::size_t n, std::size_t r, std::mt19937_64 &rng) {
    std::vector<PauliWord> words;
    while (words.size() < r) {
        words.push_back(fixtures::random_commuting_with(words, n, rng));
    }
    return words;
}

}  // namespace

TEST(tableau, from_instance_examples) {
    Tableau z = Tableau::from_instance(make_instance({"+Z"}));
    EXPECT_EQ(z.num_rows(), 1u);
    EXPECT_FALSE(z.phase(0));
    EXPECT_FALSE(z.x(0, 0));
    EXPECT_TRUE(z.z(0, 0));
    EXPECT_EQ(z.history(), BitMatrix::identity(1));

    Tableau bell = Tableau::from_instance(make_instance({"+XX", "+ZZ"}));
    EXPECT_TRUE(bell.x(0, 0) && bell.x(0, 1) && !bell.z(0, 0) && !bell.z(0, 1));
    EXPECT_TRUE(!bell.x(1, 0) && !bell.x(1, 1) && bell.z(1, 0) && bell.z(1, 1));

    Tableau y = Tableau::from_instance(make_instance({"-Y"}));
    EXPECT_TRUE(y.phase(0) && y.x(0, 0) && y.z(0, 0));
}

TEST(tableau, validate_commuting_examples) {
    using Pairs = std::vector<std::pair<std::size_t, std::size_t>>;
    EXPECT_EQ(validate_commuting(make_instance({"+X", "+Z"})), (Pairs{{0, 1}}));
    EXPECT_EQ(validate_commuting(make_instance({"+Z"})), Pairs{});

    // Oracle: pairwise dense commutators of XX, ZZ, YY all vanish.
    auto inst = make_instance({"+XX", "+ZZ", "+YY"});
    for (const auto &a : inst.generators) {
        for (const auto &b : inst.generators) {
            ASSERT_EQ(oracle::dense(a) * oracle::dense(b), oracle::dense(b) * oracle::dense(a));
        }
    }
    EXPECT_EQ(validate_commuting(inst), Pairs{});

    EXPECT_EQ(validate_commuting(make_instance({"+XI", "+ZZ", "+IX", "+ZI"})), (Pairs{{0, 1}, {0, 3}, {1, 2}}));
}

TEST(tableau, row_mult_examples) {
    Tableau bell = Tableau::from_instance(make_instance({"+XX", "+ZZ"}));
    bell.row_mult(0, 1);
    ASSERT_EQ(oracle::dense(parse_pauli("+XX")) * oracle::dense(parse_pauli("+ZZ")),
              oracle::dense(parse_pauli("-YY")));
    EXPECT_EQ(bell.word(1), parse_pauli("-YY"));
    EXPECT_EQ(bell.word(0), parse_pauli("+XX"));
    EXPECT_EQ(bell.history_indices(1), (std::vector<std::size_t>{0, 1}));

    Tableau same = Tableau::from_instance(make_instance({"+Z", "+Z"}));
    same.row_mult(0, 1);
    EXPECT_EQ(same.word(1), parse_pauli("+I"));
    EXPECT_FALSE(same.find_minus_identity());

    Tableau clash = Tableau::from_instance(make_instance({"+Z", "-Z"}));
    EXPECT_FALSE(clash.find_minus_identity());
    clash.row_mult(0, 1);
    EXPECT_EQ(clash.word(1), parse_pauli("-I"));
    EXPECT_EQ(clash.find_minus_identity(), std::optional<std::size_t>(1));
}

TEST(tableau, row_mult_rejects_anticommuting_rows) {
    Tableau t = Tableau::from_instance(make_instance({"+X", "+Z"}));
    EXPECT_THROW(t.row_mult(0, 1), PromiseViolation);
    EXPECT_THROW(t.row_mult(0, 0), std::invalid_argument);
}

TEST(tableau, swap_rows) {
    Tableau t = Tableau::from_instance(make_instance({"+XX", "+ZZ", "-YY"}));
    Tableau original = t;
    t.swap_rows(1, 1);
    EXPECT_EQ(t, original);
    t.swap_rows(0, 2);
    EXPECT_EQ(t.word(0), parse_pauli("-YY"));
    EXPECT_EQ(t.history_indices(0), std::vector<std::size_t>{2});
    t.swap_rows(0, 2);
    EXPECT_EQ(t, original);
}

TEST(tableau, find_minus_identity) {
    EXPECT_EQ(Tableau::from_instance(make_instance({"+X", "-I"})).find_minus_identity(), std::optional<std::size_t>(1));
    EXPECT_FALSE(Tableau::from_instance(make_instance({"+Z"})).find_minus_identity());
    EXPECT_FALSE(Tableau::from_instance(make_instance({"+II"})).find_minus_identity());
}

TEST(tableau, history_invariant_under_random_row_operations) {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 200; trial++) {
        std::size_t n = 1 + rng() % 8;
        std::size_t r = 2 + rng() % 6;
        auto words = random_commuting_set(n, r, rng);
        Tableau t(words);
        for (int step = 0; step < 30; step++) {
            std::size_t j = rng() % r;
            std::size_t k = rng() % r;
            if (rng() & 1) {
                t.swap_rows(j, k);
            } else if (j != k) {
                t.row_mult(j, k);
            }
        }
        for (std::size_t a = 0; a < r; a++) {
            ASSERT_EQ(replay_history(t, words, a), t.word(a));
            for (std::size_t b = 0; b < r; b++) {
                ASSERT_FALSE(symplectic_inner(t.word(a), t.word(b)));
            }
        }
    }
}

TEST(tableau, row_mult_twice_restores_the_row) {
    std::mt19937_64 rng(78);
    for (int trial = 0; trial < 200; trial++) {
        std::size_t n = 1 + rng() % 70;
        auto words = random_commuting_set(n, 3, rng);
        Tableau t(words);
        Tableau original = t;
        t.row_mult(0, 2);
        t.row_mult(0, 2);
        ASSERT_EQ(t, original);
    }
}

TEST(tableau, packed_row_mult_matches_word_multiply) {
    std::mt19937_64 rng(79);
    for (int trial = 0; trial < 300; trial++) {
        std::size_t n = 1 + rng() % 150;
        auto words = random_commuting_set(n, 2, rng);
        Tableau t(words);
        t.row_mult(0, 1);
        ASSERT_EQ(t.word(1), multiply(words[0], words[1]));
    }
}

TEST(instance_file, parses_comments_and_blank_lines) {
    Instance inst = parse_instance("# toric-code L=2\n\n  # another\nn 2\r\n+XX\n\n-ZZ  \n# trailing\n");
    EXPECT_EQ(inst.num_qubits, 2u);
    ASSERT_EQ(inst.generators.size(), 2u);
    EXPECT_EQ(inst.generators[1], parse_pauli("-ZZ"));
    EXPECT_EQ(inst.metadata, (std::vector<std::string>{"toric-code L=2", "another", "trailing"}));
}

TEST(instance_file, errors_carry_line_numbers) {
    try {
        parse_instance("# c\nn 2\n+XX\n+XQ\n");
        FAIL() << "expected a parse error";
    } catch (const InstanceParseError &e) {
        EXPECT_EQ(e.line(), 4u);
        EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos);
    }
    EXPECT_THROW(parse_instance("+XX\n"), InstanceParseError);
    EXPECT_THROW(parse_instance("n 0\n+\n"), InstanceParseError);
    EXPECT_THROW(parse_instance("n two\n+XX\n"), InstanceParseError);
    EXPECT_THROW(parse_instance("n 2\n"), InstanceParseError);
    EXPECT_THROW(parse_instance(""), InstanceParseError);
    EXPECT_THROW(parse_instance("n 2\n+XXX\n"), InstanceParseError);
    EXPECT_THROW(parse_instance("n 1\n+iX\n"), InstanceParseError);
}

TEST(instance_file, write_then_read_is_identity) {
    Instance inst = make_instance({"+XZI", "-YYI", "+IIZ"});
    inst.metadata = {"generator=hand", "note"};
    std::string text = format_instance(inst);
    EXPECT_EQ(text, "# generator=hand\n# note\nn 3\n+XZI\n-YYI\n+IIZ\n");
    Instance back = parse_instance(text);
    EXPECT_EQ(back.generators, inst.generators);
    EXPECT_EQ(back.metadata, inst.metadata);
    EXPECT_EQ(format_instance(back), text);
}

TEST(instance, check_shape) {
    Instance empty;
    empty.num_qubits = 1;
    EXPECT_THROW(empty.check_shape(), std::invalid_argument);
    Instance mixed = make_instance({"+X"});
    mixed.generators.push_back(parse_pauli("+XX"));
    EXPECT_THROW(mixed.check_shape(), std::invalid_argument);
    EXPECT_NO_THROW(make_instance({"+X", "+X"}).check_shape());
}
