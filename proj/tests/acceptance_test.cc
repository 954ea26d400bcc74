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

// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on any
// failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cph/clifford.h"
#include "cph/instances.h"
#include "cph/oracle.h"
#include "cph/pauli.h"
#include "cph/solver.h"
#include "cph/tableau.h"
#include "cph/verdict_io.h"
#include "test_util.h"

using namespace cph;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(const std::string &why) {
        if (ok) {
            detail = why;
        }
        ok = false;
    }
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

bool report(int number, const std::string &name, double limit_seconds, const std::function<Outcome()> &body) {
    auto start = Clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception &e) {
        out.fail(std::string("exception: ") + e.what());
    }
    double secs = seconds_since(start);
    if (limit_seconds > 0 && secs >= limit_seconds) {
        std::ostringstream why;
        why << "took " << secs << " s, limit " << limit_seconds << " s";
        out.fail(why.str());
    }
    std::printf("criterion %d %s: %s (%.3f s)%s%s\n", number, name.c_str(), out.ok ? "PASS" : "FAIL", secs,
                out.detail.empty() ? "" : " ", out.detail.c_str());
    std::fflush(stdout);
    return out.ok;
}

// Evidence counters shared by criteria 3 and 5.
struct Evidence {
    std::size_t witnesses = 0;
    std::size_t certificates = 0;
    std::size_t dense_states = 0;
    std::string first_failure;
};

void check_evidence(const Instance &inst, const Verdict &v, Evidence &ev) {
    if (v.yes()) {
        ev.witnesses++;
        if (!verify_witness(inst, v.witness) && ev.first_failure.empty()) {
            ev.first_failure = "witness rejected for\n" + format_instance(inst);
        }
        if (inst.num_qubits <= 8) {
            ev.dense_states++;
            auto state = oracle::stabilized_state(v.witness);
            if ((state.empty() || !oracle::stabilizes(inst, state)) && ev.first_failure.empty()) {
                ev.first_failure = "witness state not stabilized for\n" + format_instance(inst);
            }
        }
    } else {
        ev.certificates++;
        if (!verify_certificate(inst, v.certificate) && ev.first_failure.empty()) {
            ev.first_failure = "certificate rejected for\n" + format_instance(inst);
        }
    }
}

Outcome gate_fidelity() {
    Outcome out;
    std::size_t checks = 0;
    for (std::size_t n = 1; n <= 2; n++) {
        std::vector<Gate> gates;
        for (std::size_t q = 0; q < n; q++) {
            gates.push_back(Gate::h(q));
            gates.push_back(Gate::s(q));
            for (std::size_t t = 0; t < n; t++) {
                if (t != q) {
                    gates.push_back(Gate::cx(q, t));
                }
            }
        }
        for (const Gate &g : gates) {
            auto u = oracle::dense_gate(g, n);
            for (const auto &w : fixtures::all_signed_words(n)) {
                checks++;
                if (oracle::dense(conjugate(w, g)) != oracle::dense_conjugate(u, oracle::dense(w))) {
                    std::ostringstream why;
                    why << "mismatch for " << g << " on " << w;
                    out.fail(why.str());
                }
            }
        }
    }
    for (auto [in, expect] : {std::pair{"+X", "+Y"}, {"+Y", "-X"}, {"+Z", "+Z"}}) {
        if (conjugate(parse_pauli(in), Gate::s(0)) != parse_pauli(expect)) {
            out.fail(std::string("S on ") + in);
        }
    }
    if (out.ok) {
        out.detail = std::to_string(checks) + " conjugations exact";
    }
    return out;
}

Outcome product_rule() {
    Outcome out;
    std::size_t pairs = 0;
    for (std::size_t n = 1; n <= 2; n++) {
        auto words = fixtures::all_signed_words(n);
        for (const auto &a : words) {
            for (const auto &b : words) {
                if (symplectic_inner(a, b)) {
                    continue;
                }
                pairs++;
                if (oracle::dense(multiply(a, b)) != oracle::dense(a) * oracle::dense(b)) {
                    out.fail("exhaustive mismatch " + format_pauli(a) + " * " + format_pauli(b));
                }
            }
        }
    }
    std::mt19937_64 rng(20260601);
    for (int trial = 0; trial < 10000; trial++) {
        PauliWord a = fixtures::random_word(6, rng);
        PauliWord b = fixtures::random_commuting_with({a}, 6, rng);
        pairs++;
        if (oracle::dense(multiply(a, b)) != oracle::dense(a) * oracle::dense(b)) {
            out.fail("random mismatch " + format_pauli(a) + " * " + format_pauli(b));
        }
    }
    if (out.ok) {
        out.detail = std::to_string(pairs) + " commuting pairs exact";
    }
    return out;
}

Outcome oracle_agreement(Evidence &ev) {
    Outcome out;
    const std::size_t count = 10000;
    std::size_t yes = 0;
    for (std::size_t i = 0; i < count; i++) {
        std::size_t n = 1 + i % 8;
        std::size_t r = 1 + (i / 8) % 12;
        Instance inst;
        switch (i % 3) {
            case 0:
                inst = random_commuting(n, r, i, Force::Yes);
                break;
            case 1:
                inst = random_commuting(n, r, i, Force::No);
                break;
            default:
                inst = randomize_signs(random_commuting(n, r, i, Force::Yes), i);
        }
        Verdict v = decide(inst);
        bool kernel_yes = kernel_decide(inst).yes();
        bool dense_yes = oracle::groundspace_dim(inst) > 0;
        bool closure_minus = oracle::closure_contains_minus_identity(inst);
        bool label_ok = i % 3 == 2 || v.yes() == (i % 3 == 0);
        if (v.yes() != kernel_yes || v.yes() != dense_yes || closure_minus == dense_yes || !label_ok) {
            out.fail("disagreement on instance " + std::to_string(i) + ":\n" + format_instance(inst));
        }
        yes += v.yes();
        check_evidence(inst, v, ev);
    }
    if (out.ok) {
        out.detail = std::to_string(count) + " instances consistent (" + std::to_string(yes) + " YES)";
    }
    return out;
}

Outcome toric_family(Evidence &ev) {
    Outcome out;
    std::size_t flips = 0;
    for (std::size_t size : {2, 3, 4, 6}) {
        Instance inst = toric_code(size);
        Verdict v = decide(inst);
        if (!v.yes()) {
            out.fail("toric_code(" + std::to_string(size) + ") not YES");
        }
        check_evidence(inst, v, ev);
        for (std::size_t which = 0; which < inst.generators.size(); which++) {
            Instance flipped = toric_code_flipped(size, which);
            Verdict nv = decide(flipped);
            flips++;
            if (nv.yes() || !verify_certificate(flipped, nv.certificate)) {
                out.fail("flip " + std::to_string(which + 1) + " of L=" + std::to_string(size));
            }
            check_evidence(flipped, nv, ev);
        }
    }
    std::uint64_t dim = oracle::groundspace_dim(toric_code(2));
    if (dim != 4) {
        out.fail("L=2 ground-space dimension " + std::to_string(dim));
    }
    if (out.ok) {
        out.detail = "L in {2,3,4,6} YES, " + std::to_string(flips) + " flips NO, L=2 dim 4";
    }
    return out;
}

Outcome evidence_soundness(Evidence &ev) {
    Outcome out;
    // Large instances beyond the dense limit: algebraic checks only.
    for (std::uint64_t seed = 0; seed < 40; seed++) {
        std::size_t n = 20 + 7 * seed;
        Instance inst = random_commuting(n, n - seed % 5, seed, seed % 2 ? Force::No : Force::Yes);
        check_evidence(inst, decide(inst), ev);
    }
    if (!ev.first_failure.empty()) {
        out.fail(ev.first_failure);
    } else {
        out.detail = std::to_string(ev.witnesses) + " witnesses (" + std::to_string(ev.dense_states) +
                     " dense-stabilized), " + std::to_string(ev.certificates) + " certificates";
    }
    return out;
}

Outcome scaling() {
    Outcome out;
    const std::vector<std::size_t> sizes{250, 500, 1000};
    std::vector<double> times;
    std::ostringstream detail;
    for (std::size_t n : sizes) {
        double best = 0;
        for (int rep = 0; rep < 3; rep++) {
            Instance inst = random_commuting(n, n, 7 + rep, rep % 2 ? Force::No : Force::Yes);
            auto start = Clock::now();
            Verdict v = decide(inst);
            double secs = seconds_since(start);
            if (v.yes() != (rep % 2 == 0)) {
                out.fail("wrong answer at n=" + std::to_string(n));
            }
            best = rep == 0 ? secs : std::min(best, secs);
        }
        times.push_back(best);
        detail << "n=" << n << ":" << best << "s ";
        if (best >= 10.0) {
            out.fail("n=" + std::to_string(n) + " took " + std::to_string(best) + " s");
        }
    }
    double mx = 0, my = 0;
    for (std::size_t k = 0; k < sizes.size(); k++) {
        mx += std::log(double(sizes[k]));
        my += std::log(std::max(times[k], 1e-9));
    }
    mx /= double(sizes.size());
    my /= double(sizes.size());
    double sxy = 0, sxx = 0;
    for (std::size_t k = 0; k < sizes.size(); k++) {
        double dx = std::log(double(sizes[k])) - mx;
        sxy += dx * (std::log(std::max(times[k], 1e-9)) - my);
        sxx += dx * dx;
    }
    double slope = sxy / sxx;
    detail << "slope " << slope;
    if (slope > 3.3) {
        out.fail("log-log slope " + std::to_string(slope) + " > 3.3; " + detail.str());
    }
    if (out.ok) {
        out.detail = detail.str();
    }
    return out;
}

Outcome determinism() {
    Outcome out;
    for (std::uint64_t seed = 0; seed < 50; seed++) {
        Force force = seed % 2 ? Force::No : Force::Yes;
        std::string a = format_instance(random_commuting(3 + seed, 2 + seed, seed, force));
        std::string b = format_instance(random_commuting(3 + seed, 2 + seed, seed, force));
        if (a != b) {
            out.fail("generator not deterministic at seed " + std::to_string(seed));
        }
        Instance inst = parse_instance(a);
        if (format_verdict_json(decide(inst)) != format_verdict_json(decide(parse_instance(b)))) {
            out.fail("verdict not deterministic at seed " + std::to_string(seed));
        }
    }
    for (const std::string stem : {"z", "z_clash", "bell_triple", "toric2"}) {
        std::string base = std::string(CPH_GOLDEN_DIR) + "/" + stem;
        std::string instance_text = fixtures::read_file(base + ".txt");
        std::string verdict_text = fixtures::read_file(base + ".verdict.json");
        if (instance_text.empty() || verdict_text.empty()) {
            out.fail("missing golden file " + stem);
            continue;
        }
        if (format_verdict_json(decide(parse_instance(instance_text))) != verdict_text) {
            out.fail("golden verdict differs: " + stem);
        }
    }
    if (format_instance(toric_code(2)) != fixtures::read_file(std::string(CPH_GOLDEN_DIR) + "/toric2.txt")) {
        out.fail("golden toric2 instance differs from generator");
    }
    if (out.ok) {
        out.detail = "50 seeds byte-identical, 4 golden verdicts match";
    }
    return out;
}

}  // namespace

int main() {
    Evidence ev;
    bool ok = true;
    ok &= report(1, "gate-fidelity", 1.0, gate_fidelity);
    ok &= report(2, "product-rule", 10.0, product_rule);
    ok &= report(3, "oracle-agreement", 300.0, [&] { return oracle_agreement(ev); });
    ok &= report(4, "toric-family", 0, [&] { return toric_family(ev); });
    ok &= report(5, "evidence-soundness", 0, [&] { return evidence_soundness(ev); });
    ok &= report(6, "polynomial-scaling", 0, scaling);
    ok &= report(7, "determinism-golden", 0, determinism);
    std::printf("acceptance: %s\n", ok ? "PASS" : "FAIL");
    return ok ? 0 : 1;
}
