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

// cph: command-line front end.
//
// Exit codes: 0 YES / valid, 1 NO / invalid, 2 input or promise error,
// 3 oracle disagreement.

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cph/instances.h"
#include "cph/oracle.h"
#include "cph/solver.h"
#include "cph/tableau.h"
#include "cph/verdict_io.h"

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitInput = 2;
constexpr int kExitDisagree = 3;

std::string read_all(const std::string &path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::invalid_argument("cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

cph::Instance load_instance(const std::string &path) { return cph::parse_instance(read_all(path)); }

struct SolveOptions {
    std::string path;
    std::string format = "text";
    bool no_witness = false;
    bool no_certificate = false;
    bool cross_check = false;
    std::size_t dense_limit = cph::oracle::kDefaultDenseLimit;
};

int run_solve(const SolveOptions &opt) {
    cph::Instance inst = load_instance(opt.path);
    cph::Verdict v = cph::decide(inst);
    cph::VerdictFormat fmt{!opt.no_witness, !opt.no_certificate};
    std::cout << (opt.format == "json" ? cph::format_verdict_json(v, fmt) : cph::format_verdict_text(v, fmt));

    if (opt.cross_check) {
        std::vector<std::string> problems;
        if (cph::kernel_decide(inst).answer != v.answer) {
            problems.push_back("kernel route disagrees");
        }
        if (v.yes() ? !cph::verify_witness(inst, v.witness) : !cph::verify_certificate(inst, v.certificate)) {
            problems.push_back(v.yes() ? "witness fails verification" : "certificate fails verification");
        }
        if (inst.num_qubits <= opt.dense_limit) {
            bool oracle_yes = cph::oracle::groundspace_dim(inst, opt.dense_limit) > 0;
            if (oracle_yes != v.yes()) {
                problems.push_back("dense oracle disagrees");
            }
        }
        for (const auto &p : problems) {
            std::cerr << "cross-check: " << p << '\n';
        }
        if (!problems.empty()) {
            return kExitDisagree;
        }
    }
    return v.yes() ? kExitYes : kExitNo;
}

int run_verify(const std::string &instance_path, const std::string &verdict_path) {
    cph::Instance inst = load_instance(instance_path);
    cph::Verdict v = cph::parse_verdict_json(read_all(verdict_path));
    bool ok = v.num_qubits == inst.num_qubits && v.num_generators == inst.generators.size();
    if (ok) {
        ok = v.yes() ? cph::verify_witness(inst, v.witness) : cph::verify_certificate(inst, v.certificate);
    }
    std::cout << (ok ? "valid" : "invalid") << '\n';
    return ok ? kExitYes : kExitNo;
}

std::map<std::string, std::string> parse_params(const std::vector<std::string> &params) {
    std::map<std::string, std::string> out;
    for (const auto &p : params) {
        auto eq = p.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw std::invalid_argument("parameter '" + p + "' must look like key=value");
        }
        out[p.substr(0, eq)] = p.substr(eq + 1);
    }
    return out;
}

std::uint64_t param_uint(const std::map<std::string, std::string> &params, const std::string &key,
                         std::optional<std::uint64_t> fallback = std::nullopt) {
    auto it = params.find(key);
    if (it == params.end()) {
        if (fallback) {
            return *fallback;
        }
        throw std::invalid_argument("missing parameter " + key + "=<integer>");
    }
    std::size_t used = 0;
    unsigned long long value = 0;
    try {
        value = std::stoull(it->second, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used != it->second.size() || it->second.empty() || it->second.front() == '-') {
        throw std::invalid_argument("parameter " + key + " must be a non-negative integer, got '" + it->second + "'");
    }
    return value;
}

int run_gen(const std::string &kind, const std::vector<std::string> &raw_params) {
    auto params = parse_params(raw_params);
    cph::Instance inst;
    if (kind == "toric") {
        inst = cph::toric_code(param_uint(params, "L"));
    } else if (kind == "toric-flipped") {
        std::uint64_t flip = param_uint(params, "flip", 1);
        if (flip == 0) {
            throw std::invalid_argument("flip is a 1-based generator index");
        }
        inst = cph::toric_code_flipped(param_uint(params, "L"), flip - 1);
    } else if (kind == "random") {
        auto force_it = params.find("force");
        std::string force = force_it == params.end() ? "yes" : force_it->second;
        if (force != "yes" && force != "no") {
            throw std::invalid_argument("force must be yes or no");
        }
        inst = cph::random_commuting(param_uint(params, "n"), param_uint(params, "r"), param_uint(params, "seed", 0),
                                     force == "yes" ? cph::Force::Yes : cph::Force::No);
    } else {
        throw std::invalid_argument("unknown generator '" + kind + "' (expected toric, toric-flipped or random)");
    }
    cph::write_instance(std::cout, inst);
    return 0;
}

int run_oracle(const std::string &path, std::size_t dense_limit) {
    cph::Instance inst = load_instance(path);
    auto bad = cph::validate_commuting(inst);
    if (!bad.empty()) {
        throw cph::PromiseViolation("generators " + std::to_string(bad.front().first + 1) + " and " +
                                    std::to_string(bad.front().second + 1) + " anticommute");
    }
    std::uint64_t dim = cph::oracle::groundspace_dim(inst, dense_limit);
    std::cout << (dim > 0 ? "YES" : "NO") << '\n';
    std::cout << "groundspace_dim " << dim << '\n';
    if (inst.generators.size() <= 20) {
        bool minus = cph::oracle::closure_contains_minus_identity(inst);
        std::cout << "closure_contains_minus_identity " << (minus ? "true" : "false") << '\n';
        if (minus == (dim > 0)) {
            std::cerr << "oracle: closure and trace disagree\n";
            return kExitDisagree;
        }
    }
    return dim > 0 ? kExitYes : kExitNo;
}

int run_bench(const std::vector<std::size_t> &sizes, std::uint64_t seed, std::size_t repeats) {
    std::vector<double> log_n;
    std::vector<double> log_t;
    std::cout << "n\tr\tanswer\tseconds\n";
    for (std::size_t n : sizes) {
        double best = 0;
        std::string answer;
        for (std::size_t rep = 0; rep < std::max<std::size_t>(repeats, 1); rep++) {
            cph::Instance inst = cph::random_commuting(n, n, seed + rep, rep % 2 ? cph::Force::No : cph::Force::Yes);
            auto start = std::chrono::steady_clock::now();
            cph::Verdict v = cph::decide(inst);
            double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            if (rep == 0 || secs < best) {
                best = secs;
                answer = v.yes() ? "YES" : "NO";
            }
        }
        std::cout << n << '\t' << n << '\t' << answer << '\t' << best << '\n';
        log_n.push_back(std::log(double(n)));
        log_t.push_back(std::log(std::max(best, 1e-9)));
    }
    if (log_n.size() >= 2) {
        double mx = 0, my = 0;
        for (std::size_t k = 0; k < log_n.size(); k++) {
            mx += log_n[k];
            my += log_t[k];
        }
        mx /= double(log_n.size());
        my /= double(log_n.size());
        double sxy = 0, sxx = 0;
        for (std::size_t k = 0; k < log_n.size(); k++) {
            sxy += (log_n[k] - mx) * (log_t[k] - my);
            sxx += (log_n[k] - mx) * (log_n[k] - mx);
        }
        std::cout << "log-log slope " << (sxx > 0 ? sxy / sxx : 0.0) << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Decide whether commuting signed Pauli words share a +1 eigenstate"};
    app.require_subcommand(1);

    SolveOptions solve;
    auto *solve_cmd = app.add_subcommand("solve", "Decide an instance file ('-' for stdin)");
    solve_cmd->add_option("instance", solve.path, "Instance file")->required();
    solve_cmd->add_option("--format", solve.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    solve_cmd->add_flag("--no-witness", solve.no_witness, "Omit witness words");
    solve_cmd->add_flag("--no-certificate", solve.no_certificate, "Omit the -I certificate");
    solve_cmd->add_flag("--cross-check", solve.cross_check,
                        "Also run the kernel route, evidence checks and (for small n) the dense oracle");
    solve_cmd->add_option("--dense-limit", solve.dense_limit, "Largest n for the dense oracle");

    std::string verify_instance;
    std::string verify_verdict;
    auto *verify_cmd = app.add_subcommand("verify", "Check a JSON verdict against an instance");
    verify_cmd->add_option("instance", verify_instance, "Instance file")->required();
    verify_cmd->add_option("verdict", verify_verdict, "Verdict file (output of solve --format json)")->required();

    std::string gen_kind;
    std::vector<std::string> gen_params;
    auto *gen_cmd = app.add_subcommand("gen", "Write a generated instance to stdout");
    gen_cmd->add_option("kind", gen_kind, "toric | toric-flipped | random")->required();
    gen_cmd->add_option("params", gen_params, "key=value parameters: L, flip, n, r, seed, force");

    std::string oracle_path;
    std::size_t oracle_limit = cph::oracle::kDefaultDenseLimit;
    auto *oracle_cmd = app.add_subcommand("oracle", "Brute-force dense decision for small instances");
    oracle_cmd->add_option("instance", oracle_path, "Instance file")->required();
    oracle_cmd->add_option("--dense-limit", oracle_limit, "Largest n for the dense oracle");

    std::vector<std::size_t> bench_sizes{250, 500, 1000};
    std::uint64_t bench_seed = 1;
    std::size_t bench_repeats = 1;
    auto *bench_cmd = app.add_subcommand("bench", "Time decide on random n = r instances");
    bench_cmd->add_option("--sizes", bench_sizes, "Instance sizes")->delimiter(',');
    bench_cmd->add_option("--seed", bench_seed, "Base seed");
    bench_cmd->add_option("--repeats", bench_repeats, "Instances per size (best time kept)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    try {
        if (*solve_cmd) {
            return run_solve(solve);
        }
        if (*verify_cmd) {
            return run_verify(verify_instance, verify_verdict);
        }
        if (*gen_cmd) {
            return run_gen(gen_kind, gen_params);
        }
        if (*oracle_cmd) {
            return run_oracle(oracle_path, oracle_limit);
        }
        if (*bench_cmd) {
            return run_bench(bench_sizes, bench_seed, bench_repeats);
        }
    } catch (const cph::PromiseViolation &e) {
        std::cerr << "promise violation: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitInput;
}
