// icx: two-sender unicast index coding toolkit.
//
// Subcommands: gen, analyze, encode, verify, oracle, reduce.
// Exit codes: 0 success / verification pass, 1 verification failure,
// 2 usage or input error, 3 exactness cap exceeded.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "icx/caps.hpp"
#include "icx/codes.hpp"
#include "icx/errors.hpp"
#include "icx/graphs.hpp"
#include "icx/instance.hpp"
#include "icx/schemes.hpp"
#include "icx/verify.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_verify_failed = 1;
constexpr int exit_usage = 2;
constexpr int exit_cap = 3;

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    if (!f.good()) throw icx::parse_error("cannot read '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

// Writes via a temporary file plus rename so readers never see partial output.
void write_atomic(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f.good()) throw icx::parse_error("cannot write '" + tmp + "'");
        f << content;
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw icx::parse_error("cannot move output into '" + path + "'");
    }
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
    } else {
        write_atomic(out_path, content);
    }
}

icx::caps parse_caps(const std::string& arg) {
    icx::caps cp;
    if (arg.empty()) return cp;
    std::stringstream ss(arg);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) {
            throw icx::parse_error("bad --caps entry '" + item +
                                   "' (want key=value)");
        }
        std::string key = item.substr(0, eq);
        int value = 0;
        try {
            value = std::stoi(item.substr(eq + 1));
        } catch (const std::exception&) {
            throw icx::parse_error("bad --caps value in '" + item + "'");
        }
        if (key == "mais") cp.mais_cap = value;
        else if (key == "coloring") cp.coloring_cap = value;
        else if (key == "partition") cp.partition_cap = value;
        else if (key == "cycles") cp.cycle_budget = value;
        else if (key == "oracle") cp.oracle_cap = value;
        else throw icx::parse_error("unknown --caps key '" + key + "'");
    }
    return cp;
}

icx::scheme_result run_scheme(const icx::instance& inst, const std::string& name,
                              const icx::caps& cp) {
    if (name == "cycle") return icx::cycle_cover(inst, cp);
    if (name == "clique") return icx::clique_cover(inst, cp);
    if (name == "local") return icx::local_chromatic_code(inst, cp);
    if (name == "plocal") return icx::partitioned_local_chromatic(inst, cp);
    if (name.rfind("trivial:", 0) == 0) {
        return icx::trivial_partition_scheme(
            inst, icx::parse_base_scheme(name.substr(8)), cp);
    }
    throw icx::parse_error("unknown scheme '" + name +
                           "' (want cycle|clique|local|plocal|trivial:<base>)");
}

int thread_count_from_env() {
    const char* env = std::getenv("ICX_THREADS");
    if (env == nullptr) return 0;
    try {
        return std::max(0, std::stoi(env));
    } catch (const std::exception&) {
        return 0;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-sender unicast index coding toolkit"};
    app.require_subcommand(1);

    bool verbose = false;
    int threads = thread_count_from_env();  // informational; solvers are
                                            // single-threaded and deterministic
    std::string caps_arg;
    app.add_flag("--verbose", verbose, "human-readable summary on stderr");
    app.add_option("--threads", threads, "worker threads (default: all cores)");
    app.add_option("--caps", caps_arg,
                   "override exactness caps, e.g. mais=20,coloring=12,"
                   "partition=10,cycles=10000,oracle=6");

    // gen
    auto* gen = app.add_subcommand("gen", "generate a random instance");
    int gen_n = 4;
    double gen_density = 0.5;
    std::string gen_split = "overlap";
    int gen_common = 1;
    unsigned gen_seed = 0;
    std::string gen_out;
    gen->add_option("--n", gen_n, "number of messages/receivers")->required();
    gen->add_option("--density", gen_density, "arc probability in [0,1]");
    gen->add_option("--split", gen_split,
                    "disjoint|overlap[:k]|one-covers-all");
    gen->add_option("--common", gen_common, "common messages for overlap split");
    gen->add_option("--seed", gen_seed, "rng seed");
    gen->add_option("-o,--out", gen_out, "output file (default: stdout)");

    // analyze
    auto* analyze = app.add_subcommand("analyze", "compute the bounds report");
    std::string analyze_in;
    bool analyze_oracle = false;
    bool analyze_schemes = false;
    analyze->add_option("instance", analyze_in, "instance file")->required();
    analyze->add_flag("--oracle", analyze_oracle, "include the exact linear oracle");
    analyze->add_flag("--schemes", analyze_schemes,
                      "embed each scheme's code and diagnostics");

    // encode
    auto* encode = app.add_subcommand("encode", "construct a scheme's code");
    std::string encode_in, encode_scheme, encode_out;
    encode->add_option("instance", encode_in, "instance file")->required();
    encode->add_option("--scheme", encode_scheme,
                       "cycle|clique|local|plocal|trivial:<base>")->required();
    encode->add_option("-o,--out", encode_out, "output file (default: stdout)");

    // verify
    auto* verify = app.add_subcommand("verify", "check a code against an instance");
    std::string verify_in, verify_code_path;
    verify->add_option("instance", verify_in, "instance file")->required();
    verify->add_option("code", verify_code_path, "code file")->required();

    // oracle
    auto* oracle = app.add_subcommand("oracle", "exact scalar-linear optimum");
    std::string oracle_in;
    int oracle_max = -1;
    oracle->add_option("instance", oracle_in, "instance file")->required();
    oracle->add_option("--max-length", oracle_max, "stop above this length");

    // reduce
    auto* reduce = app.add_subcommand("reduce", "report instance reductions");
    std::string reduce_in;
    reduce->add_option("instance", reduce_in, "instance file")->required();

    // global flags (--caps, --verbose, --threads) may follow the subcommand
    for (auto* sub : {gen, analyze, encode, verify, oracle, reduce}) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return exit_usage;
    }
    (void)threads;

    try {
        icx::caps cp = parse_caps(caps_arg);

        if (gen->parsed()) {
            std::string split_name = gen_split;
            if (auto colon = split_name.find(':'); colon != std::string::npos) {
                try {
                    gen_common = std::stoi(split_name.substr(colon + 1));
                } catch (const std::exception&) {
                    throw icx::parse_error("bad split parameter in '" +
                                           gen_split + "'");
                }
                split_name = split_name.substr(0, colon);
            }
            icx::instance inst = icx::generate_random_instance(
                gen_n, gen_density, icx::parse_split(split_name), gen_seed,
                gen_common);
            emit(gen_out, icx::serialize_instance(inst));
            if (verbose) {
                std::cerr << "generated n=" << inst.n << " |M1|="
                          << inst.sender1.size() << " |M2|=" << inst.sender2.size()
                          << " |Pc|=" << inst.common().size() << "\n";
            }
            return exit_ok;
        }

        if (analyze->parsed()) {
            icx::instance inst = icx::load_instance(slurp(analyze_in));
            icx::bounds_report rep = icx::make_bounds_report(inst, analyze_oracle, cp);
            nlohmann::json j = icx::to_json(rep);
            if (analyze_schemes) {
                j["schemes"] = nlohmann::json::object();
                for (const std::string name :
                     {"cycle", "clique", "local", "plocal"}) {
                    try {
                        icx::scheme_result r = run_scheme(inst, name, cp);
                        nlohmann::json js;
                        js["length"] = r.length;
                        js["code"] = nlohmann::json::parse(icx::serialize_code(r.code));
                        js["diagnostics"] = r.diagnostics;
                        j["schemes"][name] = js;
                    } catch (const icx::cap_exceeded& e) {
                        j["schemes"][name] = {{"cap_reason", e.what()}};
                    }
                }
            }
            std::cout << j.dump(2) << "\n";
            if (verbose) {
                std::cerr << "bounds: mais="
                          << (rep.mais.value ? std::to_string(*rep.mais.value) : "?")
                          << " l_cy="
                          << (rep.cycle_cover_len.value
                                  ? std::to_string(*rep.cycle_cover_len.value) : "?")
                          << " l_cl="
                          << (rep.clique_cover_len.value
                                  ? std::to_string(*rep.clique_cover_len.value) : "?")
                          << " alpha="
                          << (rep.alpha.value ? std::to_string(*rep.alpha.value) : "?")
                          << " l_p="
                          << (rep.partitioned_len.value
                                  ? std::to_string(*rep.partitioned_len.value) : "?")
                          << " reduction=" << rep.reduction << "\n";
            }
            return exit_ok;
        }

        if (encode->parsed()) {
            icx::instance inst = icx::load_instance(slurp(encode_in));
            icx::scheme_result r = run_scheme(inst, encode_scheme, cp);
            emit(encode_out, icx::serialize_code(r.code));
            if (verbose) {
                std::cerr << "scheme " << r.scheme << " length " << r.length
                          << " over F_" << r.code.q << "\n";
            }
            return exit_ok;
        }

        if (verify->parsed()) {
            icx::instance inst = icx::load_instance(slurp(verify_in));
            icx::index_code code = icx::load_code(slurp(verify_code_path));
            icx::verify_report rep = icx::verify_code(inst, code);
            std::cout << icx::to_json(rep).dump(2) << "\n";
            if (verbose) {
                std::cerr << (rep.pass ? "PASS" : "FAIL") << " length "
                          << rep.length << "\n";
            }
            return rep.pass ? exit_ok : exit_verify_failed;
        }

        if (oracle->parsed()) {
            icx::instance inst = icx::load_instance(slurp(oracle_in));
            auto value = icx::oracle_beta1_linear(inst, oracle_max, cp);
            nlohmann::json j;
            if (value) {
                j["oracle_linear"] = *value;
                std::cout << j.dump(2) << "\n";
                return exit_ok;
            }
            std::cerr << "oracle: optimum exceeds max length "
                      << oracle_max << "\n";
            j["oracle_linear"] = nullptr;
            j["note"] = "exceeds max length " + std::to_string(oracle_max);
            std::cout << j.dump(2) << "\n";
            return exit_cap;
        }

        if (reduce->parsed()) {
            icx::instance inst = icx::load_instance(slurp(reduce_in));
            std::cout << icx::to_json(icx::reduce_instance(inst)).dump(2) << "\n";
            return exit_ok;
        }
    } catch (const icx::cap_exceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return exit_cap;
    } catch (const icx::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const icx::validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
