// mor: keygen / encrypt / decrypt / attack / bench for the MOR cryptosystem
// over UT(n, p), with the Frattini-quotient attack as a first-class command.

#include <algorithm>
#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mor/attack.hpp"
#include "mor/morsys.hpp"
#include "mor/polyfactor.hpp"
#include "mor/serialize.hpp"

namespace {

constexpr int kExitInvalidParams = 2;
constexpr int kExitIo = 3;
constexpr int kExitBadInput = 4;
constexpr int kExitResourceLimit = 5;
constexpr int kExitInconsistent = 6;

struct Options {
    std::size_t n = 4;
    std::uint64_t p = 10007;
    std::uint64_t seed = 0;
    std::string in;
    std::vector<std::string> ins;
    std::string out;
    std::string pub = "public.json";
    std::string priv = "private.json";
    std::string solver = "ph";
    std::uint64_t solver_ceiling = 1ULL << 40;
    bool random_message = false;
    std::string pack_text;
    bool unpack = false;
    bool verbose = false;
    std::string known_m;
    std::vector<std::size_t> bench_n = {3, 4, 5};
    std::vector<std::uint64_t> bench_p = {10007};
};

mor::GroupParams checked_params(const Options& opt) {
    if (opt.n < 3) throw mor::InvalidInput("n must be >= 3");
    if (opt.p < 3 || !mor::is_prime_u64(opt.p)) throw mor::InvalidInput("p not an odd prime");
    return mor::GroupParams::create(opt.n, opt.p);
}

mor::SolverConfig solver_config(const Options& opt) {
    mor::SolverConfig cfg;
    if (opt.solver == "exhaustive") cfg.kind = mor::SolverKind::Exhaustive;
    else if (opt.solver == "bsgs") cfg.kind = mor::SolverKind::Bsgs;
    else if (opt.solver == "ph") cfg.kind = mor::SolverKind::PohligHellman;
    else throw mor::InvalidInput("unknown solver: " + opt.solver);
    cfg.bsgs_ceiling = opt.solver_ceiling;
    return cfg;
}

void log_verbose(const Options& opt, const std::string& msg) {
    if (opt.verbose) std::cerr << "[mor] " << msg << "\n";
}

int cmd_keygen(const Options& opt) {
    const mor::GroupParams params = checked_params(opt);
    auto [pk, sk] = mor::keygen(params, opt.seed);
    mor::write_text_file_atomic(opt.pub, mor::serialize_public_key(pk));
    mor::write_text_file_atomic(opt.priv, mor::serialize_private_key(sk));

    std::cout << "order(phi) = " << mor::to_decimal(sk.order) << "\n";
    const mor::PolyFp cp = mor::char_poly(mor::induced_map(pk.phi));
    std::cout << "induced map char poly = " << cp.to_string();
    const auto factors = mor::factor_poly(cp);
    std::cout << " =";
    for (const auto& [f, mult] : factors) {
        std::cout << " (" << f.to_string() << ")";
        if (mult > 1) std::cout << "^" << mult;
        std::cout << " [d=" << f.degree() << "]";
    }
    std::cout << "\n";
    log_verbose(opt, "wrote " + opt.pub + " and " + opt.priv);
    return 0;
}

int cmd_encrypt(const Options& opt) {
    const std::string pk_text = mor::read_text_file(opt.pub);
    const mor::PublicKey pk = mor::parse_public_key(pk_text);
    mor::Rng rng(opt.seed);

    int sources = (opt.in.empty() ? 0 : 1) + (opt.random_message ? 1 : 0) +
                  (opt.pack_text.empty() ? 0 : 1);
    if (sources != 1) {
        throw mor::InvalidInput("choose exactly one of --in, --random-message, --pack-bytes");
    }
    mor::UTElement msg(pk.params);
    if (!opt.in.empty()) {
        msg = mor::parse_element(mor::read_text_file(opt.in), pk.params);
    } else if (opt.random_message) {
        msg = mor::UTElement::random(pk.params, rng);
        log_verbose(opt, "random message: " + mor::serialize_element(msg));
    } else {
        msg = mor::pack_bytes(pk.params, opt.pack_text);
        log_verbose(opt, "packed " + std::to_string(opt.pack_text.size()) + " bytes (capacity " +
                             std::to_string(mor::packing_capacity(pk.params)) + ")");
    }
    mor::Ciphertext ct = mor::encrypt(pk, msg, rng);
    const std::string out = opt.out.empty() ? "ciphertext.json" : opt.out;
    mor::write_text_file_atomic(out, mor::serialize_ciphertext(ct));
    log_verbose(opt, "wrote " + out);
    return 0;
}

int cmd_decrypt(const Options& opt) {
    const mor::PrivateKey sk = mor::parse_private_key(mor::read_text_file(opt.priv));
    if (opt.in.empty()) throw mor::InvalidInput("decrypt requires --in ciphertext.json");
    const mor::Ciphertext ct = mor::parse_ciphertext(mor::read_text_file(opt.in));
    const mor::UTElement msg = mor::decrypt(sk, ct);
    const std::string out = opt.out.empty() ? "message.json" : opt.out;
    mor::write_text_file_atomic(out, mor::serialize_element(msg));
    if (opt.unpack) std::cout << mor::unpack_bytes(msg) << "\n";
    log_verbose(opt, "wrote " + out);
    return 0;
}

int cmd_attack(const Options& opt) {
    const mor::PublicKey pk = mor::parse_public_key(mor::read_text_file(opt.pub));
    std::vector<mor::Ciphertext> challenges;
    for (const std::string& path : opt.ins) {
        challenges.push_back(mor::parse_ciphertext(mor::read_text_file(path)));
    }
    const mor::SolverConfig cfg = solver_config(opt);
    mor::BreakResult res = mor::break_mor(pk, challenges, cfg);

    if (!opt.known_m.empty()) {
        const mor::BigInt m_true = mor::bigint_from_decimal(opt.known_m);
        res.report.known_m_match = (m_true % res.report.modulus == res.report.recovered.r);
    }

    std::cout << "m = " << mor::to_decimal(res.report.recovered.r) << " (mod "
              << mor::to_decimal(res.report.modulus) << ")\n";
    std::cout << "full_order_match = " << (res.report.full_order_match ? "true" : "false") << "\n";
    for (const auto& pf : res.report.per_factor) {
        std::cout << "factor " << pf.factor.to_string() << " mult=" << pf.multiplicity
                  << " d=" << pf.field_degree << " residue " << mor::to_decimal(pf.residue.r)
                  << " mod " << mor::to_decimal(pf.residue.modulus) << "\n";
    }
    for (const auto& jr : res.report.jordan_residues) {
        std::cout << "jordan residue " << mor::to_decimal(jr.r) << " mod "
                  << mor::to_decimal(jr.modulus) << "\n";
    }
    const std::string out = opt.out.empty() ? "attack_report.json" : opt.out;
    mor::write_text_file_atomic(out, mor::serialize_break_result(res));
    log_verbose(opt, "wrote " + out);
    if (res.report.known_m_match && !*res.report.known_m_match) {
        std::cerr << "known-m check FAILED\n";
        return 1;
    }
    return 0;
}

int cmd_bench(const Options& opt) {
    using Clock = std::chrono::steady_clock;
    auto median_us = [](std::vector<std::int64_t>& v) {
        std::sort(v.begin(), v.end());
        return v[v.size() / 2];
    };
    std::cout << "op\tn\tp\tmedian_us\truns\n";
    const int runs = 5;
    for (std::size_t n : opt.bench_n) {
        for (std::uint64_t p : opt.bench_p) {
            Options sub = opt;
            sub.n = n;
            sub.p = p;
            const mor::GroupParams params = checked_params(sub);
            std::vector<std::int64_t> t_key, t_enc, t_dec, t_att;
            std::int64_t att_dlp = 0, att_factor = 0;
            for (int run = 0; run < runs; ++run) {
                const std::uint64_t seed = opt.seed + 1000 * run + 10 * n + p;
                auto s0 = Clock::now();
                auto [pk, sk] = mor::keygen(params, seed);
                t_key.push_back(
                    std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - s0).count());

                mor::Rng rng(seed ^ 0xbeef);
                mor::UTElement msg = mor::UTElement::random(params, rng);
                s0 = Clock::now();
                mor::Ciphertext ct = mor::encrypt(pk, msg, rng);
                t_enc.push_back(
                    std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - s0).count());

                s0 = Clock::now();
                if (mor::decrypt(sk, ct) != msg) throw mor::Inconsistent("bench roundtrip failed");
                t_dec.push_back(
                    std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - s0).count());

                s0 = Clock::now();
                mor::BreakResult res = mor::break_mor(pk, {ct}, solver_config(opt));
                t_att.push_back(
                    std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - s0).count());
                att_dlp += res.report.timings.dlp_us;
                att_factor += res.report.timings.factor_us;
            }
            std::cout << "keygen\t" << n << "\t" << p << "\t" << median_us(t_key) << "\t" << runs << "\n";
            std::cout << "encrypt\t" << n << "\t" << p << "\t" << median_us(t_enc) << "\t" << runs << "\n";
            std::cout << "decrypt\t" << n << "\t" << p << "\t" << median_us(t_dec) << "\t" << runs << "\n";
            std::cout << "attack\t" << n << "\t" << p << "\t" << median_us(t_att) << "\t" << runs << "\n";
            std::cout << "attack.dlp\t" << n << "\t" << p << "\t" << att_dlp / runs << "\t" << runs << "\n";
            std::cout << "attack.factor\t" << n << "\t" << p << "\t" << att_factor / runs << "\t" << runs
                      << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"MOR cryptosystem over UT(n, p) and its reduction to finite-field DLPs"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--seed", opt.seed, "64-bit RNG seed")->envname("MOR_SEED");
        sub->add_flag("--verbose", opt.verbose, "log details to stderr");
    };

    CLI::App* keygen = app.add_subcommand("keygen", "generate a key pair");
    keygen->add_option("--n", opt.n, "matrix dimension (>= 3)");
    keygen->add_option("--p", opt.p, "odd prime modulus");
    keygen->add_option("--pub", opt.pub, "public key output path");
    keygen->add_option("--priv", opt.priv, "private key output path");
    add_common(keygen);

    CLI::App* encrypt = app.add_subcommand("encrypt", "encrypt a message element");
    encrypt->add_option("--pub", opt.pub, "public key path");
    encrypt->add_option("--in", opt.in, "message element JSON");
    encrypt->add_flag("--random-message", opt.random_message, "draw a random message");
    encrypt->add_option("--pack-bytes", opt.pack_text, "pack a byte string into the element");
    encrypt->add_option("--out", opt.out, "ciphertext output path (default ciphertext.json)");
    add_common(encrypt);

    CLI::App* decrypt = app.add_subcommand("decrypt", "decrypt a ciphertext");
    decrypt->add_option("--priv", opt.priv, "private key path");
    decrypt->add_option("--in", opt.in, "ciphertext path");
    decrypt->add_option("--out", opt.out, "message output path (default message.json)");
    decrypt->add_flag("--pack-bytes", opt.unpack, "also print the unpacked byte string");
    add_common(decrypt);

    CLI::App* attack = app.add_subcommand("attack", "recover m from a public key");
    attack->add_option("--pub", opt.pub, "public key path");
    attack->add_option("--in", opt.ins, "challenge ciphertext path(s)");
    attack->add_option("--out", opt.out, "report output path (default attack_report.json)");
    attack->add_option("--solver", opt.solver, "exhaustive | bsgs | ph")
        ->check(CLI::IsMember({"exhaustive", "bsgs", "ph"}));
    attack->add_option("--solver-ceiling", opt.solver_ceiling, "BSGS group-order ceiling");
    attack->add_option("--test-hook-known-m", opt.known_m, "compare against a known exponent")
        ->group("");  // hidden
    add_common(attack);

    CLI::App* bench = app.add_subcommand("bench", "timing table over a parameter grid (TSV)");
    bench->add_option("--n", opt.bench_n, "grid of n values");
    bench->add_option("--p", opt.bench_p, "grid of p values");
    bench->add_option("--solver", opt.solver, "exhaustive | bsgs | ph")
        ->check(CLI::IsMember({"exhaustive", "bsgs", "ph"}));
    add_common(bench);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitInvalidParams;
    }

    try {
        if (keygen->parsed()) return cmd_keygen(opt);
        if (encrypt->parsed()) return cmd_encrypt(opt);
        if (decrypt->parsed()) return cmd_decrypt(opt);
        if (attack->parsed()) return cmd_attack(opt);
        if (bench->parsed()) return cmd_bench(opt);
    } catch (const mor::ResourceLimit& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitResourceLimit;
    } catch (const mor::Inconsistent& e) {
        std::cerr << "inconsistent: " << e.what() << "\n";
        return kExitInconsistent;
    } catch (const mor::IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitIo;
    } catch (const mor::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const mor::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const mor::InvalidInput& e) {
        // parameter-style errors from keygen get exit 2, bad payloads 4
        std::cerr << "error: " << e.what() << "\n";
        return keygen->parsed() ? kExitInvalidParams : kExitBadInput;
    } catch (const mor::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
