#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pell/bench.hpp"
#include "pell/codec.hpp"
#include "pell/errors.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw pell::Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out || !(out << data).flush()) throw pell::Error("cannot write " + path);
}

// Messages travel as big-endian integers with a 0x01 sentinel byte in
// front, so plaintexts with leading zero bytes round-trip byte-exactly.
mpz_class frame_message(const std::string& bytes, unsigned cap_bits) {
    if ((bytes.size() + 1) * 8 > cap_bits)
        throw pell::MessageTooLarge(
            "message of " + std::to_string(bytes.size()) + " bytes exceeds the capacity of " +
            std::to_string(cap_bits / 8 - 1) + " bytes at this field size");
    std::string framed = std::string(1, '\x01') + bytes;
    mpz_class m;
    mpz_import(m.get_mpz_t(), framed.size(), 1, 1, 0, 0, framed.data());
    return m;
}

std::string unframe_message(const mpz_class& m) {
    std::size_t count = (mpz_sizeinbase(m.get_mpz_t(), 2) + 7) / 8;
    std::string bytes(count, '\0');
    mpz_export(bytes.data(), &count, 1, 1, 0, 0, m.get_mpz_t());
    bytes.resize(count);
    if (bytes.empty() || bytes[0] != '\x01')
        throw pell::DecodeFailure("decrypted message has no sentinel byte");
    return bytes.substr(1);
}

pell::Rng make_rng(bool seeded, std::uint64_t seed) {
    return seeded ? pell::Rng(seed) : pell::Rng::from_entropy();
}

pell::PublicKey load_pk(const std::string& path) {
    return pell::bind_public_key(pell::parse_record(read_file(path)));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ElGamal-style public-key encryption on Pell conics"};
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    bool seeded = false;

    auto add_seed = [&](CLI::App* cmd) {
        cmd->add_option("--seed", seed, "deterministic RNG seed (default: OS entropy)")
            ->each([&](const std::string&) { seeded = true; });
    };

    // keygen
    auto* keygen_cmd = app.add_subcommand("keygen", "generate a key pair");
    std::string scheme_tok = "points";
    unsigned bits = 256;
    std::string out_pk, out_sk;
    keygen_cmd->add_option("--scheme", scheme_tok, "points | params | alt")
        ->check(CLI::IsMember({"points", "params", "alt"}));
    keygen_cmd->add_option("--bits", bits, "prime size in bits")->check(CLI::Range(10u, 8192u));
    keygen_cmd->add_option("--out-pk", out_pk, "public key output path")->required();
    keygen_cmd->add_option("--out-sk", out_sk, "secret key output path")->required();
    add_seed(keygen_cmd);

    // encrypt
    auto* encrypt_cmd = app.add_subcommand("encrypt", "encrypt a file");
    std::string pk_path, sk_path, in_path, out_path;
    encrypt_cmd->add_option("--pk", pk_path, "public key path")->required();
    encrypt_cmd->add_option("--in", in_path, "plaintext input path")->required();
    encrypt_cmd->add_option("--out", out_path, "ciphertext output path")->required();
    add_seed(encrypt_cmd);

    // decrypt
    auto* decrypt_cmd = app.add_subcommand("decrypt", "decrypt a file");
    decrypt_cmd->add_option("--pk", pk_path, "public key path")->required();
    decrypt_cmd->add_option("--sk", sk_path, "secret key path")->required();
    decrypt_cmd->add_option("--in", in_path, "ciphertext input path")->required();
    decrypt_cmd->add_option("--out", out_path, "plaintext output path")->required();

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "benchmark keygen/encrypt/decrypt");
    std::vector<std::string> scheme_toks{"points", "params", "alt"};
    std::vector<unsigned> size_list{128, 256};
    unsigned reps = 10;
    std::string csv_path;
    bench_cmd->add_option("--schemes", scheme_toks, "schemes to run")
        ->delimiter(',')
        ->check(CLI::IsMember({"points", "params", "alt"}));
    bench_cmd->add_option("--bits", size_list, "field sizes to run")
        ->delimiter(',')
        ->check(CLI::Range(10u, 8192u));
    bench_cmd->add_option("--reps", reps, "repetitions per cell")->check(CLI::Range(1u, 100000u));
    bench_cmd->add_option("--csv", csv_path, "CSV output path (default: stdout)");
    add_seed(bench_cmd);

    // sizes
    auto* sizes_cmd = app.add_subcommand("sizes", "report serialized object sizes");
    sizes_cmd->add_option("--bits", bits, "prime size in bits")->check(CLI::Range(10u, 8192u));
    add_seed(sizes_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*keygen_cmd) {
            pell::Rng rng = make_rng(seeded, seed);
            auto [pk, sk] = pell::keygen(pell::scheme_from_string(scheme_tok), bits, rng);
            write_file(out_pk, pell::serialize(pell::public_key_record(pk)));
            write_file(out_sk, pell::serialize(pell::secret_key_record(sk, pk.scheme)));
        } else if (*encrypt_cmd) {
            pell::Rng rng = make_rng(seeded, seed);
            pell::PublicKey pk = load_pk(pk_path);
            mpz_class msg = frame_message(read_file(in_path),
                                          pell::capacity_bits(pk.scheme, pk.field.bits()));
            pell::Ciphertext ct = pell::encrypt(pk, msg, rng);
            write_file(out_path, pell::serialize(pell::ciphertext_record(ct, pk)));
        } else if (*decrypt_cmd) {
            pell::PublicKey pk = load_pk(pk_path);
            pell::SecretKey sk =
                pell::bind_secret_key(pell::parse_record(read_file(sk_path)), pk);
            pell::Ciphertext ct =
                pell::bind_ciphertext(pell::parse_record(read_file(in_path)), pk);
            write_file(out_path, unframe_message(pell::decrypt(pk, sk, ct)));
        } else if (*bench_cmd) {
            pell::BenchConfig cfg;
            cfg.schemes.clear();
            for (const auto& tok : scheme_toks) cfg.schemes.push_back(pell::scheme_from_string(tok));
            cfg.sizes = size_list;
            cfg.reps = reps;
            cfg.seed = seeded ? seed : pell::Rng::from_entropy().u64();
            auto rows = pell::run_bench(cfg);
            if (csv_path.empty()) {
                pell::write_csv(std::cout, rows);
            } else {
                std::ostringstream ss;
                pell::write_csv(ss, rows);
                write_file(csv_path, ss.str());
            }
        } else if (*sizes_cmd) {
            pell::Rng rng = make_rng(seeded, seed);
            auto rows = pell::measure_sizes(bits, rng);
            std::printf("%-8s %6s %10s %10s %10s %16s\n", "scheme", "n", "pk_bits", "sk_bits",
                        "ct_bits", "plaintext_bits");
            for (const auto& r : rows)
                std::printf("%-8s %6u %10u %10u %10u %16u\n", pell::to_string(r.scheme).c_str(),
                            r.n, r.pk_bits, r.sk_bits, r.ct_bits, r.plaintext_bits);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
