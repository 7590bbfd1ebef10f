#include "pell/bench.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "pell/errors.hpp"
#include "pell/ops.hpp"

namespace pell {

namespace {

using Clock = std::chrono::steady_clock;

struct Samples {
    std::vector<double> seconds;
    std::vector<double> exps;
    std::vector<double> muls;

    void add(double t, const OpCounts& c) {
        seconds.push_back(t);
        exps.push_back(static_cast<double>(c.group_exp));
        muls.push_back(static_cast<double>(c.field_mul));
    }
};

double mean(const std::vector<double>& v) {
    double s = 0;
    for (double x : v) s += x;
    return v.empty() ? 0 : s / static_cast<double>(v.size());
}

double sample_std(const std::vector<double>& v) {
    if (v.size() < 2) return 0;
    double m = mean(v);
    double s = 0;
    for (double x : v) s += (x - m) * (x - m);
    return std::sqrt(s / static_cast<double>(v.size() - 1));
}

template <typename F>
std::pair<double, OpCounts> timed(F&& fn) {
    reset_op_counts();
    auto t0 = Clock::now();
    fn();
    auto t1 = Clock::now();
    return {std::chrono::duration<double>(t1 - t0).count(), op_counts()};
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchConfig& cfg) {
    std::vector<BenchRow> rows;
    for (SchemeId scheme : cfg.schemes) {
        for (unsigned n : cfg.sizes) {
            Samples keygen_s, setup_s, keys_s, enc_s, dec_s;
            for (unsigned rep = 0; rep < cfg.reps; ++rep) {
                Rng rng(mix_seed(cfg.seed,
                                 {static_cast<std::uint64_t>(scheme), n, rep}));

                SchemeSetup setup{scheme, Field{mpz_class(3)}, 0, PellPoint{}};
                auto [t_setup, c_setup] =
                    timed([&] { setup = keygen_setup(scheme, n, rng); });

                PublicKey pk{scheme, setup.field, 0, PointsKeys{}};
                SecretKey sk;
                auto [t_keys, c_keys] =
                    timed([&] { std::tie(pk, sk) = keygen_keys(setup, rng); });

                setup_s.add(t_setup, c_setup);
                keys_s.add(t_keys, c_keys);
                OpCounts c_total{c_setup.field_mul + c_keys.field_mul,
                                 c_setup.field_inv + c_keys.field_inv,
                                 c_setup.group_exp + c_keys.group_exp};
                keygen_s.add(t_setup + t_keys, c_total);

                mpz_class msg = rng.bits(capacity_bits(scheme, n, cfg.r_pad));
                Ciphertext ct{scheme, PointsCiphertext{}};
                auto [t_enc, c_enc] =
                    timed([&] { ct = encrypt(pk, msg, rng, cfg.r_pad); });
                enc_s.add(t_enc, c_enc);

                mpz_class back;
                auto [t_dec, c_dec] =
                    timed([&] { back = decrypt(pk, sk, ct, cfg.r_pad); });
                dec_s.add(t_dec, c_dec);

                if (back != msg) throw Error("bench: round trip mismatch");
            }
            auto emit = [&](const char* op, const Samples& s) {
                rows.push_back({scheme, n, op, mean(s.seconds), sample_std(s.seconds),
                                cfg.reps, mean(s.exps), mean(s.muls)});
            };
            emit("keygen", keygen_s);
            emit("keygen_setup", setup_s);
            emit("keygen_keys", keys_s);
            emit("encrypt", enc_s);
            emit("decrypt", dec_s);
        }
    }
    return rows;
}

void write_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
    out << "scheme,n,operation,mean_seconds,std_seconds,reps,exp_count,mul_count\n";
    char buf[160];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%.9e,%.9e,%u,%.10g,%.10g", r.mean_seconds,
                      r.std_seconds, r.reps, r.exp_count, r.mul_count);
        out << to_string(r.scheme) << ',' << r.n << ',' << r.operation << ',' << buf << '\n';
    }
}

}  // namespace pell
