#ifndef SEMIFLIGHT_RNG_HPP
#define SEMIFLIGHT_RNG_HPP

#include <cmath>
#include <cstdint>
#include <vector>

namespace semiflight {

// Philox4x32-10 counter-based generator.
// Salmon et al., "Parallel random numbers: as easy as 1, 2, 3", SC 2011.
//
// A stream is addressed by (seed, stream_index): the 64-bit seed is the
// Philox key and the stream index occupies the high 64 bits of the 128-bit
// counter.  Every (seed, stream) pair therefore yields a disjoint block of
// 2^64 draws, independent of how many workers consume other streams.
class Rng {
public:
    Rng(std::uint64_t seed, std::uint64_t stream_index = 0)
        : key_{static_cast<std::uint32_t>(seed),
               static_cast<std::uint32_t>(seed >> 32)},
          ctr_{0, 0,
               static_cast<std::uint32_t>(stream_index),
               static_cast<std::uint32_t>(stream_index >> 32)} {}

    std::uint64_t next_u64() {
        if (buf_pos_ >= 2) refill();
        return buf_[buf_pos_++];
    }

    // Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform on (0, 1); safe under log().
    double uniform_pos() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    double exponential(double rate) { return -std::log(uniform_pos()) / rate; }

    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double r = std::sqrt(-2.0 * std::log(uniform_pos()));
        const double a = 6.283185307179586476925287 * uniform();
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    // Uniform direction on S^{d-1}; d = 1 gives {+1, -1}.
    void uniform_direction(int d, double* v) {
        if (d == 1) {
            v[0] = (next_u64() & 1u) ? 1.0 : -1.0;
            return;
        }
        double n2;
        do {
            n2 = 0.0;
            for (int i = 0; i < d; ++i) {
                v[i] = normal();
                n2 += v[i] * v[i];
            }
        } while (n2 < 1e-300);
        const double inv = 1.0 / std::sqrt(n2);
        for (int i = 0; i < d; ++i) v[i] *= inv;
    }

    std::vector<double> uniform_direction(int d) {
        std::vector<double> v(static_cast<std::size_t>(d));
        uniform_direction(d, v.data());
        return v;
    }

    // Raw single-block Philox bump, exposed for the known-answer tests.
    static void philox4x32_10(const std::uint32_t ctr_in[4],
                              const std::uint32_t key_in[2],
                              std::uint32_t out[4]) {
        std::uint32_t c0 = ctr_in[0], c1 = ctr_in[1], c2 = ctr_in[2], c3 = ctr_in[3];
        std::uint32_t k0 = key_in[0], k1 = key_in[1];
        for (int r = 0; r < 10; ++r) {
            const std::uint64_t p0 = static_cast<std::uint64_t>(0xD2511F53u) * c0;
            const std::uint64_t p1 = static_cast<std::uint64_t>(0xCD9E8D57u) * c2;
            const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
            const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
            const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
            const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
            c0 = hi1 ^ c1 ^ k0;
            c1 = lo1;
            c2 = hi0 ^ c3 ^ k1;
            c3 = lo0;
            k0 += 0x9E3779B9u;
            k1 += 0xBB67AE85u;
        }
        out[0] = c0; out[1] = c1; out[2] = c2; out[3] = c3;
    }

private:
    void refill() {
        std::uint32_t out[4];
        philox4x32_10(ctr_, key_, out);
        buf_[0] = (static_cast<std::uint64_t>(out[1]) << 32) | out[0];
        buf_[1] = (static_cast<std::uint64_t>(out[3]) << 32) | out[2];
        buf_pos_ = 0;
        if (++ctr_[0] == 0) ++ctr_[1];  // low 64-bit counter; stream words untouched
    }

    std::uint32_t key_[2];
    std::uint32_t ctr_[4];
    std::uint64_t buf_[2] = {0, 0};
    int buf_pos_ = 2;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace semiflight

#endif
