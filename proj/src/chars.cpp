#include "binpart/chars.hpp"

#include "binpart/sequences.hpp"

#include <bit>
#include <stdexcept>

namespace binpart {

int chi(u64 n) {
    while (true) {
        if (n == 0) return 0;
        if (n & 1) return 0;
        if ((n & 3) == 0) {
            n >>= 2;
            continue;
        }
        if ((n & 7) == 2) return ptm_parity(n >> 3);
        return 0;  // n = 6 (mod 8)
    }
}

int chi(const BigNat& n) {
    BigNat m = n;
    while (true) {
        if (m == 0) return 0;
        unsigned low = unsigned(to_u64(m & 7));
        if (low & 1) return 0;
        if ((low & 3) == 0) {
            m >>= 2;
            continue;
        }
        if (low == 2) return ptm_parity(m >> 3);
        return 0;
    }
}

S1Witness s1_witness(u64 n) {
    S1Witness w;
    unsigned i = unsigned(n & 1);
    u64 m = n - i;
    if (m == 0) return w;
    unsigned v = std::countr_zero(m);
    if (v < 2 || (v & 1)) return w;
    u64 core = m >> v;
    u64 r = core >> 3;
    int tr = ptm(r).value();
    if (u64(8 * r + 2 * tr + 3) != core) return w;
    w.member = true;
    w.k = (v - 2) / 2;
    w.r = r;
    w.i = i;
    return w;
}

S3Witness s3_witness(u64 n) {
    S3Witness w;
    unsigned i = unsigned(n & 7);
    if (i > 3) return w;
    u64 m = n - i;
    if (m == 0) return w;
    unsigned v = std::countr_zero(m);
    if (v < 3 || !(v & 1)) return w;
    u64 core = m >> v;
    u64 p = core >> 3;
    int tp = ptm(p).value();
    i64 expected = i64(2 * (i / 2) + 3) + ((i & 1) ? -2 * tp : 2 * tp);
    if (i64(core & 7) != expected) return w;
    w.member = true;
    w.k = (v - 1) / 2;
    w.p = p;
    w.i = i;
    return w;
}

S2kWitness s2k_witness(u64 k, u64 n) {
    if (k < 3) throw std::domain_error("s2k_witness: k must be >= 3");
    S2kWitness w;
    u64 pk = u64(1) << k;
    if (n < pk) {
        if (n < (pk >> 2) && ptm_parity(n) == 1) {
            w.member = true;
            w.clause = 1;
        } else if (n >= (pk >> 1) && n < 3 * (pk >> 2) && ptm_parity(n) == 0) {
            w.member = true;
            w.clause = 2;
        }
        return w;
    }
    if (ptm_parity(n) == 0 && ptm_parity(n - pk) == 0) {
        w.member = true;
        w.clause = 3;
        w.m = n >> k;
        w.l = n & (pk - 1);
    }
    return w;
}

std::vector<std::uint8_t> beta_table(u64 mmax, const StreamBudget& budget) {
    ResidueStream s = bm_residues(1, 8 * mmax + 4, 5, budget);
    std::vector<std::uint8_t> out(mmax + 1);
    for (u64 m = 0; m <= mmax; ++m) out[m] = std::uint8_t((s.at(8 * m + 4) >> 2) & 7);
    return out;
}

int beta(u64 m) { return beta_table(m).back(); }

u64 c_a(unsigned a, u64 l) {
    int t = ptm(l).value();
    switch (a) {
        case 1: return 4 * l - t + 1;
        case 3: return 4 * l + t + 2;
        case 5: return 4 * l - t + 2;
        case 7: return 4 * l + t + 1;
        default: throw std::domain_error("c_a: a must be one of 1, 3, 5, 7");
    }
}

std::vector<GapRecord> f_and_gaps(u64 count) {
    std::vector<GapRecord> out;
    if (count == 0) return out;
    out.reserve(count);
    u64 found = 0;
    u64 prev = 0;
    for (u64 n = 0; found <= count; ++n) {
        if (chi(n) != 1) continue;
        if (found > 0) {
            GapRecord& rec = out.emplace_back();
            rec.index = found - 1;
            rec.f = prev;
            rec.gap = n - prev;
        }
        prev = n;
        ++found;
        if (found == count + 1) break;
    }
    return out;
}

std::vector<u64> gap_class_witnesses(unsigned g, u64 how_many) {
    std::vector<u64> out;
    auto verified = [&](u64 n) {
        if (chi(n) != 1 || chi(n + g) != 1) return false;
        for (u64 x = n + 1; x < n + g; ++x)
            if (chi(x) != 0) return false;
        return true;
    };
    auto family = [&](u64 m, bool& candidate, u64& n) {
        switch (g) {
            case 6: n = 32 * m + 2; candidate = ptm_parity(m) == 1; break;
            case 8: n = 32 * m + 10; candidate = ptm_parity(m) == 0; break;
            case 10: n = 16 * m; candidate = chi(m) == 1; break;
            case 16: n = 64 * m + 18; candidate = ptm_parity(m) == 0; break;
            case 18: n = 32 * m + 8; candidate = ptm_parity(m) == 1; break;
            case 24: n = 256 * m + 178; candidate = ptm_parity(m) == 0; break;
            default: throw std::domain_error("gap_class_witnesses: g not in {6,8,10,16,18,24}");
        }
    };
    for (u64 m = 0; out.size() < how_many; ++m) {
        bool candidate = false;
        u64 n = 0;
        family(m, candidate, n);
        if (!candidate) continue;
        if (!verified(n))
            throw std::logic_error("gap_class_witnesses: family member fails verification");
        out.push_back(n);
    }
    return out;
}

}  // namespace binpart
