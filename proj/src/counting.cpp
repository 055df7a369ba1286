#include "binpart/counting.hpp"

#include "binpart/chars.hpp"
#include "binpart/sequences.hpp"

#include <cmath>
#include <stdexcept>

namespace binpart {

std::vector<std::uint32_t> s1_prefix_counts(u64 xmax) {
    std::vector<std::uint32_t> c(xmax + 1);
    std::uint32_t acc = 0;
    for (u64 n = 0; n <= xmax; ++n) {
        acc += std::uint32_t(chi(n >> 1));
        c[n] = acc;
    }
    return c;
}

std::vector<std::uint32_t> s3_prefix_counts(u64 xmax) {
    std::vector<std::uint32_t> c(xmax + 1);
    std::uint32_t acc = 0;
    for (u64 n = 0; n <= xmax; ++n) {
        acc += std::uint32_t(s3_witness(n).member);
        c[n] = acc;
    }
    return c;
}

std::vector<std::uint32_t> s2k_prefix_counts(u64 k, u64 xmax) {
    if (k < 3) throw std::domain_error("s2k_prefix_counts: k must be >= 3");
    std::vector<std::uint8_t> T = ptm_parity_table(xmax);
    std::vector<std::uint32_t> c(xmax + 1);
    const u64 pk = u64(1) << k;
    std::uint32_t acc = 0;
    for (u64 n = 0; n <= xmax; ++n) {
        bool member;
        if (n < pk)
            member = (n < (pk >> 2) && T[n] == 1) ||
                     (n >= (pk >> 1) && n < 3 * (pk >> 2) && T[n] == 0);
        else
            member = T[n] == 0 && T[n - pk] == 0;
        acc += member;
        c[n] = acc;
    }
    return c;
}

u64 count_S(SFamily fam, u64 x, u64 k) {
    switch (fam) {
        case SFamily::S1: return s1_prefix_counts(x)[x];
        case SFamily::S3: return s3_prefix_counts(x)[x];
        case SFamily::S2k: return s2k_prefix_counts(k, x)[x];
    }
    throw std::logic_error("count_S: bad family");
}

// ---- S_1 machinery ----------------------------------------------------------

P1Table::P1Table(u64 xmax) : counts_(xmax + 1, 0) {
    // Mark the values 8s + 3 + 2 t_s, then prefix-sum.
    for (u64 s = 0; 8 * s + 1 <= xmax; ++s) {
        u64 v = 8 * s + 3 + (ptm_parity(s) ? -2 : 2);
        if (v <= xmax) counts_[v] += 1;
    }
    std::uint32_t acc = 0;
    for (u64 x = 0; x <= xmax; ++x) {
        acc += counts_[x];
        counts_[x] = acc;
    }
}

u64 P1Table::P(u64 x) const { return counts_.at(x); }

u64 P1Table::Q(u64 x) const {
    u64 q = 0;
    for (u64 y = x;; y >>= 2) {
        q += P(y);
        if (y == 0) break;
    }
    return q;
}

i64 P1Table::R_sixths(u64 x) const { return i64(6 * Q(x)) - i64(x); }

namespace {

// Direct evaluation of R1 for small arguments (used for recurrence bases).
i64 r1_direct_sixths(u64 n) {
    static const P1Table table(4096);
    return table.R_sixths(n);
}

}  // namespace

R1Evaluator::R1Evaluator() = default;

i64 R1Evaluator::sixths(const BigNat& n) {
    if (n < 64) return r1_direct_sixths(to_u64(n));
    auto it = memo_.find(n);
    if (it != memo_.end()) return it->second;
    const unsigned low6 = unsigned(to_u64(n & 63));
    i64 value;
    // The identity list, keyed on residues mod 8 / 16 / 64.
    switch (low6 & 7) {
        case 0: value = sixths(n >> 2); break;  // R(8n) = R(2n)
        case 1:
            value = ((low6 & 15) == 1) ? sixths((n >> 2) | 1)       // R(16n+1)=R(4n+1)
                                       : sixths((n >> 4) << 2) + 3;  // R(16n+9)=R(4n)+1/2
            break;
        case 2:
            value = ((low6 & 15) == 2) ? sixths(((n >> 4) << 2) | 2)  // R(16n+2)=R(4n+2)
                                       : sixths((n >> 4) << 2) + 2;   // R(16n+10)=R(4n)+1/3
            break;
        case 3:
            value = ((low6 & 15) == 3) ? sixths(((n >> 4) << 2) | 3)  // R(16n+3)=R(4n+3)
                                       : sixths((n >> 4) << 2) + 1;   // R(16n+11)=R(4n)+1/6
            break;
        case 4:
            if ((low6 & 15) == 12) {
                value = sixths((n >> 4) << 2);  // R(16n+12) = R(4n)
            } else {
                // n = 64 q + r with r in {4, 20, 36, 52}
                BigNat q = n >> 6;
                switch (low6) {
                    case 4: value = sixths(((q << 4) | 4)); break;   // R(64n+4)=R(16n+4)
                    case 20:                                          // R(64n+20)=R(16n+2)+1-T_n
                        value = sixths((q << 4) | 2) + 6 * (1 - ptm_parity(q));
                        break;
                    case 36:                                          // R(64n+36)=R(16n)+1-T_n
                        value = sixths(q << 4) + 6 * (1 - ptm_parity(q));
                        break;
                    default:  // 52: R(64n+52)=R(16n+4)
                        value = sixths((q << 4) | 4);
                        break;
                }
            }
            break;
        case 5: value = sixths(((n >> 3) << 1) | 1) + 2; break;  // R(8n+5)=R(2n+1)+1/3
        case 6: value = sixths(((n >> 3) << 1) | 1) + 1; break;  // R(8n+6)=R(2n+1)+1/6
        default: value = sixths(((n >> 3) << 1) | 1); break;     // R(8n+7)=R(2n+1)
    }
    memo_.emplace(n, value);
    return value;
}

// ---- S_3 machinery ----------------------------------------------------------

P3Table::P3Table(u64 xmax) : counts_(xmax + 1, 0) {
    for (unsigned i = 0; i < 4; ++i) {
        i64 base = 2 * (i / 2) + 3;
        i64 sign = (i % 2 == 0) ? 2 : -2;
        for (u64 n = 0; 8 * n + 1 <= xmax; ++n) {
            i64 v = i64(8 * n) + base + sign * ptm(n).value();
            if (v >= 0 && u64(v) <= xmax) counts_[u64(v)] += 1;
        }
    }
    std::uint32_t acc = 0;
    for (u64 x = 0; x <= xmax; ++x) {
        acc += counts_[x];
        counts_[x] = acc;
    }
}

u64 P3Table::P(u64 x) const { return counts_.at(x); }

u64 P3Table::Q(u64 x) const {
    u64 q = 0;
    for (u64 y = x;; y >>= 2) {
        q += P(y);
        if (y == 0) break;
    }
    return q;
}

i64 P3Table::R_sixths(u64 x) const { return i64(6 * Q(x)) - 4 * i64(x); }

// ---- S_{2^k-1} machinery ----------------------------------------------------

PepsTable::PepsTable(u64 xmax)
    : p_plus_(xmax + 1, 0), q_plus_(xmax + 1, 0), p_minus_(xmax + 1, 0), q_minus_(xmax + 1, 0) {
    std::vector<std::uint8_t> T = ptm_parity_table(xmax);
    std::uint32_t pp = 0, qp = 0, pm = 0, qm = 0;
    for (u64 m = 1; m <= xmax; ++m) {
        bool plus = T[m] == 0;
        bool even_val = (nu2(m).value() % 2) == 0;
        pp += plus;
        pm += !plus;
        qp += plus && even_val;
        qm += !plus && even_val;
        p_plus_[m] = pp;
        q_plus_[m] = qp;
        p_minus_[m] = pm;
        q_minus_[m] = qm;
    }
}

u64 PepsTable::P(int eps, u64 x) const { return eps == 1 ? p_plus_.at(x) : p_minus_.at(x); }
u64 PepsTable::Q(int eps, u64 x) const { return eps == 1 ? q_plus_.at(x) : q_minus_.at(x); }
i64 PepsTable::R_sixths(int eps, u64 x) const { return i64(6 * Q(eps, x)) - 2 * i64(x); }

// ---- Extremal sequences -----------------------------------------------------

std::vector<ExtremalRow> extremal_rows(SFamily fam, bool upper_sequence, u64 lmax, u64 k,
                                       u64 direct_limit) {
    std::vector<ExtremalRow> rows;
    BigNat idx = 0;
    BigNat step;
    u64 mul;
    switch (fam) {
        case SFamily::S1:
            mul = 16;
            step = 36;
            if (!upper_sequence) throw std::domain_error("extremal_rows: S1 has one sequence");
            break;
        case SFamily::S3:
            mul = 4;
            step = upper_sequence ? 8 : 16;
            break;
        case SFamily::S2k:
            if (k < 3) throw std::domain_error("extremal_rows: k must be >= 3");
            mul = 16;
            step = BigNat(upper_sequence ? 5 : 10) << (k + 1);
            break;
    }
    // Direct counts are batched: one prefix table covers every in-range index.
    u64 largest_direct = 0;
    {
        BigNat t = 0;
        for (u64 l = 0; l <= lmax; ++l) {
            if (t <= direct_limit) largest_direct = to_u64(t);
            t = t * mul + step;
        }
    }
    std::vector<std::uint32_t> prefix;
    if (fam == SFamily::S1)
        prefix = s1_prefix_counts(largest_direct);
    else if (fam == SFamily::S3)
        prefix = s3_prefix_counts(largest_direct);
    else
        prefix = s2k_prefix_counts(k, largest_direct);
    for (u64 l = 0; l <= lmax; ++l) {
        ExtremalRow row;
        row.l = l;
        row.index = idx;
        if (idx <= largest_direct) {
            row.measured = true;
            u64 x = to_u64(idx);
            if (fam == SFamily::S2k)
                row.deviation_twelfths = i64(12) * prefix[x] - 2 * i64(x);  // S - x/6
            else
                row.deviation_twelfths = i64(12) * prefix[x] - i64(x);  // S - x/12
        }
        rows.push_back(row);
        idx = idx * mul + step;
    }
    return rows;
}

// ---- Figure data ------------------------------------------------------------

std::vector<FigureRow> figure_rows(SFamily which, u64 xmax) {
    if (which == SFamily::S2k) throw std::domain_error("figure_rows: S1 or S3 only");
    std::vector<std::uint32_t> prefix =
        which == SFamily::S1 ? s1_prefix_counts(xmax) : s3_prefix_counts(xmax);
    std::vector<FigureRow> rows;
    rows.reserve(xmax);
    for (u64 x = 1; x <= xmax; ++x) {
        FigureRow r;
        r.x = x;
        r.dev_twelfths = i64(12) * prefix[x] - i64(x);
        double lg = std::log2(double(x));
        if (which == SFamily::S1) {
            r.lower = -5.0 / 3.0;
            r.upper = 0.5 * lg - 19.0 / 12.0;
        } else {
            r.lower = -lg / 6.0 - 7.0 / 12.0;
            r.upper = lg / 6.0 - 1.0 / 6.0;
        }
        rows.push_back(r);
    }
    return rows;
}

}  // namespace binpart
