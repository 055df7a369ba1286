#include "binpart/dfao.hpp"

#include "binpart/chars.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <numeric>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace binpart {

void Dfao::validate() const {
    if (delta.size() != output.size()) throw std::domain_error("Dfao: outputs/states mismatch");
    if (initial < 0 || initial >= states()) throw std::domain_error("Dfao: bad initial state");
    for (const auto& tr : delta)
        for (int b = 0; b < 2; ++b)
            if (tr[b] < 0 || tr[b] >= states()) throw std::domain_error("Dfao: bad transition");
}

namespace {

template <class Digits>
i64 run_digits(const Dfao& d, const Digits& digits) {
    int state = d.initial;
    for (int bit : digits) state = d.delta[state][bit];
    return d.output[state];
}

}  // namespace

i64 run_dfao(const Dfao& d, u64 n, DigitOrder order) {
    std::vector<int> digits;
    while (n) {
        digits.push_back(int(n & 1));
        n >>= 1;
    }
    // digits are LSB-first here
    if (order == DigitOrder::MsbFirst) std::reverse(digits.begin(), digits.end());
    return run_digits(d, digits);
}

i64 run_dfao(const Dfao& d, const BigNat& n, DigitOrder order) {
    std::vector<int> digits;
    BigNat m = n;
    while (m != 0) {
        digits.push_back(int(to_u64(m & 1)));
        m >>= 1;
    }
    if (order == DigitOrder::MsbFirst) std::reverse(digits.begin(), digits.end());
    return run_digits(d, digits);
}

Dfao ptm_dfao() {
    Dfao d;
    d.initial = 0;
    d.delta = {{0, 1}, {1, 0}};
    d.output = {1, -1};
    d.validate();
    return d;
}

Dfao chi_dfao() {
    // Six states; state 5 is the only 1-output.  The 0/1 edge labels follow
    // the transcription q0 -0-> q1 -1-> q3 -0-> q4 -1-> q5, with q2 the
    // rejecting sink and the q4/q5 pair swapping on 1.
    Dfao d;
    d.initial = 0;
    d.delta = {
        {1, 2},  // q0
        {0, 3},  // q1
        {2, 2},  // q2 (sink)
        {4, 2},  // q3
        {4, 5},  // q4
        {5, 4},  // q5
    };
    d.output = {0, 0, 0, 0, 0, 1};
    d.validate();
    return d;
}

nlohmann::json dfao_to_json(const Dfao& d) {
    nlohmann::json j;
    j["states"] = d.states();
    j["initial"] = d.initial;
    nlohmann::json tr = nlohmann::json::array();
    for (const auto& t : d.delta) tr.push_back({t[0], t[1]});
    j["transitions"] = tr;
    j["outputs"] = d.output;
    return j;
}

Dfao dfao_from_json(const nlohmann::json& j) {
    Dfao d;
    int n = j.at("states").get<int>();
    d.initial = j.at("initial").get<int>();
    for (const auto& t : j.at("transitions")) d.delta.push_back({t.at(0).get<int>(), t.at(1).get<int>()});
    d.output = j.at("outputs").get<std::vector<i64>>();
    if (int(d.delta.size()) != n) throw std::domain_error("dfao_from_json: states mismatch");
    d.validate();
    return d;
}

OrderCalibration calibrate_chi_order(u64 nmax) {
    Dfao d = chi_dfao();
    OrderCalibration cal;
    for (u64 n = 0; n <= nmax; ++n) {
        i64 want = chi(n);
        if (run_dfao(d, n, DigitOrder::MsbFirst) != want) cal.mismatches_msb.push_back(n);
        if (run_dfao(d, n, DigitOrder::LsbFirst) != want) cal.mismatches_lsb.push_back(n);
    }
    if (cal.mismatches_lsb.empty()) {
        cal.ok = true;
        cal.order = DigitOrder::LsbFirst;
    } else if (cal.mismatches_msb.empty()) {
        cal.ok = true;
        cal.order = DigitOrder::MsbFirst;
    }
    return cal;
}

KernelFamily kernel(const std::function<i64(u64)>& a, u64 L, u64 J) {
    if (L == 0 || L > 4096) throw std::domain_error("kernel: L out of range");
    KernelFamily fam;
    fam.L = L;
    fam.J = J;
    for (u64 j = 0; j <= J; ++j) {
        for (u64 i = 0; i < (u64(1) << j); ++i) {
            std::vector<i64> v(L);
            for (u64 n = 0; n < L; ++n) v[n] = a((n << j) + i);
            std::size_t idx = fam.members.size();
            bool found = false;
            for (std::size_t m = 0; m < fam.members.size(); ++m) {
                if (fam.members[m] == v) {
                    idx = m;
                    found = true;
                    break;
                }
            }
            if (!found) {
                if (fam.members.size() >= 512)
                    throw std::runtime_error("kernel: member cap (512) exceeded");
                fam.members.push_back(std::move(v));
                fam.origin.emplace_back(j, i);
            }
            fam.all_origins[{j, i}] = idx;
        }
    }
    return fam;
}

std::string Relation::render() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms) {
        if (t.coef == 0) continue;
        i64 c = t.coef;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        u64 mul = u64(1) << t.j;
        i64 ac = c < 0 ? -c : c;
        if (ac != 1) os << ac << "*";
        os << "a(";
        if (t.j == 0)
            os << "n";
        else
            os << mul << "n";
        if (t.i != 0) os << "+" << t.i;
        os << ")";
    }
    os << " = 0";
    return os.str();
}

namespace {

using Rational = boost::multiprecision::cpp_rational;

// Null-space basis of the member matrix: vectors v with sum_r v_r row_r = 0.
std::vector<std::vector<BigNat>> nullspace_integer(const std::vector<std::vector<i64>>& rows) {
    const std::size_t R = rows.size();
    if (R == 0) return {};
    const std::size_t L = rows[0].size();
    // Eliminate on the transpose (L x R), tracking pivot columns.
    std::vector<std::vector<Rational>> m(L, std::vector<Rational>(R));
    for (std::size_t r = 0; r < R; ++r)
        for (std::size_t c = 0; c < L; ++c) m[c][r] = Rational(rows[r][c]);
    std::vector<int> pivot_of_col(R, -1);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < R && rank < L; ++col) {
        std::size_t sel = rank;
        while (sel < L && m[sel][col] == Rational(0)) ++sel;
        if (sel == L) continue;
        std::swap(m[sel], m[rank]);
        Rational inv = m[rank][col];
        for (std::size_t c = col; c < R; ++c) m[rank][c] /= inv;
        for (std::size_t r = 0; r < L; ++r) {
            if (r == rank || m[r][col] == Rational(0)) continue;
            Rational f = m[r][col];
            for (std::size_t c = col; c < R; ++c) m[r][c] -= f * m[rank][c];
        }
        pivot_of_col[col] = int(rank);
        ++rank;
    }
    std::vector<std::vector<BigNat>> basis;
    for (std::size_t free_col = 0; free_col < R; ++free_col) {
        if (pivot_of_col[free_col] != -1) continue;
        std::vector<Rational> v(R, Rational(0));
        v[free_col] = Rational(1);
        for (std::size_t col = 0; col < R; ++col) {
            int pr = pivot_of_col[col];
            if (pr >= 0) v[col] = -m[std::size_t(pr)][free_col];
        }
        // Clear denominators and divide by the content.
        BigNat lcm = 1;
        for (const auto& q : v)
            lcm = boost::multiprecision::lcm(lcm, BigNat(boost::multiprecision::denominator(q)));
        std::vector<BigNat> iv(R);
        BigNat g = 0;
        for (std::size_t r = 0; r < R; ++r) {
            iv[r] = BigNat(boost::multiprecision::numerator(v[r])) *
                    (lcm / BigNat(boost::multiprecision::denominator(v[r])));
            g = boost::multiprecision::gcd(g, iv[r] < 0 ? BigNat(-iv[r]) : iv[r]);
        }
        if (g > 1)
            for (auto& x : iv) x /= g;
        basis.push_back(std::move(iv));
    }
    return basis;
}

}  // namespace

RelationSearch guess_relations(const std::function<i64(u64)>& a, const KernelFamily& fam) {
    RelationSearch out;
    const u64 L2 = 2 * fam.L;
    auto holds_on = [&](const Relation& rel, u64 len) {
        for (u64 n = 0; n < len; ++n) {
            i64 sum = 0;
            for (const auto& t : rel.terms) sum += t.coef * a((n << t.j) + t.i);
            if (sum != 0) return false;
        }
        return true;
    };

    // Closure identities: children of canonical kernel members that collapse
    // onto an existing member.
    for (std::size_t mi = 0; mi < fam.members.size(); ++mi) {
        auto [j, i] = fam.origin[mi];
        if (j + 1 > fam.J) continue;
        for (u64 d = 0; d < 2; ++d) {
            std::pair<u64, u64> child{j + 1, i + (d << j)};
            auto it = fam.all_origins.find(child);
            if (it == fam.all_origins.end()) continue;
            auto canon = fam.origin[it->second];
            if (canon == child) continue;  // a genuinely new member, not a relation
            Relation rel;
            rel.kind = "closure";
            rel.terms.push_back({1, child.first, child.second});
            rel.terms.push_back({-1, canon.first, canon.second});
            if (holds_on(rel, L2))
                out.relations.push_back(std::move(rel));
            else
                out.notes.push_back("closure candidate failed revalidation at 2L: " +
                                    rel.render());
        }
    }

    // Z-linear relations among distinct members.
    auto basis = nullspace_integer(fam.members);
    for (const auto& v : basis) {
        Relation rel;
        rel.kind = "nullspace";
        for (std::size_t r = 0; r < v.size(); ++r) {
            if (v[r] == 0) continue;
            if (v[r] < BigNat(std::numeric_limits<i64>::min()) ||
                v[r] > BigNat(std::numeric_limits<i64>::max())) {
                out.notes.push_back("nullspace vector with oversized coefficients dropped");
                rel.terms.clear();
                break;
            }
            rel.terms.push_back({i64(v[r]), fam.origin[r].first, fam.origin[r].second});
        }
        if (rel.terms.empty()) continue;
        if (holds_on(rel, L2))
            out.relations.push_back(std::move(rel));
        else
            out.notes.push_back("nullspace candidate failed revalidation at 2L: " + rel.render());
    }
    if (out.relations.empty()) out.notes.push_back("none-found at this (J, L); evidence only");
    return out;
}

}  // namespace binpart
