#pragma once

#include "binpart/bignat.hpp"

#include <json.hpp>

#include <array>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace binpart {

// Deterministic finite automaton with output over the binary alphabet.
struct Dfao {
    int initial = 0;
    std::vector<std::array<int, 2>> delta;
    std::vector<i64> output;

    int states() const { return int(delta.size()); }
    void validate() const;
};

enum class DigitOrder { MsbFirst, LsbFirst };

// Feed the canonical binary digits of n (no leading zeros; n = 0 reads the
// empty word) in the chosen order and return the output of the final state.
i64 run_dfao(const Dfao& d, u64 n, DigitOrder order);
i64 run_dfao(const Dfao& d, const BigNat& n, DigitOrder order);

// The two-state automaton generating the PTM sign sequence.
Dfao ptm_dfao();

// The six-state automaton generating (chi(n)).
Dfao chi_dfao();

nlohmann::json dfao_to_json(const Dfao& d);
Dfao dfao_from_json(const nlohmann::json& j);

// The digit order for chi_dfao is fixed by running both orders against the
// chi recurrences; mismatch sets are returned rather than guessed away.
struct OrderCalibration {
    bool ok = false;
    DigitOrder order = DigitOrder::LsbFirst;
    std::vector<u64> mismatches_msb;
    std::vector<u64> mismatches_lsb;
};
OrderCalibration calibrate_chi_order(u64 nmax = u64(1) << 12);

// Distinct truncated subsequences n -> a(2^j n + i) for j <= J, i < 2^j,
// each of length L.
struct KernelFamily {
    u64 L = 0;
    u64 J = 0;
    std::vector<std::vector<i64>> members;
    std::vector<std::pair<u64, u64>> origin;            // canonical (j, i) per member
    std::map<std::pair<u64, u64>, std::size_t> all_origins;
};
KernelFamily kernel(const std::function<i64(u64)>& a, u64 L, u64 J);

// An integer relation  sum_t coef_t * a(2^{j_t} n + i_t) = 0.
struct Relation {
    struct Term {
        i64 coef;
        u64 j;
        u64 i;
    };
    std::vector<Term> terms;
    std::string kind;  // "closure" or "nullspace"
    std::string render() const;
};

struct RelationSearch {
    std::vector<Relation> relations;
    std::vector<std::string> notes;
    bool none_found() const { return relations.empty(); }
};

// Exact rational null-space of the member matrix plus kernel-closure
// identities; every candidate is re-validated on a prefix of length 2L
// before being reported.
RelationSearch guess_relations(const std::function<i64(u64)>& a, const KernelFamily& fam);

}  // namespace binpart
