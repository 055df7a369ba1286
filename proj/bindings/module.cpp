#include "binpart/chars.hpp"
#include "binpart/counting.hpp"
#include "binpart/dfao.hpp"
#include "binpart/factor.hpp"
#include "binpart/partition.hpp"
#include "binpart/sequences.hpp"
#include "binpart/squares.hpp"
#include "binpart/tables.hpp"
#include "binpart/verify.hpp"

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace binpart;

namespace pybind11::detail {

// cpp_int <-> python int via decimal strings.
template <>
struct type_caster<binpart::BigNat> {
    PYBIND11_TYPE_CASTER(binpart::BigNat, const_name("int"));

    bool load(handle src, bool) {
        if (!PyLong_Check(src.ptr())) return false;
        py::object s = py::str(src);
        value = binpart::BigNat(std::string(py::cast<std::string>(s)));
        return true;
    }

    static handle cast(const binpart::BigNat& v, return_value_policy, handle) {
        return PyLong_FromString(v.str().c_str(), nullptr, 10);
    }
};

}  // namespace pybind11::detail

namespace {

py::object val_to_py(const Valuation& v) {
    if (v.is_infinite()) return py::none();
    return py::int_(v.value());
}

py::dict report_to_dict(const Report& r) {
    py::dict d;
    d["family"] = r.family;
    d["module"] = r.module;
    d["range"] = py::make_tuple(r.lo, r.hi);
    d["status"] = r.pass ? "pass" : "counterexample";
    if (r.ce) {
        py::dict c;
        c["index"] = r.ce->index;
        c["expected"] = r.ce->expected;
        c["actual"] = r.ce->actual;
        d["counterexample"] = c;
    }
    d["notes"] = r.notes;
    return d;
}

}  // namespace

PYBIND11_MODULE(_binpart, m) {
    m.doc() = "binary partition function toolkit";

    // elementary sequences
    m.def("s2", [](const BigNat& n) { return s2(n); }, "number of binary 1s");
    m.def("nu2", [](const BigNat& n) { return val_to_py(nu2(n)); },
          "2-adic valuation; None for 0");
    m.def("ptm", [](const BigNat& n) { return ptm(n).value(); }, "Prouhet-Thue-Morse sign");
    m.def("ptm_parity", [](const BigNat& n) { return ptm_parity(n); });
    m.def("one_runs_parity", [](const BigNat& n) { return one_runs_parity(n); });
    m.def("paperfold", [](const BigNat& n) { return paperfold(n).value(); });
    m.def("evil_number", [](const BigNat& m) { return evil_number(m); });

    // partition streams
    m.def("b_values", [](u64 n) { return b_values(n); });
    m.def("b3_values", [](u64 n) { return b3_values(n); });
    m.def("bm_values", [](u64 m, u64 n) { return bm_values(m, n); });
    m.def("bm_residues", [](u64 m, u64 n, int p) {
        auto rs = bm_residues(m, n, p);
        return std::vector<int>(rs.values().begin(), rs.values().end());
    });
    m.def("b_valuation", [](const BigNat& n) { return val_to_py(b_valuation(n)); });
    m.def("bm_valuation", [](u64 k, const BigNat& n) { return val_to_py(bm_valuation(k, n)); });

    // squares
    m.def("is_three_squares", [](const BigNat& n) { return is_three_squares(n); });
    m.def("is_two_squares", [](const BigNat& n) { return is_two_squares(n); });
    m.def("r2", [](const BigNat& n) { return r2(n); });
    m.def("factorize", [](const BigNat& n, u64 seed) {
        FactorConfig cfg;
        cfg.seed = seed;
        py::dict out;
        for (const auto& [p, e] : factorize(n, cfg)) out[py::cast(p)] = e;
        return out;
    }, py::arg("n"), py::arg("seed") = 0);
    m.def("two_square_decompose", [](const BigNat& n) -> py::object {
        auto d = two_square_decompose(n);
        if (!d) return py::none();
        return py::make_tuple(d->first, d->second);
    });
    m.def("find_three_square_rep", [](const BigNat& n) -> py::object {
        auto r = find_three_square_rep(n);
        if (r.status != RepStatus::Found) return py::none();
        return py::make_tuple(r.rep->x, r.rep->y, r.rep->z);
    });
    m.def("count_special_reps", [](const BigNat& n, const std::string& shape) {
        return count_special_reps(n, shape == "x2y2z4" ? SpecialShape::x2y2z4
                                                       : SpecialShape::x2y4z4);
    });

    // characterizations
    m.def("chi", [](const BigNat& n) { return chi(n); });
    m.def("in_s1", [](u64 n) {
        auto w = s1_witness(n);
        py::dict d;
        d["member"] = w.member;
        if (w.member) {
            d["k"] = w.k;
            d["r"] = w.r;
            d["i"] = w.i;
        }
        return d;
    });
    m.def("in_s3", [](u64 n) {
        auto w = s3_witness(n);
        py::dict d;
        d["member"] = w.member;
        if (w.member) {
            d["k"] = w.k;
            d["p"] = w.p;
            d["i"] = w.i;
        }
        return d;
    });
    m.def("in_s2k", [](u64 k, u64 n) {
        auto w = s2k_witness(k, n);
        py::dict d;
        d["member"] = w.member;
        if (w.member) d["clause"] = w.clause;
        return d;
    });
    m.def("beta", [](u64 m) { return beta(m); });
    m.def("c_a", [](unsigned a, u64 l) { return c_a(a, l); });
    m.def("f_values", [](u64 count) {
        std::vector<u64> out;
        for (const auto& r : f_and_gaps(count)) out.push_back(r.f);
        return out;
    });
    m.def("gaps", [](u64 count) {
        std::vector<u64> out;
        for (const auto& r : f_and_gaps(count)) out.push_back(r.gap);
        return out;
    });

    // counting
    m.def("count_s1", [](u64 x) { return count_S(SFamily::S1, x); });
    m.def("count_s3", [](u64 x) { return count_S(SFamily::S3, x); });
    m.def("count_s2k", [](u64 k, u64 x) { return count_S(SFamily::S2k, x, k); });

    // dfao
    m.def("ptm_dfao_json", [] { return dfao_to_json(ptm_dfao()).dump(); });
    m.def("chi_dfao_json", [] { return dfao_to_json(chi_dfao()).dump(); });
    m.def("run_dfao_json", [](const std::string& j, const BigNat& n, const std::string& order) {
        Dfao d = dfao_from_json(nlohmann::json::parse(j));
        return run_dfao(d, n, order == "msb" ? DigitOrder::MsbFirst : DigitOrder::LsbFirst);
    });

    // verification
    m.def("verify_family", [](const std::string& id, const std::string& budget) -> py::object {
        CampaignConfig cfg;
        cfg.budget = budget;
        auto rep = run_family(id, cfg);
        if (!rep) return py::none();
        return report_to_dict(*rep);
    }, py::arg("id"), py::arg("budget") = "small");
    m.def("family_ids", [] {
        std::vector<std::string> out;
        for (const auto& f : family_registry()) out.push_back(f.id);
        return out;
    });

    // tables
    m.def("census", [](u64 nmax) {
        auto c = representation_census(nmax, {});
        return py::make_tuple(c.three_squares, c.x2y2z4, c.x2y4z4);
    }, py::arg("nmax") = 1000);
    m.def("table_two_squares", [](unsigned nmax) {
        std::vector<std::pair<unsigned, u64>> out;
        for (const auto& r : table_two_squares(nmax, {})) out.emplace_back(r.n, r.count);
        return out;
    });
}
